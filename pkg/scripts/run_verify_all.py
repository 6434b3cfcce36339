"""Run every verification sweep and write the JSON report to a file."""

import argparse
import json
import sys

from gogcalc.verify import verify_all


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default="verify_report.json")
    args = p.parse_args()
    result = verify_all(args.n, args.seed)
    with open(args.out, "w") as fh:
        json.dump(result, fh, indent=2)
    bad = [r["check"] for r in result["reports"] if not r["ok"]]
    print(f"{len(result['reports'])} sweeps, {len(bad)} failing, {result['elapsed']:.1f}s -> {args.out}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
