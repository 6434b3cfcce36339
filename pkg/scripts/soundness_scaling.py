"""Normal-form soundness and rewriting-closure statistics across truncations.

Runs the random relation-move sweep on several Gamma_N and the capped
closure on Gamma_4, printing case counts, failures and timings.
"""

import argparse
from dataclasses import dataclass, field

from gogcalc import verify


@dataclass
class ScalingConfig:
    sizes: list = field(default_factory=lambda: [4, 6, 8, 10])
    trials: int = 5000
    seed: int = 1


def run(cfg: ScalingConfig) -> None:
    for n in cfg.sizes:
        rep = verify.normal_form_soundness(cfg.seed, n=n, trials=cfg.trials)
        moves = ", ".join(f"{k}={v}" for k, v in sorted(rep.details["moves"].items()))
        print(f"Gamma_{n:<3d} soundness: {rep.cases} trials, {len(rep.failures)} failures, "
              f"{rep.elapsed:.2f}s ({moves})")
    rep = verify.rewriting_closure()
    d = rep.details
    print(f"closure on Gamma_4: {d['words']} words, {d['classes']} classes, "
          f"{d['distinct_normal_forms']} normal forms, {len(rep.failures)} failures, {rep.elapsed:.2f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=ScalingConfig().sizes)
    p.add_argument("--trials", type=int, default=ScalingConfig.trials)
    p.add_argument("--seed", type=int, default=ScalingConfig.seed)
    run(ScalingConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
