"""Exhaustively search for words conjugating the inclusion of G_gamma.

Prints every hit, its edge-word form and the vertices it passes through.
"""

import argparse
import time
from dataclasses import dataclass

from gogcalc.gog import in_edge_subgroupoid, passes_through
from gogcalc.lab import build_gamma, search_conjugators
from gogcalc.ordinal import format_ordinal
from gogcalc.wordsyntax import format_edgeword, format_word


@dataclass
class SearchConfig:
    n: int = 6
    gamma: int = 3
    beta: int = 3
    alpha: int = 4
    max_edges: int = 2
    max_vertex_len: int = 2


def run(cfg: SearchConfig) -> None:
    g = build_gamma(cfg.n).graph
    t0 = time.perf_counter()
    hits = search_conjugators(g, cfg.gamma, cfg.beta, cfg.alpha, cfg.max_edges, cfg.max_vertex_len)
    elapsed = time.perf_counter() - t0
    print(f"{len(hits)} conjugators {cfg.beta} -> {cfg.alpha} for gamma={cfg.gamma} on Gamma_{cfg.n} ({elapsed:.1f}s)")
    by_path = {}
    for w in hits:
        r = in_edge_subgroupoid(g, w)
        by_path.setdefault(format_edgeword(g, r), []).append(w)
    for path, ws in sorted(by_path.items(), key=lambda kv: (len(kv[0]), kv[0])):
        verts = " ".join(format_ordinal(v) for v in sorted(passes_through(g, in_edge_subgroupoid(g, ws[0]))))
        print(f"{path:30s} passes through {{{verts}}}  ({len(ws)} spellings, e.g. {format_word(g, ws[0])})")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for field, default in vars(SearchConfig()).items():
        p.add_argument("--" + field.replace("_", "-"), type=int, default=default)
    run(SearchConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
