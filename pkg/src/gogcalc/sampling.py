"""Seeded random generators for ordinals, permutations and words.

Everything takes an explicit ``random.Random`` so sweeps are reproducible.
"""

from __future__ import annotations

import random

from .freegroup import IDENTITY, FreeWord, fg_invert, fg_multiply
from .gog import EdgeWord, GraphError, GraphOfGroups, KWord, reduce_edges, reduce_once, reducible_positions
from .ordinal import Ordinal
from .perm import FinPerm


def random_ordinal_below(beta, rng: random.Random, max_coeff: int = 6) -> Ordinal:
    """A random ordinal ``< beta``, biased towards limits and small values."""
    beta = Ordinal.of(beta)
    if not beta:
        raise ValueError("nothing lies below 0")
    top = beta.leading_exponent
    while True:
        terms = []
        for e in range(top, -1, -1):
            if rng.random() < 0.5:
                terms.append((e, rng.randint(1, max_coeff)))
        x = Ordinal(terms)
        if x < beta:
            return x


def random_finperm(beta, rng: random.Random, max_points: int = 8) -> FinPerm:
    """Random permutation moving only points below ``beta``."""
    k = rng.randint(0, max_points)
    pts = list({random_ordinal_below(beta, rng) for _ in range(k)})
    pts.sort()
    images = pts[:]
    rng.shuffle(images)
    return FinPerm(zip(pts, images))


def random_freeword(gens, rng: random.Random, max_len: int) -> FreeWord:
    gens = [Ordinal.of(i) for i in gens]
    if not gens:
        return IDENTITY
    n = rng.randint(0, max_len)
    letters = []
    while len(letters) < n:
        x = (rng.choice(gens), rng.choice((1, -1)))
        if letters and letters[-1][0] == x[0] and letters[-1][1] == -x[1]:
            continue
        letters.append(x)
    return FreeWord._raw(letters)


def _outgoing(g: GraphOfGroups) -> dict:
    out = {}
    for e in sorted(g.edges.values(), key=lambda e: (e.source, e.target, e.name)):
        out.setdefault(e.source, []).append(e)
    return out


def random_walk(g: GraphOfGroups, source, n: int, rng: random.Random, allowed=None) -> list[str]:
    """Edge names of a random walk of length ``n``, staying inside ``allowed`` vertices."""
    out = _outgoing(g)
    x = Ordinal.of(source)
    names = []
    for _ in range(n):
        choices = [e for e in out.get(x, []) if allowed is None or e.target in allowed]
        if not choices:
            break
        e = rng.choice(choices)
        names.append(e.name)
        x = e.target
    return names


def random_kword(g: GraphOfGroups, rng: random.Random, max_edges: int, max_vertex_len: int,
                 source=None) -> KWord:
    if source is None:
        source = rng.choice(sorted(g.vertices))
    source = Ordinal.of(source)
    edges = random_walk(g, source, rng.randint(0, max_edges), rng)
    path = [source] + [g.edges[n].target for n in edges]
    elements = tuple(random_freeword(g.generators(v), rng, max_vertex_len) for v in path)
    return KWord(source, path[-1], elements, tuple(edges))


def random_kword_between(g: GraphOfGroups, rng: random.Random, source, target, max_edges: int,
                         max_vertex_len: int, tries: int = 200) -> KWord:
    """Random ``KWord`` from ``source`` to ``target``; the last edge is forced."""
    source, target = Ordinal.of(source), Ordinal.of(target)
    for _ in range(tries):
        n = rng.randint(0, max_edges)
        if n == 0:
            if source != target:
                continue
            edges = []
        else:
            edges = random_walk(g, source, n - 1, rng)
            end = g.edges[edges[-1]].target if edges else source
            if end == target:
                continue
            try:
                edges.append(g.edge_between(end, target))
            except GraphError:
                continue
        path = [source] + [g.edges[e].target for e in edges]
        elements = tuple(random_freeword(g.generators(v), rng, max_vertex_len) for v in path)
        return KWord(source, target, elements, tuple(edges))
    raise RuntimeError(f"could not sample a word from {source} to {target}")


def random_edgeword(g: GraphOfGroups, rng: random.Random, max_len: int, source=None, allowed=None) -> EdgeWord:
    if source is None:
        pool = sorted(allowed) if allowed is not None else sorted(g.vertices)
        source = rng.choice(pool)
    source = Ordinal.of(source)
    names = random_walk(g, source, rng.randint(0, max_len), rng, allowed)
    target = g.edges[names[-1]].target if names else source
    return EdgeWord(source, target, reduce_edges(g, names))


# -- relation moves ---------------------------------------------------------

def move_reduce(g: GraphOfGroups, w: KWord, rng: random.Random):
    positions = reducible_positions(g, w)
    if not positions:
        return None
    return reduce_once(g, w, rng.choice(positions))


def move_insert(g: GraphOfGroups, w: KWord, rng: random.Random, max_len: int = 3) -> KWord:
    """Inverse of a reduction: ``a_j = p a q`` becomes ``p, ybar, a, y, q``."""
    j = rng.randint(0, w.length)
    x = w.source if j == 0 else g.edges[w.edges[j - 1]].target
    e = rng.choice(_outgoing(g)[x])
    hat = random_freeword(sorted(e.edge_indices), rng, max_len)
    p = random_freeword(g.generators(x), rng, max_len)
    q = fg_multiply(fg_multiply(fg_invert(hat), fg_invert(p)), w.elements[j])
    els = w.elements[:j] + (q, hat, p) + w.elements[j + 1:]
    edges = w.edges[:j] + (e.name, e.inverse) + w.edges[j:]
    return KWord(w.source, w.target, els, edges)


def move_push(g: GraphOfGroups, w: KWord, rng: random.Random, max_len: int = 3):
    """Slide an edge-group element ``h`` across ``y_i``."""
    if not w.length:
        return None
    i = rng.randint(1, w.length)
    e = g.edges[w.edges[i - 1]]
    h = random_freeword(sorted(e.edge_indices), rng, max_len)
    els = list(w.elements)
    els[i - 1] = fg_multiply(h, els[i - 1])
    els[i] = fg_multiply(els[i], fg_invert(h))
    return KWord(w.source, w.target, tuple(els), w.edges)


MOVES = {"reduce": move_reduce, "insert": move_insert, "push": move_push}


def random_relation_move(g: GraphOfGroups, w: KWord, rng: random.Random) -> tuple[str, KWord]:
    """Apply one randomly chosen relation move; falls back to insertion."""
    kind = rng.choice(sorted(MOVES))
    out = MOVES[kind](g, w, rng)
    if out is None:
        kind, out = "insert", move_insert(g, w, rng)
    return kind, out
