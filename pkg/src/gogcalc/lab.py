"""Finite truncations of the counterexample graph of groups and its verifiers.

``build_gamma(N)`` has vertices ``2..N-1``; vertex ``a`` carries the free
group on ``a`` generators, and for every ``b != a`` there is an edge
``y[b->a]`` whose group is spanned by the first ``min(b, a)`` generators.
The checks below evaluate word-level statements about this graph exactly,
via the normal form in ``gogcalc.gog``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from .freegroup import gen
from .gog import (
    EdgeWord,
    GraphOfGroups,
    KWord,
    compose_all,
    edge_compose,
    edge_word,
    enumerate_words,
    in_edge_subgroupoid,
    invert,
    is_identity_word,
    normalize,
    passes_through,
    vertex_word,
    words_equal,
)
from .ordinal import Ordinal


class LabError(ValueError):
    pass


class CheckViolation(AssertionError):
    """A computed case contradicts a statement the lab expects to hold."""


@dataclass
class Report:
    check: str
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "cases": self.cases,
            "failures": list(self.failures),
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
            **({"details": self.details} if self.details else {}),
        }


def edge_name(b, a) -> str:
    return f"y[{Ordinal.of(b)}->{Ordinal.of(a)}]"


@dataclass
class TruncatedGamma:
    n: int
    graph: GraphOfGroups

    @property
    def vertices(self) -> list[Ordinal]:
        return sorted(self.graph.vertices)

    def edge(self, b, a) -> str:
        return edge_name(b, a)


def build_gamma(n: int) -> TruncatedGamma:
    if n < 4:
        raise LabError(f"N must be at least 4 (got {n}); smaller truncations have no edges")
    g = GraphOfGroups()
    for a in range(2, n):
        g.add_vertex(a, a)
    for b, a in itertools.combinations(range(2, n), 2):
        g.add_edge_pair(edge_name(b, a), edge_name(a, b), b, a, range(min(a, b)))
    return TruncatedGamma(n, g)


def _graph(gamma) -> GraphOfGroups:
    return gamma.graph if isinstance(gamma, TruncatedGamma) else gamma


def inclusion_word(gamma_bound, alpha, g_index, graph: Optional[GraphOfGroups] = None) -> KWord:
    """The generator ``g_index`` of the ``gamma_bound``-generated group, viewed at vertex ``alpha``."""
    c, a, i = Ordinal.of(gamma_bound), Ordinal.of(alpha), Ordinal.of(g_index)
    if not (i < c <= a):
        raise LabError(f"need g < gamma <= alpha, got g={i}, gamma={c}, alpha={a}")
    if graph is not None and a not in graph.vertices:
        raise LabError(f"vertex {a} is not in the graph")
    return vertex_word(a, gen(i))


def cocone_check(gamma) -> Report:
    """For all ``b < a`` and ``g < b``: ``y[b->a] o g = g o y[b->a]``."""
    g = _graph(gamma)
    t0 = time.perf_counter()
    rep = Report("cocone")
    verts = sorted(g.vertices)
    for b, a in itertools.combinations(verts, 2):
        y = edge_word(g, g.edge_between(b, a))
        for i in g.generators(b):
            lhs = compose_all(y, vertex_word(b, gen(i)))
            rhs = compose_all(vertex_word(a, gen(i)), y)
            rep.cases += 1
            if not words_equal(g, lhs, rhs):
                rep.failures.append({"beta": str(b), "alpha": str(a), "g": f"g{i}"})
    rep.elapsed = time.perf_counter() - t0
    return rep


def conjugates_inclusion_check(gamma, u: KWord, bound) -> bool:
    """Whether ``u g u^-1 = g`` (``g`` read at the two ends) for every ``g < bound``."""
    g = _graph(gamma)
    c = Ordinal.of(bound)
    uinv = invert(g, u)
    if not (c <= u.source and c <= u.target):
        raise LabError(f"need gamma <= min(source, target), got {c}")
    for i in range(int(c)):
        x = gen(i)
        lhs = compose_all(u, vertex_word(u.source, x), uinv)
        if not words_equal(g, lhs, vertex_word(u.target, x)):
            return False
    return True


def search_conjugators(gamma, bound, beta, alpha, max_edges: int, max_vertex_len: int) -> list[KWord]:
    """All words ``beta -> alpha`` within the bounds conjugating the inclusion of ``G_bound``.

    Each hit is checked to lie in the edge subgroupoid and to avoid vertices
    below ``bound``; a hit that does not raises ``CheckViolation``.
    """
    g = _graph(gamma)
    c = Ordinal.of(bound)
    hits = []
    for w in enumerate_words(g, beta, max_edges, max_vertex_len, target=alpha):
        if not conjugates_inclusion_check(g, w, c):
            continue
        r = in_edge_subgroupoid(g, w)
        if r is None:
            raise CheckViolation(f"conjugator {w} is not in the edge subgroupoid")
        if min(passes_through(g, r)) < c:
            raise CheckViolation(f"conjugator {w} passes below {c}")
        hits.append(w)
    return hits


@dataclass(frozen=True)
class NoysVerdict:
    in_vertex_groups: bool
    in_edge_subgroupoid: bool
    is_identity: bool

    @property
    def hypotheses(self) -> bool:
        return self.in_vertex_groups and self.in_edge_subgroupoid

    @property
    def consistent(self) -> bool:
        return not self.hypotheses or self.is_identity


def noys_check(gamma, z: KWord, u: KWord, v: KWord) -> NoysVerdict:
    """Truth values for: ``u z u^-1`` is a vertex-group element, ``v z v^-1``
    is an edge word, ``z`` is the identity."""
    g = _graph(gamma)
    if z.source != z.target:
        raise LabError("z must be a loop")
    if u.source != z.target or v.source != z.target:
        raise LabError("u and v must start where z does")
    conj_u = compose_all(u, z, invert(g, u))
    conj_v = compose_all(v, z, invert(g, v))
    return NoysVerdict(
        normalize(g, conj_u).length == 0,
        in_edge_subgroupoid(g, conj_v) is not None,
        is_identity_word(g, z),
    )


def crossing_letter(gamma, u: EdgeWord, delta) -> str:
    """First letter ``y[b->a]`` of ``u`` (from the source end) with ``b < delta <= a``."""
    g = _graph(gamma)
    d = Ordinal.of(delta)
    if not (u.source < d <= u.target):
        raise LabError(f"need source < delta <= target, got {u.source} < {d} <= {u.target}")
    for name in u.edges:
        e = g.edges[name]
        if e.source < d <= e.target:
            return name
    raise CheckViolation(f"no letter of {u.edges} crosses {d}")  # pragma: no cover


# -- coherent families --------------------------------------------------------

def _key(b, a) -> tuple:
    return (Ordinal.of(b), Ordinal.of(a))


def family_get(family: dict, b, a) -> EdgeWord:
    return family[_key(b, a)]


def coherence_check(gamma, family: dict) -> Report:
    """Triples ``c < b < a`` where ``u[b,a] o u[c,b] != u[c,a]`` as reduced edge words."""
    g = _graph(gamma)
    t0 = time.perf_counter()
    rep = Report("coherence")
    verts = sorted({v for pair in family for v in pair})
    for c, b, a in itertools.combinations(verts, 3):
        rep.cases += 1
        lhs = edge_compose(g, family[(b, a)], family[(c, b)])
        if lhs.edges != family[(c, a)].edges:
            rep.failures.append({"gamma": str(c), "beta": str(b), "alpha": str(a)})
    rep.elapsed = time.perf_counter() - t0
    return rep


def family_min_vertex_report(gamma, family: dict) -> dict:
    """``(b, a) -> (least vertex passed through, whether it lies below b)``."""
    g = _graph(gamma)
    out = {}
    for (b, a), u in family.items():
        m = min(passes_through(g, u))
        out[(b, a)] = (m, m < b)
    return out


def _path(g: GraphOfGroups, vertices) -> EdgeWord:
    vertices = [Ordinal.of(v) for v in vertices]
    names = tuple(g.edge_between(x, y) for x, y in zip(vertices, vertices[1:]))
    return EdgeWord(vertices[0], vertices[-1], names)


def canonical_family(gamma) -> dict:
    """``u[b,a] = y[2->a] o y[b->2]`` (just ``y[2->a]`` when ``b = 2``)."""
    g = _graph(gamma)
    verts = sorted(g.vertices)
    base = verts[0]
    fam = {}
    for b, a in itertools.combinations(verts, 2):
        fam[(b, a)] = _path(g, [b, a] if b == base else [b, base, a])
    return fam


def direct_family(gamma) -> dict:
    g = _graph(gamma)
    return {(b, a): _path(g, [b, a]) for b, a in itertools.combinations(sorted(g.vertices), 2)}


def tree_family(gamma, rng: Optional[random.Random] = None, max_jump: int = 1) -> dict:
    """Coherent family whose words only visit vertices at or above their source.

    Each vertex gets a parent above it (at most ``max_jump`` higher); ``u[b,a]``
    is the tree path from ``b`` to ``a``. ``max_jump=1`` gives the
    consecutive-step family ``b -> b+1 -> ... -> a``.
    """
    g = _graph(gamma)
    verts = sorted(g.vertices)
    top = verts[-1]
    parent = {}
    for k, v in enumerate(verts[:-1]):
        hi = min(k + max_jump, len(verts) - 1)
        parent[v] = verts[rng.randint(k + 1, hi) if rng is not None else k + 1]

    def to_root(v):
        out = [v]
        while out[-1] != top:
            out.append(parent[out[-1]])
        return out

    fam = {}
    for b, a in itertools.combinations(verts, 2):
        pb, pa = to_root(b), to_root(a)
        # trim the shared tail above the meeting point
        while len(pb) > 1 and len(pa) > 1 and pb[-2] == pa[-2]:
            pb.pop()
            pa.pop()
        fam[(b, a)] = _path(g, pb + pa[-2::-1])
    return fam


def exceeding_chain(gamma, family: dict, m: int, start=(2, 3)) -> list[Ordinal]:
    """Least chain ``d_0 < ... < d_m`` where each ``d_n`` exceeds every vertex
    passed through by ``u[d_{n-2}, d_{n-1}]``."""
    g = _graph(gamma)
    chain = [Ordinal.of(start[0]), Ordinal.of(start[1])]
    verts = sorted(g.vertices)
    while len(chain) < m + 1:
        need = max(max(passes_through(g, family[(chain[-2], chain[-1])])), chain[-1])
        nxt = [v for v in verts if v > need]
        if not nxt:
            raise LabError(f"chain cannot be extended past {chain} inside the truncation")
        chain.append(nxt[0])
    return chain[: m + 1]


def chain_letter_audit(gamma, family: dict, chain, check_coherence: bool = True) -> bool:
    """Replay the letter-extraction argument along ``chain``.

    Picks the crossing letter of each step ``u[d_{n-1}, d_n]`` and returns
    whether these letters are pairwise distinct and all occur in the reduced
    ``u[d_0, d_m]``.
    """
    g = _graph(gamma)
    chain = [Ordinal.of(d) for d in chain]
    if len(chain) < 2 or any(x >= y for x, y in zip(chain, chain[1:])):
        raise LabError("chain must be strictly increasing with at least two entries")
    for n in range(2, len(chain)):
        if chain[n] <= max(passes_through(g, family[(chain[n - 2], chain[n - 1])])):
            raise LabError(f"d_{n} = {chain[n]} does not exceed the vertices of u[d_{n-2}, d_{n-1}]")
    flagged = [k for k, (_, low) in family_min_vertex_report(g, family).items() if low]
    if flagged:
        b, a = flagged[0]
        raise LabError(f"family passes below its source, e.g. u[{b},{a}]")
    if check_coherence and not coherence_check(g, family).ok:
        raise LabError("family is not coherent")
    letters = [crossing_letter(g, family[(x, y)], y) for x, y in zip(chain, chain[1:])]
    whole = family[(chain[0], chain[-1])]
    return len(set(letters)) == len(letters) and set(letters) <= set(whole.edges) and whole.length >= len(letters)

