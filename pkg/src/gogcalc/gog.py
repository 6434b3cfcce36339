"""Graphs of groups with free vertex groups and sub-basis edge groups.

A ``KWord`` stores its factors in the order they are applied: ``elements[i]``
is the vertex element ``a_i`` and ``edges[i]`` is the edge ``y_{i+1}``, so the
realized morphism is ``a_n o y_n o ... o y_1 o a_0``. The textual word
syntax (see ``gogcalc.wordsyntax``) lists factors the other way round,
leftmost applied last.

Every edge group is the subgroup of the endpoint vertex groups spanned by a
common set of generator indices, and both edge maps are index-preserving
inclusions. That makes image membership a letter test and coset
representatives a prefix strip, which is what ``normalize`` relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .freegroup import (
    IDENTITY,
    FreeWord,
    coset_split,
    fg_invert,
    fg_multiply,
)
from .ordinal import Ordinal


class GraphError(ValueError):
    pass


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    name: str
    source: Ordinal
    target: Ordinal
    edge_indices: frozenset
    inverse: str


@dataclass
class GraphOfGroups:
    """Vertices carry the rank of their free group; edges are keyed by name."""

    vertices: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)

    def __post_init__(self):
        self.vertices = {Ordinal.of(v): Ordinal.of(r) for v, r in self.vertices.items()}
        self._by_ends = None

    def add_vertex(self, vid, rank) -> None:
        self.vertices[Ordinal.of(vid)] = Ordinal.of(rank)

    def add_edge(self, name: str, source, target, edge_indices: Iterable, inverse: str) -> Edge:
        e = Edge(name, Ordinal.of(source), Ordinal.of(target),
                 frozenset(Ordinal.of(i) for i in edge_indices), inverse)
        self.edges[name] = e
        self._by_ends = None
        return e

    def add_edge_pair(self, name: str, inverse_name: str, source, target, edge_indices: Iterable) -> None:
        idx = list(edge_indices)
        self.add_edge(name, source, target, idx, inverse_name)
        self.add_edge(inverse_name, target, source, idx, name)

    def edge(self, name: str) -> Edge:
        try:
            return self.edges[name]
        except KeyError:
            raise GraphError(f"unknown edge {name!r}") from None

    def inverse_of(self, name: str) -> str:
        return self.edge(name).inverse

    def edge_between(self, source, target) -> str:
        """Name of the unique edge ``source -> target``."""
        if self._by_ends is None:
            by_ends = {}
            for e in self.edges.values():
                by_ends.setdefault((e.source, e.target), []).append(e.name)
            self._by_ends = by_ends
        names = self._by_ends.get((Ordinal.of(source), Ordinal.of(target)), [])
        if not names:
            raise GraphError(f"no edge from {source} to {target}")
        if len(names) > 1:
            raise GraphError(f"several edges from {source} to {target}: {sorted(names)}")
        return names[0]

    def rank(self, vid) -> Ordinal:
        try:
            return self.vertices[Ordinal.of(vid)]
        except KeyError:
            raise GraphError(f"unknown vertex {vid}") from None

    def generators(self, vid) -> list:
        rank = self.rank(vid)
        if not rank.is_finite:
            raise GraphError(f"vertex {vid} has infinite rank {rank}; cannot enumerate its generators")
        return [Ordinal.of(i) for i in range(int(rank))]


def validate_graph(g: GraphOfGroups) -> list[str]:
    """All invariant violations of ``g``; empty when the graph is valid."""
    problems = []
    for name, e in g.edges.items():
        if e.name != name:
            problems.append(f"edge {name!r}: stored under a different name {e.name!r}")
        for role, v in (("source", e.source), ("target", e.target)):
            if v not in g.vertices:
                problems.append(f"edge {name!r}: {role} {v} is not a vertex")
        if e.inverse == name:
            problems.append(f"edge {name!r}: inverse is the edge itself (fixed point of the involution)")
            continue
        inv = g.edges.get(e.inverse)
        if inv is None:
            problems.append(f"edge {name!r}: inverse {e.inverse!r} does not exist")
            continue
        if inv.inverse != name:
            problems.append(f"edge {name!r}: inverse of {e.inverse!r} is {inv.inverse!r}, not an involution")
        if inv.source != e.target or inv.target != e.source:
            problems.append(f"edge {name!r}: inverse {e.inverse!r} does not swap source and target")
        if inv.edge_indices != e.edge_indices:
            problems.append(f"edge {name!r}: edge group differs from that of its inverse {e.inverse!r}")
        for role, v in (("source", e.source), ("target", e.target)):
            rank = g.vertices.get(v)
            if rank is None:
                continue
            bad = sorted(i for i in e.edge_indices if not i < rank)
            if bad:
                problems.append(
                    f"edge {name!r}: edge map into {role} {v} is not injective "
                    f"(indices {', '.join(map(str, bad))} exceed rank {rank})")
    return problems


@dataclass(frozen=True)
class KWord:
    source: Ordinal
    target: Ordinal
    elements: tuple
    edges: tuple = ()

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EdgeWord:
    """Reduced edge path; ``edges`` are listed in the order they are traversed."""

    source: Ordinal
    target: Ordinal
    edges: tuple = ()

    @property
    def length(self) -> int:
        return len(self.edges)


def vertex_word(vid, a: FreeWord = IDENTITY) -> KWord:
    vid = Ordinal.of(vid)
    return KWord(vid, vid, (a,), ())


def edge_word(g: GraphOfGroups, name: str) -> KWord:
    e = g.edge(name)
    return KWord(e.source, e.target, (IDENTITY, IDENTITY), (name,))


def make_word(g: GraphOfGroups, source, elements: Iterable[FreeWord], edges: Iterable[str]) -> KWord:
    """Build and check a ``KWord`` from application-ordered factors."""
    elements, edges = tuple(elements), tuple(edges)
    w = KWord(Ordinal.of(source), Ordinal.of(source), elements, edges)
    target = check_word(g, w, allow_target_mismatch=True)
    return KWord(w.source, target, elements, edges)


def vertex_path(g: GraphOfGroups, w: KWord) -> list:
    """Vertices ``x_0, ..., x_n`` visited by ``w``."""
    path = [w.source]
    for name in w.edges:
        path.append(g.edge(name).target)
    return path


def check_word(g: GraphOfGroups, w: KWord, allow_target_mismatch: bool = False) -> Ordinal:
    if len(w.elements) != len(w.edges) + 1:
        raise WordError("a word of length n needs n+1 vertex elements")
    x = w.source
    if x not in g.vertices:
        raise WordError(f"unknown source vertex {x}")
    for k, name in enumerate(w.edges):
        e = g.edge(name)
        if e.source != x:
            raise WordError(f"edge {k + 1} ({name}) starts at {e.source}, expected {x}")
        x = e.target
    if not allow_target_mismatch and x != w.target:
        raise WordError(f"word ends at {x}, but target is {w.target}")
    for a, v in zip(w.elements, vertex_path(g, w)):
        rank = g.rank(v)
        for i, _ in a:
            if not i < rank:
                raise WordError(f"generator g{i} does not exist at vertex {v} of rank {rank}")
    return x


def compose(w1: KWord, w2: KWord) -> KWord:
    """``w1 o w2``: ``w2`` first."""
    if w2.target != w1.source:
        raise WordError(f"cannot compose: {w2.target} != {w1.source}")
    mid = fg_multiply(w1.elements[0], w2.elements[-1])
    return KWord(w2.source, w1.target, w2.elements[:-1] + (mid,) + w1.elements[1:], w2.edges + w1.edges)


def compose_all(*words: KWord) -> KWord:
    out = words[-1]
    for w in reversed(words[:-1]):
        out = compose(w, out)
    return out


def invert(g: GraphOfGroups, w: KWord) -> KWord:
    return KWord(
        w.target,
        w.source,
        tuple(fg_invert(a) for a in reversed(w.elements)),
        tuple(g.edges[name].inverse for name in reversed(w.edges)),
    )


def _in_image(a: FreeWord, indices: frozenset) -> bool:
    for i, _ in a:
        if i not in indices:
            return False
    return True


def reducible_positions(g: GraphOfGroups, w: KWord) -> list[int]:
    """Every reducible position ``i`` (numbered ``2..n`` from the right)."""
    out = []
    edges = w.edges
    for i in range(2, len(edges) + 1):
        yi, yprev = edges[i - 1], edges[i - 2]
        e = g.edges[yi]
        if e.inverse == yprev and _in_image(w.elements[i - 1], e.edge_indices):
            out.append(i)
    return out


def is_reducible(g: GraphOfGroups, w: KWord) -> Optional[int]:
    """Least reducible position ``i`` (rightmost in the written word), or ``None``.

    Position ``i`` is reducible when ``y_{i-1}`` is the inverse of ``y_i`` and
    ``a_{i-1}`` lies in the edge group of ``y_i``.
    """
    edges = w.edges
    for i in range(2, len(edges) + 1):
        e = g.edges[edges[i - 1]]
        if e.inverse == edges[i - 2] and _in_image(w.elements[i - 1], e.edge_indices):
            return i
    return None


def reduce_once(g: GraphOfGroups, w: KWord, i: int) -> KWord:
    """Apply the shortening move at position ``i``.

    ``a_i, y_i, a_{i-1}, ybar_i, a_{i-2}`` collapses to ``a_i a_{i-1} a_{i-2}``,
    with ``a_{i-1}`` re-read at the far endpoint (same letters).
    """
    if not 2 <= i <= w.length:
        raise WordError(f"position {i} out of range for a word of length {w.length}")
    e = g.edges[w.edges[i - 1]]
    if e.inverse != w.edges[i - 2] or not _in_image(w.elements[i - 1], e.edge_indices):
        raise WordError(f"position {i} is not reducible")
    els = w.elements
    merged = fg_multiply(fg_multiply(els[i], els[i - 1]), els[i - 2])
    return KWord(w.source, w.target, els[: i - 2] + (merged,) + els[i + 1:], w.edges[: i - 2] + w.edges[i:])


def to_irreducible(g: GraphOfGroups, w: KWord) -> KWord:
    while (i := is_reducible(g, w)) is not None:
        w = reduce_once(g, w, i)
    return w


def _push_pass(g: GraphOfGroups, elements: list, edges) -> None:
    # move each edge-group prefix of a_{i-1} across y_i into a_i, right to left
    for i in range(1, len(edges) + 1):
        a = elements[i - 1]
        if not a:
            continue
        h, r = coset_split(a, g.edges[edges[i - 1]].edge_indices)
        if h:
            elements[i - 1] = r
            elements[i] = fg_multiply(elements[i], h)


def normalize(g: GraphOfGroups, w: KWord) -> KWord:
    """Canonical representative of the morphism realized by ``w``.

    The result is irreducible and every ``a_{i-1}`` with ``i >= 1`` has no
    leading letter from the edge group of ``y_i``; ``a_n`` is unconstrained.
    After a push pass a position is reducible exactly when its middle element
    became empty, so the loop alternates pushes and reductions.
    """
    elements = list(w.elements)
    edges = list(w.edges)
    while True:
        _push_pass(g, elements, edges)
        for i in range(2, len(edges) + 1):
            if not elements[i - 1] and g.edges[edges[i - 1]].inverse == edges[i - 2]:
                merged = fg_multiply(elements[i], elements[i - 2])
                elements[i - 2: i + 1] = [merged]
                del edges[i - 2: i]
                break
        else:
            return KWord(w.source, w.target, tuple(elements), tuple(edges))


def words_equal(g: GraphOfGroups, w1: KWord, w2: KWord) -> bool:
    if w1.source != w2.source or w1.target != w2.target:
        return False
    n1, n2 = normalize(g, w1), normalize(g, w2)
    return n1.edges == n2.edges and n1.elements == n2.elements


def is_identity_word(g: GraphOfGroups, w: KWord) -> bool:
    if w.source != w.target:
        return False
    n = normalize(g, w)
    return not n.edges and not n.elements[0]


def identity_word(vid) -> KWord:
    return vertex_word(vid)


# -- the edge subgroupoid ---------------------------------------------------

def reduce_edges(g: GraphOfGroups, edges: Iterable[str]) -> tuple:
    stack = []
    for name in edges:
        if stack and g.edges[stack[-1]].inverse == name:
            stack.pop()
        else:
            stack.append(name)
    return tuple(stack)


def edge_path(g: GraphOfGroups, source, edges: Iterable[str]) -> EdgeWord:
    """Freely reduced ``EdgeWord`` traversing ``edges`` from ``source``."""
    source = Ordinal.of(source)
    x = source
    for name in edges:
        e = g.edge(name)
        if e.source != x:
            raise WordError(f"edge {name} starts at {e.source}, expected {x}")
        x = e.target
    return EdgeWord(source, x, reduce_edges(g, edges))


def edge_compose(g: GraphOfGroups, u: EdgeWord, v: EdgeWord) -> EdgeWord:
    """``u o v``: traverse ``v`` then ``u``."""
    if v.target != u.source:
        raise WordError(f"cannot compose edge words: {v.target} != {u.source}")
    return EdgeWord(v.source, u.target, reduce_edges(g, v.edges + u.edges))


def edge_invert(g: GraphOfGroups, u: EdgeWord) -> EdgeWord:
    return EdgeWord(u.target, u.source, tuple(g.edges[n].inverse for n in reversed(u.edges)))


def embed(u: EdgeWord) -> KWord:
    return KWord(u.source, u.target, (IDENTITY,) * (len(u.edges) + 1), u.edges)


def retract(g: GraphOfGroups, w: KWord) -> EdgeWord:
    """Kill every vertex element and freely reduce the remaining edge path."""
    return EdgeWord(w.source, w.target, reduce_edges(g, w.edges))


def in_edge_subgroupoid(g: GraphOfGroups, w: KWord) -> Optional[EdgeWord]:
    r = retract(g, w)
    return r if words_equal(g, w, embed(r)) else None


def passes_through(g: GraphOfGroups, u: EdgeWord) -> set:
    if not u.edges:
        return {u.source}
    out = set()
    for name in u.edges:
        e = g.edges[name]
        out.add(e.source)
        out.add(e.target)
    return out


# -- enumeration helpers ----------------------------------------------------

def reduced_words(gens: Iterable, max_len: int) -> list[FreeWord]:
    """Every reduced word of length ``<= max_len`` over ``gens``, shortest first."""
    letters = [(Ordinal.of(i), s) for i in gens for s in (1, -1)]
    out = [IDENTITY]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1][0] == x[0] and w[-1][1] == -x[1]:
                    continue
                nxt.append(w + (x,))
        out.extend(FreeWord._raw(w) for w in nxt)
        layer = nxt
    return out


def edge_sequences(g: GraphOfGroups, source, max_edges: int, target=None) -> list[tuple]:
    """Edge sequences from ``source`` of length ``<= max_edges`` (optionally ending at ``target``)."""
    source = Ordinal.of(source)
    outgoing = {}
    for e in g.edges.values():
        outgoing.setdefault(e.source, []).append(e)
    for lst in outgoing.values():
        lst.sort(key=lambda e: (e.target, e.name))
    out = []
    layer = [((), source)]
    for depth in range(max_edges + 1):
        for seq, end in layer:
            if target is None or end == Ordinal.of(target):
                out.append(seq)
        if depth == max_edges:
            break
        layer = [(seq + (e.name,), e.target) for seq, end in layer for e in outgoing.get(end, [])]
    return out


def enumerate_words(g: GraphOfGroups, source, max_edges: int, max_vertex_len: int, target=None):
    """Yield every ``KWord`` from ``source`` within the given bounds."""
    source = Ordinal.of(source)
    cache = {}

    def words_at(v):
        if v not in cache:
            cache[v] = reduced_words(g.generators(v), max_vertex_len)
        return cache[v]

    for seq in edge_sequences(g, source, max_edges, target):
        path = [source] + [g.edges[n].target for n in seq]
        for elements in itertools.product(*(words_at(v) for v in path)):
            yield KWord(source, path[-1], elements, seq)
