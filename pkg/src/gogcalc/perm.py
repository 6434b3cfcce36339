"""Finite-support permutations of ordinals, the shift map and the conjugator tau.

``shift`` sends a permutation ``s`` to the permutation that maps ``g+1`` to
``s(g)+1`` and fixes every limit ordinal (zero included). For a limit
``beta > 0``, ``TauMap(beta)`` is a bijection of the ordinals moving infinitely
many points; conjugating any permutation supported below ``beta`` by it gives
the shift of that permutation. ``TauMap`` is evaluated pointwise and never
materialized.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .ordinal import (
    Ordinal,
    OrdinalError,
    add,
    format_ordinal,
    is_limit,
    left_subtract,
    parse_ordinal,
    predecessor,
    successor,
)


class PermError(ValueError):
    pass


class PermSyntaxError(PermError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}: {text!r}")


class FinPerm:
    """A bijection of the ordinals moving finitely many points.

    Fixed points are never stored, so two permutations are equal exactly
    when their stored mappings are.
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping | Iterable = ()):
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        m = {}
        for src, dst in items:
            src, dst = Ordinal.of(src), Ordinal.of(dst)
            if src in m:
                raise PermError(f"{src} is mapped twice")
            if src != dst:
                m[src] = dst
        if len(set(m.values())) != len(m):
            raise PermError("mapping is not injective")
        if set(m.values()) != set(m):
            raise PermError("moved points are not closed under the mapping")
        self._map = m
        self._hash = None

    @classmethod
    def _trusted(cls, m: dict) -> FinPerm:
        p = cls.__new__(cls)
        p._map = m
        p._hash = None
        return p

    @property
    def mapping(self) -> dict:
        return dict(self._map)

    @property
    def support(self) -> frozenset:
        return frozenset(self._map)

    def __call__(self, x) -> Ordinal:
        x = Ordinal.of(x)
        return self._map.get(x, x)

    def __mul__(self, other: FinPerm) -> FinPerm:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, FinPerm):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __bool__(self):
        return bool(self._map)

    def __len__(self):
        return len(self._map)

    def cycles(self) -> list[tuple[Ordinal, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def bound(self) -> Ordinal:
        """Least ordinal exceeding every moved point (zero for the identity)."""
        if not self._map:
            return Ordinal.of(0)
        return successor(max(self._map))

    def __repr__(self):
        return f"FinPerm({format_perm(self)!r})"

    def __str__(self):
        return format_perm(self)


def identity() -> FinPerm:
    return FinPerm._trusted({})


def swap(a, b) -> FinPerm:
    a, b = Ordinal.of(a), Ordinal.of(b)
    return FinPerm({a: b, b: a}) if a != b else identity()


def cycle(*points) -> FinPerm:
    pts = [Ordinal.of(p) for p in points]
    if len(set(pts)) != len(pts):
        raise PermError("repeated point in cycle")
    return FinPerm({p: pts[(k + 1) % len(pts)] for k, p in enumerate(pts)})


def apply(sigma: FinPerm, x) -> Ordinal:
    return sigma(x)


def compose(sigma: FinPerm, rho: FinPerm) -> FinPerm:
    """``sigma o rho``: apply ``rho`` first."""
    m = {}
    for x in sigma._map.keys() | rho._map.keys():
        y = rho._map.get(x, x)
        y = sigma._map.get(y, y)
        if y != x:
            m[x] = y
    return FinPerm._trusted(m)


def inverse(sigma: FinPerm) -> FinPerm:
    return FinPerm._trusted({v: k for k, v in sigma._map.items()})


def shift(sigma: FinPerm) -> FinPerm:
    return FinPerm._trusted({successor(k): successor(v) for k, v in sigma._map.items()})


@dataclass(frozen=True)
class TauMap:
    """Evaluator for the bijection tau attached to a limit ordinal ``beta > 0``.

    Below ``beta`` successors step down and limits ``g`` jump to ``beta + g``;
    on ``[beta, beta+beta)`` every point steps up by one; above that it is
    the identity.
    """

    beta: Ordinal

    def __post_init__(self):
        beta = Ordinal.of(self.beta)
        object.__setattr__(self, "beta", beta)
        if not beta or not is_limit(beta):
            raise PermError(f"tau needs a nonzero limit ordinal, got {beta}")

    @property
    def ceiling(self) -> Ordinal:
        return add(self.beta, self.beta)

    def __call__(self, x) -> Ordinal:
        return tau_apply(self, x)

    def inverse(self, x) -> Ordinal:
        return tau_inverse_apply(self, x)


def tau_apply(tau: TauMap, x) -> Ordinal:
    x = Ordinal.of(x)
    beta = tau.beta
    if x < beta:
        return add(beta, x) if is_limit(x) else predecessor(x)
    if x < tau.ceiling:
        return successor(x)
    return x


def tau_inverse_apply(tau: TauMap, x) -> Ordinal:
    x = Ordinal.of(x)
    beta = tau.beta
    if x < beta:
        return successor(x)
    if x < tau.ceiling:
        # limits in [beta, beta+beta) are the images of limits below beta
        return left_subtract(beta, x) if is_limit(x) else predecessor(x)
    return x


def conjugate_by_tau(sigma: FinPerm, beta) -> FinPerm:
    """``tau^-1 o sigma o tau`` for ``tau = TauMap(beta)``, computed exactly.

    Only points whose tau-image is moved by ``sigma`` can be moved by the
    conjugate, so the result is read off a finite candidate set.
    """
    tau = TauMap(Ordinal.of(beta))
    if sigma.bound() > tau.beta:
        raise PermError(f"permutation moves a point at or above {tau.beta}")
    candidates = set()
    for x in sigma._map:
        candidates.add(tau_inverse_apply(tau, x))
        candidates.add(tau_inverse_apply(tau, sigma._map[x]))
    m = {}
    for c in candidates:
        y = tau_apply(tau, c)
        y = tau_inverse_apply(tau, sigma._map.get(y, y))
        if y != c:
            m[c] = y
    return FinPerm._trusted(m)


def in_shift_image(rho: FinPerm) -> Optional[FinPerm]:
    """The unique ``sigma`` with ``shift(sigma) == rho``, or ``None``."""
    if any(is_limit(x) for x in rho._map):
        return None
    return FinPerm._trusted({predecessor(k): predecessor(v) for k, v in rho._map.items()})


def verify_hom_on_pair(sigma: FinPerm, rho: FinPerm) -> bool:
    return shift(compose(sigma, rho)) == compose(shift(sigma), shift(rho))


def format_perm(sigma: FinPerm) -> str:
    cycles = sigma.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(format_ordinal(p) for p in c) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str) -> FinPerm:
    """Parse cycle notation such as ``(0 1)(w w+1)``; ``()`` is the identity.

    Cycles are composed right to left, so overlapping cycles are allowed.
    Ordinal literals inside a cycle must not contain spaces.
    """
    pos = 0
    result = identity()
    factors = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(text, pos)
        if not m:
            raise PermSyntaxError("expected '(' starting a cycle", text, pos)
        body_start = m.start(1)
        points = []
        for tok in re.finditer(r"\S+", m.group(1)):
            try:
                points.append(parse_ordinal(tok.group()))
            except OrdinalError as exc:
                raise PermSyntaxError(f"bad ordinal {tok.group()!r} ({exc})", text, body_start + tok.start()) from None
        if len(set(points)) != len(points):
            raise PermSyntaxError("repeated point in cycle", text, m.start())
        factors.append(points)
        pos = m.end()
    if not factors:
        raise PermSyntaxError("no cycles", text, 0)
    for points in reversed(factors):
        if len(points) > 1:
            result = compose(cycle(*points), result)
    return result
