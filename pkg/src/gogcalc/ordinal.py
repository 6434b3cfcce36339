"""Ordinals below w^w in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents and positive coefficients; ``()`` is zero.
Because the pairs are ordered lexicographically, plain tuple comparison is
exactly ordinal comparison, so ``Ordinal`` subclasses ``tuple`` and inherits
fast ``==``, ``<`` and hashing.

Textual syntax is ``w^k*c + ... + n`` (``ω`` is accepted for ``w``).
"""

from __future__ import annotations

import re
from enum import Enum


class OrdinalError(ValueError):
    """Domain error raised by ordinal operations."""


class OrdinalSyntaxError(OrdinalError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.column = pos + 1
        super().__init__(f"{message} at column {pos + 1}: {text!r}")


class Cmp(Enum):
    LT = -1
    EQ = 0
    GT = 1


class Ordinal(tuple):
    __slots__ = ()

    def __new__(cls, terms=()):
        terms = tuple((int(e), int(c)) for e, c in terms)
        last = None
        for e, c in terms:
            if e < 0 or c < 1:
                raise OrdinalError(f"bad Cantor normal form term {(e, c)}")
            if last is not None and e >= last:
                raise OrdinalError("exponents must be strictly decreasing")
            last = e
        return tuple.__new__(cls, terms)

    @classmethod
    def _raw(cls, terms) -> Ordinal:
        return tuple.__new__(cls, terms)

    @classmethod
    def of(cls, value) -> Ordinal:
        """Coerce an ``Ordinal``, a natural number or a literal string."""
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not an ordinal")
        if isinstance(value, int):
            if value < 0:
                raise OrdinalError(f"negative ordinal {value}")
            return ZERO if value == 0 else cls._raw(((0, value),))
        if isinstance(value, str):
            return parse_ordinal(value)
        raise TypeError(f"cannot interpret {value!r} as an ordinal")

    @property
    def terms(self) -> tuple:
        return tuple(self)

    @property
    def is_finite(self) -> bool:
        return not self or (len(self) == 1 and self[0][0] == 0)

    def __int__(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{self} is infinite")
        return self[0][1] if self else 0

    def __index__(self) -> int:
        return int(self)

    @property
    def leading_exponent(self) -> int:
        return self[0][0] if self else -1

    def __add__(self, other):
        if isinstance(other, (int, str)):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if isinstance(other, (int, str)):
            return add(Ordinal.of(other), self)
        return NotImplemented

    def __mul__(self, other):
        # shadows tuple repetition
        raise TypeError("ordinal multiplication is not supported")

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"

    def __str__(self) -> str:
        return format_ordinal(self)


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((0, 1),))
OMEGA = Ordinal._raw(((1, 1),))


def omega_power(exponent: int, coefficient: int = 1) -> Ordinal:
    return Ordinal(((exponent, coefficient),))


def add(a, b) -> Ordinal:
    """Ordinal sum ``a + b``.

    Terms of ``a`` with exponent below the leading exponent of ``b`` are
    absorbed; a term of equal exponent merges coefficients.
    """
    a, b = Ordinal.of(a), Ordinal.of(b)
    if not b:
        return a
    lead_e, lead_c = b[0]
    kept = []
    for e, c in a:
        if e > lead_e:
            kept.append((e, c))
        elif e == lead_e:
            lead_c += c
            break
        else:
            break
    return Ordinal._raw(tuple(kept) + ((lead_e, lead_c),) + tuple(b[1:]))


def compare(a, b) -> Cmp:
    a, b = Ordinal.of(a), Ordinal.of(b)
    if a == b:
        return Cmp.EQ
    return Cmp.LT if a < b else Cmp.GT


def is_limit(a) -> bool:
    """True when ``a`` has no predecessor. Zero counts as a limit."""
    a = Ordinal.of(a)
    return not a or a[-1][0] != 0


def successor(a) -> Ordinal:
    return add(a, ONE)


def predecessor(a) -> Ordinal:
    a = Ordinal.of(a)
    if is_limit(a):
        raise OrdinalError(f"{a} is a limit ordinal and has no predecessor")
    e, c = a[-1]
    if c == 1:
        return Ordinal._raw(a[:-1])
    return Ordinal._raw(a[:-1] + ((0, c - 1),))


def min_ord(a, b) -> Ordinal:
    a, b = Ordinal.of(a), Ordinal.of(b)
    return a if a <= b else b


def left_subtract(a, b) -> Ordinal:
    """The unique ``d`` with ``a + d == b``; requires ``a <= b``."""
    a, b = Ordinal.of(a), Ordinal.of(b)
    if b < a:
        raise OrdinalError(f"cannot subtract {a} from the smaller {b}")
    k = 0
    while k < len(a) and a[k] == b[k]:
        k += 1
    if k == len(a):
        return Ordinal._raw(b[k:])
    (ea, ca), (eb, cb) = a[k], b[k]
    if ea == eb:
        return Ordinal._raw(((eb, cb - ca),) + b[k + 1:])
    return Ordinal._raw(b[k:])


def format_ordinal(a) -> str:
    a = Ordinal.of(a)
    if not a:
        return "0"
    parts = []
    for e, c in a:
        if e == 0:
            parts.append(str(c))
            continue
        base = "w" if e == 1 else f"w^{e}"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<w>[wω])|(?P<num>\d+)|(?P<op>[+*^]))")


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``w^k*c + ... + n``. Non-canonical sums are normalized by ``add``."""
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m:
            while text[pos].isspace():
                pos += 1
            raise OrdinalSyntaxError("unexpected character", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise OrdinalSyntaxError("empty ordinal", text, 0)

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    def expect_num():
        nonlocal i
        kind, val, p = peek()
        if kind != "num":
            raise OrdinalSyntaxError("expected a natural number", text, p)
        i += 1
        return int(val)

    result = ZERO
    while True:
        kind, val, p = peek()
        if kind == "num":
            i += 1
            term = Ordinal.of(int(val))
            if peek()[0] == "op" and peek()[1] == "*":
                raise OrdinalSyntaxError("coefficients follow the power of w", text, peek()[2])
        elif kind == "w":
            i += 1
            exponent, coeff = 1, 1
            if peek()[1] == "^":
                i += 1
                exponent = expect_num()
            if peek()[1] == "*":
                i += 1
                coeff = expect_num()
            if coeff == 0:
                term = ZERO
            elif exponent == 0:
                term = Ordinal.of(coeff)
            else:
                term = Ordinal._raw(((exponent, coeff),))
        else:
            raise OrdinalSyntaxError("expected a term", text, p)
        result = add(result, term)
        kind, val, p = peek()
        if kind is None:
            return result
        if val != "+":
            raise OrdinalSyntaxError("expected '+'", text, p)
        i += 1
