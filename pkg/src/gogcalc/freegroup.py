"""Reduced words in free groups on ordinal-indexed generators.

A word is a tuple of letters ``(index, sign)`` with ``sign`` in ``{1, -1}``;
``FreeWord`` always holds the freely reduced form. Sub-basis subgroups are
given by a set of generator indices ``S``.
"""

from __future__ import annotations

from typing import Iterable

from .ordinal import Ordinal, OrdinalError, format_ordinal, parse_ordinal


class FreeGroupError(ValueError):
    pass


class WordSyntaxError(FreeGroupError):
    """Syntax error carrying a 1-based line and column into ``text``."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


def _letter(letter) -> tuple:
    index, sign = letter
    if sign not in (1, -1):
        raise FreeGroupError(f"letter sign must be +1 or -1, got {sign!r}")
    return (Ordinal.of(index), sign)


def _reduce_letters(letters: Iterable) -> list:
    stack = []
    for letter in letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return stack


class FreeWord(tuple):
    """Freely reduced word; the empty word is the identity."""

    __slots__ = ()

    def __new__(cls, letters: Iterable = ()):
        return tuple.__new__(cls, _reduce_letters(_letter(x) for x in letters))

    @classmethod
    def _raw(cls, letters) -> FreeWord:
        return tuple.__new__(cls, letters)

    @property
    def letters(self) -> tuple:
        return tuple(self)

    def indices(self) -> set:
        return {i for i, _ in self}

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return fg_multiply(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def __add__(self, other):
        raise TypeError("use * to multiply free group words")

    def inverse(self) -> FreeWord:
        return fg_invert(self)

    def __repr__(self):
        return f"FreeWord({format_freeword(self)!r})"

    def __str__(self):
        return format_freeword(self)


IDENTITY = FreeWord._raw(())


def gen(index, sign: int = 1) -> FreeWord:
    return FreeWord._raw(((Ordinal.of(index), sign),))


def fg_reduce(raw: Iterable) -> FreeWord:
    return FreeWord(raw)


def fg_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    # both factors are reduced, so cancellation only happens at the seam
    k = 0
    n = min(len(u), len(v))
    while k < n:
        a, b = u[-1 - k], v[k]
        if a[0] == b[0] and a[1] == -b[1]:
            k += 1
        else:
            break
    return FreeWord._raw(u[: len(u) - k] + v[k:])


def fg_invert(u: FreeWord) -> FreeWord:
    return FreeWord._raw(tuple((i, -s) for i, s in reversed(u)))


def _index_set(S) -> frozenset:
    return frozenset(Ordinal.of(i) for i in S)


def coset_split(w: FreeWord, S) -> tuple[FreeWord, FreeWord]:
    """Split ``w = h * r`` with ``h`` the maximal prefix over ``S``.

    ``r`` never starts with an ``S``-letter, so ``r`` depends only on the
    coset ``<S> w`` and serves as its representative.
    """
    S = _index_set(S)
    k = 0
    while k < len(w) and w[k][0] in S:
        k += 1
    return FreeWord._raw(w[:k]), FreeWord._raw(w[k:])


def in_subgroup(w: FreeWord, S) -> bool:
    S = _index_set(S)
    return all(i in S for i, _ in w)


def centralizes(b: FreeWord, gens) -> bool:
    """Whether ``b`` commutes with every generator indexed by ``gens``."""
    binv = fg_invert(b)
    for i in _index_set(gens):
        g = gen(i)
        if fg_multiply(fg_multiply(b, g), binv) != g:
            return False
    return True


def conjugates_into(b: FreeWord, a: FreeWord, S) -> bool:
    """Whether ``b a b^-1`` lies in the subgroup generated by ``S``.

    ``a`` itself must be a word over ``S``.
    """
    S = _index_set(S)
    if not in_subgroup(a, S):
        raise FreeGroupError(f"{a} is not a word over the given generators")
    return in_subgroup(fg_multiply(fg_multiply(b, a), fg_invert(b)), S)


def cyclic_reduce(u: FreeWord) -> FreeWord:
    lo, hi = 0, len(u)
    while hi - lo >= 2 and u[lo][0] == u[hi - 1][0] and u[lo][1] == -u[hi - 1][1]:
        lo += 1
        hi -= 1
    return FreeWord._raw(u[lo:hi])


def are_conjugate_free(u: FreeWord, v: FreeWord) -> bool:
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = tuple(cu) + tuple(cu)
    n = len(cv)
    target = tuple(cv)
    return any(doubled[k:k + n] == target for k in range(len(cu)))


def format_freeword(w: FreeWord, empty: str = "e") -> str:
    if not w:
        return empty
    return " ".join(f"g{format_ordinal(i)}" + ("^-1" if s < 0 else "") for i, s in w)


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < n and not text[pos].isspace():
            pos += 1
        yield start, text[start:pos]


def parse_freeword(text: str) -> FreeWord:
    """Parse ``g0 g1^-1 gw+2``; ``e``, ``1`` or blank text is the identity."""
    letters = []
    for start, tok in _tokens(text):
        if tok in ("e", "1"):
            continue
        if not tok.startswith("g"):
            raise WordSyntaxError(f"expected a generator 'g<i>', got {tok!r}", text, start)
        body, sign = tok[1:], 1
        if body.endswith("^-1"):
            body, sign = body[:-3], -1
        if not body:
            raise WordSyntaxError("generator index missing", text, start + 1)
        try:
            index = parse_ordinal(body)
        except OrdinalError as exc:
            raise WordSyntaxError(f"bad generator index {body!r}: {exc}", text, start + 1) from None
        letters.append((index, sign))
    return FreeWord._raw(_reduce_letters(letters))
