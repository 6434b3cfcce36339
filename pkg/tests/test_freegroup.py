
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import freewords, raw_letters
from gogcalc.freegroup import (
    IDENTITY,
    FreeGroupError,
    FreeWord,
    WordSyntaxError,
    are_conjugate_free,
    centralizes,
    conjugates_into,
    coset_split,
    cyclic_reduce,
    fg_invert,
    fg_multiply,
    fg_reduce,
    format_freeword,
    gen,
    in_subgroup,
    parse_freeword,
)
from gogcalc.gog import reduced_words
from gogcalc.ordinal import Ordinal

def naive_reduce(letters):
    """Delete one cancelling pair at a time until none is left."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k][0] == word[k + 1][0] and word[k][1] == -word[k + 1][1]:
                del word[k:k + 2]
                changed = True
                break
    return tuple(word)

def w(text):
    return parse_freeword(text)

@given(raw_letters())
def test_reduce_matches_naive_oracle(letters):
    assert tuple(fg_reduce(letters)) == naive_reduce(letters)

@given(raw_letters(), raw_letters())
def test_multiply_matches_naive_oracle(a, b):
    assert tuple(fg_multiply(fg_reduce(a), fg_reduce(b))) == naive_reduce(a + b)

@given(freewords(), freewords(), freewords())
def test_group_axioms(a, b, c):
    assert fg_multiply(fg_multiply(a, b), c) == fg_multiply(a, fg_multiply(b, c))
    assert fg_multiply(a, fg_invert(a)) == IDENTITY
    assert fg_multiply(IDENTITY, a) == a
    assert fg_invert(fg_invert(a)) == a

def test_examples():
    assert w("g0 g1 g1^-1 g0^-1") == IDENTITY
    assert fg_multiply(w("g0 g1"), w("g1^-1 g2")) == w("g0 g2")
    assert fg_invert(w("g0 g1^-1")) == w("g1 g0^-1")
    assert gen(3, -1) == w("g3^-1")
    assert w("gw+2") == FreeWord([(Ordinal.of("w+2"), 1)])

@given(freewords(), st.sets(st.sampled_from((0, 1, 2))))
def test_coset_split(word, S):
    h, r = coset_split(word, S)
    assert fg_multiply(h, r) == word
    assert in_subgroup(h, S)
    assert not r or r[0][0] not in {Ordinal.of(i) for i in S}

@given(freewords(), freewords(gens=(0, 1)))
def test_coset_representative_depends_only_on_coset(word, h):
    S = {0, 1}
    assert coset_split(fg_multiply(h, word), S)[1] == coset_split(word, S)[1]

def test_coset_split_example():
    h, r = coset_split(w("g0 g1^-1 g2 g0"), {0, 1})
    assert h == w("g0 g1^-1") and r == w("g2 g0")

def brute_centralizes(b, gens):
    bi = fg_invert(b)
    return all(naive_reduce(tuple(b) + tuple(gen(i)) + tuple(bi)) == tuple(gen(i)) for i in gens)

def test_centralizes_exhaustive_small():
    for b in reduced_words([0, 1, 2], 4):
        assert centralizes(b, {0}) == brute_centralizes(b, {0})
        # a nontrivial word commutes with g0 only if it is a power of g0
        assert centralizes(b, {0}) == in_subgroup(b, {0})
        assert centralizes(b, {0, 1}) == (b == IDENTITY)

def test_conjugates_into_examples():
    assert conjugates_into(w("g0"), w("g1"), {0, 1})
    assert not conjugates_into(w("g2"), w("g1"), {0, 1})
    assert conjugates_into(w("g2"), w("g2"), {2})
    with pytest.raises(FreeGroupError):
        conjugates_into(w("g0"), w("g2"), {0, 1})

def test_conjugacy_matches_brute_force():
    small = reduced_words([0, 1], 3)
    conjugators = reduced_words([0, 1], 6)
    for u in small:
        orbit = {fg_multiply(fg_multiply(c, u), fg_invert(c)) for c in conjugators}
        for v in small:
            assert are_conjugate_free(u, v) == (v in orbit), (u, v)

@given(freewords(), freewords())
def test_conjugate_words_are_conjugate(u, c):
    v = fg_multiply(fg_multiply(c, u), fg_invert(c))
    assert are_conjugate_free(u, v)
    assert len(cyclic_reduce(v)) == len(cyclic_reduce(u))

def test_cyclic_reduce():
    assert cyclic_reduce(w("g1 g0 g2 g1^-1")) == w("g0 g2")
    assert cyclic_reduce(w("g0 g1 g0^-1")) == w("g1")

@given(freewords(gens=(0, 1, "w", "w^2+3")))
def test_format_parse_round_trip(word):
    assert parse_freeword(format_freeword(word)) == word

def test_parse_identity_forms():
    assert parse_freeword("") == IDENTITY
    assert parse_freeword("e") == IDENTITY
    assert parse_freeword("1") == IDENTITY
    assert format_freeword(IDENTITY) == "e"

@pytest.mark.parametrize("text,column", [("g0 x", 4), ("g", 2), ("g0\ng$", 2)])
def test_parse_errors(text, column):
    with pytest.raises(WordSyntaxError) as info:
        parse_freeword(text)
    assert info.value.column == column

def test_parse_error_line_number():
    with pytest.raises(WordSyntaxError) as info:
        parse_freeword("g0\n  h1")
    assert (info.value.line, info.value.column) == (2, 3)

def test_reduced_words_count():
    # 2k(2k-1)^(n-1) reduced words of length n on k generators
    words = reduced_words([0, 1, 2], 4)
    counts = [sum(1 for x in words if len(x) == n) for n in range(5)]
    assert counts == [1, 6, 30, 150, 750]
    assert len(set(words)) == len(words)


def test_worked_examples():
    assert w("g0 g1 g1^-1 g0") == w("g0 g0")
    assert w("g0 g0^-1") == IDENTITY
    assert w("g1 g2 g2^-1 g1^-1 g0") == w("g0")
    assert coset_split(w("g0 g2 g0"), {0, 1}) == (w("g0"), w("g2 g0"))
    assert coset_split(w("g0 g1^-1"), {0, 1}) == (w("g0 g1^-1"), IDENTITY)
    assert coset_split(w("g2 g0"), {0, 1}) == (IDENTITY, w("g2 g0"))
    assert centralizes(IDENTITY, {0, 1})
    assert not centralizes(w("g0"), {0, 1})
    assert centralizes(w("g0 g0"), {0})
    assert not conjugates_into(w("g2"), w("g0"), {0, 1})
    assert conjugates_into(w("g0 g1"), w("g0"), {0, 1})
    assert conjugates_into(w("g2"), IDENTITY, {0, 1})
    assert are_conjugate_free(w("g1 g0 g1^-1"), w("g0"))
    assert not are_conjugate_free(w("g0"), w("g1"))
    assert are_conjugate_free(w("g0 g1"), w("g1 g0"))
