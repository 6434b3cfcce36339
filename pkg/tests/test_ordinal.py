import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ordinals
from gogcalc.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Cmp,
    Ordinal,
    OrdinalError,
    OrdinalSyntaxError,
    add,
    compare,
    format_ordinal,
    is_limit,
    left_subtract,
    min_ord,
    omega_power,
    parse_ordinal,
    predecessor,
    successor,
)

W = OMEGA


def dense(a: Ordinal, size: int = 8) -> list[int]:
    v = [0] * size
    for e, c in a.terms:
        v[e] = c
    return v


def dense_add(u: list[int], v: list[int]) -> list[int]:
    # w^e terms of u below the leading power of v are absorbed
    lead = max((e for e, c in enumerate(v) if c), default=-1)
    if lead < 0:
        return list(u)
    out = [0] * len(u)
    for e in range(len(u)):
        if e > lead:
            out[e] = u[e]
        elif e == lead:
            out[e] = u[e] + v[e]
        else:
            out[e] = v[e]
    return out


def dense_less(u, v) -> bool:
    return u[::-1] < v[::-1]


@pytest.mark.parametrize("a,b,expected", [
    (ONE, W, W),
    (W, ONE, Ordinal([(1, 1), (0, 1)])),
    (W, W, Ordinal([(1, 2)])),
    (Ordinal([(1, 1), (0, 3)]), W, Ordinal([(1, 2)])),
    (omega_power(2), W, Ordinal([(2, 1), (1, 1)])),
    (Ordinal([(1, 5)]), omega_power(2), omega_power(2)),
    (ZERO, W, W),
    (W, ZERO, W),
])
def test_add_examples(a, b, expected):
    assert add(a, b) == expected
    assert a + b == expected


@given(ordinals(), ordinals())
def test_add_matches_dense_oracle(a, b):
    assert dense(add(a, b)) == dense_add(dense(a), dense(b))


@given(ordinals(), ordinals())
def test_order_matches_dense_oracle(a, b):
    assert (a < b) == dense_less(dense(a), dense(b))
    assert compare(a, b) == (Cmp.LT if a < b else Cmp.EQ if a == b else Cmp.GT)


@given(ordinals(), ordinals(), ordinals())
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@given(ordinals(), ordinals(), ordinals())
def test_add_monotone_in_right_argument(a, b, c):
    if b < c:
        assert add(a, b) < add(a, c)
    assert add(a, b) >= b


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_finite_ordinals_are_naturals(m, n):
    a, b = Ordinal.of(m), Ordinal.of(n)
    assert add(a, b) == Ordinal.of(m + n)
    assert (a < b) == (m < n)
    assert int(add(a, b)) == m + n


@given(ordinals(), ordinals())
def test_left_subtract_inverts_add(a, d):
    assert left_subtract(a, add(a, d)) == d


@given(ordinals())
def test_successor_predecessor(a):
    s = successor(a)
    assert not is_limit(s)
    assert predecessor(s) == a
    assert a < s


def test_limits():
    assert is_limit(ZERO)
    assert is_limit(W)
    assert is_limit(Ordinal([(2, 1), (1, 3)]))
    assert not is_limit(Ordinal([(1, 1), (0, 2)]))
    with pytest.raises(OrdinalError):
        predecessor(W)
    with pytest.raises(OrdinalError):
        predecessor(ZERO)


def test_left_subtract_examples():
    assert left_subtract(W, Ordinal([(1, 2)])) == W
    assert left_subtract(W, Ordinal([(1, 1), (0, 4)])) == Ordinal.of(4)
    assert left_subtract(3, W) == W
    with pytest.raises(OrdinalError):
        left_subtract(W, 3)


def test_min_ord():
    assert min_ord(W, 5) == Ordinal.of(5)
    assert min_ord(W, W) == W


@given(ordinals(max_exp=5, max_coef=40))
def test_format_parse_round_trip(a):
    assert parse_ordinal(format_ordinal(a)) == a


@pytest.mark.parametrize("text,expected", [
    ("0", ZERO),
    ("7", Ordinal.of(7)),
    ("w", W),
    ("ω", W),
    ("w*2", Ordinal([(1, 2)])),
    ("w^2*3+w*2+5", Ordinal([(2, 3), (1, 2), (0, 5)])),
    (" w^2 + 1 ", Ordinal([(2, 1), (0, 1)])),
    ("3+w", W),
    ("w+w", Ordinal([(1, 2)])),
])
def test_parse_examples(text, expected):
    assert parse_ordinal(text) == expected


@pytest.mark.parametrize("text,column", [
    ("", 1),
    ("w^", 3),
    ("w*x", 3),
    ("2 $", 3),
    ("w+", 3),
])
def test_parse_errors_report_column(text, column):
    with pytest.raises(OrdinalSyntaxError) as info:
        parse_ordinal(text)
    assert info.value.column == column


def test_format_examples():
    assert format_ordinal(ZERO) == "0"
    assert format_ordinal(Ordinal([(2, 3), (1, 2), (0, 5)])) == "w^2*3+w*2+5"
    assert str(W) == "w"


def test_constructor_validates_terms():
    with pytest.raises(OrdinalError):
        Ordinal([(1, 1), (1, 2)])
    with pytest.raises(OrdinalError):
        Ordinal([(0, 0)])
    with pytest.raises(OrdinalError):
        Ordinal.of(-1)
    with pytest.raises(TypeError):
        Ordinal.of(True)
    with pytest.raises(TypeError):
        W * 2


def test_equal_ordinals_hash_equal():
    assert hash(parse_ordinal("w+1")) == hash(add(W, 1))
    assert len({Ordinal.of(3), parse_ordinal("3"), add(1, 2)}) == 1


def test_worked_examples():
    assert add(parse_ordinal("w*2+1"), parse_ordinal("w^2")) == parse_ordinal("w^2")
    assert compare(0, W) is Cmp.LT
    assert compare(parse_ordinal("w+1"), parse_ordinal("w+1")) is Cmp.EQ
    assert compare(parse_ordinal("w*2"), parse_ordinal("w+5")) is Cmp.GT
    assert successor(W) == parse_ordinal("w+1")
    assert predecessor(parse_ordinal("w*2+3")) == parse_ordinal("w*2+2")
    assert min_ord(3, 5) == Ordinal.of(3)
    assert min_ord(parse_ordinal("w+1"), parse_ordinal("w*2")) == parse_ordinal("w+1")
