import itertools

import pytest
from hypothesis import given, strategies as st

from projgenus.extnat import INF, ExtNat, dot, ext

DOMAIN = [ExtNat(n) for n in range(21)] + [INF]


def test_add_examples():
    assert ExtNat(3) + ExtNat(4) == 7
    assert ExtNat(5) + INF is INF
    assert ExtNat(0) + ExtNat(0) == 0


def test_mul_examples():
    assert ExtNat(2) * ExtNat(3) == 6
    assert ExtNat(0) * INF == 0
    assert INF * ExtNat(0) == 0
    assert ExtNat(7) * INF is INF


def test_dot_examples():
    assert dot((2, 4), (3, 0)) == 6
    assert dot((2, 4), (1, INF)) is INF
    assert dot((3, 9), (0, 0)) == 0
    assert dot((), ()) == 0


def test_dot_length_mismatch():
    with pytest.raises(ValueError):
        dot((1, 2), (1,))


def test_commutative_monoid_exhaustive():
    for a, b in itertools.product(DOMAIN, repeat=2):
        assert a + b == b + a
        assert a + 0 == a
    for a, b, c in itertools.product(DOMAIN, repeat=3):
        assert (a + b) + c == a + (b + c)


def test_distributive_exhaustive():
    for a, b, c in itertools.product(DOMAIN, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (b + c) * a == b * a + c * a


def test_single_infinity_and_order():
    assert ext("inf") is INF
    assert ext(float("inf")) is INF
    assert ext("∞") is INF
    assert all(x < INF for x in DOMAIN[:-1])
    assert sorted([INF, ExtNat(3), ExtNat(0)]) == [0, 3, INF]
    assert hash(ExtNat(5)) == hash(5)
    assert len({INF, ext("inf"), ExtNat(2), 2}) == 2


def test_rejects_negative_and_non_int():
    with pytest.raises(ValueError):
        ExtNat(-1)
    with pytest.raises(TypeError):
        ExtNat(1.5)
    with pytest.raises(ValueError):
        ext(2.5)


def test_big_integers():
    big = ExtNat(10**40)
    assert big * big == 10**80
    assert big + INF is INF


vec = st.lists(st.one_of(st.integers(0, 50), st.just("inf")), min_size=0, max_size=6)


@given(st.data())
def test_dot_finite_iff_support_finite(data):
    v = [ext(x) for x in data.draw(vec)]
    c = data.draw(st.lists(st.integers(0, 9), min_size=len(v), max_size=len(v)))
    finite = all(x.is_finite for cj, x in zip(c, v) if cj > 0)
    assert dot(c, v).is_finite == finite
