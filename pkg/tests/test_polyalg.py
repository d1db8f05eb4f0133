from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import pascal_q_binomial
from orbitseries.errors import DivisibilityError, DomainError
from orbitseries.polyalg import (
    BivarPoly,
    RationalSeries,
    divides,
    exact_divide,
    hadamard_truncated,
    monomial_ratio,
    multiply_truncated,
    q_binomial,
    q_binomial_at,
    series_coeffs,
    substitute_inverse,
)

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 4)), st.integers(-5, 5), max_size=6
).map(BivarPoly)


def test_zero_coefficients_dropped():
    p = BivarPoly({(0, 0): 1, (1, 1): 0})
    assert len(p) == 1
    assert BivarPoly({}).is_zero()
    assert p == BivarPoly.constant(1)


def test_text_format():
    p = BivarPoly({(0, 0): 1, (1, 1): 1, (1, 2): 2, (2, 0): -3})
    assert p.to_text() == "1 + x*q + 2*x*q^2 - 3*x^2"
    assert BivarPoly({}).to_text() == "0"
    assert BivarPoly.from_json(p.to_json()) == p


def test_labels_are_display_only():
    p = BivarPoly({(1, 2): 1}, labels=("t", "p"))
    assert p.to_text() == "t*p^2"
    assert p == BivarPoly({(1, 2): 1})


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BivarPoly({})


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


def test_division_failure():
    with pytest.raises(DivisibilityError):
        exact_divide(BivarPoly({(1, 0): 1, (0, 0): 1}), BivarPoly({(1, 0): 1, (0, 0): -1}))
    assert not divides(BivarPoly({(0, 0): 2}), BivarPoly({(0, 0): 3}))
    with pytest.raises(DivisibilityError):
        exact_divide(BivarPoly.constant(1), BivarPoly({}))
    with pytest.raises(DomainError):
        exact_divide(BivarPoly({(-1, 0): 1}), BivarPoly.constant(1))


def test_evaluate():
    p = BivarPoly({(0, 0): 1, (1, 1): 1, (1, 2): 1})
    assert p.evaluate(2, 3) == 1 + 6 + 18
    assert p.evaluate(q=1) == BivarPoly({(0, 0): 1, (1, 0): 2})
    assert substitute_inverse(p).evaluate(Fraction(1, 2), Fraction(1, 3)) == 1 + 6 + 18


def test_monomial_ratio():
    p = BivarPoly({(0, 0): 1, (1, 1): 2})
    assert monomial_ratio(p.shift(2, 3) * 5, p) == (5, 2, 3)
    assert monomial_ratio(p, p + BivarPoly.constant(1)) is None
    assert monomial_ratio(BivarPoly({}), p) is None


@pytest.mark.parametrize("a", range(0, 9))
def test_q_binomial_matches_pascal(a):
    for b in range(a + 1):
        want = {(0, j): c for j, c in pascal_q_binomial(a, b).items()}
        assert q_binomial(a, b) == BivarPoly(want)
        for q in (1, 2, 3, 5):
            assert q_binomial_at(a, b, q) == sum(c * q**j for j, c in pascal_q_binomial(a, b).items())


def test_q_binomial_domain():
    with pytest.raises(DomainError):
        q_binomial(2, 3)
    # frozen value: [4 choose 2]_q
    assert q_binomial(4, 2).to_text() == "1 + q + 2*q^2 + q^3 + q^4"


def test_rational_series_merge_and_text():
    f = RationalSeries.from_factors(BivarPoly.constant(1), [(1, 0), (1, 0), (1, 1)])
    assert f.denominator == (((1, 0), 2), ((1, 1), 1))
    assert f.to_text() == "(1) / ((1 - x)^2 * (1 - x*q))"
    with pytest.raises(DomainError):
        RationalSeries(BivarPoly.constant(1), (((0, 0), 1),))
    with pytest.raises(DomainError):
        RationalSeries(BivarPoly.constant(1), (((0, 1), 1),)).series_coeffs(3)


def test_series_coeffs_geometric():
    # 1/(1-x)^2 = sum (k+1) x^k
    f = RationalSeries(BivarPoly.constant(1), (((1, 0), 2),))
    assert series_coeffs(f, 5, q=7) == [1, 2, 3, 4, 5, 6]
    # 1/(1 - x q) has x^k coefficient q^k
    g = RationalSeries.from_factors(BivarPoly.constant(1), [(1, 1)])
    assert series_coeffs(g, 3) == [BivarPoly({(0, k): 1}) for k in range(4)]
    assert series_coeffs(g, 3, q=Fraction(1, 2)) == [1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def test_series_symbolic_agrees_with_numeric():
    f = RationalSeries.from_factors(BivarPoly({(0, 0): 1, (1, 2): 3}), [(1, 0), (1, 1), (2, 1)])
    sym = series_coeffs(f, 8)
    assert [c.evaluate(0, 3) for c in sym] == series_coeffs(f, 8, q=3)


def test_cross_equal_and_hadamard():
    # (1 + x)/(1 - x^2) == 1/(1 - x)
    a = RationalSeries.from_factors(BivarPoly({(0, 0): 1, (1, 0): 1}), [(2, 0)])
    b = RationalSeries.from_factors(BivarPoly.constant(1), [(1, 0)])
    assert a.cross_equal(b)
    h = hadamard_truncated([b, b], 4, q=2)
    assert h == [1] * 5
    assert multiply_truncated([1, 1], [1, 1], 3) == [1, 2, 1, 0]
