from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singclass.errors import DomainError, UsageError
from singclass.exact_series import (
    ONE,
    ONE_PLUS_Y,
    Y,
    PowerSeries,
    YPolynomial,
    as_rational,
    exp_series,
    format_rational,
    series_exp,
    series_inv,
    series_log,
    series_mul,
    series_rescale,
)
from strategies import fractions, poly_y, power_series, y_polys


def test_as_rational_accepts_exact_inputs_only():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(5) == 5
    with pytest.raises(UsageError):
        as_rational(0.5)
    with pytest.raises(UsageError):
        as_rational("half")
    with pytest.raises(UsageError):
        as_rational(True)
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_ypolynomial_basics():
    p = (ONE + Y) ** 3
    assert p.to_json() == {"0": "1", "1": "3", "2": "3", "3": "1"}
    assert p.evaluate(1) == 8
    assert p.div_one_plus_y() == ONE_PLUS_Y**2
    assert p.one_plus_y_multiplicity() == 3
    assert str(ONE - Y * 7 + Y**2) == "1 - 7*y + y^2"
    assert Y.inverse() * Y == ONE
    assert YPolynomial.from_json(p.to_json()) == p


def test_ypolynomial_domain_errors():
    with pytest.raises(DomainError):
        ONE_PLUS_Y.inverse()
    with pytest.raises(DomainError):
        (ONE + Y * 2).div_one_plus_y()
    with pytest.raises(DomainError):
        Y.inverse().evaluate(0)


def test_series_identities_from_definitions():
    e = exp_series(8)
    assert e[5] == YPolynomial.const(Fraction(1, 120))
    assert series_exp(PowerSeries.variable(8)) == e
    assert series_log(e) == PowerSeries.variable(8)
    geometric = series_inv(PowerSeries(8, [1, -1]))
    assert all(geometric[k] == ONE for k in range(8))
    assert series_mul(geometric, PowerSeries(8, [1, -1])) == PowerSeries.one(8)
    assert series_rescale(e, 2)[3] == YPolynomial.const(Fraction(8, 6))
    assert str(PowerSeries(5, [1, 0, Fraction(1, 3), 0, Fraction(-1, 45)])) == "1 + 1/3*z^2 - 1/45*z^4"


def test_series_errors():
    with pytest.raises(DomainError):
        PowerSeries(4, [ONE_PLUS_Y, 1]).inverse()
    with pytest.raises(DomainError):
        PowerSeries(4, [1, 1]).exp()
    with pytest.raises(DomainError):
        PowerSeries(4, [2, 1]).log()
    with pytest.raises(UsageError):
        PowerSeries(3, [1]) + PowerSeries(4, [1])
    with pytest.raises(DomainError):
        PowerSeries(4, [1, 1]).compose(PowerSeries(4, [1, 1]))


def test_series_json_round_trip():
    s = PowerSeries(4, [ONE_PLUS_Y, -Y, Fraction(1, 3)])
    assert PowerSeries.from_json(s.to_json()) == s


@given(y_polys, y_polys, y_polys)
def test_ypolynomial_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == YPolynomial()


@given(y_polys)
def test_division_by_one_plus_y_is_exact_inverse_of_multiplication(a):
    assert (a * ONE_PLUS_Y).div_one_plus_y() == a


@given(y_polys, y_polys, st.sampled_from([Fraction(1), Fraction(-2), Fraction(3, 5)]))
def test_evaluation_is_a_ring_map(a, b, t):
    assert (a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t)
    assert (a + b).evaluate(t) == a.evaluate(t) + b.evaluate(t)


@given(power_series(constant=YPolynomial.monomial(1, 3)))
def test_inverse_of_inverse(s):
    assert s.inverse().inverse() == s
    assert s * s.inverse() == PowerSeries.one(s.order)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(power_series(order=n, constant=0, coeffs=poly_y),
                                                     power_series(order=n, constant=0, coeffs=poly_y))))
def test_exp_is_a_homomorphism(pair):
    a, b = pair
    assert (a + b).exp() == a.exp() * b.exp()
    assert a.exp().log() == a


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(power_series(order=n), power_series(order=n, constant=0),
                                                     power_series(order=n, constant=0))))
def test_composition_is_associative_and_multiplicative(triple):
    f, g, h = triple
    assert f.compose(g).compose(h) == f.compose(g.compose(h))
    assert (f * f).compose(g) == f.compose(g) * f.compose(g)


@given(power_series(), fractions)
def test_rescale_matches_composition_with_linear_series(s, c):
    linear = PowerSeries(s.order, [0, c])
    assert s.rescale(c) == s.compose(linear)
