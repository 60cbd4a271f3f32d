from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from oracles import hirzebruch_series_oracle, to_fraction_dict
from singclass.errors import DomainError, UsageError
from singclass.exact_series import ONE, ONE_PLUS_Y, Y, YPolynomial
from singclass.genus_engine import (
    BundleClass,
    builtin_genus,
    canonical_kind,
    chern_classes,
    genus_from_chern,
    genus_of_bundle,
    genus_of_bundle_localized,
    power_sums,
    tangent_bundle,
    trivial_bundle,
    user_genus,
)
from singclass.projective_chow import CohomologyClass, LocalizedClass, degree
from strategies import split_bundles

KINDS = ["chern", "todd", "lclass", "hirzebruch", "lambda_dual"]


def frac(x) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def test_hirzebruch_series_matches_sympy():
    ours = builtin_genus("hirzebruch", 8).series
    for k, expected in enumerate(hirzebruch_series_oracle(8)):
        assert ours[k] == YPolynomial(to_fraction_dict(expected))


def test_todd_series_is_bernoulli():
    todd = builtin_genus("todd", 31).series
    for k in range(31):
        assert todd[k] == YPolynomial.const(frac(sp.bernoulli(k)) / factorial(k))


def test_l_series_is_z_over_tanh():
    ell = builtin_genus("lclass", 31).series
    for k in range(31):
        expected = Fraction(0) if k % 2 else frac(2**k * sp.bernoulli(k)) / factorial(k)
        assert ell[k] == YPolynomial.const(expected)


def test_chern_series_is_one_plus_z():
    c = builtin_genus("chern", 31).series
    assert c[0] == ONE and c[1] == ONE
    assert all(not c[k] for k in range(2, 31))


def test_lambda_series_and_aliases():
    lam = builtin_genus("lambda", 4)
    assert lam.ktheory and lam.unit == ONE_PLUS_Y and lam.series[1] == -Y
    assert not lam.normalized
    assert canonical_kind("l") == "lclass"
    with pytest.raises(UsageError):
        canonical_kind("elliptic")
    with pytest.raises(UsageError):
        builtin_genus("todd", 0)


def test_tangent_bundle_of_projective_plane():
    assert genus_of_bundle(builtin_genus("chern", 3), tangent_bundle(2)) == CohomologyClass(2, [1, 3, 3])


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_numbers_of_projective_space(n):
    spec = lambda k: builtin_genus(k, n + 1)
    tp = tangent_bundle(n)
    assert genus_of_bundle(spec("chern"), tp).degree() == YPolynomial.const(n + 1)
    assert genus_of_bundle(spec("todd"), tp).degree() == ONE
    assert genus_of_bundle(spec("lclass"), tp).degree() == YPolynomial.const(1 if n % 2 == 0 else 0)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("rank", range(0, 4))
def test_trivial_bundles(n, rank):
    for kind in ("chern", "todd", "lclass", "hirzebruch"):
        assert genus_of_bundle(builtin_genus(kind, n + 1), trivial_bundle(n, rank)) == CohomologyClass.one(n)
    lam = genus_of_bundle(builtin_genus("lambda", n + 1), trivial_bundle(n, rank))
    assert lam == CohomologyClass(n, [ONE_PLUS_Y**rank])


def test_user_genus_reproduces_chern():
    spec = user_genus([1, 1, 0, 0])
    assert genus_of_bundle(spec, tangent_bundle(3)) == genus_of_bundle(builtin_genus("chern", 4), tangent_bundle(3))
    with pytest.raises(UsageError):
        user_genus([])


def test_series_too_short_for_the_ambient_space():
    with pytest.raises(UsageError):
        genus_of_bundle(builtin_genus("todd", 2), tangent_bundle(3))


def test_negative_lambda_powers_need_localization():
    n = 2
    value = genus_of_bundle_localized(builtin_genus("lambda", n + 1), trivial_bundle(n, -1))
    assert value == LocalizedClass(CohomologyClass.one(n), 1)
    with pytest.raises(DomainError):
        genus_of_bundle(builtin_genus("lambda", n + 1), trivial_bundle(n, -1))


def test_power_sums_of_split_bundle():
    n = 4
    bundle = BundleClass(n, {2: 1, -1: 2, 3: -1})
    p = power_sums(chern_classes(bundle), n)
    for k in range(1, n + 1):
        direct = sum(m * a**k for a, m in bundle.twists.items())
        assert p[k] == CohomologyClass.h(n, k, direct)


def test_newton_path_rejects_malformed_chern_data():
    spec = builtin_genus("todd", 3)
    with pytest.raises(DomainError):
        genus_from_chern(spec, 2, CohomologyClass(2, [2, 1]))
    with pytest.raises(UsageError):
        genus_from_chern(builtin_genus("lambda", 3), 2, CohomologyClass(2, [1, 1]))
    with pytest.raises(UsageError):
        genus_from_chern(spec, 2, [])


def test_non_split_summand_uses_newton_path():
    n = 3
    spec = builtin_genus("hirzebruch", n + 1)
    split = BundleClass(n, {1: 2, -2: 1})
    total = CohomologyClass(n, [1]) + sum(chern_classes(split), CohomologyClass.zero(n))
    mixed = BundleClass(n, {4: 1}, ((split.rank, total),))
    assert genus_of_bundle(spec, mixed) == genus_of_bundle(spec, split + BundleClass(n, {4: 1}))


@given(split_bundles(), st.sampled_from([-1, 0, 1]))
def test_hirzebruch_specializes(bundle, y):
    n = bundle.ambient_dim
    name = {-1: "chern", 0: "todd", 1: "lclass"}[y]
    hirz = genus_of_bundle(builtin_genus("hirzebruch", n + 1), bundle)
    assert hirz.substitute_y(y) == genus_of_bundle(builtin_genus(name, n + 1), bundle)


@pytest.mark.parametrize("n", range(1, 7))
def test_lambda_and_hirzebruch_agree_on_projective_space(n):
    expected = YPolynomial({p: (-1) ** p for p in range(n + 1)})
    lam = genus_of_bundle_localized(builtin_genus("lambda", n + 1), tangent_bundle(n))
    assert degree(lam, ktheory=True) == expected
    assert genus_of_bundle(builtin_genus("hirzebruch", n + 1), tangent_bundle(n)).degree() == expected
