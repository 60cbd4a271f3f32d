"""Independent reference computations used by the tests.

Nothing here calls into the library's series or class machinery: the
formulas are either closed forms, brute-force enumerations, or sympy.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import sympy as sp

y_sym, z_sym = sp.symbols("y z")


def sympy_series(expr, order: int) -> list:
    """Coefficients of z^0..z^(order-1) of ``expr`` as sympy expressions."""
    s = sp.series(expr, z_sym, 0, order).removeO()
    return [sp.factor(sp.cancel(s.coeff(z_sym, k))) for k in range(order)]


@lru_cache(maxsize=None)
def hirzebruch_series_oracle(order: int) -> tuple:
    y, z = y_sym, z_sym
    return tuple(sympy_series(z * (1 + y) / (1 - sp.exp(-z * (1 + y))) - z * y, order))


def to_fraction_dict(expr) -> dict[int, Fraction]:
    """sympy polynomial in y to {exponent: Fraction}."""
    poly = sp.Poly(sp.expand(expr), y_sym)
    out = {}
    for (k,), c in poly.terms():
        c = sp.Rational(c)
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def _trunc_mul(a, b, order, zero):
    out = [zero] * order
    for i, u in enumerate(a[:order]):
        if u:
            for j, v in enumerate(b[: order - i]):
                out[i + j] += u * v
    return out


def _trunc_inv(a, order, zero, one):
    inv = [one / a[0]]
    for k in range(1, order):
        acc = zero
        for j in range(1, min(k, len(a) - 1) + 1):
            acc += a[j] * inv[k - j]
        inv.append(-acc * inv[0])
    return inv


@lru_cache(maxsize=None)
def chi_y_complete_intersection(n: int, degrees: tuple) -> dict[int, Fraction]:
    """Hirzebruch's generating function for chi_y of a smooth complete intersection in P^n.

    chi_y(V_n(d_1..d_r)) is the z^n coefficient of
    1/((1+yz)(1-z)) * prod ((1+yz)^d - (1-z)^d) / ((1+yz)^d + y (1-z)^d),
    expanded here over the field Q(y).
    """
    field = sp.QQ.frac_field(y_sym)
    zero, one, yy = field.zero, field.one, field.convert(y_sym)
    order = n + 1

    def binomial_power(c0, c1, d):
        # (c0 + c1 z)^d
        return [field.convert(sp.binomial(d, k)) * c0 ** (d - k) * c1**k for k in range(d + 1)]

    series = _trunc_inv(_trunc_mul([one, yy], [one, -one], order, zero), order, zero, one)
    for d in degrees:
        plus, minus = binomial_power(one, yy, d), binomial_power(one, -one, d)
        num = [a - b for a, b in zip(plus, minus)]
        den = [a + yy * b for a, b in zip(plus, minus)]
        series = _trunc_mul(series, _trunc_mul(num, _trunc_inv(den, order, zero, one), order, zero), order, zero)
    return to_fraction_dict(field.to_sympy(series[n]))


def plane_curve_euler(d: int) -> int:
    return 3 * d - d * d


def plane_curve_arithmetic_genus(d: int) -> Fraction:
    """chi(O_C) = 1 - g for a plane curve of degree d."""
    return 1 - Fraction((d - 1) * (d - 2), 2)


def brieskorn_pham_spectrum(exponents) -> dict[Fraction, int]:
    """Spectrum of sum x_i^a_i by enumerating the monomial basis of the Milnor algebra."""
    out: dict[Fraction, int] = {}
    for ks in itertools.product(*(range(1, a) for a in exponents)):
        beta = sum(Fraction(k, a) for k, a in zip(ks, exponents))
        out[beta] = out.get(beta, 0) + 1
    return out


def milnor_algebra_spectrum(poly, variables, weights) -> dict[Fraction, int]:
    """Spectrum from a Groebner-basis monomial basis of C[x]/J(f).

    Each basis monomial x^m contributes sum w_i (m_i + 1).
    """
    jac = [sp.diff(poly, v) for v in variables]
    basis = sp.groebner(jac, *variables, order="grevlex")
    leads = [sp.Poly(g, *variables).monoms(order="grevlex")[0] for g in basis.exprs]
    bound = sum(int(1 / w) for w in weights) + 2
    out: dict[Fraction, int] = {}
    for m in itertools.product(range(bound + 1), repeat=len(variables)):
        if any(all(mi >= li for mi, li in zip(m, lead)) for lead in leads):
            continue
        beta = sum(Fraction(w) * (mi + 1) for w, mi in zip(weights, m))
        out[beta] = out.get(beta, 0) + 1
    return out


def resolution_euler_surface(e_smoothing: int, curve_counts) -> int:
    """e(X) of an ADE surface from its minimal resolution.

    The resolution is diffeomorphic to the smoothing and replaces each singular
    point by a tree of k rational curves, whose Euler characteristic is k + 1.
    """
    return e_smoothing - sum((k + 1) - 1 for k in curve_counts)
