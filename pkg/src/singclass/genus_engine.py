"""Multiplicative characteristic classes from their defining power series.

A genus is a power series ``f`` with invertible constant term.  On a split
bundle it evaluates to the product of ``f`` over the Chern roots; for bundles
known only through their Chern classes the same product is recovered from
Newton's identities (``genus_from_chern``).

The lambda kind ``f(z) = 1 + y - y z`` is evaluated in the K-theory reading
of the ring (see :mod:`singclass.projective_chow`), where its degree is the
holomorphic Euler characteristic of the exterior powers.  Its unit ``1 + y``
is handled with :class:`~singclass.projective_chow.LocalizedClass`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence, Union

from .errors import DomainError, UsageError
from .exact_series import ONE, ONE_PLUS_Y, Y, PowerSeries, YPolynomial
from .projective_chow import CohomologyClass, LocalizedClass, line_class

KINDS = ("chern", "todd", "lclass", "hirzebruch", "lambda_dual")
KIND_ALIASES = {"lambda": "lambda_dual", "l": "lclass", "c": "chern", "td": "todd", "ty": "hirzebruch"}


def canonical_kind(kind: str) -> str:
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise UsageError(f"unknown genus kind {kind!r}; choose from {', '.join(KINDS)} or 'lambda'")
    return kind


@dataclass(frozen=True)
class GenusSpec:
    """A multiplicative genus given by its power series."""

    series: PowerSeries
    name: str = "user"
    ktheory: bool = False

    @property
    def unit(self) -> YPolynomial:
        return self.series[0]

    @property
    def normalized(self) -> bool:
        return self.unit == ONE

    @property
    def order(self) -> int:
        return self.series.order

    def substitute_y(self, value) -> GenusSpec:
        return GenusSpec(self.series.substitute_y(value), f"{self.name}[y={value}]", self.ktheory)


def _hirzebruch_series(order: int) -> PowerSeries:
    # u / (1 - e^-u) is the inverse of (1 - e^-u)/u = sum (-u)^k / (k+1)!
    base = PowerSeries.from_function(order, lambda k: Fraction((-1) ** k, factorial(k + 1)))
    qy = base.inverse().rescale(ONE_PLUS_Y)
    return qy - PowerSeries(order, [0, Y])


def builtin_genus(kind: str, order: int) -> GenusSpec:
    """Exact truncated series of a built-in genus.

    ``hirzebruch`` is the normalized Q_y(z) = z(1+y)/(1 - e^(-z(1+y))) - zy;
    ``chern``, ``todd`` and ``lclass`` are its values at y = -1, 0, 1.
    """
    if order < 1:
        raise UsageError("order must be at least 1")
    kind = canonical_kind(kind)
    if kind == "lambda_dual":
        return GenusSpec(PowerSeries(order, [ONE_PLUS_Y, -Y]), "lambda_dual", ktheory=True)
    qy = _hirzebruch_series(order)
    if kind == "hirzebruch":
        return GenusSpec(qy, "hirzebruch")
    y = {"chern": -1, "todd": 0, "lclass": 1}[kind]
    return GenusSpec(qy.substitute_y(y), kind)


def user_genus(coefficients: Sequence, name: str = "user", ktheory: bool = False) -> GenusSpec:
    """Genus from an explicit coefficient list ``[f_0, f_1, ...]``."""
    if not coefficients:
        raise UsageError("a genus needs at least its constant coefficient")
    return GenusSpec(PowerSeries(len(coefficients), [YPolynomial.coerce(c) for c in coefficients]), name, ktheory)


ChernData = Union[CohomologyClass, Sequence[CohomologyClass]]


@dataclass(frozen=True)
class BundleClass:
    """Virtual bundle ``sum m_a O(a)`` plus optional non-split summands.

    ``chern_summands`` holds ``(rank, chern)`` pairs, ``chern`` being either a
    graded total Chern class or the list ``[c_1, ..., c_rank]``.
    """

    ambient_dim: int
    twists: Mapping[int, int] = field(default_factory=dict)
    chern_summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", {int(a): int(m) for a, m in self.twists.items() if m})
        object.__setattr__(self, "chern_summands", tuple(self.chern_summands))

    @property
    def rank(self) -> int:
        return sum(self.twists.values()) + sum(r for r, _ in self.chern_summands)

    def __add__(self, other: BundleClass) -> BundleClass:
        if other.ambient_dim != self.ambient_dim:
            raise UsageError("bundles live on different projective spaces")
        twists = dict(self.twists)
        for a, m in other.twists.items():
            twists[a] = twists.get(a, 0) + m
        return BundleClass(self.ambient_dim, twists, self.chern_summands + other.chern_summands)

    def __neg__(self) -> BundleClass:
        if self.chern_summands:
            raise UsageError("negating non-split summands is not supported")
        return BundleClass(self.ambient_dim, {a: -m for a, m in self.twists.items()})

    def __sub__(self, other: BundleClass) -> BundleClass:
        return self + (-other)


def tangent_bundle(n: int) -> BundleClass:
    """T P^n = (n+1) O(1) - O by the Euler sequence."""
    return BundleClass(n, {1: n + 1, 0: -1})


def trivial_bundle(n: int, rank: int) -> BundleClass:
    return BundleClass(n, {0: rank})


def _evaluate(spec: GenusSpec, c: CohomologyClass) -> CohomologyClass:
    """f(c) for a class ``c`` with zero constant term."""
    n = c.ambient_dim
    if spec.order < n + 1:
        raise UsageError(f"genus series of order {spec.order} is too short for P^{n} (need {n + 1})")
    return CohomologyClass.from_series(spec.series.truncate(n + 1).compose(c.as_series()))


def genus_of_bundle_localized(spec: GenusSpec, bundle: BundleClass) -> LocalizedClass:
    """Product formula with the (1+y) ledger kept explicit."""
    n = bundle.ambient_dim
    result = LocalizedClass(CohomologyClass.one(n))
    for a, m in sorted(bundle.twists.items()):
        value = LocalizedClass(_evaluate(spec, line_class(n, a, spec.ktheory)))
        result = result * (value**m)
    for rank, chern in bundle.chern_summands:
        result = result * genus_from_chern_localized(spec, rank, chern)
    return result


def genus_of_bundle(spec: GenusSpec, bundle: BundleClass) -> CohomologyClass:
    """``prod_a f(c_1(O(a)))^m_a`` times the Newton-path value of non-split summands."""
    return genus_of_bundle_localized(spec, bundle).exact()


def _elementary_classes(spec: GenusSpec, rank: int, chern: ChernData, n: int) -> list[CohomologyClass]:
    if isinstance(chern, CohomologyClass):
        if spec.ktheory:
            raise UsageError("K-theoretic Chern classes are not graded; pass [c_1, ..., c_r] explicitly")
        if chern[0] != ONE:
            raise DomainError(f"total Chern class must have constant term 1, got {chern[0]}")
        return [CohomologyClass.h(n, j, chern[j]) for j in range(1, n + 1)]
    classes = list(chern)
    for c in classes:
        if c.ambient_dim != n or c[0]:
            raise DomainError("Chern classes c_j (j >= 1) must be nilpotent classes on the same P^n")
    return classes


def power_sums(elementary: Sequence[CohomologyClass], n: int) -> list[CohomologyClass]:
    """Newton's identities: ``p_1 .. p_n`` from ``e_1, e_2, ...``."""
    zero = CohomologyClass.zero(n)

    def e(j):
        return elementary[j - 1] if j <= len(elementary) else zero

    p = [zero]
    for k in range(1, n + 1):
        acc = e(k) * ((-1) ** (k - 1) * k)
        for j in range(1, k):
            if j <= len(elementary):
                acc = acc + e(j) * p[k - j] * ((-1) ** (j - 1))
        p.append(acc)
    return p


def _localized_exp(s: LocalizedClass) -> LocalizedClass:
    n = s.ambient_dim
    total = LocalizedClass(CohomologyClass.one(n))
    term = total
    for m in range(1, n + 1):
        term = term * s * Fraction(1, m)
        total = total + term
    return total


def genus_from_chern_localized(spec: GenusSpec, rank: int, chern: ChernData) -> LocalizedClass:
    n = chern.ambient_dim if isinstance(chern, CohomologyClass) else (chern[0].ambient_dim if chern else None)
    if n is None:
        raise UsageError("empty Chern class list: pass a CohomologyClass for the trivial bundle")
    e = _elementary_classes(spec, rank, chern, n)
    if spec.order < n + 1:
        raise UsageError(f"genus series of order {spec.order} is too short for P^{n} (need {n + 1})")
    f = spec.series.truncate(n + 1)
    unit = f[0]
    # f = m * f1 with m a monomial unit and f1(0) either 1 or (1+y)
    if unit.is_monomial():
        m, scale = unit, None
    else:
        rest = unit.div_one_plus_y()  # DomainError if unit has no (1+y) factor
        if not rest.is_monomial():
            raise DomainError(f"unsupported genus unit {unit}")
        m, scale = rest, ONE_PLUS_Y
    f1 = f * m.inverse()
    if scale is not None:
        # h(w) = f1((1+y) w) / (1+y) has unit 1 and polynomial coefficients
        g = PowerSeries(n + 1, [ONE] + [f1[k] * scale ** (k - 1) for k in range(1, n + 1)]).log()
    else:
        g = f1.log()
    p = power_sums(e, n)
    s = LocalizedClass(CohomologyClass.zero(n))
    for k in range(1, n + 1):
        if g[k]:
            term = LocalizedClass(p[k] * g[k])
            if scale is not None:
                term = term.divide_by_one_plus_y(k)
            s = s + term
    result = _localized_exp(s) * (m**rank)
    if scale is not None:
        # (1+y)^rank; a negative power becomes a ledger entry
        result = result * LocalizedClass(CohomologyClass.one(n), -rank)
    return result


def genus_from_chern(spec: GenusSpec, rank: int, total_chern: ChernData) -> CohomologyClass:
    """``prod f(x_i)`` over roots with ``e_j(x) = c_j``, via power sums."""
    return genus_from_chern_localized(spec, rank, total_chern).exact()


def chern_classes(bundle: BundleClass, ktheory: bool = False) -> list[CohomologyClass]:
    """``[c_1, ..., c_n]`` of a split virtual bundle.

    These are the coefficients of ``prod_a (1 + c^1(O(a)) t)^m_a`` in a formal
    variable ``t``.  For virtual bundles c_j may be nonzero beyond the rank.
    """
    n = bundle.ambient_dim
    if bundle.chern_summands:
        raise UsageError("chern_classes needs a split bundle")
    zero, one = CohomologyClass.zero(n), CohomologyClass.one(n)
    total = [one] + [zero] * n  # coefficients of t^0..t^n
    for a, m in sorted(bundle.twists.items()):
        x = line_class(n, a, ktheory)
        # (1 + x t)^(+-1) as a t-polynomial truncated at t^n
        if m > 0:
            factor = [one, x] + [zero] * (n - 1)
        else:
            factor = [(-x) ** k for k in range(n + 1)]
        for _ in range(abs(m)):
            total = [sum((total[i] * factor[j - i] for i in range(j + 1)), zero) for j in range(n + 1)]
    return total[1:]
