"""The truncated ring Q[y, 1/y][h]/(h^(n+1)) of projective n-space.

Every class is stored pushed forward to P^n and identified with a cohomology
class by capping with [P^n], so ``h^k`` is the class of a codimension-k
linear subspace and ``h^n`` is the point class.

The same ring also models K^0(P^n) = Z[h]/(h^(n+1)) when ``h`` is read as the
K-theoretic first Chern class 1 - [O(-1)].  Only two things change in that
reading: the first Chern class of O(a) (see :func:`line_class`) and the degree
map, which becomes the holomorphic Euler characteristic (:func:`degree`).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, UsageError
from .exact_series import ONE, ONE_PLUS_Y, ZERO, PowerSeries, Scalar, YPolynomial


class CohomologyClass:
    __slots__ = ("ambient_dim", "coeffs")

    def __init__(self, ambient_dim: int, coeffs: Iterable = ()):
        if ambient_dim < 0:
            raise UsageError("ambient dimension must be non-negative")
        c = [YPolynomial.coerce(v) for v in list(coeffs)[: ambient_dim + 1]]
        c.extend([ZERO] * (ambient_dim + 1 - len(c)))
        self.ambient_dim = ambient_dim
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, n: int) -> CohomologyClass:
        return cls(n, [ONE])

    @classmethod
    def zero(cls, n: int) -> CohomologyClass:
        return cls(n)

    @classmethod
    def h(cls, n: int, power: int = 1, coefficient=1) -> CohomologyClass:
        if power > n:
            return cls(n)
        return cls(n, [ZERO] * power + [YPolynomial.coerce(coefficient)])

    @classmethod
    def point(cls, n: int, coefficient=1) -> CohomologyClass:
        return cls.h(n, n, coefficient)

    @classmethod
    def from_series(cls, s: PowerSeries) -> CohomologyClass:
        return cls(s.order - 1, s.coeffs)

    def as_series(self) -> PowerSeries:
        return PowerSeries(self.ambient_dim + 1, self.coeffs)

    def __getitem__(self, k: int) -> YPolynomial:
        return self.coeffs[k] if 0 <= k <= self.ambient_dim else ZERO

    def _coerce(self, other) -> CohomologyClass:
        if isinstance(other, CohomologyClass):
            if other.ambient_dim != self.ambient_dim:
                raise UsageError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")
            return other
        return CohomologyClass(self.ambient_dim, [YPolynomial.coerce(other)])

    def __add__(self, other) -> CohomologyClass:
        other = self._coerce(other)
        return CohomologyClass(self.ambient_dim, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CohomologyClass:
        return CohomologyClass(self.ambient_dim, [-a for a in self.coeffs])

    def __sub__(self, other) -> CohomologyClass:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CohomologyClass:
        return self._coerce(other) - self

    def __mul__(self, other) -> CohomologyClass:
        if isinstance(other, CohomologyClass):
            other = self._coerce(other)
            return CohomologyClass.from_series(self.as_series() * other.as_series())
        other = YPolynomial.coerce(other)
        return CohomologyClass(self.ambient_dim, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CohomologyClass:
        return CohomologyClass.from_series(self.as_series() ** k)

    def inverse(self) -> CohomologyClass:
        return CohomologyClass.from_series(self.as_series().inverse())

    def exp(self) -> CohomologyClass:
        return CohomologyClass.from_series(self.as_series().exp())

    def log(self) -> CohomologyClass:
        return CohomologyClass.from_series(self.as_series().log())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def degree(self) -> YPolynomial:
        """Coefficient of the point class h^n."""
        return self.coeffs[self.ambient_dim]

    def substitute_y(self, value: Scalar) -> CohomologyClass:
        return CohomologyClass(self.ambient_dim, [YPolynomial.const(a.evaluate(value)) for a in self.coeffs])

    def supported_in_top_degree(self) -> bool:
        return not any(self.coeffs[: self.ambient_dim])

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "coefficients": [a.to_json() for a in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> CohomologyClass:
        return cls(int(data["ambient_dim"]), [YPolynomial.from_json(c) for c in data["coefficients"]])

    def __str__(self) -> str:
        return str(self.as_series()).replace("z", "h")

    def __repr__(self) -> str:
        return f"CohomologyClass(n={self.ambient_dim}, {self})"


class LocalizedClass:
    """A class divided by a power of (1+y): ``numerator / (1+y)^power``.

    This stands in for coefficients in Q[y, 1/y, 1/(1+y)] without inverting
    ``1 + y`` symbolically.  The power is kept minimal: on construction every
    factor of (1+y) common to all coefficients is divided out exactly.
    """

    __slots__ = ("numerator", "power")

    def __init__(self, numerator: CohomologyClass, power: int = 0):
        if power < 0:
            numerator = numerator * (ONE_PLUS_Y ** (-power))
            power = 0
        while power > 0 and not numerator.is_zero():
            try:
                reduced = [a.div_one_plus_y() for a in numerator.coeffs]
            except DomainError:
                break
            numerator = CohomologyClass(numerator.ambient_dim, reduced)
            power -= 1
        if numerator.is_zero():
            power = 0
        self.numerator = numerator
        self.power = power

    @classmethod
    def coerce(cls, value) -> LocalizedClass:
        if isinstance(value, LocalizedClass):
            return value
        if isinstance(value, CohomologyClass):
            return cls(value)
        raise UsageError(f"cannot localize {value!r}")

    @property
    def ambient_dim(self) -> int:
        return self.numerator.ambient_dim

    def _lift(self, power: int) -> CohomologyClass:
        return self.numerator * (ONE_PLUS_Y ** (power - self.power))

    def __add__(self, other) -> LocalizedClass:
        if not isinstance(other, (LocalizedClass, CohomologyClass)):
            other = CohomologyClass(self.ambient_dim, [YPolynomial.coerce(other)])
        other = LocalizedClass.coerce(other)
        p = max(self.power, other.power)
        return LocalizedClass(self._lift(p) + other._lift(p), p)

    __radd__ = __add__

    def __neg__(self) -> LocalizedClass:
        return LocalizedClass(-self.numerator, self.power)

    def __sub__(self, other) -> LocalizedClass:
        return self + (-other)

    def __mul__(self, other) -> LocalizedClass:
        if isinstance(other, (LocalizedClass, CohomologyClass)):
            other = LocalizedClass.coerce(other)
            return LocalizedClass(self.numerator * other.numerator, self.power + other.power)
        return LocalizedClass(self.numerator * YPolynomial.coerce(other), self.power)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LocalizedClass:
        if k < 0:
            return self.inverse() ** (-k)
        result = LocalizedClass(CohomologyClass.one(self.ambient_dim))
        for _ in range(k):
            result = result * self
        return result

    def divide_by_one_plus_y(self, k: int = 1) -> LocalizedClass:
        return LocalizedClass(self.numerator, self.power + k)

    def inverse(self) -> LocalizedClass:
        """Invert when the constant term is a monomial times a power of (1+y)."""
        c0 = self.numerator[0]
        if not c0:
            raise DomainError("class with zero constant term is not invertible")
        j = c0.one_plus_y_multiplicity()
        rest = c0
        for _ in range(j):
            rest = rest.div_one_plus_y()
        if not rest.is_monomial():
            raise DomainError(f"constant term {c0} is not a unit of Q[y, 1/y, 1/(1+y)]")
        m_inv = rest.inverse()
        n = self.ambient_dim
        nil = LocalizedClass((self.numerator - CohomologyClass(n, [c0])) * m_inv, j)
        total = LocalizedClass(CohomologyClass.one(n))
        term = total
        for _ in range(n):
            term = term * (-nil)
            total = total + term
        return LocalizedClass(total.numerator * m_inv, total.power - self.power + j)

    def exact(self) -> CohomologyClass:
        if self.power:
            raise DomainError(f"class {self} still carries a factor (1+y)^-{self.power}")
        return self.numerator

    def degree(self, ktheory: bool = False) -> YPolynomial:
        """Exact degree; raises DomainError if (1+y) does not divide out."""
        value = degree(self.numerator, ktheory)
        for _ in range(self.power):
            value = value.div_one_plus_y()
        return value

    def substitute_y(self, value: Scalar) -> CohomologyClass:
        if self.power and value == -1:
            raise DomainError("cannot evaluate a (1+y)-localized class at y=-1")
        scale = (1 + value) ** self.power if self.power else 1
        return CohomologyClass(
            self.ambient_dim, [YPolynomial.const(a.evaluate(value) / scale) for a in self.numerator.coeffs]
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, CohomologyClass):
            other = LocalizedClass(other)
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        p = max(self.power, other.power)
        return self._lift(p) == other._lift(p)

    def __hash__(self) -> int:
        return hash((self.numerator, self.power))

    def __str__(self) -> str:
        if not self.power:
            return str(self.numerator)
        return f"({self.numerator}) / (1 + y)^{self.power}"

    def __repr__(self) -> str:
        return f"LocalizedClass({self})"


def degree(a: CohomologyClass, ktheory: bool = False) -> YPolynomial:
    """Pushforward to a point.

    In cohomology this is the coefficient of h^n.  In the K-theory reading
    h^k is the class of the structure sheaf of a linear P^(n-k), whose Euler
    characteristic is 1, so the degree is the sum of all coefficients.
    """
    if isinstance(a, LocalizedClass):
        return a.degree(ktheory)
    if ktheory:
        return sum(a.coeffs, ZERO)
    return a.degree()


def line_class(n: int, twist: int, ktheory: bool = False) -> CohomologyClass:
    """First Chern class of O(twist) on P^n."""
    if not ktheory:
        return CohomologyClass.h(n, 1, twist)
    # c^1(O(a)) = 1 - [O(-a)] = 1 - (1 - h)^a
    one_minus_h = PowerSeries(n + 1, [ONE, -ONE])
    return CohomologyClass.from_series(PowerSeries.one(n + 1) - one_minus_h**twist)


def _check_degrees(n: int, degrees: Sequence[int]):
    if not 1 <= len(degrees) <= n:
        raise UsageError(f"need 1 <= number of equations <= {n}, got {len(degrees)}")
    if any(int(d) != d or d < 1 for d in degrees):
        raise UsageError(f"degrees must be positive integers, got {list(degrees)}")


def fundamental_class(n: int, degrees: Sequence[int], ktheory: bool = False) -> CohomologyClass:
    """Pushforward i_*[X] of a complete intersection of the given multidegree."""
    _check_degrees(n, degrees)
    result = CohomologyClass.one(n)
    for d in degrees:
        result = result * line_class(n, d, ktheory)
    return result


def gysin_self_intersection(a, degrees: Sequence[int], ktheory: bool = False):
    """i_* i^! a: multiplication by the fundamental class of X."""
    _check_degrees(a.ambient_dim, degrees)
    return a * fundamental_class(a.ambient_dim, degrees, ktheory)
