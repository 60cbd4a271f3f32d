"""Exact coefficient rings: Laurent polynomials in ``y`` and truncated power series.

Rationals are :class:`fractions.Fraction` throughout; no floating point value
ever enters a coefficient.  ``YPolynomial`` is the ring Q[y, 1/y].  The element
``1 + y`` is *not* invertible there; code that needs to divide by it calls
:meth:`YPolynomial.div_one_plus_y`, which checks exactness.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

from .errors import DomainError, UsageError

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise UsageError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise UsageError(f"not a rational number: {value!r}") from exc
    raise UsageError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class YPolynomial:
    """Immutable Laurent polynomial in ``y`` with rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = as_rational(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, value: Scalar) -> YPolynomial:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, value: Scalar = 1) -> YPolynomial:
        return cls({exponent: value})

    @classmethod
    def y(cls) -> YPolynomial:
        return cls({1: 1})

    @classmethod
    def coerce(cls, value) -> YPolynomial:
        if isinstance(value, YPolynomial):
            return value
        return cls.const(value)

    # inspection

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self[0]

    def exponents(self) -> list[int]:
        return sorted(self._c)

    # ring structure

    def __add__(self, other) -> YPolynomial:
        other = YPolynomial.coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return YPolynomial(c)

    __radd__ = __add__

    def __neg__(self) -> YPolynomial:
        return YPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> YPolynomial:
        return self + (-YPolynomial.coerce(other))

    def __rsub__(self, other) -> YPolynomial:
        return YPolynomial.coerce(other) - self

    def __mul__(self, other) -> YPolynomial:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return YPolynomial({e: v * other for e, v in self._c.items()})
        other = YPolynomial.coerce(other)
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return YPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> YPolynomial:
        if k < 0:
            return self.inverse() ** (-k)
        result = YPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> YPolynomial:
        """Inverse of a unit of Q[y, 1/y], i.e. of a nonzero monomial."""
        if not self.is_monomial():
            raise DomainError(f"{self} is not a unit in Q[y, 1/y]")
        (e, v), = self._c.items()
        return YPolynomial({-e: 1 / v})

    def __eq__(self, other) -> bool:
        if isinstance(other, YPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._c == YPolynomial.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # evaluation and division

    def evaluate(self, y: Scalar) -> Fraction:
        y = as_rational(y)
        if y == 0 and any(e < 0 for e in self._c):
            raise DomainError("cannot evaluate a negative power of y at y=0")
        return sum((v * y**e for e, v in self._c.items()), Fraction(0))

    def div_one_plus_y(self) -> YPolynomial:
        """Exact quotient by ``1 + y``; raises :class:`DomainError` otherwise."""
        if not self._c:
            return self
        lo, hi = min(self._c), max(self._c)
        a = [self[lo + i] for i in range(hi - lo + 1)]
        # synthetic division of y^-lo * self by (y + 1)
        b = [Fraction(0)] * (len(a) - 1)
        carry = Fraction(0)
        for i in range(len(a) - 1, 0, -1):
            carry = a[i] - carry if i < len(a) - 1 else a[i]
            b[i - 1] = carry
        remainder = a[0] - (b[0] if b else 0)
        if remainder:
            raise DomainError(f"{self} is not divisible by (1+y)")
        return YPolynomial({lo + i: v for i, v in enumerate(b)})

    def one_plus_y_multiplicity(self) -> int:
        """Largest k with (1+y)^k dividing self (zero polynomial: raises)."""
        if not self._c:
            raise DomainError("the zero polynomial is divisible by every power of (1+y)")
        k, p = 0, self
        while p.evaluate(-1) == 0:
            p = p.div_one_plus_y()
            k += 1
        return k

    # formatting

    def to_json(self) -> dict[str, str]:
        return {str(e): format_rational(v) for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data) -> YPolynomial:
        if isinstance(data, Mapping):
            return cls({int(e): as_rational(v) for e, v in data.items()})
        return cls.const(as_rational(data))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = format_rational(mag)
            else:
                var = "y" if e == 1 else f"y^{e}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"YPolynomial({self})"


ZERO = YPolynomial()
ONE = YPolynomial.const(1)
Y = YPolynomial.y()
ONE_PLUS_Y = ONE + Y


class PowerSeries:
    """Truncated power series ``sum_{k<order} a_k z^k`` with YPolynomial coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise UsageError("truncation order must be non-negative")
        c = [YPolynomial.coerce(v) for v in list(coeffs)[:order]]
        c.extend([ZERO] * (order - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls(order, [ONE])

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        return cls(order, [ZERO, ONE])

    @classmethod
    def from_function(cls, order: int, fn) -> PowerSeries:
        return cls(order, [fn(k) for k in range(order)])

    def __getitem__(self, k: int) -> YPolynomial:
        return self.coeffs[k] if 0 <= k < self.order else ZERO

    def _check(self, other: PowerSeries):
        if not isinstance(other, PowerSeries):
            raise UsageError(f"expected a PowerSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise UsageError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return self + PowerSeries(self.order, [other])
        self._check(other)
        return PowerSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> PowerSeries:
        return self + (-other)

    def __rsub__(self, other) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            other = YPolynomial.coerce(other)
            return PowerSeries(self.order, [a * other for a in self.coeffs])
        self._check(other)
        n = self.order
        out = [ZERO] * n
        nz = [(i, a) for i, a in enumerate(self.coeffs) if a]
        for j, b in enumerate(other.coeffs):
            if not b:
                continue
            for i, a in nz:
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + a * b
        return PowerSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def inverse(self) -> PowerSeries:
        a0 = self[0]
        if not a0.is_monomial():
            raise DomainError(f"constant term {a0} is not invertible in Q[y, 1/y]")
        u = a0.inverse()
        b = [u]
        for k in range(1, self.order):
            s = ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s = s + self.coeffs[j] * b[k - j]
            b.append(-(u * s))
        return PowerSeries(self.order, b[: self.order])

    def exp(self) -> PowerSeries:
        if self[0]:
            raise DomainError("exp needs a series with zero constant term")
        b = [ONE]
        for k in range(1, self.order):
            s = ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s = s + self.coeffs[j] * b[k - j] * j
            b.append(s * Fraction(1, k))
        return PowerSeries(self.order, b[: self.order])

    def log(self) -> PowerSeries:
        if self[0] != ONE:
            raise DomainError("log needs a series with constant term 1")
        c = [ZERO]
        for k in range(1, self.order):
            s = self.coeffs[k] * k
            for j in range(1, k):
                if c[j] and self.coeffs[k - j]:
                    s = s - c[j] * self.coeffs[k - j] * j
            c.append(s * Fraction(1, k))
        return PowerSeries(self.order, c[: self.order])

    def rescale(self, factor) -> PowerSeries:
        """Substitute ``z -> factor * z``."""
        factor = YPolynomial.coerce(factor)
        out, power = [], ONE
        for a in self.coeffs:
            out.append(a * power)
            power = power * factor
        return PowerSeries(self.order, out)

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """Return ``self(inner)`` for ``inner`` with zero constant term."""
        self._check(inner)
        if inner[0]:
            raise DomainError("composition needs an inner series with zero constant term")
        result = PowerSeries(self.order)
        for a in reversed(self.coeffs):
            result = result * inner + a
        return result

    def map_coefficients(self, fn) -> PowerSeries:
        return PowerSeries(self.order, [fn(a) for a in self.coeffs])

    def substitute_y(self, value: Scalar) -> PowerSeries:
        return self.map_coefficients(lambda a: YPolynomial.const(a.evaluate(value)))

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(order, self.coeffs)

    def nonzero_terms(self) -> list[tuple[int, YPolynomial]]:
        return [(k, a) for k, a in enumerate(self.coeffs) if a]

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [a.to_json() for a in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> PowerSeries:
        return cls(int(data["order"]), [YPolynomial.from_json(c) for c in data["coefficients"]])

    def __str__(self) -> str:
        terms = []
        for k, a in self.nonzero_terms():
            var = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not var:
                terms.append(str(a))
            elif a == ONE:
                terms.append(var)
            elif a == -ONE:
                terms.append(f"-{var}")
            elif len(a.coeffs) == 1 and a.is_constant():
                terms.append(f"{a}*{var}")
            else:
                terms.append(f"({a})*{var}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"PowerSeries(order={self.order}, {self})"


def exp_series(order: int) -> PowerSeries:
    return PowerSeries.from_function(order, lambda k: Fraction(1, factorial(k)))


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def series_inv(a: PowerSeries) -> PowerSeries:
    return a.inverse()


def series_exp(a: PowerSeries) -> PowerSeries:
    return a.exp()


def series_log(a: PowerSeries) -> PowerSeries:
    return a.log()


def series_rescale(a: PowerSeries, c) -> PowerSeries:
    return a.rescale(c)
