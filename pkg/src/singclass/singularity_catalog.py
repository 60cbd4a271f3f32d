"""Quasi-homogeneous isolated hypersurface singularities and their Milnor fibres.

A germ ``f: (C^(n+1), 0) -> (C, 0)`` that is quasi-homogeneous of degree 1 for
weights ``w_0, ..., w_n`` has

* Milnor number ``mu = prod(1/w_i - 1)`` (Milnor-Orlik), and
* Hodge spectrum with generating function ``prod (t^w_i - t) / (1 - t^w_i)``
  (Steenbrink), a polynomial in ``t^(1/D)`` with D the lcm of the weight
  denominators.

Everything else (Hodge-graded datum, chi_y of the reduced Milnor fibre
cohomology, Du Bois test, signature) is read off the spectrum.  Conventions:
an exponent ``beta`` sits in Hodge level ``p = floor(n + 1 - beta)`` with
eigenvalue exponent ``alpha = frac(n + 1 - beta)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm, prod
from typing import Iterable, Mapping

from .errors import InvalidGermError, UnsupportedError
from .exact_series import YPolynomial, as_rational, format_rational


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num: list[int], den: list[int]) -> list[int] | None:
    """Quotient of integer polynomials, or None if the division leaves a remainder.

    ``den`` must have constant term +-1, so the quotient is integral.
    """
    while num and num[-1] == 0:
        num = num[:-1]
    while den and den[-1] == 0:
        den = den[:-1]
    if not num:
        return []
    if len(num) < len(den):
        return None
    d0 = den[0]
    if abs(d0) != 1:
        raise ValueError("denominator must have unit constant term")
    q = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(q)):
        c = rem[k] * d0
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    if any(rem):
        return None
    return q


@dataclass(frozen=True)
class Spectrum:
    """Multiset of spectral exponents in (0, n+1)."""

    n: int
    multiplicities: Mapping[Fraction, int]

    def __post_init__(self):
        object.__setattr__(self, "multiplicities", {b: m for b, m in sorted(self.multiplicities.items()) if m})

    @property
    def total(self) -> int:
        return sum(self.multiplicities.values())

    def exponents(self) -> list[Fraction]:
        return [b for b, m in self.multiplicities.items() for _ in range(m)]

    def multiplicity(self, beta) -> int:
        return self.multiplicities.get(as_rational(beta), 0)

    def is_symmetric(self) -> bool:
        return all(self.multiplicity(self.n + 1 - b) == m for b, m in self.multiplicities.items())

    def shifted(self, amount, n: int | None = None) -> Spectrum:
        amount = as_rational(amount)
        return Spectrum(self.n if n is None else n, {b + amount: m for b, m in self.multiplicities.items()})

    def to_json(self) -> dict[str, int]:
        return {format_rational(b): m for b, m in self.multiplicities.items()}

    def __str__(self) -> str:
        parts = []
        for b, m in self.multiplicities.items():
            parts.append(format_rational(b) + (f"x{m}" if m > 1 else ""))
        return "{" + ", ".join(parts) + "}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash(tuple(self.multiplicities.items()))


def steenbrink_spectrum(weights: Iterable[Fraction]) -> Spectrum:
    weights = [as_rational(w) for w in weights]
    n = len(weights) - 1
    D = lcm(*(w.denominator for w in weights))
    num, den = [1], [1]
    for w in weights:
        a = int(w * D)
        # t^w - t  and  1 - t^w  as polynomials in T = t^(1/D)
        num = _poly_mul(num, [0] * a + [1] + [0] * (D - a - 1) + [-1])
        den = _poly_mul(den, [1] + [0] * (a - 1) + [-1])
    q = _poly_exact_div(num, den)
    if q is None:
        raise InvalidGermError(f"weights {[format_rational(w) for w in weights]} admit no isolated singularity "
                               "(spectrum generating function is not a polynomial)")
    mults = {Fraction(e, D): c for e, c in enumerate(q) if c}
    if any(c < 0 for c in mults.values()) or any(not 0 < b < n + 1 for b in mults):
        raise InvalidGermError(f"weights {[format_rational(w) for w in weights]} give an invalid spectrum")
    return Spectrum(n, mults)


@dataclass(frozen=True)
class HodgeDatum:
    """Hodge numbers of the reduced Milnor fibre cohomology, concentrated in degree n.

    ``gr[p]`` is dim Gr^p_F; ``eigen[(alpha, p)]`` refines it by the monodromy
    eigenvalue exp(2 pi i alpha).
    """

    degree: int
    gr: Mapping[int, int]
    eigen: Mapping[tuple[Fraction, int], int]

    @property
    def total(self) -> int:
        return sum(self.gr.values())

    def chi_y(self) -> YPolynomial:
        """Alternating chi_y: (-1)^n sum_p gr(p) (-y)^p."""
        sign = (-1) ** self.degree
        return YPolynomial({p: sign * d * (-1) ** p for p, d in self.gr.items()})


@dataclass(frozen=True)
class SingularityGerm:
    weights: tuple
    label: str = ""
    milnor_number: int = field(init=False, compare=False)
    spectrum: Spectrum = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        weights = tuple(as_rational(w) for w in self.weights)
        if not weights:
            raise InvalidGermError("a germ needs at least one weight")
        if any(not 0 < w < 1 for w in weights):
            raise InvalidGermError(f"weights must lie in (0, 1), got {[format_rational(w) for w in weights]}")
        mu = prod((1 / w - 1 for w in weights), start=Fraction(1))
        if mu.denominator != 1 or mu <= 0:
            raise InvalidGermError(f"Milnor number {format_rational(mu)} is not a positive integer")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "milnor_number", int(mu))
        spec = steenbrink_spectrum(weights)
        if spec.total != mu:
            raise InvalidGermError(f"spectrum has {spec.total} exponents but mu = {mu}")
        object.__setattr__(self, "spectrum", spec)

    @property
    def n(self) -> int:
        """Dimension of the hypersurface germ (and of its Milnor fibre)."""
        return len(self.weights) - 1

    @property
    def mu(self) -> int:
        return self.milnor_number

    def to_json(self) -> dict:
        return {"weights": [format_rational(w) for w in self.weights], "label": self.label}

    def __str__(self) -> str:
        return self.label or "germ(" + ", ".join(format_rational(w) for w in self.weights) + ")"


def germ_from_weights(weights: Iterable, label: str = "") -> SingularityGerm:
    return SingularityGerm(tuple(weights), label)


def suspension(g: SingularityGerm, times: int = 1) -> SingularityGerm:
    """Add ``z^2`` for a new variable ``times`` times."""
    label = g.label + "'" * times if g.label else ""
    return SingularityGerm(g.weights + (Fraction(1, 2),) * times, label)


def spectrum(g: SingularityGerm) -> Spectrum:
    return g.spectrum


def _level(n: int, beta: Fraction) -> tuple[Fraction, int]:
    r = n + 1 - beta
    p = floor(r)
    return r - p, p


def hodge_datum(g: SingularityGerm) -> HodgeDatum:
    gr: Counter = Counter()
    eigen: Counter = Counter()
    for beta, m in g.spectrum.multiplicities.items():
        alpha, p = _level(g.n, beta)
        gr[p] += m
        eigen[(alpha, p)] += m
    return HodgeDatum(g.n, dict(sorted(gr.items())), dict(sorted(eigen.items())))


def chi_y_reduced_fiber(g: SingularityGerm) -> YPolynomial:
    return hodge_datum(g).chi_y()


def hsp(g: SingularityGerm) -> dict[Fraction, int]:
    """Hodge spectrum polynomial as {exponent of t: coefficient}: t^(alpha + p) per class."""
    out: Counter = Counter()
    for beta, m in g.spectrum.multiplicities.items():
        alpha, p = _level(g.n, beta)
        out[alpha + p] += m
    return dict(sorted(out.items()))


def hsp_to_chi_y(poly: Mapping[Fraction, int], n: int) -> YPolynomial:
    """Substitute t^alpha -> 1 and t^p -> -y, then apply the degree-n sign."""
    acc: Counter = Counter()
    for exponent, m in poly.items():
        acc[floor(exponent)] += m
    return YPolynomial({p: (-1) ** n * m * (-1) ** p for p, m in acc.items()})


def gr0_dim(g: SingularityGerm) -> int:
    return hodge_datum(g).gr.get(0, 0)


def du_bois(g: SingularityGerm) -> bool:
    return gr0_dim(g) == 0


def du_bois_from_spectrum(g: SingularityGerm) -> bool:
    """Same predicate read from the other end of the symmetric spectrum: no exponent below 1."""
    return not any(b < 1 for b in g.spectrum.multiplicities)


def signature_fiber(g: SingularityGerm) -> int:
    """Signature of the Milnor fibre of an even-dimensional germ.

    Non-integer exponents contribute +1 or -1 by the parity of their floor;
    integer exponents span the radical of the intersection form.  Only checked
    against surface germs; higher even n is experimental.
    """
    if g.n % 2:
        raise UnsupportedError(f"signature of a {g.n}-dimensional Milnor fibre is not defined by the parity rule")
    sigma = 0
    for beta, m in g.spectrum.multiplicities.items():
        if beta.denominator == 1:
            continue
        sigma += m if floor(beta) % 2 == 0 else -m
    return sigma


# standard weight vectors of the simple singularities, as plane curves


def _curve(kind: str, k: int) -> tuple[Fraction, ...]:
    if kind == "A":
        if k < 1:
            raise InvalidGermError("A_k needs k >= 1")
        return (Fraction(1, 2), Fraction(1, k + 1))
    if kind == "D":
        if k < 4:
            raise InvalidGermError("D_k needs k >= 4")
        # x^(k-1) + x y^2
        return (Fraction(1, k - 1), Fraction(k - 2, 2 * (k - 1)))
    if kind == "E":
        table = {6: (Fraction(1, 3), Fraction(1, 4)), 7: (Fraction(1, 3), Fraction(2, 9)),
                 8: (Fraction(1, 3), Fraction(1, 5))}
        if k not in table:
            raise InvalidGermError("E_k needs k in {6, 7, 8}")
        return table[k]
    raise InvalidGermError(f"unknown simple singularity type {kind!r}")


def simple_germ(kind: str, k: int, dim: int = 2) -> SingularityGerm:
    """A_k, D_k or E_k as a germ of dimension ``dim`` (suspended from the curve)."""
    if dim < 1:
        if kind == "A" and dim == 0:
            return SingularityGerm((Fraction(1, k + 1),), f"A{k}")
        raise InvalidGermError("simple germs start in dimension 1 (0 for A_k)")
    curve = SingularityGerm(_curve(kind, k), f"{kind}{k}")
    germ = suspension(curve, dim - 1) if dim > 1 else curve
    return SingularityGerm(germ.weights, f"{kind}{k}")


def brieskorn_pham(exponents: Iterable[int], label: str = "") -> SingularityGerm:
    """x_0^a_0 + ... + x_n^a_n."""
    exps = list(exponents)
    return SingularityGerm(tuple(Fraction(1, a) for a in exps), label or "BP(" + ",".join(map(str, exps)) + ")")


@dataclass(frozen=True)
class CatalogEntry:
    germ: SingularityGerm
    qhm: bool
    description: str


def _build_catalog() -> dict[str, CatalogEntry]:
    entries = {}
    for k in range(1, 9):
        entries[f"A{k}"] = CatalogEntry(simple_germ("A", k), True, f"surface A{k}: x^{k + 1} + y^2 + z^2")
    for k in range(4, 9):
        entries[f"D{k}"] = CatalogEntry(simple_germ("D", k), True, f"surface D{k}: x^{k - 1} + x y^2 + z^2")
    for k, eq in ((6, "x^3 + y^4"), (7, "x^3 + x y^3"), (8, "x^3 + y^5")):
        entries[f"E{k}"] = CatalogEntry(simple_germ("E", k), True, f"surface E{k}: {eq} + z^2")
    entries["node"] = CatalogEntry(simple_germ("A", 1, 1), False, "plane curve node x^2 + y^2")
    entries["cusp"] = CatalogEntry(SingularityGerm(_curve("A", 2), "cusp"), False, "plane curve cusp x^2 + y^3")
    entries["tacnode"] = CatalogEntry(simple_germ("A", 3, 1), False, "plane curve tacnode x^2 + y^4")
    entries["simple_elliptic"] = CatalogEntry(brieskorn_pham((3, 3, 3), "simple_elliptic"), False,
                                              "cone over a plane cubic: x^3 + y^3 + z^3")
    entries["quartic_cone"] = CatalogEntry(brieskorn_pham((4, 4, 4), "quartic_cone"), False,
                                           "cone over a plane quartic: x^4 + y^4 + z^4")
    entries["A1_3fold"] = CatalogEntry(simple_germ("A", 1, 3), False, "threefold node: x^2 + y^2 + z^2 + w^2")
    return entries


CATALOG: dict[str, CatalogEntry] = _build_catalog()


def lookup(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise InvalidGermError(f"no catalog germ named {name!r}; known: {', '.join(CATALOG)}") from None
