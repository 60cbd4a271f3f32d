"""Constructible functions on finitely stratified spaces, and their Euler calculus.

A :class:`Stratification` lists locally closed strata together with their
compactly supported Euler characteristics; a :class:`ConstructibleFunction`
assigns an integer to each stratum.  Integration against the Euler
characteristic is additive over strata because chi_c is.

For a hypersurface scene the nearby-cycle function is 1 on the smooth locus
and ``1 + (-1)^n mu`` at an isolated singular point (the Euler characteristic
of the local Milnor fibre); the vanishing-cycle function is the difference
with the indicator of X.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import UnsupportedError, UsageError
from .scene import Scene


@dataclass(frozen=True)
class Stratum:
    id: str
    chi_c: int
    dim: int = 0


@dataclass(frozen=True)
class Stratification:
    strata: tuple
    closure: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        ids = [s.id for s in self.strata]
        if len(set(ids)) != len(ids):
            raise UsageError(f"duplicate stratum ids in {ids}")

    def ids(self) -> list[str]:
        return [s.id for s in self.strata]

    def __getitem__(self, sid: str) -> Stratum:
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def euler_characteristic(self) -> int:
        return sum(s.chi_c for s in self.strata)

    def to_json(self) -> dict:
        return {"strata": [{"id": s.id, "chi_c": s.chi_c, "dim": s.dim} for s in self.strata]}

    @classmethod
    def from_json(cls, data) -> Stratification:
        return cls(tuple(Stratum(str(s["id"]), int(s["chi_c"]), int(s.get("dim", 0))) for s in data["strata"]))

    def __hash__(self):
        return hash(self.strata)

    def __eq__(self, other):
        if not isinstance(other, Stratification):
            return NotImplemented
        return self.strata == other.strata


@dataclass(frozen=True)
class ConstructibleFunction:
    base: Stratification
    weights: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.base.ids())
        clean = {}
        for sid, w in self.weights.items():
            if sid not in known:
                raise UsageError(f"stratum {sid!r} is not part of the stratification")
            if int(w) != w:
                raise UsageError("constructible functions take integer values")
            if w:
                clean[sid] = int(w)
        object.__setattr__(self, "weights", clean)

    @classmethod
    def indicator(cls, base: Stratification, ids=None) -> ConstructibleFunction:
        return cls(base, {sid: 1 for sid in (base.ids() if ids is None else ids)})

    def __call__(self, sid: str) -> int:
        return self.weights.get(sid, 0)

    def _same_base(self, other: ConstructibleFunction):
        if other.base != self.base:
            raise UsageError("constructible functions live on different stratifications")

    def __add__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        self._same_base(other)
        ids = set(self.weights) | set(other.weights)
        return ConstructibleFunction(self.base, {i: self(i) + other(i) for i in ids})

    def __neg__(self) -> ConstructibleFunction:
        return ConstructibleFunction(self.base, {i: -w for i, w in self.weights.items()})

    def __sub__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        return self + (-other)

    def __mul__(self, k: int) -> ConstructibleFunction:
        return ConstructibleFunction(self.base, {i: k * w for i, w in self.weights.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        return self.base == other.base and self.weights == other.weights

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.weights.items()))))

    def support(self) -> set[str]:
        return set(self.weights)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "weights": dict(sorted(self.weights.items()))}

    @classmethod
    def from_json(cls, data) -> ConstructibleFunction:
        return cls(Stratification.from_json(data["base"]), {k: int(v) for k, v in data["weights"].items()})


def euler_integral(alpha: ConstructibleFunction) -> int:
    """Pushforward to a point: sum of weight times chi_c over strata."""
    return sum(w * alpha.base[sid].chi_c for sid, w in alpha.weights.items())


def exterior_product(alpha: ConstructibleFunction, beta: ConstructibleFunction) -> ConstructibleFunction:
    strata = tuple(
        Stratum(f"{a.id}*{b.id}", a.chi_c * b.chi_c, a.dim + b.dim) for a in alpha.base.strata for b in beta.base.strata
    )
    base = Stratification(strata)
    return ConstructibleFunction(base, {f"{i}*{j}": u * v for i, u in alpha.weights.items() for j, v in beta.weights.items()})


def pullback(alpha: ConstructibleFunction, target: Stratification, stratum_map: Mapping[str, str]) -> ConstructibleFunction:
    """Pull back along a map sending each target stratum into one source stratum."""
    missing = set(target.ids()) - set(stratum_map)
    if missing:
        raise UsageError(f"stratum map does not cover {sorted(missing)}")
    return ConstructibleFunction(target, {t: alpha(s) for t, s in stratum_map.items()})


def point_stratification(label: str = "pt") -> Stratification:
    return Stratification((Stratum(label, 1, 0),))


def projective_space_stratification(n: int) -> Stratification:
    """Affine cells C^k, k = 0..n, each with chi_c = 1."""
    return Stratification(tuple(Stratum(f"cell{k}", 1, k) for k in range(n + 1)))


def smooth_hypersurface_euler(n: int, d: int) -> int:
    """e of a smooth degree-d hypersurface in P^n, by the closed form ((1-d)^(n+1) - 1)/d + n + 1."""
    return ((1 - d) ** (n + 1) - 1) // d + n + 1


def _check_hypersurface(scene: Scene):
    if scene.mode != "hypersurface" or len(scene.degrees) != 1:
        raise UnsupportedError("nearby and vanishing cycle functions need a hypersurface scene")


def _point_ids(scene: Scene) -> list[tuple[str, int]]:
    out = []
    for j, p in enumerate(scene.singular_points):
        for k in range(p.count):
            out.append((f"x{j}.{k}:{p.label}", p.germ.mu))
    return out


def scene_stratification(scene: Scene) -> Stratification:
    """{X_smooth, x_1, ..., x_s} with chi_c(X_smooth) derived from the nearby fibre."""
    _check_hypersurface(scene)
    n = scene.dim
    points = _point_ids(scene)
    e_nearby = smooth_hypersurface_euler(scene.ambient_dim, scene.degrees[0])
    e_special = e_nearby - (-1) ** n * sum(mu for _, mu in points)
    strata = [Stratum("X_smooth", e_special - len(points), n)]
    strata.extend(Stratum(pid, 1, 0) for pid, _ in points)
    return Stratification(tuple(strata))


def indicator_scene(scene: Scene) -> ConstructibleFunction:
    return ConstructibleFunction.indicator(scene_stratification(scene))


def psi_scene(scene: Scene) -> ConstructibleFunction:
    base = scene_stratification(scene)
    n = scene.dim
    weights = {"X_smooth": 1}
    weights.update({pid: 1 + (-1) ** n * mu for pid, mu in _point_ids(scene)})
    return ConstructibleFunction(base, weights)


def phi_scene(scene: Scene) -> ConstructibleFunction:
    base = scene_stratification(scene)
    n = scene.dim
    return ConstructibleFunction(base, {pid: (-1) ** n * mu for pid, mu in _point_ids(scene)})
