"""Scenes: a complete intersection in P^n together with its isolated singular points.

Scene files are JSON::

    {
      "version": 1,
      "name": "cayley_cubic",
      "ambient": {"type": "projective_space", "dim": 3},
      "degrees": [3],
      "singularities": [{"weights": ["1/2", "1/2", "1/2"], "label": "A1", "count": 4, "qhm": true}],
      "options": {"order": 8, "kinds": ["chern", "hirzebruch"], "expect_fail": ["e"]}
    }

A singularity may name a catalog germ instead of giving weights
(``{"catalog": "A1", "count": 4}``); the catalog then supplies the label and
the rational-homology-manifold flag unless they are given explicitly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

import jsonschema

from .errors import UsageError
from .exact_series import format_rational
from .singularity_catalog import SingularityGerm, lookup

SCENE_VERSION = 1
MODES = ("hypersurface", "complete_intersection")
CHECK_IDS = ("a", "b", "c", "d", "e", "f", "g")

_RATIONAL = {"oneOf": [{"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}, {"type": "integer"}]}

_SINGULARITY = {
    "type": "object",
    "properties": {
        "weights": {"type": "array", "items": _RATIONAL, "minItems": 1},
        "catalog": {"type": "string"},
        "label": {"type": "string"},
        "count": {"type": "integer", "minimum": 1},
        "qhm": {"type": "boolean"},
        "sigma": {"type": "integer"},
    },
    "oneOf": [{"required": ["weights"]}, {"required": ["catalog"]}],
}

_CI_DATUM = {
    "type": "object",
    "properties": {
        "label": {"type": "string"},
        "chi_tilde": {"type": "integer"},
        "count": {"type": "integer", "minimum": 1},
    },
    "required": ["chi_tilde"],
}

_OPTIONS = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "kinds": {"type": "array", "items": {"type": "string"}},
        "user_sigma": {"type": "object", "additionalProperties": {"type": "integer"}},
        "user_ci_local_data": {"type": "array", "items": _CI_DATUM},
        "declared_euler": {"type": "integer"},
        "expect_fail": {"type": "array", "items": {"enum": list(CHECK_IDS)}},
    },
}

SCENE_SCHEMA = {
    "type": "object",
    "properties": {
        "version": {"const": SCENE_VERSION},
        "name": {"type": "string"},
        "description": {"type": "string"},
        "ambient": {
            "type": "object",
            "properties": {"type": {"const": "projective_space"}, "dim": {"type": "integer", "minimum": 1}},
            "required": ["type", "dim"],
        },
        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "mode": {"enum": list(MODES)},
        "singularities": {"type": "array", "items": _SINGULARITY},
        "options": _OPTIONS,
    },
    "required": ["ambient", "degrees"],
}


def _strict(schema: Any) -> Any:
    """Copy of ``schema`` with additionalProperties=False on every closed object."""
    if isinstance(schema, dict):
        out = {k: _strict(v) for k, v in schema.items()}
        if out.get("type") == "object" and "properties" in out and "additionalProperties" not in out:
            out["additionalProperties"] = False
        return out
    if isinstance(schema, list):
        return [_strict(v) for v in schema]
    return schema


STRICT_SCENE_SCHEMA = _strict(SCENE_SCHEMA)


@dataclass(frozen=True)
class SingularPoint:
    germ: SingularityGerm
    count: int = 1
    qhm: bool = False
    sigma: int | None = None

    @property
    def label(self) -> str:
        return str(self.germ)


@dataclass(frozen=True)
class CILocalDatum:
    """User-supplied reduced Euler characteristic of an iterated Milnor fibre."""

    chi_tilde: int
    count: int = 1
    label: str = ""


@dataclass(frozen=True)
class Scene:
    ambient_dim: int
    degrees: tuple = ()
    singular_points: tuple = ()
    mode: str = ""
    name: str = ""
    description: str = ""
    order: int | None = None
    kinds: tuple = ()
    user_sigma: Mapping[str, int] = field(default_factory=dict)
    ci_local_data: tuple = ()
    declared_euler: int | None = None
    expect_fail: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        object.__setattr__(self, "singular_points", tuple(self.singular_points))
        object.__setattr__(self, "ci_local_data", tuple(self.ci_local_data))
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "expect_fail", frozenset(self.expect_fail))
        mode = self.mode or ("hypersurface" if len(self.degrees) == 1 else "complete_intersection")
        object.__setattr__(self, "mode", mode)
        n, r = self.ambient_dim, len(self.degrees)
        if mode not in MODES:
            raise UsageError(f"unknown scene mode {mode!r}")
        if n < 1:
            raise UsageError("ambient dimension must be at least 1")
        if r > n:
            raise UsageError(f"{r} equations in P^{n} do not cut out a complete intersection")
        if any(d < 1 for d in self.degrees):
            raise UsageError(f"degrees must be positive, got {list(self.degrees)}")
        if mode == "hypersurface" and r != 1:
            raise UsageError("hypersurface mode needs exactly one degree")
        if r == 0 and (self.singular_points or self.ci_local_data):
            raise UsageError("projective space itself has no singular points")
        for p in self.singular_points:
            if p.count < 1:
                raise UsageError("singular point counts must be positive")
            if p.germ.n != n - r:
                raise UsageError(f"germ {p.germ} has dimension {p.germ.n}, but X has dimension {n - r}")
        if self.ci_local_data and mode != "complete_intersection":
            raise UsageError("user_ci_local_data only applies to complete_intersection scenes")

    @property
    def dim(self) -> int:
        """Dimension of X."""
        return self.ambient_dim - len(self.degrees)

    @property
    def is_smooth(self) -> bool:
        return not self.singular_points and not self.ci_local_data

    def with_points(self, points) -> Scene:
        """Same multidegree, different singular locus."""
        return replace(self, singular_points=tuple(points))

    def to_json(self) -> dict:
        sing = []
        for p in self.singular_points:
            entry = {"weights": [format_rational(w) for w in p.germ.weights], "label": p.germ.label,
                     "count": p.count, "qhm": p.qhm}
            if p.sigma is not None:
                entry["sigma"] = p.sigma
            sing.append(entry)
        options: dict[str, Any] = {}
        if self.order is not None:
            options["order"] = self.order
        if self.kinds:
            options["kinds"] = list(self.kinds)
        if self.user_sigma:
            options["user_sigma"] = dict(self.user_sigma)
        if self.ci_local_data:
            options["user_ci_local_data"] = [{"label": d.label, "chi_tilde": d.chi_tilde, "count": d.count}
                                             for d in self.ci_local_data]
        if self.declared_euler is not None:
            options["declared_euler"] = self.declared_euler
        if self.expect_fail:
            options["expect_fail"] = sorted(self.expect_fail)
        out = {"version": SCENE_VERSION, "name": self.name, "ambient": {"type": "projective_space",
               "dim": self.ambient_dim}, "degrees": list(self.degrees), "mode": self.mode,
               "singularities": sing}
        if self.description:
            out["description"] = self.description
        if options:
            out["options"] = options
        return out


def _point_from_json(entry: Mapping) -> SingularPoint:
    if "catalog" in entry:
        cat = lookup(entry["catalog"])
        # label defaults to the catalog name, which is also the user_sigma key
        germ = SingularityGerm(cat.germ.weights, entry.get("label", entry["catalog"]))
        qhm = entry.get("qhm", cat.qhm)
    else:
        germ = SingularityGerm(tuple(Fraction(str(w)) for w in entry["weights"]), entry.get("label", ""))
        qhm = entry.get("qhm", False)
    return SingularPoint(germ, int(entry.get("count", 1)), bool(qhm), entry.get("sigma"))


def scene_from_json(data: Mapping, strict: bool = False) -> Scene:
    schema = STRICT_SCENE_SCHEMA if strict else SCENE_SCHEMA
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise UsageError(f"scene schema error at {where}: {exc.message}") from None
    opts = data.get("options", {})
    ci = tuple(CILocalDatum(int(d["chi_tilde"]), int(d.get("count", 1)), d.get("label", ""))
               for d in opts.get("user_ci_local_data", []))
    return Scene(
        ambient_dim=int(data["ambient"]["dim"]),
        degrees=tuple(data["degrees"]),
        singular_points=tuple(_point_from_json(e) for e in data.get("singularities", [])),
        mode=data.get("mode", ""),
        name=data.get("name", ""),
        description=data.get("description", ""),
        order=opts.get("order"),
        kinds=tuple(opts.get("kinds", ())),
        user_sigma=dict(opts.get("user_sigma", {})),
        ci_local_data=ci,
        declared_euler=opts.get("declared_euler"),
        expect_fail=frozenset(opts.get("expect_fail", ())),
    )


def load_scene(path: str | Path, strict: bool = False) -> Scene:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    scene = scene_from_json(data, strict)
    if not scene.name:
        scene = replace(scene, name=path.stem)
    return scene


def bundled_scene_dir() -> Path:
    return Path(__file__).parent / "scenes"
