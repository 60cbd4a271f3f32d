"""Virtual versus functorial classes of a scene.

The virtual class of X is the genus of its virtual tangent bundle
``T P^n - sum O(d_i)`` capped with [X]; its degree is the genus of a smooth
member of the same linear system.  For a hypersurface with isolated
singularities the functorial class differs from it by a class supported on
the singular points, one local contribution per point:

============  ===========================================
kind          contribution of a point x
============  ===========================================
chern         (-1)^n mu_x
hirzebruch    chi_y of the reduced Milnor fibre cohomology
lambda_dual   same as hirzebruch
todd          (-1)^n dim Gr^0_F, i.e. the above at y = 0
lclass        signature of the Milnor fibre
============  ===========================================

The ``todd`` kind is the y = 0 Hirzebruch class, not td_*; the latter has
no correction, which is why the arithmetic genus in :func:`genera_report` is
the virtual one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .constructible_calculus import euler_integral, indicator_scene, phi_scene, psi_scene
from .errors import DomainError, SingclassError, UnsupportedError
from .exact_series import YPolynomial
from .genus_engine import BundleClass, builtin_genus, canonical_kind, genus_of_bundle_localized, tangent_bundle
from .projective_chow import CohomologyClass, LocalizedClass, degree, fundamental_class, gysin_self_intersection
from .scene import Scene, SingularPoint
from .singularity_catalog import chi_y_reduced_fiber, du_bois, gr0_dim, signature_fiber

AnyClass = Union[CohomologyClass, LocalizedClass]


def _order(scene: Scene, order: int | None) -> int:
    n = scene.ambient_dim
    return max(n + 1, order or 0, scene.order or 0)


def _spec(kind: str, scene: Scene, order: int | None = None):
    return builtin_genus(kind, _order(scene, order))


def t_vir(scene: Scene) -> BundleClass:
    """(n+1) O(1) - O - sum O(d_i)."""
    bundle = tangent_bundle(scene.ambient_dim)
    for d in scene.degrees:
        bundle = bundle - BundleClass(scene.ambient_dim, {d: 1})
    return bundle


def normal_bundle(scene: Scene) -> BundleClass:
    twists: dict[int, int] = {}
    for d in scene.degrees:
        twists[d] = twists.get(d, 0) + 1
    return BundleClass(scene.ambient_dim, twists)


def _fundamental(scene: Scene, ktheory: bool) -> CohomologyClass:
    if not scene.degrees:
        return CohomologyClass.one(scene.ambient_dim)
    return fundamental_class(scene.ambient_dim, scene.degrees, ktheory)


def _simplify(value: LocalizedClass) -> AnyClass:
    return value.numerator if value.power == 0 else value


def virtual_class_localized(kind: str, scene: Scene, order: int | None = None) -> LocalizedClass:
    spec = _spec(kind, scene, order)
    return genus_of_bundle_localized(spec, t_vir(scene)) * _fundamental(scene, spec.ktheory)


def virtual_class(kind: str, scene: Scene, order: int | None = None) -> AnyClass:
    """genus(T_vir) capped with [X], pushed to P^n.

    The lambda kind may keep a (1+y) denominator; it is then returned as a
    :class:`LocalizedClass`.
    """
    return _simplify(virtual_class_localized(kind, scene, order))


def is_ktheory(kind: str) -> bool:
    return canonical_kind(kind) == "lambda_dual"


def virtual_genus(kind: str, scene: Scene, order: int | None = None) -> YPolynomial:
    return virtual_class_localized(kind, scene, order).degree(is_ktheory(kind))


def _local_sigma(scene: Scene, point: SingularPoint) -> int:
    if point.sigma is not None:
        return point.sigma
    if point.label in scene.user_sigma:
        return scene.user_sigma[point.label]
    if scene.dim % 2:
        raise UnsupportedError(f"L-class correction of {point.label} in odd dimension {scene.dim} "
                               "needs a user-supplied sigma")
    return signature_fiber(point.germ)


def local_contribution(kind: str, scene: Scene, point: SingularPoint) -> YPolynomial:
    kind = canonical_kind(kind)
    n = scene.dim
    if kind == "chern":
        return YPolynomial.const((-1) ** n * point.germ.mu)
    if kind in ("hirzebruch", "lambda_dual"):
        return chi_y_reduced_fiber(point.germ)
    if kind == "todd":
        return YPolynomial.const((-1) ** n * gr0_dim(point.germ))
    return YPolynomial.const(_local_sigma(scene, point))


def milnor_class(kind: str, scene: Scene) -> CohomologyClass:
    """Sum of local contributions times the point class."""
    kind = canonical_kind(kind)
    n = scene.ambient_dim
    if scene.mode == "complete_intersection":
        if scene.ci_local_data:
            if kind != "chern":
                raise UnsupportedError("complete-intersection local data only determine the Chern (Euler) correction")
            total = sum(d.chi_tilde * d.count for d in scene.ci_local_data)
            return CohomologyClass.point(n, total)
        if scene.singular_points:
            raise UnsupportedError("complete-intersection scenes need user_ci_local_data for their singular points")
        return CohomologyClass.zero(n)
    total = YPolynomial()
    for p in scene.singular_points:
        total = total + local_contribution(kind, scene, p) * p.count
    return CohomologyClass.point(n, total)


@dataclass(frozen=True)
class ClassReport:
    virtual: AnyClass
    milnor: CohomologyClass
    functorial: AnyClass
    genus_kind: str
    ktheory: bool = False

    def degrees(self) -> dict[str, YPolynomial]:
        return {
            "virtual": degree(self.virtual, self.ktheory),
            "milnor": degree(self.milnor, self.ktheory),
            "functorial": degree(self.functorial, self.ktheory),
        }

    def to_json(self) -> dict:
        def enc(c):
            if isinstance(c, LocalizedClass):
                return {"numerator": c.numerator.to_json(), "one_plus_y_power": c.power}
            return c.to_json()

        return {
            "genus_kind": self.genus_kind,
            "ktheory": self.ktheory,
            "virtual": enc(self.virtual),
            "milnor": enc(self.milnor),
            "functorial": enc(self.functorial),
            "degrees": {k: v.to_json() for k, v in self.degrees().items()},
            "functorial_equals_virtual": self.functorial == self.virtual,
        }

    @classmethod
    def from_json(cls, data) -> ClassReport:
        def dec(d):
            if "numerator" in d:
                return _simplify(LocalizedClass(CohomologyClass.from_json(d["numerator"]), d["one_plus_y_power"]))
            return CohomologyClass.from_json(d)

        return cls(dec(data["virtual"]), dec(data["milnor"]), dec(data["functorial"]), data["genus_kind"],
                   data.get("ktheory", False))


def functorial_class(kind: str, scene: Scene, order: int | None = None) -> ClassReport:
    kind = canonical_kind(kind)
    virtual = virtual_class_localized(kind, scene, order)
    milnor = milnor_class(kind, scene)
    functorial = virtual - LocalizedClass(milnor)
    return ClassReport(_simplify(virtual), milnor, _simplify(functorial), kind, is_ktheory(kind))


@dataclass(frozen=True)
class GeneraReport:
    euler: int
    chi_y: YPolynomial | None
    arithmetic_genus: int
    hodge_chi0: int | None
    chi_1: int | None
    l_degree: int | None
    virtual_chi_y: YPolynomial
    virtual_l_degree: int
    notes: tuple = ()

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, YPolynomial):
                return v.to_json()
            return v

        return {
            "e": self.euler,
            "chi_y": enc(self.chi_y),
            "arithmetic_genus": self.arithmetic_genus,
            "hodge_chi0": self.hodge_chi0,
            "chi_1": self.chi_1,
            "l_degree": self.l_degree,
            "virtual_chi_y": enc(self.virtual_chi_y),
            "virtual_l_degree": self.virtual_l_degree,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data) -> GeneraReport:
        def dec(v):
            return None if v is None else YPolynomial.from_json(v)

        return cls(data["e"], dec(data["chi_y"]), data["arithmetic_genus"], data["hodge_chi0"], data["chi_1"],
                   data["l_degree"], dec(data["virtual_chi_y"]), data["virtual_l_degree"], tuple(data["notes"]))


def _as_int(p: YPolynomial) -> int:
    v = p.constant_value()
    if v.denominator != 1:
        raise DomainError(f"expected an integer degree, got {v}")
    return int(v)


def genera_report(scene: Scene, order: int | None = None) -> GeneraReport:
    notes = []
    euler = _as_int(functorial_class("chern", scene, order).degrees()["functorial"])
    virtual_chi_y = virtual_genus("hirzebruch", scene, order)
    arithmetic = _as_int(YPolynomial.const(virtual_chi_y.evaluate(0)))
    virtual_l = _as_int(virtual_genus("lclass", scene, order))
    try:
        chi_y = functorial_class("hirzebruch", scene, order).degrees()["functorial"]
        hodge_chi0 = _as_int(YPolynomial.const(chi_y.evaluate(0)))
        chi_1 = _as_int(YPolynomial.const(chi_y.evaluate(1)))
    except UnsupportedError as exc:
        chi_y = hodge_chi0 = chi_1 = None
        notes.append(f"chi_y: {exc}")
    try:
        l_degree = _as_int(functorial_class("lclass", scene, order).degrees()["functorial"])
    except UnsupportedError as exc:
        l_degree = None
        notes.append(f"l_degree: {exc}")
    return GeneraReport(euler, chi_y, arithmetic, hodge_chi0, chi_1, l_degree, virtual_chi_y, virtual_l, tuple(notes))


# verification suite

CHECK_TITLES = {
    "a": "twisted Gysin identity: genus(N) * virtual class == i_* i^! genus(P^n)",
    "b": "Milnor class supported on the singular points",
    "c": "Hirzebruch functorial class at y=-1 equals Chern functorial class",
    "d": "Euler degree agrees with constructible-function integrals",
    "e": "Du Bois: hodge_chi0 == arithmetic_genus",
    "f": "rational homology manifold: L-degree == chi_1",
    "g": "complete-intersection degree identity with user local data",
}


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str  # pass | fail | skipped | expected-fail | unexpected-pass | error
    detail: str = ""
    discrepancy: int | None = None

    @property
    def title(self) -> str:
        return CHECK_TITLES[self.id]

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "skipped", "expected-fail")

    def to_json(self) -> dict:
        return {"id": self.id, "title": self.title, "status": self.status, "detail": self.detail,
                "discrepancy": self.discrepancy}

    @classmethod
    def from_json(cls, data) -> CheckResult:
        return cls(data["id"], data["status"], data["detail"], data["discrepancy"])


@dataclass(frozen=True)
class VerificationReport:
    scene: str
    checks: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_json(self) -> dict:
        return {"scene": self.scene, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    @classmethod
    def from_json(cls, data) -> VerificationReport:
        return cls(data["scene"], tuple(CheckResult.from_json(c) for c in data["checks"]))


def _kinds_for_scene(scene: Scene) -> list[str]:
    kinds = ["chern", "todd", "lclass", "hirzebruch", "lambda_dual"]
    if scene.kinds:
        kinds = [canonical_kind(k) for k in scene.kinds]
    return kinds


def _check_gysin(scene: Scene) -> CheckResult:
    if not scene.degrees:
        return CheckResult("a", "skipped", "no equations: X is the ambient space")
    bad = []
    for kind in _kinds_for_scene(scene):
        spec = _spec(kind, scene)
        lhs = genus_of_bundle_localized(spec, normal_bundle(scene)) * virtual_class_localized(kind, scene)
        ambient = genus_of_bundle_localized(spec, tangent_bundle(scene.ambient_dim))
        rhs = gysin_self_intersection(ambient, scene.degrees, spec.ktheory)
        if lhs != rhs:
            bad.append(kind)
    if bad:
        return CheckResult("a", "fail", f"identity fails for {', '.join(bad)}")
    return CheckResult("a", "pass", f"exact for {', '.join(_kinds_for_scene(scene))}")


def _supported_kinds(scene: Scene) -> list[tuple[str, CohomologyClass]]:
    out = []
    for kind in _kinds_for_scene(scene):
        try:
            out.append((kind, milnor_class(kind, scene)))
        except UnsupportedError:
            continue
    return out


def _check_localization(scene: Scene) -> CheckResult:
    computed = _supported_kinds(scene)
    if not computed:
        return CheckResult("b", "skipped", "no Milnor class is computable for this scene")
    bad = [k for k, m in computed if not m.supported_in_top_degree()]
    if bad:
        return CheckResult("b", "fail", f"Milnor class has positive-dimensional part for {', '.join(bad)}")
    return CheckResult("b", "pass", f"point-supported for {', '.join(k for k, _ in computed)}")


def _check_y_minus_one(scene: Scene) -> CheckResult:
    try:
        hirz = functorial_class("hirzebruch", scene).functorial
    except UnsupportedError as exc:
        return CheckResult("c", "skipped", str(exc))
    chern = functorial_class("chern", scene).functorial
    if hirz.substitute_y(-1) == chern:
        return CheckResult("c", "pass", f"c_*(X) = {chern}")
    return CheckResult("c", "fail", f"T_-1 = {hirz.substitute_y(-1)} but c_* = {chern}")


def _check_euler(scene: Scene) -> CheckResult:
    if scene.mode != "hypersurface":
        return CheckResult("d", "skipped", "nearby cycles are only evaluated on hypersurface scenes")
    e_func = _as_int(functorial_class("chern", scene).degrees()["functorial"])
    e_virt = _as_int(virtual_genus("chern", scene))
    chi_x = euler_integral(indicator_scene(scene))
    chi_psi = euler_integral(psi_scene(scene))
    chi_phi = euler_integral(phi_scene(scene))
    detail = f"deg c_*(X)={e_func}, chi(1_X)={chi_x}, chi(psi)={chi_psi}, e(X_t)={e_virt}, chi(phi)={chi_phi}"
    ok = e_func == chi_x and chi_psi == e_virt and chi_phi == e_virt - e_func
    return CheckResult("d", "pass" if ok else "fail", detail, (e_func - chi_x) + (chi_psi - e_virt))


def _check_du_bois(scene: Scene) -> CheckResult:
    if scene.mode != "hypersurface":
        return CheckResult("e", "skipped", "needs germs of a hypersurface scene")
    report = genera_report(scene)
    if report.hodge_chi0 is None:
        return CheckResult("e", "skipped", "chi_y(X) not available")
    discrepancy = report.arithmetic_genus - report.hodge_chi0
    all_db = all(du_bois(p.germ) for p in scene.singular_points)
    predicted = sum((-1) ** scene.dim * gr0_dim(p.germ) * p.count for p in scene.singular_points)
    detail = (f"arithmetic_genus={report.arithmetic_genus}, hodge_chi0={report.hodge_chi0}, "
              f"all Du Bois={all_db}, predicted discrepancy={predicted}")
    return CheckResult("e", "pass" if discrepancy == 0 else "fail", detail, discrepancy)


def _check_qhm(scene: Scene) -> CheckResult:
    if scene.mode != "hypersurface":
        return CheckResult("f", "skipped", "needs a hypersurface scene")
    if scene.dim % 2:
        return CheckResult("f", "skipped", f"X has odd dimension {scene.dim}")
    if not all(p.qhm for p in scene.singular_points):
        return CheckResult("f", "skipped", "not every singular point is flagged as a rational homology manifold")
    report = genera_report(scene)
    if report.l_degree is None or report.chi_1 is None:
        return CheckResult("f", "skipped", "; ".join(report.notes))
    discrepancy = report.l_degree - report.chi_1
    return CheckResult("f", "pass" if discrepancy == 0 else "fail",
                       f"l_degree={report.l_degree}, chi_1={report.chi_1}", discrepancy)


def _check_ci(scene: Scene) -> CheckResult:
    if scene.mode != "complete_intersection" or not scene.ci_local_data:
        return CheckResult("g", "skipped", "no complete-intersection local data")
    if scene.declared_euler is None:
        return CheckResult("g", "skipped", "no declared Euler characteristic to compare against")
    e_virt = _as_int(virtual_genus("chern", scene))
    local = sum(d.chi_tilde * d.count for d in scene.ci_local_data)
    discrepancy = e_virt - local - scene.declared_euler
    return CheckResult("g", "pass" if discrepancy == 0 else "fail",
                       f"e(X_t)={e_virt}, sum chi~(F_x)={local}, declared e(X)={scene.declared_euler}", discrepancy)


_CHECKS = {"a": _check_gysin, "b": _check_localization, "c": _check_y_minus_one, "d": _check_euler,
           "e": _check_du_bois, "f": _check_qhm, "g": _check_ci}


def verify(scene: Scene) -> VerificationReport:
    """Run every identity check; failures become report entries, never exceptions."""
    results = []
    for cid, check in _CHECKS.items():
        try:
            result = check(scene)
        except SingclassError as exc:
            result = CheckResult(cid, "error", f"{type(exc).__name__}: {exc}")
        if cid in scene.expect_fail:
            if result.status == "fail":
                result = CheckResult(cid, "expected-fail", result.detail, result.discrepancy)
            elif result.status == "pass":
                result = CheckResult(cid, "unexpected-pass", result.detail, result.discrepancy)
        results.append(result)
    return VerificationReport(scene.name, tuple(results))


def verify_degree_invariants(scene: Scene) -> dict[str, bool]:
    """Degree-level identities used by the property tests."""
    n = scene.dim
    mu_sum = sum(p.germ.mu * p.count for p in scene.singular_points)
    hirz = milnor_class("hirzebruch", scene)
    return {
        "milnor_chern_degree": milnor_class("chern", scene).degree() == (-1) ** n * mu_sum,
        "milnor_hirzebruch_at_minus_one": hirz.degree().evaluate(-1) == (-1) ** n * mu_sum,
        "milnor_todd_degree": hirz.degree().evaluate(0)
        == sum((-1) ** n * gr0_dim(p.germ) * p.count for p in scene.singular_points),
    }
