"""Acceptance criteria 1-8, each at exact (zero) tolerance.

Every test records one PASS/FAIL line; the lines are repeated in the
"acceptance criteria" section of the pytest terminal summary.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

import test_properties as props
from oracles import plane_curve_arithmetic_genus, plane_curve_euler, resolution_euler_surface
from singclass.exact_series import ONE, YPolynomial
from singclass.genus_engine import builtin_genus
from singclass.scene import Scene, bundled_scene_dir, load_scene
from singclass.singularity_catalog import chi_y_reduced_fiber, du_bois, gr0_dim, lookup, signature_fiber, simple_germ
from singclass.specialization_engine import genera_report, verify, virtual_genus


def scene(name: str) -> Scene:
    return load_scene(bundled_scene_dir() / f"{name}.json")


def const(v) -> YPolynomial:
    return YPolynomial.const(v)


def test_criterion_1_series_identities(acceptance_line):
    q = builtin_genus("hirzebruch", 31).series
    chern = q.substitute_y(-1)
    chern_ok = chern[0] == ONE and chern[1] == ONE and all(chern[k].is_zero() for k in range(2, 31))
    todd = q.truncate(5).substitute_y(0)
    todd_ok = [todd[k] for k in range(5)] == [const(x) for x in (1, Fraction(1, 2), Fraction(1, 12), 0,
                                                                  Fraction(-1, 720))]
    ell = q.truncate(5).substitute_y(1)
    ell_ok = [ell[k] for k in range(5)] == [const(x) for x in (1, 0, Fraction(1, 3), 0, Fraction(-1, 45))]
    ok = acceptance_line(1, f"Q_y at y=-1,0,1 (1+z through z^30: {chern_ok}, Todd: {todd_ok}, L: {ell_ok})",
                         chern_ok and todd_ok and ell_ok)
    assert ok


def test_criterion_2_ghrr_on_projective_space(acceptance_line):
    results = {}
    for n in range(1, 7):
        expected = YPolynomial({p: (-1) ** p for p in range(n + 1)})
        ambient = Scene(n, ())
        results[n] = virtual_genus("hirzebruch", ambient) == expected and virtual_genus("lambda", ambient) == expected
    ok = acceptance_line(2, f"chi_y(P^n) == sum (-y)^p for n=1..6: {results}", all(results.values()))
    assert ok


def test_criterion_3_k3_and_cubic_surface(acceptance_line):
    k3, cubic = scene("k3_quartic"), scene("smooth_cubic_surface")
    k3_values = tuple(virtual_genus("hirzebruch", k3).evaluate(y) for y in (-1, 0, 1))
    k3_direct = tuple(virtual_genus(k, k3).constant_value() for k in ("chern", "todd", "lclass"))
    cubic_values = tuple(virtual_genus(k, cubic).constant_value() for k in ("chern", "todd", "lclass"))
    cubic_poly = virtual_genus("hirzebruch", cubic)
    ok = (k3_values == k3_direct == (24, 2, -16) and cubic_values == (9, 1, -5)
          and cubic_poly == YPolynomial({0: 1, 1: -7, 2: 1}))
    acceptance_line(3, f"K3 (e, chi(O), sigma) = {tuple(map(int, k3_values))}; cubic = "
                       f"{tuple(map(int, cubic_values))}, chi_y = {cubic_poly}", ok)
    assert ok


def test_criterion_4_plane_curves(acceptance_line):
    bad = []
    for d in range(1, 7):
        curve = Scene(2, (d,))
        if virtual_genus("chern", curve) != const(plane_curve_euler(d)):
            bad.append((d, "e"))
        if virtual_genus("todd", curve) != const(plane_curve_arithmetic_genus(d)):
            bad.append((d, "chi(O)"))
    ok = acceptance_line(4, f"plane curves d<=6: e = 3d - d^2 and chi(O) = 1 - (d-1)(d-2)/2 (mismatches: {bad})",
                         not bad)
    assert ok


def test_criterion_5_milnor_fibre_catalog(acceptance_line):
    a1, cusp, se = lookup("A1").germ, lookup("cusp").germ, lookup("simple_elliptic").germ
    checks = {
        "A1 mu": a1.mu == 1,
        "A1 spectrum": a1.spectrum.multiplicities == {Fraction(3, 2): 1},
        "A1 chi_y": chi_y_reduced_fiber(a1) == YPolynomial({1: -1}),
        "A1 sigma": signature_fiber(a1) == -1,
        "A1 Du Bois": du_bois(a1),
        "cusp spectrum": cusp.spectrum.multiplicities == {Fraction(5, 6): 1, Fraction(7, 6): 1},
        "simple elliptic mu": se.mu == 8,
        "simple elliptic spectrum": se.spectrum.multiplicities
        == {Fraction(1): 1, Fraction(4, 3): 3, Fraction(5, 3): 3, Fraction(2): 1},
        "simple elliptic Gr0": gr0_dim(se) == 0,
        "simple elliptic sigma": signature_fiber(se) == -6,
    }
    failed = [k for k, v in checks.items() if not v]
    ok = acceptance_line(5, f"catalog values for A1, cusp, simple elliptic (failed: {failed})", not failed)
    assert ok


def test_criterion_6_nodal_and_cayley_cubic(acceptance_line):
    nodal, cayley = genera_report(scene("nodal_cubic_surface")), genera_report(scene("cayley_cubic"))
    e_resolution = int(virtual_genus("chern", scene("smooth_cubic_surface")).constant_value())
    cayley_oracle = resolution_euler_surface(e_resolution, [1, 1, 1, 1])
    ok = (nodal.euler == 8 and nodal.chi_y == YPolynomial({0: 1, 1: -6, 2: 1}) and nodal.arithmetic_genus == 1
          and e_resolution == 9 and cayley.euler == cayley_oracle == 5 and cayley.arithmetic_genus == 1
          and cayley.l_degree == cayley.chi_1)
    acceptance_line(6, f"nodal cubic e={nodal.euler}, chi_y={nodal.chi_y}, chi(O)={nodal.arithmetic_genus}; "
                       f"Cayley e={cayley.euler} (resolution oracle {cayley_oracle}), chi(O)={cayley.arithmetic_genus},"
                       f" L-degree={cayley.l_degree}, chi_1={cayley.chi_1}", ok)
    assert ok


def test_criterion_7_property_suites(acceptance_line):
    failures = {}
    props.CASES.clear()
    for prop in props.PROPERTIES:
        try:
            prop()
        except Exception as exc:  # noqa: BLE001 - any failure is a criterion failure
            failures[prop.__name__] = f"{type(exc).__name__}: {exc}"
    counts = {p.__name__: props.CASES[p.__name__] for p in props.PROPERTIES}
    short = [name for name, c in counts.items() if c < 200]
    ok = acceptance_line(7, f"{len(props.PROPERTIES)} property suites, min cases {min(counts.values())} "
                            f"(failures: {sorted(failures)}, under 200 cases: {short})", not failures and not short)
    assert ok, failures


def surface_ade_weights() -> set[tuple]:
    kinds = [("A", k) for k in range(1, 30)] + [("D", k) for k in range(4, 30)] + [("E", k) for k in (6, 7, 8)]
    return {tuple(sorted(simple_germ(kind, k, 2).weights)) for kind, k in kinds}


def test_criterion_8_du_bois_dichotomy(acceptance_line):
    # ADE here means rational double points: simple surface germs, matched by weights
    ade_weights = surface_ade_weights()
    ade = []
    for path in sorted(bundled_scene_dir().glob("*.json")):
        s = load_scene(path)
        if s.singular_points and all(tuple(sorted(p.germ.weights)) in ade_weights for p in s.singular_points):
            ade.append(s)
    ade_results = {s.name: (verify(s)["e"].status, verify(s)["e"].discrepancy) for s in ade}
    ade_ok = bool(ade) and all(r == ("pass", 0) for r in ade_results.values())
    cone = verify(scene("quartic_cone"))["e"]
    ok = ade_ok and cone.discrepancy == 1
    acceptance_line(8, f"{len(ade)} ADE scenes pass check (e) with zero discrepancy: {ade_ok}; "
                       f"quartic cone discrepancy {cone.discrepancy}", ok)
    assert ok


@pytest.mark.parametrize("name", ["cayley_cubic", "cubic_e6", "quartic_e8"])
def test_ade_scenes_are_flagged_rational_homology_manifolds(name):
    assert verify(scene(name))["f"].status == "pass"
