"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or schema error,
3 math-domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import SingclassError, UsageError
from .exact_series import as_rational, format_rational
from .genus_engine import KINDS, builtin_genus, canonical_kind
from .scene import Scene, bundled_scene_dir, load_scene
from .singularity_catalog import CATALOG, chi_y_reduced_fiber, gr0_dim, hodge_datum, signature_fiber
from .specialization_engine import functorial_class, genera_report, verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
ORDER_ENV = "SINGCLASS_ORDER"
KIND_CHOICES = ("chern", "todd", "lclass", "hirzebruch", "lambda", "lambda_dual")


def _env_order() -> int | None:
    raw = os.environ.get(ORDER_ENV)
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{ORDER_ENV} must be positive")
    return value


def _order(args, default: int | None) -> int | None:
    if getattr(args, "order", None) is not None:
        return args.order
    env = _env_order()
    return env if env is not None else default


def _table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_series(args) -> int:
    kind = canonical_kind(args.kind)
    order = _order(args, 6)
    spec = builtin_genus(kind, order)
    series = spec.series
    if args.y is not None:
        y = as_rational(args.y)
        series = series.substitute_y(y)
    payload = {"kind": kind, "order": order, "y": args.y, "unit": spec.unit.to_json(), "series": series.to_json()}
    _emit(args, payload, str(series))
    return EXIT_OK


def _scene_payload(scene: Scene, kinds: list[str], report: str, order: int | None) -> tuple[dict, str]:
    payload: dict = {"scene": scene.name}
    text = [f"# {scene.name or 'scene'}: degrees {list(scene.degrees)} in P^{scene.ambient_dim}"]
    if report in ("classes", "all"):
        classes = {}
        rows = []
        for kind in kinds:
            rep = functorial_class(kind, scene, order)
            classes[kind] = rep.to_json()
            deg = rep.degrees()
            rows.append([kind, deg["virtual"], deg["milnor"], deg["functorial"], rep.functorial == rep.virtual])
        payload["classes"] = classes
        text.append(_table(["kind", "virtual degree", "milnor degree", "functorial degree", "functorial == virtual"],
                           rows))
    if report in ("genera", "all"):
        gen = genera_report(scene, order)
        payload["genera"] = gen.to_json()
        rows = [["e(X)", gen.euler], ["chi_y(X)", gen.chi_y], ["arithmetic genus", gen.arithmetic_genus],
                ["hodge chi_0", gen.hodge_chi0], ["chi_1", gen.chi_1], ["L-degree", gen.l_degree],
                ["virtual chi_y", gen.virtual_chi_y], ["virtual L-degree", gen.virtual_l_degree]]
        text.append(_table(["invariant", "value"], rows))
        text.extend(f"note: {n}" for n in gen.notes)
    return payload, "\n\n".join(text)


def cmd_scene(args) -> int:
    scene = load_scene(args.path, strict=args.strict)
    if args.kind:
        kinds = [canonical_kind(k) for k in args.kind]
    elif scene.kinds:
        kinds = [canonical_kind(k) for k in scene.kinds]
    else:
        kinds = list(KINDS)
    payload, text = _scene_payload(scene, kinds, args.report, _order(args, None))
    _emit(args, payload, text)
    return EXIT_OK


def _verify_one(path: str, strict: bool) -> dict:
    try:
        scene = load_scene(path, strict=strict)
        report = verify(scene)
    except SingclassError as exc:
        return {"path": path, "error": f"{type(exc).__name__}: {exc}", "exit": exc.exit_code}
    return {"path": path, "report": report.to_json(), "exit": EXIT_OK if report.passed else EXIT_VERIFY}


def _scene_paths(target: Path) -> list[str]:
    if target.is_dir():
        paths = sorted(str(p) for p in target.glob("*.json"))
        if not paths:
            raise UsageError(f"no *.json scene files in {target}")
        return paths
    if not target.exists():
        raise UsageError(f"{target} does not exist")
    return [str(target)]


def cmd_verify(args) -> int:
    target = Path(args.path) if args.path else bundled_scene_dir()
    paths = _scene_paths(target)
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, paths, [args.strict] * len(paths)))
    else:
        results = [_verify_one(p, args.strict) for p in paths]
    code = max(r["exit"] for r in results)
    rows = []
    for r in results:
        if "error" in r:
            rows.append([r["path"], "-", "error", r["error"]])
            continue
        for c in r["report"]["checks"]:
            rows.append([r["report"]["scene"], c["id"], c["status"], c["detail"]])
    summary = f"{sum(r['exit'] == 0 for r in results)}/{len(results)} scenes passed"
    _emit(args, {"results": results, "exit": code}, _table(["scene", "check", "status", "detail"], rows)
          + "\n\n" + summary)
    return code


def cmd_catalog(args) -> int:
    entries, rows = {}, []
    for name, entry in CATALOG.items():
        g = entry.germ
        sigma = signature_fiber(g) if g.n % 2 == 0 else None
        entries[name] = {
            "weights": [format_rational(w) for w in g.weights],
            "dim": g.n,
            "mu": g.mu,
            "spectrum": g.spectrum.to_json(),
            "gr": {str(p): d for p, d in hodge_datum(g).gr.items()},
            "chi_y_reduced": chi_y_reduced_fiber(g).to_json(),
            "gr0_dim": gr0_dim(g),
            "signature": sigma,
            "qhm": entry.qhm,
            "description": entry.description,
        }
        rows.append([name, g.n, g.mu, g.spectrum, chi_y_reduced_fiber(g), gr0_dim(g),
                     "-" if sigma is None else sigma, entry.qhm])
    _emit(args, entries, _table(["germ", "dim", "mu", "spectrum", "chi_y(H~)", "gr0", "sigma", "qhm"], rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singclass", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of markdown tables")

    p = sub.add_parser("series", parents=[common], help="print a genus power series")
    p.add_argument("kind", choices=KIND_CHOICES)
    p.add_argument("--order", type=int, help=f"truncation order (default 6, or ${ORDER_ENV})")
    p.add_argument("--y", help="substitute a rational value for y")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("scene", parents=[common], help="evaluate a scene file")
    p.add_argument("path")
    p.add_argument("--kind", action="append", choices=KIND_CHOICES, help="genus kind (repeatable)")
    p.add_argument("--report", choices=("classes", "genera", "all"), default="all")
    p.add_argument("--order", type=int, help="series truncation order (at least n+1 is always used)")
    p.add_argument("--strict", action="store_true", help="reject unknown scene fields")
    p.set_defaults(func=cmd_scene)

    p = sub.add_parser("verify", parents=[common], help="run the identity checks on scene files")
    p.add_argument("path", nargs="?", help="scene file or directory (default: bundled scenes)")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list bundled singularity germs")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SingclassError as exc:
        print(f"singclass: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
