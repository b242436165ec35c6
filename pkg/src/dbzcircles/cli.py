"""Command-line interface.

    dbzcircles solve    [SCENE]   fourth tangent circle for three inputs
    dbzcircles classify [SCENE]   configuration class only
    dbzcircles verify   [SCENE]   pairwise tangency reports
    dbzcircles family   --r1 R1 --r2 R2 --w W [W ...]
    dbzcircles render   fig1|fig2|fig3|SCENE --out FILE

SCENE is a JSON file (``-`` or omitted: stdin) of the form
``{"circles": [...], "branch": "plus", "tol": 1e-9, "mode": "float", "order": 8}``.
Command-line flags override scene options.

Exit codes: 0 success, 2 not mutually tangent, 3 no real solution,
4 malformed input, 5 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import geometry
from .arbelos import ArbelosConfig, family_member, ow_circle, xi_substitution_dbz
from .descartes import (
    Branch,
    NoRealSolution,
    NotMutuallyTangent,
    UnsupportedConfiguration,
    classify,
    solve_fourth,
)
from .geometry import verify_tangency
from .numeric import DEFAULT_TOL, fmt15, is_exact, rational_str, to_exact
from .svg import Element, figure_elements, render_svg

EXIT_OK = 0
EXIT_NOT_TANGENT = 2
EXIT_NO_SOLUTION = 3
EXIT_MALFORMED = 4
EXIT_IO = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_MALFORMED, f"invalid JSON: {exc}") from exc


def _options(args, scene: dict) -> dict:
    def pick(name, default):
        v = getattr(args, name, None)
        return scene.get(name, default) if v is None else v

    opts = {
        "branch": pick("branch", "plus"),
        "tol": float(pick("tol", DEFAULT_TOL)),
        "mode": pick("mode", "float"),
        "order": int(pick("order", 8)),
    }
    if opts["branch"] not in ("plus", "minus"):
        raise CliError(EXIT_MALFORMED, f"branch must be plus or minus, got {opts['branch']!r}")
    if opts["mode"] not in ("exact", "float"):
        raise CliError(EXIT_MALFORMED, f"mode must be exact or float, got {opts['mode']!r}")
    if not opts["tol"] > 0:
        raise CliError(EXIT_MALFORMED, "tol must be positive")
    return opts


def _load_scene(args, count: int | None = 3):
    scene = _read_json(args.scene)
    if isinstance(scene, list):
        scene = {"circles": scene}
    if not isinstance(scene, dict) or not isinstance(scene.get("circles"), list):
        raise CliError(EXIT_MALFORMED, 'scene must be an object with a "circles" list')
    opts = _options(args, scene)
    circles = scene["circles"]
    if count is not None and len(circles) != count:
        raise CliError(EXIT_MALFORMED, f"expected {count} circles, got {len(circles)}")
    if not circles:
        raise CliError(EXIT_MALFORMED, "scene has no circles")
    try:
        parsed = [geometry.from_json(c, exact=opts["mode"] == "exact") for c in circles]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_MALFORMED, str(exc)) from exc
    return parsed, opts


def _num(x):
    return fmt15(x)


def _with_rational(out: dict, values: dict, exact: bool) -> dict:
    if exact and all(is_exact(v) for v in values.values()):
        out["rational"] = {k: rational_str(v) for k, v in values.items()}
    return out


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_solve(args) -> int:
    circles, opts = _load_scene(args)
    exact = opts["mode"] == "exact"
    sol = solve_fourth(*circles, Branch(opts["branch"]), opts["tol"])
    residuals = [
        verify_tangency(sol.circle4, c, opts["tol"]).residual for c in circles
    ]
    out = {
        "class": sol.configuration.value,
        "branch": sol.branch.value,
        "circle4": geometry.to_json(sol.circle4, exact),
        "curvature4": _num(sol.curvature4),
        "r4": _num(sol.radius4),
        "enclosing": sol.enclosing,
        "degeneracy": sol.degeneracy,
        "residuals": [_num(r) for r in residuals],
    }
    _with_rational(out, {"curvature4": sol.curvature4, "r4": sol.radius4}, exact)
    if sol.dbz is not None:
        out["dbz"] = True
        out["point"] = geometry.to_json(sol.dbz.point, exact)
        out["bankoff"] = geometry.to_json(sol.dbz.bankoff, exact)
        out["incircle"] = geometry.to_json(sol.dbz.incircle, exact)
        r1, r2 = (c.radius for c in circles if isinstance(c, geometry.Circle))
        out["xi_curvature"] = _num(xi_substitution_dbz(r1, r2, opts["order"]))
    _dump(out)
    return EXIT_OK


def cmd_classify(args) -> int:
    circles, opts = _load_scene(args)
    _dump({"class": classify(*circles, tol=opts["tol"]).value})
    return EXIT_OK


def cmd_verify(args) -> int:
    circles, opts = _load_scene(args, count=None)
    pairs = []
    ok = True
    for i, j in combinations(range(len(circles)), 2):
        rep = verify_tangency(circles[i], circles[j], opts["tol"])
        ok = ok and rep.tangent
        pairs.append({"pair": [i, j], "kind": rep.kind.value, "residual": _num(rep.residual)})
    _dump({"tangent": ok, "pairs": pairs})
    return EXIT_OK if ok else EXIT_NOT_TANGENT


def _scalar(text: str, exact: bool):
    try:
        return to_exact(text) if exact else float(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_MALFORMED, f"not a number: {text!r}") from exc


def cmd_family(args) -> int:
    exact = (args.mode or "float") == "exact"
    tol = DEFAULT_TOL if args.tol is None else args.tol
    try:
        cfg = ArbelosConfig(_scalar(args.r1, exact), _scalar(args.r2, exact))
    except ValueError as exc:
        raise CliError(EXIT_MALFORMED, str(exc)) from exc
    records, failed = [], False
    for text in args.w:
        w = _scalar(text, exact)
        try:
            m = family_member(w, cfg)
        except ZeroDivisionError:
            failed = True
            records.append({"w": _num(w), "error": "D = 0"})
            continue
        circle = m.circle()
        res = {
            "C1": _num(verify_tangency(circle, cfg.c1, tol).residual),
            "C2": _num(verify_tangency(circle, cfg.c2, tol).residual),
        }
        res["third"] = None if w == 0 or w * w == 1 else _num(
            verify_tangency(circle, ow_circle(1 / w, cfg), tol).residual
        )
        rec = {"w": _num(w), "x4": _num(m.x4), "y4": _num(m.y4), "r4": _num(m.r4), "D": _num(m.D),
               "residuals": res}
        records.append(_with_rational(rec, {"x4": m.x4, "y4": m.y4, "r4": m.r4, "D": m.D}, exact))
    _dump(records)
    return EXIT_NO_SOLUTION if failed else EXIT_OK


def cmd_render(args) -> int:
    target = args.target
    if target in ("fig1", "fig2", "fig3"):
        exact = (args.mode or "exact") == "exact"
        r1 = None if args.r1 is None else _scalar(args.r1, exact)
        r2 = None if args.r2 is None else _scalar(args.r2, exact)
        try:
            elements = figure_elements(target, r1, r2)
        except ValueError as exc:
            raise CliError(EXIT_MALFORMED, str(exc)) from exc
        svg = render_svg(elements, title=target)
    elif target.startswith("fig"):
        raise CliError(EXIT_MALFORMED, f"unknown figure {target!r}")
    else:
        args.scene = target
        circles, opts = _load_scene(args, count=None)
        elements = [Element(f"C{i + 1}", c) for i, c in enumerate(circles)]
        if len(circles) == 3:
            sol = solve_fourth(*circles, Branch(opts["branch"]), opts["tol"])
            elements.append(Element("C4", sol.circle4, "blue"))
            if sol.dbz is not None:
                elements.append(Element("incircle", sol.dbz.incircle, "green"))
        svg = render_svg(elements)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {args.out}: {exc}") from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dbzcircles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scene=True):
        if scene:
            p.add_argument("scene", nargs="?", default="-", help="scene JSON file (default stdin)")
        p.add_argument("--branch", choices=["plus", "minus"])
        p.add_argument("--tol", type=float)
        p.add_argument("--mode", choices=["exact", "float"])
        p.add_argument("--order", type=int)

    for name, fn in (("solve", cmd_solve), ("classify", cmd_classify), ("verify", cmd_verify)):
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("family")
    common(p, scene=False)
    p.add_argument("--r1", required=True)
    p.add_argument("--r2", required=True)
    p.add_argument("--w", nargs="+", required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("render")
    common(p, scene=False)
    p.add_argument("target", help="fig1, fig2, fig3 or a scene JSON file")
    p.add_argument("--out", required=True)
    p.add_argument("--r1")
    p.add_argument("--r2")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotMutuallyTangent as exc:
        print(f"error: not mutually tangent: {exc}", file=sys.stderr)
        return EXIT_NOT_TANGENT
    except (NoRealSolution, UnsupportedConfiguration) as exc:
        print(f"error: no solution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION


if __name__ == "__main__":
    sys.exit(main())
