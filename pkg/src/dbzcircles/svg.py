"""Deterministic SVG output for scenes and the three reference figures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arbelos import ArbelosConfig, dbz_family_extract
from .descartes import Branch, solve_fourth
from .geometry import Circle, GeneralizedCircle, Line, PointCircle
from .numeric import sqrt

POINT_DOT = 0.04  # dot radius for point circles, as a fraction of the view size


@dataclass(frozen=True)
class Element:
    name: str
    shape: GeneralizedCircle
    stroke: str = "black"


def _f(x) -> str:
    s = f"{float(x):.15g}"
    return "0" if s == "-0" else s


def _bbox(elements) -> tuple:
    xs, ys = [], []
    for e in elements:
        g = e.shape
        if isinstance(g, Circle):
            (x, y), r = g.center, g.radius
            xs += [x - r, x + r]
            ys += [y - r, y + r]
        elif isinstance(g, PointCircle):
            xs.append(g.at[0])
            ys.append(g.at[1])
    if not xs:
        xs, ys = [-1, 1], [-1, 1]
    x0, x1, y0, y1 = (float(v) for v in (min(xs), max(xs), min(ys), max(ys)))
    pad = 0.08 * max(x1 - x0, y1 - y0, 1e-9)
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def render_svg(elements, title: str = "") -> str:
    """SVG 1.1 text.  Model coordinates are written unchanged; a y-flip
    transform on the drawing group puts +y up."""
    x0, y0, x1, y1 = _bbox(elements)
    w, h = x1 - x0, y1 - y0
    size = max(w, h)
    stroke_w = size / 400
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="600" height="{_f(600 * h / w)}" viewBox="{_f(x0)} {_f(-y1)} {_f(w)} {_f(h)}">',
    ]
    if title:
        lines.append(f"  <title>{title}</title>")
    lines.append(
        f'  <g transform="scale(1,-1)" fill="none" stroke-width="{_f(stroke_w)}">'
    )
    for e in elements:
        g = e.shape
        if isinstance(g, Circle):
            lines.append(
                f'    <circle id="{e.name}" cx="{_f(g.center[0])}" cy="{_f(g.center[1])}" '
                f'r="{_f(g.radius)}" stroke="{e.stroke}"/>'
            )
        elif isinstance(g, PointCircle):
            lines.append(
                f'    <circle id="{e.name}" class="point" cx="{_f(g.at[0])}" cy="{_f(g.at[1])}" '
                f'r="{_f(POINT_DOT * size / 4)}" fill="{e.stroke}" stroke="none"/>'
            )
        elif isinstance(g, Line):
            nx, ny = (float(v) for v in g.normal)
            px, py = nx * float(g.offset), ny * float(g.offset)
            reach = 4 * size
            lines.append(
                f'    <line id="{e.name}" x1="{_f(px + ny * reach)}" y1="{_f(py - nx * reach)}" '
                f'x2="{_f(px - ny * reach)}" y2="{_f(py + nx * reach)}" stroke="{e.stroke}"/>'
            )
    lines += ["  </g>", "</svg>", ""]
    return "\n".join(lines)


def _line_case(r1, r2, branch: Branch) -> list:
    # C1, C2 resting on y = 0, C1 left of C2
    c1 = Circle((0 * r1, r1), r1)
    c2 = Circle((2 * sqrt(r1 * r2), r2), r2)
    base = Line((0, 1), 0)
    sol = solve_fourth(c1, c2, base, branch)
    return [
        Element("C1", c1),
        Element("C2", c2),
        Element("C3", base),
        Element("C4", sol.circle4, "blue"),
    ]


def figure_elements(name: str, r1=None, r2=None) -> list:
    """Element list for ``fig1`` (plus branch, line case), ``fig2`` (minus
    branch, line case) or ``fig3`` (arbelos with Bankoff circle and incircle)."""
    if name in ("fig1", "fig2"):
        r1 = Fraction(4) if r1 is None else r1
        r2 = Fraction(1) if r2 is None else r2
        if r1 < r2:
            r1, r2 = r2, r1
        return _line_case(r1, r2, Branch.PLUS if name == "fig1" else Branch.MINUS)
    if name == "fig3":
        cfg = ArbelosConfig(Fraction(2) if r1 is None else r1, Fraction(1) if r2 is None else r2)
        ext = dbz_family_extract(cfg)
        return [
            Element("outer", cfg.outer),
            Element("C1", cfg.c1),
            Element("C2", cfg.c2),
            Element("bankoff", ext.bankoff, "red"),
            Element("incircle", ext.incircle, "green"),
            Element("origin", ext.point),
        ]
    raise KeyError(f"unknown figure {name!r} (expected fig1, fig2 or fig3)")


def render_figure(name: str, r1=None, r2=None) -> str:
    return render_svg(figure_elements(name, r1, r2), title=name)
