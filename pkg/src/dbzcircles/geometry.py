"""Generalized circles (circles, lines, point circles) and the tangency oracle.

Lines and point circles both carry curvature 0, following the convention
``1/0 = 0``.  All types are frozen dataclasses; every function here is pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .numeric import (
    DEFAULT_TOL,
    Scalar,
    dbz_inv,
    fmt15,
    is_exact,
    rational_str,
    sqrt,
    to_exact,
)

Point = tuple  # (x, y)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: Scalar

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(
                f"circle radius must be > 0 (got {self.radius!r}); use PointCircle for radius 0"
            )
        object.__setattr__(self, "center", tuple(self.center))


@dataclass(frozen=True)
class Line:
    """The line ``{p : normal . p == offset}``; the normal is normalized on construction."""

    normal: Point
    offset: Scalar

    def __post_init__(self):
        nx, ny = self.normal
        n2 = nx * nx + ny * ny
        if n2 == 0:
            raise ValueError("line normal must be nonzero")
        if n2 != 1:
            n = sqrt(n2)
            object.__setattr__(self, "normal", (nx / n, ny / n))
            object.__setattr__(self, "offset", self.offset / n)
        else:
            object.__setattr__(self, "normal", (nx, ny))

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        dx, dy = q[0] - p[0], q[1] - p[1]
        normal = (-dy, dx)
        return cls(normal, normal[0] * p[0] + normal[1] * p[1])

    def signed_distance(self, p: Point) -> Scalar:
        return self.normal[0] * p[0] + self.normal[1] * p[1] - self.offset


@dataclass(frozen=True)
class PointCircle:
    at: Point

    def __post_init__(self):
        object.__setattr__(self, "at", tuple(self.at))


GeneralizedCircle = Union[Circle, Line, PointCircle]


def curvature(g: GeneralizedCircle) -> Scalar:
    """Unsigned curvature: ``1/r`` for a circle, 0 for lines and point circles."""
    if isinstance(g, Circle):
        return dbz_inv(g.radius)
    return 0


def radius_of(g: GeneralizedCircle) -> Scalar:
    return g.radius if isinstance(g, Circle) else 0


@dataclass(frozen=True)
class CircleEquation:
    """Quadratic form ``A(x^2+y^2) + Bx + Cy + D = 0``."""

    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar

    @property
    def discriminant(self) -> Scalar:
        return self.B * self.B + self.C * self.C - 4 * self.A * self.D

    def scaled(self, k: Scalar) -> "CircleEquation":
        return CircleEquation(k * self.A, k * self.B, k * self.C, k * self.D)

    def __add__(self, other: "CircleEquation") -> "CircleEquation":
        return CircleEquation(
            self.A + other.A, self.B + other.B, self.C + other.C, self.D + other.D
        )

    def __call__(self, x: Scalar, y: Scalar) -> Scalar:
        return self.A * (x * x + y * y) + self.B * x + self.C * y + self.D

    def is_zero(self) -> bool:
        return self.A == 0 and self.B == 0 and self.C == 0 and self.D == 0


def equation_to_circle(e: CircleEquation) -> GeneralizedCircle:
    if e.A == 0:
        if e.B == 0 and e.C == 0:
            raise ValueError("degenerate equation: A, B and C are all zero")
        return Line((e.B, e.C), -e.D)
    disc = e.discriminant
    cx = -e.B / (2 * e.A)
    cy = -e.C / (2 * e.A)
    if is_exact(cx):
        cx, cy = Fraction(cx), Fraction(cy)
    if disc == 0:
        return PointCircle((cx, cy))
    if disc < 0:
        raise ValueError(f"equation has no real points (discriminant {disc!r})")
    return Circle((cx, cy), sqrt(disc) / (2 * abs(e.A)))


def circle_to_equation(g: GeneralizedCircle) -> CircleEquation:
    """Monic embedding (``A = 1`` for circles and points, ``A = 0`` for lines)."""
    if isinstance(g, Line):
        return CircleEquation(0, g.normal[0], g.normal[1], -g.offset)
    if isinstance(g, Circle):
        (x, y), r = g.center, g.radius
    else:
        (x, y), r = g.at, 0
    return CircleEquation(1, -2 * x, -2 * y, x * x + y * y - r * r)


# ---------------------------------------------------------------------------
# tangency oracle
# ---------------------------------------------------------------------------


class TangencyKind(Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"
    NOT_TANGENT = "not_tangent"


@dataclass(frozen=True)
class TangencyReport:
    kind: TangencyKind
    residual: Scalar

    @property
    def tangent(self) -> bool:
        return self.kind is not TangencyKind.NOT_TANGENT


def _dist_residual(d2: Scalar, target: Scalar) -> Scalar:
    """``| sqrt(d2) - target |``, exactly zero when ``d2 == target**2`` with target >= 0."""
    if target >= 0 and d2 == target * target:
        return 0 * d2
    return abs(math.sqrt(float(d2)) - float(target))


def _dist2(p: Point, q: Point) -> Scalar:
    dx, dy = p[0] - q[0], p[1] - q[1]
    return dx * dx + dy * dy


def _report(kind: TangencyKind, residual: Scalar, tol: float) -> TangencyReport:
    if residual < tol:
        return TangencyReport(kind, residual)
    return TangencyReport(TangencyKind.NOT_TANGENT, residual)


def _rank(g: GeneralizedCircle) -> int:
    return {Circle: 0, Line: 1, PointCircle: 2}[type(g)]


def verify_tangency(
    a: GeneralizedCircle, b: GeneralizedCircle, tol: float = DEFAULT_TOL
) -> TangencyReport:
    """Independent numeric tangency predicate.

    Circle pairs are external when the center distance equals the sum of the
    radii and internal when it equals their difference.  A point circle is
    tangent to anything it lies on; two lines are tangent when parallel.
    The residual is the absolute defect of the relevant distance identity.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if _rank(a) > _rank(b):
        a, b = b, a

    if isinstance(a, Circle) and isinstance(b, Circle):
        d2 = _dist2(a.center, b.center)
        ext = _dist_residual(d2, a.radius + b.radius)
        inn = _dist_residual(d2, abs(a.radius - b.radius))
        if inn < ext:
            return _report(TangencyKind.INTERNAL, inn, tol)
        return _report(TangencyKind.EXTERNAL, ext, tol)
    if isinstance(a, Circle) and isinstance(b, Line):
        return _report(TangencyKind.EXTERNAL, abs(abs(b.signed_distance(a.center)) - a.radius), tol)
    if isinstance(a, Circle) and isinstance(b, PointCircle):
        return _report(TangencyKind.EXTERNAL, _dist_residual(_dist2(a.center, b.at), a.radius), tol)
    if isinstance(a, Line) and isinstance(b, Line):
        cross = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0]
        return _report(TangencyKind.EXTERNAL, abs(cross), tol)
    if isinstance(a, Line) and isinstance(b, PointCircle):
        return _report(TangencyKind.EXTERNAL, abs(a.signed_distance(b.at)), tol)
    # two point circles
    return _report(TangencyKind.EXTERNAL, _dist_residual(_dist2(a.at, b.at), 0), tol)


# ---------------------------------------------------------------------------
# JSON encoding
# ---------------------------------------------------------------------------


def _num(x: Scalar) -> float:
    return fmt15(x)


def to_json(g: GeneralizedCircle, exact: bool = False) -> dict:
    """Encode as ``{"kind": ..., ...}``; ``exact`` adds a ``"rational"`` mirror."""
    if isinstance(g, Circle):
        out = {"kind": "circle", "center": [_num(g.center[0]), _num(g.center[1])], "radius": _num(g.radius)}
        fields = {"center": list(g.center), "radius": g.radius}
    elif isinstance(g, Line):
        out = {"kind": "line", "normal": [_num(g.normal[0]), _num(g.normal[1])], "offset": _num(g.offset)}
        fields = {"normal": list(g.normal), "offset": g.offset}
    elif isinstance(g, PointCircle):
        out = {"kind": "point", "at": [_num(g.at[0]), _num(g.at[1])]}
        fields = {"at": list(g.at)}
    else:
        raise TypeError(f"not a generalized circle: {g!r}")
    if exact:
        values = [v for f in fields.values() for v in (f if isinstance(f, list) else [f])]
        if all(is_exact(v) for v in values):
            out["rational"] = {
                k: [rational_str(x) for x in v] if isinstance(v, list) else rational_str(v)
                for k, v in fields.items()
            }
    return out


def from_json(obj: dict, exact: bool = False) -> GeneralizedCircle:
    """Decode the JSON circle encoding.

    With ``exact=True`` every number becomes a Fraction (a ``"rational"``
    mirror, when present, takes precedence over the decimal fields).
    """
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"malformed circle object: {obj!r}")
    src = dict(obj)
    if exact and isinstance(obj.get("rational"), dict):
        src.update(obj["rational"])
    conv = to_exact if exact else float

    def pt(key):
        v = src[key]
        if not isinstance(v, (list, tuple)) or len(v) != 2:
            raise ValueError(f"{key!r} must be a pair of numbers")
        return (conv(v[0]), conv(v[1]))

    kind = obj["kind"]
    try:
        if kind == "circle":
            r = conv(src["radius"])
            if r == 0:
                return PointCircle(pt("center"))
            return Circle(pt("center"), r)
        if kind == "line":
            return Line(pt("normal"), conv(src["offset"]))
        if kind == "point":
            return PointCircle(pt("at"))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed {kind} object: {obj!r}") from exc
    raise ValueError(f"unknown circle kind {kind!r}")
