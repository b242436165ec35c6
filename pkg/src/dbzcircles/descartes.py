"""Fourth tangent circle for three mutually tangent generalized circles.

Curvatures of lines and point circles are 0 (``1/0 = 0``), which lets the
Descartes relation

    k4 = k1 + k2 + k3 +- 2 sqrt(k1 k2 + k2 k3 + k3 k1)

cover the line and point cases.  A negative curvature marks a circle that
encloses the others.  The relation only yields a radius; centers are
recovered from the two-distance system against two of the inputs and
disambiguated by the third.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .geometry import (
    Circle,
    GeneralizedCircle,
    Line,
    PointCircle,
    TangencyKind,
    curvature,
    verify_tangency,
)
from .numeric import DEFAULT_TOL, Scalar, dbz_inv, is_exact, sqrt


class NotMutuallyTangent(ValueError):
    pass


class NoRealSolution(ValueError):
    pass


class UnsupportedConfiguration(ValueError):
    """Tangent triple mixing lines and point circles; no closed form is available."""


class Branch(Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PLUS else -1


class ConfigurationClass(Enum):
    THREE_CIRCLES = "ThreeCircles"
    ONE_LINE_TWO_CIRCLES = "OneLineTwoCircles"
    TWO_PARALLEL_LINES_ONE_CIRCLE = "TwoParallelLinesOneCircle"
    ONE_POINT_TWO_CIRCLES = "OnePointTwoCircles"
    TWO_POINTS_ONE_CIRCLE = "TwoPointsOneCircle"
    THREE_POINTS = "ThreePoints"
    THREE_LINES = "ThreeLines"


@dataclass(frozen=True)
class FourthCircleSolution:
    configuration: ConfigurationClass
    branch: Branch
    curvature4: Scalar
    circle4: GeneralizedCircle
    # circle4 encloses the three inputs (negative curvature4)
    enclosing: bool = False
    # "DegenerateEqualRadii", "NoProperSolution", or None
    degeneracy: Optional[str] = None
    # set for ONE_POINT_TWO_CIRCLES: circle4 is the division-by-zero-calculus value
    dbz: Optional[object] = None

    @property
    def radius4(self) -> Scalar:
        return self.circle4.radius if isinstance(self.circle4, Circle) else 0


def descartes_curvature(k1: Scalar, k2: Scalar, k3: Scalar, branch: Branch = Branch.PLUS) -> Scalar:
    radicand = k1 * k2 + k2 * k3 + k3 * k1
    if radicand < 0:
        raise NoRealSolution(
            f"k1k2 + k2k3 + k3k1 = {radicand!r} < 0; curvatures do not form a tangent triple"
        )
    return k1 + k2 + k3 + branch.sign * 2 * sqrt(radicand)


def minus_branch_line_case(r1: Scalar, r2: Scalar) -> tuple:
    """Radius from ``1/sqrt(r4) = 1/sqrt(r2) - 1/sqrt(r1)`` for ``r1 >= r2``.

    Returns ``(r4, flag)``; with ``r1 == r2`` the difference cancels, the radius
    is reported as ``0`` and ``flag`` is ``"DegenerateEqualRadii"`` (the
    solution is the second common tangent line).
    """
    if r1 < r2:
        raise ValueError("expects r1 >= r2")
    inv_sqrt = dbz_inv(sqrt(r2)) - dbz_inv(sqrt(r1))
    if inv_sqrt == 0:
        return inv_sqrt * 0, "DegenerateEqualRadii"
    return dbz_inv(inv_sqrt * inv_sqrt), None


def internal_tangency_check(r1: Scalar, r2: Scalar) -> Scalar:
    """Fourth radius with the enclosing arbelos circle as ``r3 = -(r1 + r2)``.

    With ``r3`` negative the radicand ``1/(r1 r2) - 1/(r2 (r1+r2)) - 1/(r1 (r1+r2))``
    collapses to ``1/(r1 + r2)**2``, so the plus branch stays rational for
    rational radii.
    """
    if not (r1 > 0 and r2 > 0):
        raise ValueError("radii must be positive")
    r3 = -(r1 + r2)
    k1, k2, k3 = dbz_inv(r1), dbz_inv(r2), dbz_inv(r3)
    return dbz_inv(descartes_curvature(k1, k2, k3, Branch.PLUS))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _check_mutual(cs, tol) -> list:
    reports = []
    for a, b in combinations(range(3), 2):
        rep = verify_tangency(cs[a], cs[b], tol)
        if not rep.tangent:
            raise NotMutuallyTangent(
                f"inputs {a + 1} and {b + 1} are not tangent (residual {float(rep.residual):.3g})"
            )
        reports.append(rep)
    return reports


def classify(
    c1: GeneralizedCircle, c2: GeneralizedCircle, c3: GeneralizedCircle, tol: float = DEFAULT_TOL
) -> ConfigurationClass:
    cs = (c1, c2, c3)
    _check_mutual(cs, tol)
    n_circ = sum(isinstance(c, Circle) for c in cs)
    n_line = sum(isinstance(c, Line) for c in cs)
    n_pt = sum(isinstance(c, PointCircle) for c in cs)
    table = {
        (3, 0, 0): ConfigurationClass.THREE_CIRCLES,
        (2, 1, 0): ConfigurationClass.ONE_LINE_TWO_CIRCLES,
        (1, 2, 0): ConfigurationClass.TWO_PARALLEL_LINES_ONE_CIRCLE,
        (2, 0, 1): ConfigurationClass.ONE_POINT_TWO_CIRCLES,
        (1, 0, 2): ConfigurationClass.TWO_POINTS_ONE_CIRCLE,
        (0, 0, 3): ConfigurationClass.THREE_POINTS,
        (0, 3, 0): ConfigurationClass.THREE_LINES,
    }
    try:
        return table[(n_circ, n_line, n_pt)]
    except KeyError:
        raise UnsupportedConfiguration(
            f"{n_circ} circle(s), {n_line} line(s), {n_pt} point(s): mixed line/point triples are not handled"
        ) from None


def signed_curvatures(circles, tol: float = DEFAULT_TOL) -> list:
    """Curvatures of three mutually tangent proper circles, negative for an
    enclosing one (internally tangent to both others and the largest)."""
    ks = [dbz_inv(c.radius) for c in circles]
    for i, c in enumerate(circles):
        others = [circles[j] for j in range(3) if j != i]
        if all(
            verify_tangency(c, o, tol).kind is TangencyKind.INTERNAL and c.radius > o.radius
            for o in others
        ):
            ks[i] = -ks[i]
    return ks


# ---------------------------------------------------------------------------
# center recovery
# ---------------------------------------------------------------------------


def _circle_intersections(p1, d1, p2, d2) -> list:
    """Intersection points of circles (p1, d1) and (p2, d2); domain-preserving."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    L2 = dx * dx + dy * dy
    if L2 == 0:
        return []
    # foot of the radical axis along p1->p2, as a fraction of the p1p2 distance
    t = (d1 * d1 - d2 * d2 + L2) / (2 * L2)
    h2 = d1 * d1 / L2 - t * t
    if h2 < 0:
        if h2 > -1e-12 * max(1, abs(t * t)) and not is_exact(h2):
            h2 = 0.0
        else:
            return []
    h = sqrt(h2)
    fx, fy = p1[0] + t * dx, p1[1] + t * dy
    return [(fx - h * dy, fy + h * dx), (fx + h * dy, fy - h * dx)]


def _signed_radius(k: Scalar) -> Scalar:
    return dbz_inv(k)


def _exactify(p):
    return tuple(Fraction(v) if is_exact(v) else v for v in p)


def _recover_center(anchors, anchor_ks, judge, k4) -> tuple:
    """Center for curvature ``k4`` from two circle anchors; ``judge(p)`` scores
    a candidate against the third input (smaller is better)."""
    R4 = _signed_radius(k4)
    (a1, a2), (ka, kb) = anchors, anchor_ks
    d1 = abs(_signed_radius(ka) + R4)
    d2 = abs(_signed_radius(kb) + R4)
    cands = _circle_intersections(a1.center, d1, a2.center, d2)
    if not cands:
        raise NoRealSolution("two-distance system for the fourth center has no real solution")
    return _exactify(min(cands, key=judge))


def _common_tangent_line(c1: Circle, c2: Circle, c3: Circle, tol) -> Line:
    """External common tangent of c1, c2 that also touches c3."""
    (x1, y1), (x2, y2) = c1.center, c2.center
    dx, dy = x2 - x1, y2 - y1
    L = sqrt(dx * dx + dy * dy)
    ux, uy = dx / L, dy / L
    cos_t = (c2.radius - c1.radius) / L
    sin_t = sqrt(max(1 - cos_t * cos_t, 0 * cos_t))
    best = None
    for s in (1, -1):
        n = (cos_t * ux - s * sin_t * uy, cos_t * uy + s * sin_t * ux)
        line = Line(n, n[0] * x1 + n[1] * y1 - c1.radius)
        res = verify_tangency(line, c3, tol).residual
        if best is None or res < best[0]:
            best = (res, line)
    return best[1]


# ---------------------------------------------------------------------------
# solver
# ---------------------------------------------------------------------------


def _three_circles(cs, branch, tol) -> FourthCircleSolution:
    ks = signed_curvatures(cs, tol)
    k4 = descartes_curvature(*ks, branch)
    scale = max(abs(float(k)) for k in ks)
    if k4 == 0 or (not is_exact(k4) and abs(k4) < 1e-12 * scale):
        line = _common_tangent_line(cs[0], cs[1], cs[2], tol)
        return FourthCircleSolution(
            ConfigurationClass.THREE_CIRCLES, branch, k4 * 0, line, degeneracy="NoProperSolution"
        )
    R3 = _signed_radius(ks[2])
    R4 = _signed_radius(k4)

    def judge(p):
        d = math.dist(p, cs[2].center)
        return abs(d - abs(float(R3 + R4)))

    center = _recover_center((cs[0], cs[1]), (ks[0], ks[1]), judge, k4)
    return FourthCircleSolution(
        ConfigurationClass.THREE_CIRCLES, branch, k4, Circle(center, abs(R4)), enclosing=k4 < 0
    )


def _one_line_two_circles(cs, branch, tol) -> FourthCircleSolution:
    line = next(c for c in cs if isinstance(c, Line))
    c1, c2 = sorted((c for c in cs if isinstance(c, Circle)), key=lambda c: -c.radius)
    k1, k2 = dbz_inv(c1.radius), dbz_inv(c2.radius)
    k4 = descartes_curvature(k1, k2, curvature(line), branch)
    side = 1 if line.signed_distance(c1.center) > 0 else -1
    if k4 == 0 or (not is_exact(k4) and abs(k4) < 1e-12 * float(k1)):
        # equal radii, minus branch: the second common tangent line
        other = Line(line.normal, line.offset + side * 2 * c1.radius)
        return FourthCircleSolution(
            ConfigurationClass.ONE_LINE_TWO_CIRCLES, branch, k4 * 0, other,
            degeneracy="DegenerateEqualRadii",
        )
    r4 = dbz_inv(k4)

    def judge(p):
        return abs(float(line.signed_distance(p)) - side * float(r4))

    center = _recover_center((c1, c2), (k1, k2), judge, k4)
    return FourthCircleSolution(ConfigurationClass.ONE_LINE_TWO_CIRCLES, branch, k4, Circle(center, r4))


def _two_parallel_lines(cs, branch) -> FourthCircleSolution:
    circle = next(c for c in cs if isinstance(c, Circle))
    line = next(c for c in cs if isinstance(c, Line))
    # 1/0 = 0 leaves k4 = k: a congruent circle, slid along the strip by one diameter
    k4 = descartes_curvature(dbz_inv(circle.radius), 0, 0, branch)
    nx, ny = line.normal
    step = branch.sign * 2 * circle.radius
    cx, cy = circle.center
    moved = Circle((cx - ny * step, cy + nx * step), circle.radius)
    return FourthCircleSolution(ConfigurationClass.TWO_PARALLEL_LINES_ONE_CIRCLE, branch, k4, moved)


def _one_point_two_circles(cs, branch, tol) -> FourthCircleSolution:
    from .arbelos import extract_for_circles

    # larger circle plays C1 so the answer does not depend on input order
    circles = sorted(
        (c for c in cs if isinstance(c, Circle)),
        key=lambda c: (-c.radius, c.center),
    )
    if verify_tangency(circles[0], circles[1], tol).kind is not TangencyKind.EXTERNAL:
        raise UnsupportedConfiguration(
            "point circle between internally tangent circles: the arbelos family needs external tangency"
        )
    ext = extract_for_circles(circles[0], circles[1])
    bankoff = ext.bankoff
    return FourthCircleSolution(
        ConfigurationClass.ONE_POINT_TWO_CIRCLES, branch, dbz_inv(bankoff.radius), bankoff, dbz=ext
    )


def solve_fourth(
    c1: GeneralizedCircle,
    c2: GeneralizedCircle,
    c3: GeneralizedCircle,
    branch: Branch = Branch.PLUS,
    tol: float = DEFAULT_TOL,
) -> FourthCircleSolution:
    cls = classify(c1, c2, c3, tol)
    cs = (c1, c2, c3)
    if cls is ConfigurationClass.THREE_CIRCLES:
        sol = _three_circles(cs, branch, tol)
    elif cls is ConfigurationClass.ONE_LINE_TWO_CIRCLES:
        sol = _one_line_two_circles(cs, branch, tol)
    elif cls is ConfigurationClass.TWO_PARALLEL_LINES_ONE_CIRCLE:
        sol = _two_parallel_lines(cs, branch)
    elif cls is ConfigurationClass.ONE_POINT_TWO_CIRCLES:
        return _one_point_two_circles(cs, branch, tol)
    elif cls is ConfigurationClass.TWO_POINTS_ONE_CIRCLE:
        circle = next(c for c in cs if isinstance(c, Circle))
        k4 = descartes_curvature(dbz_inv(circle.radius), 0, 0, branch)
        return FourthCircleSolution(cls, branch, k4, circle)
    elif cls is ConfigurationClass.THREE_POINTS:
        k4 = descartes_curvature(0, 0, 0, branch)
        return FourthCircleSolution(cls, branch, k4, PointCircle(c1.at))
    else:
        # three parallel lines: k4 = 0, reported as the point circle at the
        # origin (the point at infinity is represented by zero)
        k4 = descartes_curvature(0, 0, 0, branch)
        zero = c1.offset * 0
        return FourthCircleSolution(
            cls, branch, k4, PointCircle((zero, zero)), degeneracy="NoProperSolution"
        )

    for i, c in enumerate(cs):
        rep = verify_tangency(sol.circle4, c, tol)
        if not rep.tangent:
            raise NoRealSolution(
                f"recovered fourth circle misses input {i + 1} (residual {float(rep.residual):.3g})"
            )
    return sol


def solution_residuals(sol: FourthCircleSolution, inputs, tol: float = DEFAULT_TOL) -> list:
    return [verify_tangency(sol.circle4, c, tol).residual for c in inputs]
