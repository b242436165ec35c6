import math
import random
from fractions import Fraction as F
from itertools import permutations

import pytest
from scipy.optimize import fsolve

from dbzcircles.descartes import (
    Branch,
    ConfigurationClass,
    NoRealSolution,
    NotMutuallyTangent,
    UnsupportedConfiguration,
    classify,
    descartes_curvature,
    internal_tangency_check,
    minus_branch_line_case,
    signed_curvatures,
    solve_fourth,
)
from dbzcircles.geometry import Circle, Line, PointCircle, verify_tangency
from dbzcircles.arbelos import incircle_radius
from dbzcircles.numeric import exact_sqrt

from gen import enclosed_triple, external_triple, rational_in

S3 = math.sqrt(3)
UNIT_TRIPLE = [Circle((-1, 0), 1), Circle((1, 0), 1), Circle((0, S3), 1)]


def numeric_fourth(circles, guess, signs):
    """Solve |p - p_i| = r + s_i r_i for (x, y, r) with a generic root finder."""

    def eqs(v):
        x, y, r = v
        return [math.hypot(x - c.center[0], y - c.center[1]) - (r + s * c.radius)
                for c, s in zip(circles, signs)]

    return fsolve(eqs, guess, xtol=1e-14)


def test_three_unit_circles_against_numeric_solve():
    inner = numeric_fourth(UNIT_TRIPLE, (0, 0.5, 0.1), (1, 1, 1))
    outer = numeric_fourth(UNIT_TRIPLE, (0, 0.5, 2.0), (-1, -1, -1))
    assert descartes_curvature(1, 1, 1, Branch.PLUS) == pytest.approx(1 / inner[2], rel=1e-10)
    assert descartes_curvature(1, 1, 1, Branch.MINUS) == pytest.approx(-1 / outer[2], rel=1e-10)
    assert descartes_curvature(1, 1, 1, Branch.PLUS) == pytest.approx(6.4641016, abs=1e-7)
    assert -1 / descartes_curvature(1, 1, 1, Branch.MINUS) == pytest.approx(2.1547005, abs=1e-7)


def test_line_case_curvature():
    assert descartes_curvature(1, 1, 0, Branch.PLUS) == 4


def test_negative_radicand():
    with pytest.raises(NoRealSolution):
        descartes_curvature(-1, -1, 1)


def test_solve_three_unit_circles():
    sol = solve_fourth(*UNIT_TRIPLE, Branch.PLUS)
    assert sol.configuration is ConfigurationClass.THREE_CIRCLES
    assert sol.circle4.radius == pytest.approx(1 / (3 + 2 * S3), rel=1e-12)
    for c in UNIT_TRIPLE:
        assert verify_tangency(sol.circle4, c).residual < 1e-9
    outer = solve_fourth(*UNIT_TRIPLE, Branch.MINUS)
    assert outer.enclosing and outer.curvature4 < 0
    assert outer.circle4.radius == pytest.approx(2.1547005383792515, rel=1e-12)


def test_solve_line_case_plus_exact():
    c1, c2 = Circle((F(0), F(4)), F(4)), Circle((F(4), F(1)), F(1))
    sol = solve_fourth(c1, c2, Line((0, 1), 0))
    assert sol.circle4 == Circle((F(8, 3), F(4, 9)), F(4, 9))
    for c in (c1, c2, Line((0, 1), 0)):
        assert verify_tangency(sol.circle4, c).residual == 0


def test_solve_line_case_minus_exact():
    c1, c2 = Circle((F(0), F(4)), F(4)), Circle((F(4), F(1)), F(1))
    sol = solve_fourth(c1, c2, Line((0, 1), 0), Branch.MINUS)
    assert sol.circle4 == Circle((F(8), F(4)), F(4))


@pytest.mark.parametrize("r1, r2, expected", [(F(4), F(1), F(4)), (F(9), F(1), F(9, 4))])
def test_minus_branch_line_case(r1, r2, expected):
    r4, flag = minus_branch_line_case(r1, r2)
    assert r4 == expected and flag is None
    # oracle: place the circles on y = 0 and check the reported radius fits
    s = exact_sqrt(r1 * r2)
    c1, c2 = Circle((F(0), r1), r1), Circle((2 * s, r2), r2)
    x4 = 2 * s + 2 * exact_sqrt(r2 * r4)
    c4 = Circle((x4, r4), r4)
    for c in (c1, c2, Line((0, 1), 0)):
        assert verify_tangency(c4, c).residual < 1e-9


def test_minus_branch_line_case_equal_radii():
    assert minus_branch_line_case(F(1), F(1)) == (0, "DegenerateEqualRadii")
    sol = solve_fourth(Circle((0, 1), 1), Circle((2, 1), 1), Line((0, 1), 0), Branch.MINUS)
    assert sol.degeneracy == "DegenerateEqualRadii" and sol.curvature4 == 0
    assert sol.circle4 == Line((0, 1), 2)


def test_three_concurrent_points():
    p = PointCircle((F(1), F(2)))
    sol = solve_fourth(p, p, p)
    assert sol.configuration is ConfigurationClass.THREE_POINTS
    assert sol.radius4 == 0 and sol.curvature4 == 0 and sol.circle4 == p


@pytest.mark.parametrize(
    "cs, expected",
    [
        ((Circle((0, 1), 1), Circle((2, 1), 1), Line((0, 1), 0)), ConfigurationClass.ONE_LINE_TWO_CIRCLES),
        ((Line((0, 1), 1), Line((0, 1), -1), Circle((0, 0), 1)), ConfigurationClass.TWO_PARALLEL_LINES_ONE_CIRCLE),
        ((PointCircle((0, 0)), Circle((-1, 0), 1), Circle((1, 0), 1)), ConfigurationClass.ONE_POINT_TWO_CIRCLES),
        ((PointCircle((0, 0)), PointCircle((0, 0)), Circle((0, 1), 1)), ConfigurationClass.TWO_POINTS_ONE_CIRCLE),
        ((Line((0, 1), 0), Line((0, 1), 1), Line((0, -1), 7)), ConfigurationClass.THREE_LINES),
        (tuple(UNIT_TRIPLE), ConfigurationClass.THREE_CIRCLES),
    ],
)
def test_classify(cs, expected):
    assert classify(*cs) is expected


def test_classify_rejects_non_tangent():
    with pytest.raises(NotMutuallyTangent):
        classify(Circle((0, 0), 1), Circle((3, 0), 1), Circle((0, 5), 1))
    # non-parallel lines are not tangent
    with pytest.raises(NotMutuallyTangent):
        classify(Line((0, 1), 1), Line((1, 0), 1), Circle((0, 0), 1))


def test_classify_rejects_mixed_line_point():
    with pytest.raises(UnsupportedConfiguration):
        classify(Line((0, 1), 0), Circle((0, 1), 1), PointCircle((0, 0)))


def test_two_parallel_lines_congruent():
    c = Circle((F(3), F(0)), F(2))
    lines = (Line((0, 1), 2), Line((0, 1), -2))
    for b in Branch:
        sol = solve_fourth(*lines, c, b)
        assert sol.circle4.radius == c.radius and sol.curvature4 == F(1, 2)
        assert sol.circle4 != c
        for g in (*lines, c):
            assert verify_tangency(sol.circle4, g).residual == 0


def test_two_points_one_circle_is_the_circle():
    c = Circle((F(0), F(1)), F(1))
    sol = solve_fourth(PointCircle((0, 0)), c, PointCircle((0, 0)))
    assert sol.circle4 == c and sol.configuration is ConfigurationClass.TWO_POINTS_ONE_CIRCLE


def test_three_lines_zero_radius():
    sol = solve_fourth(Line((0, 1), 0), Line((0, 1), 1), Line((0, 1), 2))
    assert sol.radius4 == 0 and sol.curvature4 == 0
    assert isinstance(sol.circle4, PointCircle)


def test_point_with_two_circles_returns_bankoff():
    sol = solve_fourth(PointCircle((0, 0)), Circle((-2, 0), 2), Circle((1, 0), 1))
    assert sol.dbz is not None
    assert sol.circle4.radius == pytest.approx(2 / 3)
    assert sol.dbz.incircle.radius == pytest.approx(6 / 7)


def test_point_case_independent_of_input_order():
    cs = [PointCircle((F(0), F(0))), Circle((F(-2), F(0)), F(2)), Circle((F(1), F(0)), F(1))]
    ref = solve_fourth(*cs)
    for perm in permutations(cs):
        assert solve_fourth(*perm).circle4 == ref.circle4


def test_point_case_rotated_frame():
    # C1 radius 2 and C2 radius 1 touching at (1, 1), axis along (3/5, 4/5)
    e = (F(3, 5), F(4, 5))
    t = (F(1), F(1))
    ca = Circle((t[0] - 2 * e[0], t[1] - 2 * e[1]), F(2))
    cb = Circle((t[0] + e[0], t[1] + e[1]), F(1))
    sol = solve_fourth(ca, cb, PointCircle(t))
    inc = sol.dbz.incircle
    assert inc.radius == F(6, 7)
    assert verify_tangency(inc, ca).residual == 0
    assert verify_tangency(inc, cb).residual == 0
    outer = Circle((t[0] + (1 - 2) * e[0], t[1] + (1 - 2) * e[1]), F(3))
    assert verify_tangency(inc, outer).residual == 0
    assert verify_tangency(sol.circle4, PointCircle(t)).residual == 0


def test_internal_tangency_examples():
    assert internal_tangency_check(F(2), F(1)) == F(6, 7)
    assert internal_tangency_check(F(1), F(1)) == F(2, 3)
    assert internal_tangency_check(F(2), F(2)) == F(4, 3)


def test_internal_tangency_matches_incircle_formula():
    rng = random.Random(11)
    for _ in range(200):
        r1, r2 = rational_in(rng), rational_in(rng)
        assert internal_tangency_check(r1, r2) == incircle_radius(r1, r2)


def test_signed_curvatures_mark_enclosing_circle():
    cs = [Circle((0, 0), 3), Circle((-1, 0), 2), Circle((2, 0), 1)]
    assert signed_curvatures(cs) == [F(-1, 3), F(1, 2), 1]


def test_random_triples_oracle_closure():
    rng = random.Random(5)
    for i in range(100):
        cs = external_triple(rng) if i % 3 else enclosed_triple(rng)
        ks = signed_curvatures(cs)
        k_plus = solve_fourth(*cs, Branch.PLUS).curvature4
        k_minus = solve_fourth(*cs, Branch.MINUS).curvature4
        assert k_plus + k_minus == pytest.approx(2 * sum(ks), abs=1e-12)
        for b in Branch:
            sol = solve_fourth(*cs, b)
            for c in cs:
                assert verify_tangency(sol.circle4, c).residual < 1e-9


def test_permutation_invariance():
    rng = random.Random(9)
    for _ in range(20):
        cs = external_triple(rng)
        ref = solve_fourth(*cs, Branch.PLUS).circle4
        for perm in permutations(cs):
            got = solve_fourth(*perm, Branch.PLUS).circle4
            assert got.radius == pytest.approx(ref.radius, rel=1e-12)
            assert math.dist(got.center, ref.center) < 1e-9


def test_scale_equivariance_exact():
    c1, c2, line = Circle((F(0), F(4)), F(4)), Circle((F(4), F(1)), F(1)), Line((0, 1), 0)
    base = solve_fourth(c1, c2, line)
    for s in (F(1, 3), F(2), F(7, 5)):
        scaled = solve_fourth(
            Circle((c1.center[0] * s, c1.center[1] * s), c1.radius * s),
            Circle((c2.center[0] * s, c2.center[1] * s), c2.radius * s),
            line,
        )
        assert scaled.circle4.radius == base.circle4.radius * s
        assert scaled.curvature4 == base.curvature4 / s


def test_enclosed_minus_branch_negative_curvature_is_enclosing():
    sol = solve_fourth(*UNIT_TRIPLE, Branch.MINUS)
    for c in UNIT_TRIPLE:
        rep = verify_tangency(sol.circle4, c)
        assert rep.kind.value == "internal"


def test_three_circles_line_solution():
    # radii 1, 1, 1/4 on a common line: minus branch gives curvature 0
    cs = [Circle((F(-1), F(1)), F(1)), Circle((F(1), F(1)), F(1)), Circle((F(0), F(1, 4)), F(1, 4))]
    sol = solve_fourth(*cs, Branch.MINUS)
    assert sol.curvature4 == 0 and isinstance(sol.circle4, Line)
    for c in cs:
        assert verify_tangency(sol.circle4, c).residual < 1e-12
