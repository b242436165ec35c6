"""Fourth tangent circles for circles, lines and point circles, with the
division by zero calculus for the point-circle case."""

from .arbelos import (
    ArbelosConfig,
    DbzExtraction,
    FamilyMember,
    dbz_family_extract,
    family_equation_coeffs,
    family_member,
    ow_circle,
    xi_substitution_dbz,
)
from .descartes import (
    Branch,
    ConfigurationClass,
    FourthCircleSolution,
    NoRealSolution,
    NotMutuallyTangent,
    UnsupportedConfiguration,
    classify,
    descartes_curvature,
    internal_tangency_check,
    minus_branch_line_case,
    solve_fourth,
)
from .geometry import (
    Circle,
    CircleEquation,
    Line,
    PointCircle,
    TangencyKind,
    TangencyReport,
    circle_to_equation,
    curvature,
    equation_to_circle,
    verify_tangency,
)
from .laurent import (
    LaurentSeries,
    dbz_derivative,
    dbz_eval,
    series_add,
    series_mul,
    series_recip,
    series_sqrt,
    shift_divide,
)
from .numeric import DEFAULT_TOL, dbz_inv

__version__ = "0.1.0"
