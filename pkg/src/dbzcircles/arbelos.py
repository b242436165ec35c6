"""Point circle between two touching circles: the arbelos family.

Frame: ``C1`` is centered at ``(-r1, 0)``, ``C2`` at ``(r2, 0)``, touching at
the origin.  Circles touching both are parameterized by ``z`` (``ow_circle``);
with ``z = 1/w`` the third circle shrinks to the origin at ``w = 0``, where no
classical fourth tangent circle exists.  The division by zero calculus applied
to the family of fourth circles at ``w = 0`` yields three loci instead: the
origin, the Bankoff circle and the incircle of the arbelos.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geometry import Circle, CircleEquation, GeneralizedCircle, PointCircle, equation_to_circle
from .laurent import LaurentSeries, dbz_eval, series_add, series_sqrt, shift_divide
from .numeric import Scalar, dbz_inv, exact_sqrt, is_exact, sqrt


@dataclass(frozen=True)
class ArbelosConfig:
    r1: Scalar
    r2: Scalar

    def __post_init__(self):
        if not (self.r1 > 0 and self.r2 > 0):
            raise ValueError("arbelos radii must be positive")

    @property
    def s(self) -> Scalar:
        """``sqrt(r1 r2)``; exact when ``r1 r2`` is a rational square."""
        return sqrt(self.r1 * self.r2)

    @property
    def c1(self) -> Circle:
        return Circle((-self.r1, 0 * self.r1), self.r1)

    @property
    def c2(self) -> Circle:
        return Circle((self.r2, 0 * self.r2), self.r2)

    @property
    def outer(self) -> Circle:
        return Circle((self.r2 - self.r1, 0 * self.r1), self.r1 + self.r2)

    def v(self, z: Scalar) -> tuple:
        """The point ``V_z = (0, 2 sqrt(r1 r2) / z)``."""
        return (0 * self.r1, 2 * self.s / z)


def _div(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def ow_circle(z: Scalar, cfg: ArbelosConfig) -> Circle:
    """Circle through ``V_{z-1}`` and ``V_{z+1}`` touching ``C1`` and ``C2``."""
    q = z * z - 1
    if q == 0:
        raise ValueError("z = +-1: the family degenerates to a tangent line")
    center = (_div(cfg.r1 - cfg.r2, q), _div(2 * z * cfg.s, q))
    return Circle(center, _div(cfg.r1 + cfg.r2, abs(q)))


@dataclass(frozen=True)
class FamilyMember:
    w: Scalar
    x4: Scalar
    y4: Scalar
    r4: Scalar
    D: Scalar

    def circle(self) -> GeneralizedCircle:
        """The member as a circle; ``r4 < 0`` (``D < 0``) only flips orientation."""
        if self.r4 == 0:
            return PointCircle((self.x4, self.y4))
        return Circle((self.x4, self.y4), abs(self.r4))

    def equation(self) -> CircleEquation:
        """Monic ``(x-x4)^2 + (y-y4)^2 - r4^2``."""
        return CircleEquation(
            1, -2 * self.x4, -2 * self.y4, self.x4**2 + self.y4**2 - self.r4**2
        )


def family_D(w: Scalar, cfg: ArbelosConfig) -> Scalar:
    r1, r2, s = cfg.r1, cfg.r2, cfg.s
    return r1 * r2 + 2 * s * (r1 + r2) * w + (r1 * r1 + r1 * r2 + r2 * r2) * w * w


def family_member(w: Scalar, cfg: ArbelosConfig) -> FamilyMember:
    """Fourth circle touching ``C1``, ``C2`` and ``ow_circle(1/w)``."""
    r1, r2, s = cfg.r1, cfg.r2, cfg.s
    D = family_D(w, cfg)
    if D == 0:
        raise ZeroDivisionError(f"D(w) = 0 at w = {w!r}")
    x4 = _div(r1 * r2 * (r1 - r2) * w * w, D)
    y4 = _div(2 * r1 * r2 * (s + (r1 + r2) * w) * w, D)
    r4 = _div(r1 * r2 * (r1 + r2) * w * w, D)
    return FamilyMember(w, x4, y4, r4, D)


def family_equation_coeffs(cfg: ArbelosConfig) -> tuple:
    """``(f0, f1, f2)`` with ``f0 + f1 w + f2 w^2 = D(w) * member equation``."""
    r1, r2, s = cfg.r1, cfg.r2, cfg.s
    p = r1 * r2
    f0 = CircleEquation(p, 0 * p, 0 * p, 0 * p)
    f1 = CircleEquation(2 * s * (r1 + r2), 0 * p, -4 * s * p, 0 * p)
    f2 = CircleEquation(r1 * r1 + p + r2 * r2, 2 * p * (r2 - r1), -4 * p * (r1 + r2), 4 * p * p)
    return f0, f1, f2


def _rescaled_coeffs(cfg: ArbelosConfig) -> tuple:
    """Coefficients in ``t = sqrt(r1 r2) w``: ``(f0, f1/s, f2/s^2)``.

    Same loci as :func:`family_equation_coeffs`, but rational whenever r1, r2
    are, so the extraction stays exact without a square root of ``r1 r2``.
    """
    r1, r2 = cfg.r1, cfg.r2
    p = r1 * r2
    g0 = CircleEquation(p, 0 * p, 0 * p, 0 * p)
    g1 = CircleEquation(2 * (r1 + r2), 0 * p, -4 * p, 0 * p)
    g2 = CircleEquation(
        _div(r1 * r1 + p + r2 * r2, p), 2 * (r2 - r1), -4 * (r1 + r2), 4 * p
    )
    return g0, g1, g2


def _cascade(coeffs: Iterable[CircleEquation]) -> list:
    """Apply the division by zero calculus at ``w = 0`` to ``sum f_k w^k``.

    Each of A, B, C, D is carried as its own series in ``w``; the k-th
    locus is ``C_0`` of the identity after dividing by ``w^k``.
    """
    coeffs = list(coeffs)
    per_field = [
        LaurentSeries([getattr(f, name) for f in coeffs], 0, None)
        for name in ("A", "B", "C", "D")
    ]
    out = []
    for k in range(len(coeffs)):
        vals = [dbz_eval(shift_divide(series, k)) for series in per_field]
        out.append(CircleEquation(*vals))
    return out


@dataclass(frozen=True)
class DbzExtraction:
    point: GeneralizedCircle
    bankoff: Circle
    incircle: Circle
    equations: tuple = ()


def dbz_family_extract(cfg: ArbelosConfig) -> DbzExtraction:
    """Point circle, Bankoff circle and incircle from the ``w = 0`` cascade."""
    if is_exact(cfg.r1) and is_exact(cfg.r2) and exact_sqrt(cfg.r1 * cfg.r2) is None:
        coeffs = _rescaled_coeffs(cfg)
    else:
        coeffs = family_equation_coeffs(cfg)
    eqs = _cascade(coeffs)
    point, bankoff, incircle = (equation_to_circle(e) for e in eqs)
    return DbzExtraction(point, bankoff, incircle, tuple(eqs))


def bankoff_radius(r1: Scalar, r2: Scalar) -> Scalar:
    return _div(r1 * r2, r1 + r2)


def incircle_radius(r1: Scalar, r2: Scalar) -> Scalar:
    return _div(r1 * r2 * (r1 + r2), r1 * r1 + r1 * r2 + r2 * r2)


def xi_series(r1: Scalar, r2: Scalar, order: int = 8, sign: int = 1) -> LaurentSeries:
    """Laurent expansion in ``xi = sqrt(r3)`` of the Descartes right-hand side

        1/r1 + 1/r2 + 1/xi^2 +- (2/xi) sqrt(xi^2/(r1 r2) + 1/r1 + 1/r2)
    """
    if order < 1:
        raise ValueError("order must be >= 1 for the expansion to reach the constant term")
    inv1, inv2 = dbz_inv(r1), dbz_inv(r2)
    c = inv1 + inv2
    if is_exact(c) and exact_sqrt(c) is None:
        c = float(c)
        inv1, inv2 = float(inv1), float(inv2)
    radicand = LaurentSeries.from_terms({0: c, 2: inv1 * inv2})
    root = series_sqrt(radicand, order)
    odd = shift_divide(root, 1) * (2 * sign)
    base = LaurentSeries.from_terms({0: c, -2: 1 + 0 * c})
    return series_add(base, odd)


def xi_substitution_dbz(r1: Scalar, r2: Scalar, order: int = 8) -> Scalar:
    """``1/r4`` at ``r3 = 0`` by the division by zero calculus (either sign)."""
    return dbz_eval(xi_series(r1, r2, order))


def extract_for_circles(ca: Circle, cb: Circle) -> DbzExtraction:
    """Run :func:`dbz_family_extract` for two externally touching circles in
    arbitrary position; ``ca`` plays ``C1``.  Results are mapped back from the
    arbelos frame by the rigid motion taking the origin to the touching point
    and the x-axis to the direction from ``ca`` to ``cb``."""
    (xa, ya), (xb, yb) = ca.center, cb.center
    L = ca.radius + cb.radius
    ex, ey = _div(xb - xa, L), _div(yb - ya, L)
    tx, ty = xa + ca.radius * ex, ya + ca.radius * ey

    def to_world(p):
        x, y = p
        return (tx + x * ex - y * ey, ty + x * ey + y * ex)

    ext = dbz_family_extract(ArbelosConfig(ca.radius, cb.radius))
    return DbzExtraction(
        PointCircle(to_world(ext.point.at)),
        Circle(to_world(ext.bankoff.center), ext.bankoff.radius),
        Circle(to_world(ext.incircle.center), ext.incircle.radius),
        ext.equations,
    )
