"""Truncated Laurent series and the division by zero calculus.

A series is stored as a coefficient table starting at exponent ``n_min``
together with a truncation bound ``order``: coefficients are known for every
exponent ``<= order`` and unknown above it (an ``O(w^(order+1))`` tail).
``order=None`` marks an exact Laurent polynomial.  Coefficients below
``n_min`` are zero by construction.

The value of a function at its isolated singular point is, by definition of
the calculus, the constant coefficient ``C_0`` of its Laurent expansion
there; :func:`dbz_eval` implements that, and :func:`dbz_derivative` extends it
to derivatives.
"""
from __future__ import annotations

import math
import re
import warnings
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import exact_sqrt, is_exact

DEFAULT_ORDER = 8
FLOAT_ZERO_RTOL = 1e-14
CANCELLATION_LIMIT = 1e12


class CancellationWarning(RuntimeWarning):
    """A float coefficient was produced by catastrophic cancellation."""


class LaurentSeries:
    __slots__ = ("coeffs", "n_min", "order", "center")

    def __init__(
        self,
        coeffs: Sequence,
        n_min: int = 0,
        order: int | None = None,
        center=0,
    ):
        coeffs = list(coeffs)
        if order is not None:
            keep = order - n_min + 1
            coeffs = coeffs[: max(keep, 0)]
            coeffs += [0] * (keep - len(coeffs))
        if coeffs and not all(is_exact(c) for c in coeffs):
            scale = max(abs(c) for c in coeffs)
            coeffs = [0.0 if abs(c) <= FLOAT_ZERO_RTOL * scale else float(c) for c in coeffs]
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        n_min += lead
        if order is None:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        if not coeffs:
            n_min = 0 if order is None else order + 1
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "n_min", n_min)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "center", center)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, c, n: int, center=0) -> "LaurentSeries":
        return cls([c], n, None, center)

    @classmethod
    def from_terms(cls, terms: dict, order: int | None = None, center=0) -> "LaurentSeries":
        """Build from ``{exponent: coefficient}``."""
        if not terms:
            return cls([], 0, order, center)
        lo = min(terms)
        hi = max(terms) if order is None else order
        return cls([terms.get(n, 0) for n in range(lo, hi + 1)], lo, order, center)

    # -- queries ---------------------------------------------------------------

    @property
    def exact(self) -> bool:
        """No truncation tail."""
        return self.order is None

    @property
    def n_max(self) -> int:
        if self.order is not None:
            return self.order
        return self.n_min + len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if self.order is not None and n > self.order:
            raise IndexError(f"coefficient {n} lies beyond the truncation order {self.order}")
        i = n - self.n_min
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict:
        return {self.n_min + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.terms() == other.terms()
            and self.order == other.order
            and self.center == other.center
        )

    def __hash__(self):
        return hash((tuple(sorted(self.terms().items())), self.order, self.center))

    def __call__(self, w):
        """Evaluate the stored terms at offset ``w`` from the center (``w != 0``)."""
        return sum(c * w**n for n, c in self.terms().items())

    def truncate(self, order: int) -> "LaurentSeries":
        if self.order is not None:
            order = min(order, self.order)
        return LaurentSeries(self.coeffs, self.n_min, order, self.center)

    # -- arithmetic sugar ------------------------------------------------------

    def __add__(self, other):
        return series_add(self, _coerce(other, self))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.n_min, self.order, self.center)

    def __sub__(self, other):
        return series_add(self, -_coerce(other, self))

    def __rsub__(self, other):
        return series_add(_coerce(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        return LaurentSeries([other * c for c in self.coeffs], self.n_min, self.order, self.center)

    __rmul__ = __mul__

    # -- text / json -----------------------------------------------------------

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentSeries({to_text(self)!r})"


def _coerce(x, like: LaurentSeries) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries([x], 0, None, like.center)


def _check_centers(p: LaurentSeries, q: LaurentSeries) -> None:
    if p.center != q.center:
        raise ValueError(f"series centers differ: {p.center!r} vs {q.center!r}")


def _min_order(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _flag_cancellation(a, b, s) -> None:
    if is_exact(s) or s == 0:
        return
    cond = (abs(a) + abs(b)) / abs(s)
    if cond > CANCELLATION_LIMIT:
        warnings.warn(
            f"catastrophic cancellation in series coefficient (condition {cond:.3g})",
            CancellationWarning,
            stacklevel=3,
        )


def series_add(p: LaurentSeries, q: LaurentSeries) -> LaurentSeries:
    _check_centers(p, q)
    order = _min_order(p.order, q.order)
    hi = max(p.n_min + len(p.coeffs), q.n_min + len(q.coeffs)) - 1
    if order is not None:
        hi = order
    lo = min(p.n_min, q.n_min)
    out = []
    for n in range(lo, hi + 1):
        a = p.coeffs[n - p.n_min] if 0 <= n - p.n_min < len(p.coeffs) else 0
        b = q.coeffs[n - q.n_min] if 0 <= n - q.n_min < len(q.coeffs) else 0
        s = a + b
        _flag_cancellation(a, b, s)
        out.append(s)
    return LaurentSeries(out, lo, order, p.center)


def series_mul(p: LaurentSeries, q: LaurentSeries) -> LaurentSeries:
    """Cauchy product, truncated to the window both factors determine."""
    _check_centers(p, q)
    lo = p.n_min + q.n_min
    order = _min_order(
        None if p.order is None else p.order + q.n_min,
        None if q.order is None else q.order + p.n_min,
    )
    if p.is_zero() or q.is_zero():
        return LaurentSeries([], lo, order, p.center)
    length = len(p.coeffs) + len(q.coeffs) - 1
    if order is not None:
        length = min(length, order - lo + 1)
    out = [0] * max(length, 0)
    for i, a in enumerate(p.coeffs):
        if i >= len(out):
            break
        for j, b in enumerate(q.coeffs):
            if i + j >= len(out):
                break
            out[i + j] += a * b
    return LaurentSeries(out, lo, order, p.center)


def _relative_coeffs(p: LaurentSeries, count: int) -> list:
    """First ``count`` coefficients starting at the leading one; zeros beyond the table."""
    if p.order is not None and p.n_min + count - 1 > p.order:
        raise ValueError(
            f"series is only known up to w^{p.order}; {count} terms past w^{p.n_min} requested"
        )
    cs = list(p.coeffs[:count])
    return cs + [0] * (count - len(cs))


def series_recip(p: LaurentSeries, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Reciprocal ``q`` with ``p*q = 1 + O(w^(order+1))``.

    ``order`` counts the terms kept after the leading one, so ``q`` spans
    exponents ``-p.n_min .. -p.n_min + order``.
    """
    if p.is_zero():
        raise ZeroDivisionError("reciprocal of the zero series")
    if order < 0:
        raise ValueError("order must be >= 0")
    a = _relative_coeffs(p, order + 1)
    inv0 = Fraction(1) / a[0] if is_exact(a[0]) else 1.0 / a[0]
    b = [inv0]
    for k in range(1, order + 1):
        acc = sum(a[j] * b[k - j] for j in range(1, k + 1))
        b.append(-inv0 * acc)
    return LaurentSeries(b, -p.n_min, -p.n_min + order, p.center)


def series_sqrt(p: LaurentSeries, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Principal square root ``q`` (positive leading coefficient) with ``q*q = p``
    through ``order`` terms past the leading one."""
    if p.is_zero():
        raise ValueError("square root of the zero series")
    if p.n_min % 2:
        raise ValueError(f"leading exponent {p.n_min} is odd; no Laurent square root")
    if order < 0:
        raise ValueError("order must be >= 0")
    a = _relative_coeffs(p, order + 1)
    if a[0] < 0:
        raise ValueError(f"leading coefficient {a[0]!r} is negative")
    if is_exact(a[0]):
        b0 = exact_sqrt(a[0])
        if b0 is None:
            raise ValueError(f"leading coefficient {a[0]} is not a rational square")
    else:
        b0 = math.sqrt(a[0])
    b = [b0]
    for k in range(1, order + 1):
        acc = sum(b[j] * b[k - j] for j in range(1, k))
        b.append((a[k] - acc) / (2 * b0))
    return LaurentSeries(b, p.n_min // 2, p.n_min // 2 + order, p.center)


def shift_divide(p: LaurentSeries, k: int) -> LaurentSeries:
    """Divide by ``(z - a)^k``: every exponent drops by ``k``."""
    order = None if p.order is None else p.order - k
    return LaurentSeries(p.coeffs, p.n_min - k, order, p.center)


def dbz_eval(p: LaurentSeries):
    """Value at the center under the division by zero calculus: ``C_0``."""
    if p.order is not None and p.order < 0:
        raise ValueError(
            f"truncation order {p.order} does not reach the constant term; raise the order"
        )
    return p[0]


def dbz_derivative(p: LaurentSeries, k: int):
    """``k``-th derivative at the center: ``k! * C_k``."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if p.order is not None and p.order < k:
        raise ValueError(f"truncation order {p.order} is below the requested derivative {k}")
    return math.factorial(k) * p[k]


# ---------------------------------------------------------------------------
# text and JSON forms
# ---------------------------------------------------------------------------


def _coef_str(c) -> str:
    if is_exact(c):
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(float(c))


def to_text(p: LaurentSeries, var: str = "w") -> str:
    """``"C_n*w^n + ..."`` with an ``O(w^k)`` tail for truncated series."""
    parts = [f"{_coef_str(c)}*{var}^{n}" for n, c in sorted(p.terms().items())]
    if p.order is not None:
        parts.append(f"O({var}^{p.order + 1})")
    return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^\s*([^*\s]+)\s*\*\s*(\w+)\^(-?\d+)\s*$")
_TAIL = re.compile(r"^\s*O\(\s*\w+\^(-?\d+)\s*\)\s*$")


def _parse_coef(s: str, exact: bool):
    if exact:
        return Fraction(s)
    try:
        return int(s) if re.fullmatch(r"-?\d+", s) else float(s)
    except ValueError:
        return float(Fraction(s))


def from_text(text: str, exact: bool = True, center=0) -> LaurentSeries:
    text = text.strip()
    if text == "0":
        return LaurentSeries([], 0, None, center)
    terms: dict = {}
    order = None
    for chunk in re.split(r"\s\+\s", text):
        m = _TAIL.match(chunk)
        if m:
            order = int(m.group(1)) - 1
            continue
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"cannot parse series term {chunk!r}")
        n = int(m.group(3))
        terms[n] = terms.get(n, 0) + _parse_coef(m.group(1), exact)
    return LaurentSeries.from_terms(terms, order, center)


def to_json(p: LaurentSeries) -> list:
    out = []
    for n, c in sorted(p.terms().items()):
        item = {"n": n, "c": float(c)}
        if is_exact(c) and Fraction(c).denominator != 1:
            item["rational"] = _coef_str(c)
        elif is_exact(c):
            item["c"] = int(c)
        out.append(item)
    return out


def from_json(items: Iterable[dict], order: int | None = None, exact: bool = True, center=0) -> LaurentSeries:
    terms = {}
    for item in items:
        c = item.get("rational", item["c"]) if exact else item["c"]
        terms[int(item["n"])] = Fraction(c) if exact else c
    return LaurentSeries.from_terms(terms, order, center)
