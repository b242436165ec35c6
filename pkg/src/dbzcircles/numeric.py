"""Scalar helpers shared by every module.

Two coefficient domains are supported: :class:`fractions.Fraction` (exact) and
``float``.  Operations stay exact as long as every square root they meet is a
perfect rational square; otherwise they fall back to floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, float]

DEFAULT_TOL = 1e-9


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def dbz_inv(x: Scalar) -> Scalar:
    """Total reciprocal: ``1/x`` for nonzero ``x`` and ``0`` for ``x == 0``."""
    if x == 0:
        return x * 0
    if is_exact(x):
        return Fraction(1) / x
    return 1.0 / x


def exact_sqrt(x: Rational) -> Fraction | None:
    """Square root of a nonnegative rational, or ``None`` if it is irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    sp, sq = math.isqrt(p), math.isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def sqrt(x: Scalar) -> Scalar:
    """Domain-preserving square root.

    Exact input with a rational root stays exact; anything else goes through
    ``math.sqrt``.  Negative input raises ``ValueError``.
    """
    if x < 0:
        raise ValueError(f"square root of negative value {x!r}")
    if is_exact(x):
        r = exact_sqrt(x)
        if r is not None:
            return r
    return math.sqrt(x)


def to_exact(x) -> Fraction:
    """Parse ints, floats, decimal strings and ``"p/q"`` strings as a Fraction."""
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def fmt15(x: Scalar) -> float:
    """Round to 15 significant digits for serialization."""
    v = float(x)
    if v == 0:
        return 0.0
    return float(f"{v:.15g}")


def rational_str(x: Scalar) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
