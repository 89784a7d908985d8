"""Hankel determinants, Zalcman functionals and closed-form ``H_{3,1}`` expansions.

Everything here only needs ring operations on the coefficients, so exact
rationals and :class:`hankelbounds.polyid.Poly` objects pass through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .coeffs import (
    ClassSpec,
    CoeffVector,
    HarmonicCoeffVector,
    Kind,
    _first_four,
    check_alpha,
)
from .errors import InsufficientCoefficients, UnsupportedFunctional

__all__ = [
    "FunctionalValue",
    "determinant",
    "hankel_matrix",
    "hankel",
    "zalcman",
    "fekete_szego",
    "h31_expansion",
]


@dataclass(frozen=True)
class FunctionalValue:
    value: Any
    magnitude: Any

    @classmethod
    def of(cls, value) -> "FunctionalValue":
        return cls(value, abs(value))


def _seq(a) -> tuple:
    if isinstance(a, CoeffVector):
        return a.a
    if isinstance(a, HarmonicCoeffVector):
        raise TypeError("pass .h or .g of a HarmonicCoeffVector explicitly")
    return tuple(a)


def determinant(m: Sequence[Sequence]):
    """Cofactor expansion along the first row (exact for any commutative ring)."""
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def hankel_matrix(q: int, n: int, a) -> list[list]:
    """``q x q`` matrix ``[a_{n+i+j}]``; ``a`` is indexed from ``a_1``."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be positive")
    seq = _seq(a)
    last = n + 2 * (q - 1)
    if len(seq) < last:
        raise InsufficientCoefficients(f"H_{{{q},{n}}} needs a_1..a_{last}, got {len(seq)}")
    return [[seq[n + i + j - 1] for j in range(q)] for i in range(q)]


def hankel(q: int, n: int, a) -> FunctionalValue:
    """``H_{q,n}`` of the coefficient sequence ``a = (a_1, a_2, ...)``.

    ``a_1`` is taken from the sequence rather than assumed to be 1, so the
    co-analytic part of a harmonic map (``b_1 = 0``) can be passed directly.
    """
    return FunctionalValue.of(determinant(hankel_matrix(q, n, a)))


def zalcman(n: int, a) -> FunctionalValue:
    """``J_n = a_n^2 - a_{2n-1}``."""
    if n < 2:
        raise ValueError("Zalcman functional is defined for n >= 2")
    seq = _seq(a)
    if len(seq) < 2 * n - 1:
        raise InsufficientCoefficients(f"J_{n} needs a_1..a_{2 * n - 1}, got {len(seq)}")
    return FunctionalValue.of(seq[n - 1] ** 2 - seq[2 * n - 2])


def fekete_szego(a, mu=1) -> FunctionalValue:
    """``a_3 - mu a_2^2``; ``mu = 1`` gives ``H_{2,1}``."""
    seq = _seq(a)
    if len(seq) < 3:
        raise InsufficientCoefficients("Fekete-Szego functional needs a_1..a_3")
    return FunctionalValue.of(seq[2] - mu * seq[1] ** 2)


def _h31_starlike(t, p1, p2, p3, p4):
    return Fraction(1, 144) * t ** 2 * (
        -t ** 4 * p1 ** 6 + 3 * t ** 3 * p1 ** 4 * p2 + 8 * t ** 2 * p1 ** 3 * p3
        - 9 * t ** 2 * p1 ** 2 * p2 ** 2 - 18 * t * p1 ** 2 * p4 + 24 * t * p1 * p2 * p3
        - 9 * t * p2 ** 3 + 18 * p2 * p4 - 16 * p3 ** 2)


def _h31_convex(t, p1, p2, p3, p4):
    return Fraction(1, 8640) * t ** 2 * (
        -t ** 4 * p1 ** 6 + 6 * t ** 3 * p1 ** 4 * p2 + 12 * t ** 2 * p1 ** 3 * p3
        - 21 * t ** 2 * p1 ** 2 * p2 ** 2 - 36 * t * p1 ** 2 * p4 + 36 * t * p1 * p2 * p3
        - 4 * t * p2 ** 3 + 72 * p2 * p4 - 60 * p3 ** 2)


def _h31_bounded_turning(t, p1, p2, p3, p4):
    return Fraction(1, 2160) * t ** 2 * (
        t * (-108 * p1 ** 2 * p4 + 180 * p1 * p2 * p3 - 80 * p2 ** 3)
        + 144 * p2 * p4 - 135 * p3 ** 2)


def _h31_harmonic_g(t, p1, p2, p3, p4):
    # co-analytic part of M(alpha): b_1 = 0, b_2 = 1/2, only p_1..p_3 enter
    return Fraction(1, 540) * t * (-2 * t ** 2 * p1 ** 3 - 9 * (p3 - t * p1 * p2))


_EXPANSIONS = {
    Kind.STARLIKE: _h31_starlike,
    Kind.CONVEX: _h31_convex,
    Kind.BOUNDED_TURNING: _h31_bounded_turning,
}


def h31_expansion(spec: ClassSpec, p, part: str = "h") -> FunctionalValue:
    """Evaluate the closed-form ``H_{3,1}`` polynomial of a class directly in ``p``-space.

    For ``HARMONIC_M`` the ``part`` argument selects the analytic (``"h"``,
    same polynomial as the convex class) or co-analytic (``"g"``) determinant.
    """
    check_alpha(spec.kind, spec.alpha)
    t = 1 - spec.alpha
    p4 = _first_four(p)
    if spec.kind is Kind.HARMONIC_M:
        if part == "h":
            return FunctionalValue.of(_h31_convex(t, *p4))
        if part == "g":
            return FunctionalValue.of(_h31_harmonic_g(t, *p4))
        raise UnsupportedFunctional(f"unknown harmonic part {part!r}")
    return FunctionalValue.of(_EXPANSIONS[spec.kind](t, *p4))
