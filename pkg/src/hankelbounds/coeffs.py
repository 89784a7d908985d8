"""Taylor coefficients of the order-alpha function classes in terms of ``p_1..p_4``.

Each class is tied to a Caratheodory function ``p``:

* starlike ``S*(alpha)``: ``z f'/f = alpha + (1 - alpha) p``
* convex ``K(alpha)``: ``1 + z h''/h' = alpha + (1 - alpha) p``, so ``z h'`` is starlike
  and ``b_k = a_k / k`` (Alexander relation)
* bounded turning ``R(alpha)``: ``g' = alpha + (1 - alpha) p``
* harmonic ``M(alpha)``: ``f = h + conj(g)`` with ``h`` convex of order alpha and
  ``g' = z h'``

The ``_starlike``-style helpers are written against ring operations only, so
they evaluate on complex numbers, :class:`fractions.Fraction` and the exact
polynomials of :mod:`hankelbounds.polyid` alike.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .caratheodory import CaratheodoryCoeffs
from .errors import AlphaOutOfRange, InsufficientCoefficients

__all__ = [
    "Kind",
    "ClassSpec",
    "CoeffVector",
    "HarmonicCoeffVector",
    "check_alpha",
    "starlike_coeffs",
    "convex_coeffs",
    "bounded_turning_coeffs",
    "harmonic_m_coeffs",
    "class_coeffs",
]


class Kind(enum.Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"
    BOUNDED_TURNING = "bounded-turning"
    HARMONIC_M = "harmonic-m"


# (lower, upper): lower <= alpha < upper
ALPHA_RANGE = {
    Kind.STARLIKE: (Fraction(0), Fraction(1)),
    Kind.CONVEX: (Fraction(-1, 2), Fraction(1)),
    Kind.BOUNDED_TURNING: (Fraction(0), Fraction(1)),
    Kind.HARMONIC_M: (Fraction(-1, 2), Fraction(1)),
}


def check_alpha(kind: Kind, alpha) -> None:
    lo, hi = ALPHA_RANGE[kind]
    if not lo <= alpha < hi:
        raise AlphaOutOfRange(f"alpha={alpha} outside [{lo}, {hi}) for {kind.value}")


@dataclass(frozen=True)
class ClassSpec:
    kind: Kind
    alpha: Any = 0

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        check_alpha(self.kind, self.alpha)


@dataclass(frozen=True)
class CoeffVector:
    """Normalized coefficients ``(a_1, ..., a_5)`` with ``a_1 = 1``."""

    a: tuple

    def __post_init__(self):
        if len(self.a) != 5:
            raise ValueError("CoeffVector holds exactly a_1..a_5")
        if self.a[0] != 1:
            raise ValueError("a_1 must equal 1")

    def coeff(self, k: int):
        return self.a[k - 1]


@dataclass(frozen=True)
class HarmonicCoeffVector:
    """Analytic part ``h`` and co-analytic coefficients ``(b_1, ..., b_5)`` of ``g``."""

    h: CoeffVector
    g: tuple

    def __post_init__(self):
        if len(self.g) != 5:
            raise ValueError("g holds exactly b_1..b_5")


def _first_four(p) -> tuple:
    vals = tuple(p.p if isinstance(p, CaratheodoryCoeffs) else p)
    if len(vals) < 4:
        raise InsufficientCoefficients(f"need p_1..p_4, got {len(vals)} coefficients")
    return vals[:4]


# ``q(num, den)`` builds the rational constants: Fraction keeps exact inputs
# exact, operator.truediv is the fast path for floating-point search.

def _starlike(t, p1, p2, p3, p4, q=Fraction):
    a2 = t * p1
    a3 = q(1, 2) * t * (t * p1 ** 2 + p2)
    a4 = q(1, 6) * t * (t ** 2 * p1 ** 3 + 3 * t * p1 * p2 + 2 * p3)
    a5 = q(1, 24) * t * (t ** 3 * p1 ** 4 + 6 * t ** 2 * p1 ** 2 * p2
                         + 8 * t * p1 * p3 + 3 * t * p2 ** 2 + 6 * p4)
    return a2, a3, a4, a5


def _convex(t, p1, p2, p3, p4, q=Fraction):
    a2, a3, a4, a5 = _starlike(t, p1, p2, p3, p4, q)
    return q(1, 2) * a2, q(1, 3) * a3, q(1, 4) * a4, q(1, 5) * a5


def _bounded_turning(t, p1, p2, p3, p4, q=Fraction):
    # (k + 1) c_{k+1} = (1 - alpha) p_k
    return q(1, 2) * t * p1, q(1, 3) * t * p2, q(1, 4) * t * p3, q(1, 5) * t * p4


def _harmonic_g(h_coeffs, q=Fraction):
    # b_1 = 0 and (k + 1) b_{k+1} = k a_k with a_1 = 1
    a2, a3, a4, _ = h_coeffs
    return 0, q(1, 2), q(2, 3) * a2, q(3, 4) * a3, q(4, 5) * a4


def starlike_coeffs(alpha, p) -> CoeffVector:
    check_alpha(Kind.STARLIKE, alpha)
    return CoeffVector((1,) + _starlike(1 - alpha, *_first_four(p)))


def convex_coeffs(alpha, p) -> CoeffVector:
    check_alpha(Kind.CONVEX, alpha)
    return CoeffVector((1,) + _convex(1 - alpha, *_first_four(p)))


def bounded_turning_coeffs(alpha, p) -> CoeffVector:
    check_alpha(Kind.BOUNDED_TURNING, alpha)
    return CoeffVector((1,) + _bounded_turning(1 - alpha, *_first_four(p)))


def harmonic_m_coeffs(alpha, p) -> HarmonicCoeffVector:
    check_alpha(Kind.HARMONIC_M, alpha)
    h = _convex(1 - alpha, *_first_four(p))
    return HarmonicCoeffVector(CoeffVector((1,) + h), _harmonic_g(h))


_MAPS = {
    Kind.STARLIKE: starlike_coeffs,
    Kind.CONVEX: convex_coeffs,
    Kind.BOUNDED_TURNING: bounded_turning_coeffs,
    Kind.HARMONIC_M: harmonic_m_coeffs,
}


def class_coeffs(spec: ClassSpec, p: Sequence | CaratheodoryCoeffs):
    """Dispatch to the coefficient map of ``spec.kind``."""
    return _MAPS[spec.kind](spec.alpha, p)
