"""Closed-form upper bounds for ``|H_{3,1}|`` and ``|J_n|`` on each class.

Bounds that are rational in ``alpha`` are returned as :class:`fractions.Fraction`
whenever ``alpha`` is exact (``int`` or ``Fraction``).  A ``float`` alpha is
first converted through its shortest decimal repr, so ``0.1`` means ``1/10``.
Literature constants with square roots are plain floats.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .coeffs import ClassSpec, Kind, check_alpha
from .errors import AlphaOutOfRange, UnsupportedFunctional

__all__ = [
    "Functional",
    "H31",
    "H31_H",
    "H31_G",
    "J2",
    "J3",
    "BoundResult",
    "exact_alpha",
    "bound_h31",
    "bound_zalcman",
    "bound_for",
    "reference_bounds",
    "chi",
    "chi_max",
    "alternative_g_bound",
]

Number = Union[int, Fraction, float]


@dataclass(frozen=True)
class Functional:
    """Which coefficient functional: ``h31``, ``h31-h``, ``h31-g`` or Zalcman ``j`` with index ``n``."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in ("h31", "h31-h", "h31-g", "j"):
            raise UnsupportedFunctional(f"unknown functional {self.kind!r}")
        if self.kind == "j" and (self.n is None or self.n < 2):
            raise UnsupportedFunctional("Zalcman functional needs n >= 2")

    @classmethod
    def zalcman(cls, n: int) -> "Functional":
        return cls("j", n)

    @classmethod
    def parse(cls, text: str) -> "Functional":
        """Parse ``h31``, ``h31-h``, ``h31-g``, ``j2``, ``j3`` or ``jn:<n>``."""
        text = text.strip().lower()
        if text in ("h31", "h31-h", "h31-g"):
            return cls(text)
        m = re.fullmatch(r"j(?:n:)?(\d+)", text)
        if m:
            return cls.zalcman(int(m.group(1)))
        raise UnsupportedFunctional(f"cannot parse functional {text!r}")

    @property
    def label(self) -> str:
        return self.kind if self.kind != "j" else f"j{self.n}"

    def __str__(self):
        return self.label


H31 = Functional("h31")
H31_H = Functional("h31-h")
H31_G = Functional("h31-g")
J2 = Functional.zalcman(2)
J3 = Functional.zalcman(3)


@dataclass(frozen=True)
class BoundResult:
    class_spec: ClassSpec | None
    functional: Functional
    value: Any
    source: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"bound must be non-negative, got {self.value}")

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, (int, Fraction))

    def __float__(self):
        return float(self.value)


def exact_alpha(alpha: Number) -> Fraction:
    if isinstance(alpha, float):
        if not math.isfinite(alpha):
            raise AlphaOutOfRange(f"alpha={alpha}")
        return Fraction(repr(alpha))
    return Fraction(alpha)


def _spec(spec: ClassSpec) -> tuple[ClassSpec, Fraction]:
    a = exact_alpha(spec.alpha)
    check_alpha(spec.kind, a)
    return spec, a


def _convex_bound(a: Fraction) -> Fraction:
    return Fraction(1, 540) * (1 - a) ** 2 * (49 - 16 * a)


def _m_h_part_bound(a: Fraction) -> Fraction:
    return Fraction(1, 540) * (1 - a) ** 2 * (15 * a ** 2 - 34 * a + 52)


def bound_h31(spec: ClassSpec):
    """Upper bound for ``|H_{3,1}|``.

    Returns one :class:`BoundResult`, or an ``(h_part, g_part)`` pair for
    ``HARMONIC_M``.  For ``CONVEX`` with ``alpha < 0`` the analytic-class
    formula is not established, and the h-part bound of ``M(alpha)`` (same
    defining inequality) is returned instead.
    """
    spec, a = _spec(spec)
    if spec.kind is Kind.STARLIKE:
        return BoundResult(spec, H31, Fraction(1, 18) * (1 - a) ** 2 * (18 - a), "S*(alpha) H31 bound")
    if spec.kind is Kind.CONVEX:
        if a >= 0:
            return BoundResult(spec, H31, _convex_bound(a), "K(alpha) H31 bound")
        return BoundResult(spec, H31, _m_h_part_bound(a), "M(alpha) h-part H31 bound")
    if spec.kind is Kind.BOUNDED_TURNING:
        value = Fraction(1, 60) * (1 - a) ** 2 * (36 - 20 * a + 5 * abs(1 - 4 * a))
        return BoundResult(spec, H31, value, "R(alpha) H31 bound")
    h_part = BoundResult(spec, H31_H, _m_h_part_bound(a), "M(alpha) h-part H31 bound")
    g_part = BoundResult(spec, H31_G, (1 - a) / 30, "M(alpha) g-part H31 bound")
    return h_part, g_part


def bound_zalcman(spec: ClassSpec, n: int) -> BoundResult:
    spec, a = _spec(spec)
    fn = Functional.zalcman(n)
    t = 1 - a
    if spec.kind is Kind.BOUNDED_TURNING:
        return BoundResult(spec, fn, Fraction(2, 2 * n - 1) * t, "R(alpha) Zalcman bound")
    table = {
        (Kind.STARLIKE, 2): t,
        (Kind.STARLIKE, 3): Fraction(1, 2) * t * (8 - 7 * a),
        (Kind.CONVEX, 2): t / 3,
        (Kind.CONVEX, 3): Fraction(1, 360) * t * (127 - 109 * a),
    }
    try:
        value = table[spec.kind, n]
    except KeyError:
        raise UnsupportedFunctional(f"no Zalcman bound for {spec.kind.value}, n={n}") from None
    return BoundResult(spec, fn, value, f"{spec.kind.value} J{n} bound")


def bound_for(spec: ClassSpec, functional: Functional) -> BoundResult:
    """Single bound for a ``(class, functional)`` pair, as used by the search."""
    if functional.kind == "j":
        return bound_zalcman(spec, functional.n)
    if spec.kind is Kind.HARMONIC_M:
        if functional.kind == "h31":
            raise UnsupportedFunctional("harmonic class needs h31-h or h31-g")
        h_part, g_part = bound_h31(spec)
        return h_part if functional.kind == "h31-h" else g_part
    if functional.kind != "h31":
        raise UnsupportedFunctional(f"{functional} only applies to the harmonic class")
    return bound_h31(spec)


def reference_bounds(name: str, alpha: Number | None = None) -> list[BoundResult]:
    """Earlier literature bounds on ``|H_{3,1}|`` for comparison tables.

    ``name`` is one of ``"A"`` (Babalola 2010), ``"B"`` (Zaprawa 2017),
    ``"C"`` (Bansal et al. 2015, convex of order -1/2) or ``"D"``
    (Vamshee Krishna et al. 2015, bounded turning, needs ``0 <= alpha <= 1/4``).
    """
    key = name.strip().upper()

    def s(kind, a=0):
        return ClassSpec(kind, Fraction(a))

    if key == "A":
        r3 = math.sqrt(3.0)
        return [
            BoundResult(s(Kind.STARLIKE), H31, Fraction(16), "Babalola (2010)"),
            BoundResult(s(Kind.CONVEX), H31, (32 + 33 * r3) / (72 * r3), "Babalola (2010)"),
            BoundResult(s(Kind.BOUNDED_TURNING), H31,
                        (2736 * r3 + 675 * math.sqrt(5.0)) / (4860 * r3), "Babalola (2010)"),
        ]
    if key == "B":
        return [
            BoundResult(s(Kind.STARLIKE), H31, Fraction(1), "Zaprawa (2017)"),
            BoundResult(s(Kind.CONVEX), H31, Fraction(49, 540), "Zaprawa (2017)"),
            BoundResult(s(Kind.BOUNDED_TURNING), H31, Fraction(41, 60), "Zaprawa (2017)"),
        ]
    if key == "C":
        r15 = math.sqrt(15.0)
        return [
            BoundResult(s(Kind.CONVEX, Fraction(-1, 2)), H31, (180 + 69 * r15) / (32 * r15),
                        "Bansal et al. (2015)"),
            BoundResult(s(Kind.BOUNDED_TURNING), H31, Fraction(439, 540), "Bansal et al. (2015)"),
        ]
    if key == "D":
        if alpha is None:
            raise AlphaOutOfRange("reference D needs alpha")
        a = exact_alpha(alpha)
        if not 0 <= a <= Fraction(1, 4):
            raise AlphaOutOfRange(f"reference D holds for 0 <= alpha <= 1/4, got {a}")
        af = float(a)
        value = (1 - af) ** 2 / 3 * (8 * (1 - af) / 9 + 0.25 * ((5 - 4 * af) / 3) ** 1.5 + 0.8)
        return [BoundResult(s(Kind.BOUNDED_TURNING, a), H31, value, "Vamshee Krishna et al. (2015)")]
    raise ValueError(f"unknown reference {name!r}")


def chi(alpha: Number, c):
    """``|8 alpha^2 - 16 alpha - 1| c^3 - 18 c^2 + 72``."""
    k = abs(8 * alpha ** 2 - 16 * alpha - 1)
    return k * c ** 3 - 18 * c ** 2 + 72


def chi_max(alpha: Number) -> tuple[Any, Any]:
    """Maximize :func:`chi` over ``c in [0, 2]`` from its closed candidate set.

    Candidates are the endpoints and the interior root ``12 / k`` of the
    derivative when it falls inside the interval.  Ties go to the smaller ``c``.
    """
    if isinstance(alpha, float):
        alpha = exact_alpha(alpha)
    check_alpha(Kind.HARMONIC_M, alpha)
    k = abs(8 * alpha ** 2 - 16 * alpha - 1)
    candidates = [Fraction(0), Fraction(2)]
    if k > 0 and 12 / Fraction(k) <= 2:
        candidates.append(12 / Fraction(k))
    best_c = min(candidates, key=lambda c: (-chi(alpha, c), c))
    return chi(alpha, best_c), best_c


def alternative_g_bound(alpha: Number) -> Fraction:
    """``(1 - alpha)(5 - 2 alpha)/90``: the weaker g-part bound of the p-space grouping."""
    a = exact_alpha(alpha)
    check_alpha(Kind.HARMONIC_M, a)
    return Fraction(1, 90) * (1 - a) * (5 - 2 * a)
