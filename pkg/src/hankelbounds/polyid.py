"""Exact multivariate polynomials over the rationals, and the identity registry.

A :class:`Poly` lives in a fixed, ordered symbol universe and maps exponent
tuples to :class:`fractions.Fraction` coefficients.  Zero coefficients are
never stored, so a polynomial is zero iff it has no terms.

The registry pairs a left-hand side built from definitions (coefficient maps
composed into a determinant or a Zalcman functional) with a right-hand side
transcribed from a hand-derived expansion or decomposition.  Both sides are plain
functions of a symbol environment, so they can be evaluated on :class:`Poly`
symbols for the exact residual and on random rationals as an independent
pointwise check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Mapping

from .coeffs import _bounded_turning, _convex, _harmonic_g, _starlike
from .errors import SymbolMismatch
from .functionals import (
    _h31_bounded_turning,
    _h31_convex,
    _h31_harmonic_g,
    _h31_starlike,
    determinant,
)

__all__ = [
    "Poly",
    "P_SYMBOLS",
    "X_SYMBOLS",
    "symbols",
    "Identity",
    "IdentityReport",
    "REGISTRY",
    "identity_names",
    "verify_identity",
    "verify_all",
    "alexander_convention_report",
]

P_SYMBOLS = ("p1", "p2", "p3", "p4", "alpha")
# x_bar stands in for conj(x), so |x|^2 = x * x_bar stays polynomial
X_SYMBOLS = P_SYMBOLS + ("x", "x_bar", "z", "z_bar")


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, float):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class Poly:
    """Polynomial with exact rational coefficients in a fixed symbol universe."""

    __slots__ = ("symbols", "_terms")

    def __init__(self, symbols: tuple[str, ...] = P_SYMBOLS, terms: Mapping | None = None):
        self.symbols = tuple(symbols)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.symbols):
                raise SymbolMismatch(f"exponent vector {exps} does not match {self.symbols}")
            c = _coerce_scalar(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self._terms = {e: c for e, c in clean.items() if c}

    # -- construction --------------------------------------------------
    @classmethod
    def const(cls, c, symbols=P_SYMBOLS) -> "Poly":
        return cls(symbols, {(0,) * len(symbols): c})

    @classmethod
    def var(cls, name: str, symbols=P_SYMBOLS) -> "Poly":
        if name not in symbols:
            raise SymbolMismatch(f"{name!r} is not in {symbols}")
        exps = tuple(int(s == name) for s in symbols)
        return cls(symbols, {exps: 1})

    def extend(self, symbols: tuple[str, ...]) -> "Poly":
        """Embed into a larger universe that contains all current symbols."""
        missing = [s for s in self.symbols if s not in symbols]
        if missing:
            raise SymbolMismatch(f"{missing} not in target universe {symbols}")
        idx = [self.symbols.index(s) if s in self.symbols else None for s in symbols]
        terms = {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self._terms.items()}
        return Poly(symbols, terms)

    # -- inspection ----------------------------------------------------
    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order: total degree descending, then lexicographic."""
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def coeff(self, **powers) -> Fraction:
        exps = tuple(powers.get(s, 0) for s in self.symbols)
        return self._terms.get(exps, Fraction(0))

    # -- arithmetic ----------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.symbols != self.symbols:
                raise SymbolMismatch(f"{self.symbols} vs {other.symbols}")
            return other
        return Poly.const(_coerce_scalar(other), self.symbols)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.symbols, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.symbols, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = _coerce_scalar(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        other = self._lift(other)
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.symbols, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            c = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.const(1, self.symbols)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = _coerce_scalar(c)
        return Poly(self.symbols, {e: v * c for e, v in self._terms.items()})

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except (TypeError, SymbolMismatch):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.symbols, frozenset(self._terms.items())))

    # -- substitution / evaluation --------------------------------------
    def substitute(self, name: str, value) -> "Poly":
        """Replace symbol ``name`` by ``value`` (a Poly in the same universe or a scalar)."""
        if name not in self.symbols:
            raise SymbolMismatch(f"{name!r} is not in {self.symbols}")
        value = self._lift(value)
        i = self.symbols.index(name)
        powers = {0: Poly.const(1, self.symbols)}
        out = Poly(self.symbols)
        for e, c in self._terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k
            rest = Poly(self.symbols, {e[:i] + (0,) + e[i + 1:]: c})
            out = out + rest * powers[k]
        return out

    def evaluate(self, env: Mapping[str, object]):
        """Evaluate with every symbol bound (exact when values are rationals)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for s, k in zip(self.symbols, e):
                if k:
                    term = term * env[s] ** k
            total = total + term
        return total

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(s if k == 1 else f"{s}^{k}" for s, k in zip(self.symbols, e) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def symbols(universe: tuple[str, ...] = P_SYMBOLS) -> dict[str, Poly]:
    return {s: Poly.var(s, universe) for s in universe}


# ----------------------------------------------------------------------
# identity registry

Side = Callable[[Mapping[str, object]], object]


@dataclass(frozen=True)
class Identity:
    name: str
    source: str
    lhs: Side
    rhs: Side
    universe: tuple[str, ...] = P_SYMBOLS
    # False for variants re-derived here where the printed form does not hold
    printed: bool = True


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    residual: Poly
    points_checked: int = 0
    points_agree: bool = True
    source: str = ""
    printed: bool = True

    @property
    def residual_term_count(self) -> int:
        return len(self.residual)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "residual_term_count": self.residual_term_count,
        }


def _h3(a):
    return determinant([[a[0], a[1], a[2]], [a[1], a[2], a[3]], [a[2], a[3], a[4]]])


def _ps(e):
    return e["p1"], e["p2"], e["p3"], e["p4"]


def _t(e):
    return 1 - e["alpha"]


def _disk_p2(e):
    p1, x = e["p1"], e["x"]
    return Fraction(1, 2) * (p1 ** 2 + (4 - p1 ** 2) * x)


def _disk_p3(e):
    p1, x, xb, z = e["p1"], e["x"], e["x_bar"], e["z"]
    d = 4 - p1 ** 2
    return Fraction(1, 4) * (p1 ** 3 + 2 * p1 * d * x - p1 * d * x ** 2 + 2 * d * (1 - x * xb) * z)


def _harmonic_g_seq(e):
    return _harmonic_g(_convex(_t(e), *_ps(e)))


# left-hand sides built from the definitions --------------------------------

def _lhs_starlike_h31(e):
    return _h3((1,) + _starlike(_t(e), *_ps(e)))


def _lhs_convex_h31(e):
    return _h3((1,) + _convex(_t(e), *_ps(e)))


def _lhs_bounded_turning_h31(e):
    return _h3((1,) + _bounded_turning(_t(e), *_ps(e)))


def _lhs_starlike_j3(e):
    a = (1,) + _starlike(_t(e), *_ps(e))
    return a[2] ** 2 - a[4]


def _lhs_convex_j3(e):
    a = (1,) + _convex(_t(e), *_ps(e))
    return a[2] ** 2 - a[4]


def _lhs_bounded_turning_j(n):
    def lhs(e):
        c = (1,) + _bounded_turning(_t(e), *_ps(e))
        return c[n - 1] ** 2 - c[2 * n - 2]
    return lhs


def _lhs_harmonic_g_h31(e):
    return _h3(_harmonic_g_seq(e))


def _lhs_harmonic_g_h31_disk_form(e):
    # p_2, p_3 replaced by the (p_1, x, z) parametrization, p_1 real
    sub = dict(e)
    sub["p2"] = _disk_p2(e)
    sub["p3"] = _disk_p3(e)
    return _h3(_harmonic_g_seq(sub))


# right-hand sides transcribed from the printed formulas --------------------

def _rhs_starlike_h31(e):
    return _h31_starlike(_t(e), *_ps(e))


def _rhs_starlike_h31_decomp(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    u = p2 - t * p1 ** 2
    return Fraction(1, 144) * t ** 2 * (
        t * u ** 3 - 16 * (p3 - t * p1 * p2) ** 2
        + 8 * u * (p4 - t * p1 * p3) + 10 * u * (p4 - t * p2 ** 2))


def _rhs_convex_h31(e):
    return _h31_convex(_t(e), *_ps(e))


def _rhs_convex_h31_decomp_first(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    h = Fraction(1, 2)
    return Fraction(1, 8640) * t ** 2 * (
        8 * t * (p2 - h * t * p1 ** 2) ** 3 + 24 * p4 * (p2 - t * p1 ** 2)
        + 36 * p2 * (p4 - t * p2 ** 2) + 12 * (p2 - t * p1 ** 2) * (p4 - t * p1 * p3)
        - 60 * p3 * (p3 - Fraction(4, 5) * t * p1 * p2)
        + 24 * t * p2 ** 2 * (p2 - Fraction(3, 8) * t * p1 ** 2))


def _convex_decomp_second(e, cross_coeff):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    h = Fraction(1, 2)
    u = p2 - h * t * p1 ** 2
    return Fraction(1, 8640) * t ** 2 * (
        8 * t * u ** 3 - 60 * (p3 - h * t * p1 * p2) ** 2
        + 48 * u * (p4 - h * t * p1 * p3) + cross_coeff * t ** 2 * p1 ** 2 * p2 ** 2
        + 24 * u * (p4 - h * t * p2 ** 2))


def _rhs_convex_h31_decomp_second(e):
    return _convex_decomp_second(e, -15)


def _rhs_convex_h31_decomp_second_corrected(e):
    return _convex_decomp_second(e, 0)


def _rhs_bounded_turning_h31(e):
    return _h31_bounded_turning(_t(e), *_ps(e))


def _rhs_bounded_turning_h31_decomp(e):
    t = _t(e)
    a = e["alpha"]
    p1, p2, p3, p4 = _ps(e)
    return Fraction(1, 2160) * t ** 2 * (
        108 * t * p4 * (p2 - p1 ** 2) + 80 * t * p2 * (p4 - p2 ** 2)
        - 135 * p3 * (p3 - p1 * p2) - 45 * (1 - 4 * a) * p2 * (p4 - p1 * p3)
        + (1 + 8 * a) * p2 * p4)


def _rhs_starlike_j3(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    return Fraction(1, 24) * t * (
        -5 * t ** 3 * p1 ** 4 - 6 * t ** 2 * p1 ** 2 * p2 - 3 * t * p2 ** 2
        + 8 * t * p1 * p3 + 6 * p4)


def _rhs_starlike_j3_decomp(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    u = p2 - t * p1 ** 2
    return Fraction(1, 24) * t * (
        -5 * t * u ** 2 + 8 * t * p1 * (p3 - t * p1 * p2)
        + 8 * t * p2 * u + 6 * (p4 - t * p2 ** 2))


def _rhs_convex_j3(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    return Fraction(1, 360) * t * (
        -7 * t ** 3 * p1 ** 4 - 2 * t ** 2 * p1 ** 2 * p2 - t * p2 ** 2
        + 24 * t * p1 * p3 + 18 * p4)


def _rhs_convex_j3_decomp(e):
    t = _t(e)
    p1, p2, p3, p4 = _ps(e)
    tt = Fraction(2, 3) * t
    return Fraction(1, 360) * t * (
        -Fraction(63, 4) * t * (p2 - tt * p1 ** 2) ** 2 + 24 * t * p1 * (p3 - tt * p1 * p2)
        + Fraction(21, 2) * t * p2 * (p2 - tt * p1 ** 2) + Fraction(17, 4) * t * p2 ** 2
        + 18 * p4)


def _negated(side):
    return lambda e: -side(e)


def _rhs_bounded_turning_j(n):
    def rhs(e):
        t = _t(e)
        p = _ps(e)
        return (Fraction(1, n ** 2) * t ** 2 * p[n - 2] ** 2
                - Fraction(1, 2 * n - 1) * t * p[2 * n - 3])
    return rhs


def _rhs_bounded_turning_j_decomp(n):
    def rhs(e):
        t = _t(e)
        p = _ps(e)
        return -Fraction(1, 2 * n - 1) * t * (
            p[2 * n - 3] - Fraction(2 * n - 1, n ** 2) * t * p[n - 2] ** 2)
    return rhs


def _rhs_harmonic_g_reduced(e):
    b = _harmonic_g_seq(e)
    return b[2] * b[3] - b[2] ** 3 - Fraction(1, 4) * b[4]


def _rhs_harmonic_g_disk_form(e):
    a = e["alpha"]
    p1, x, xb, z = e["p1"], e["x"], e["x_bar"], e["z"]
    return Fraction(1, 2160) * (1 - a) * (
        (-8 * a ** 2 + 16 * a + 1) * p1 ** 3
        + 9 * (4 - p1 ** 2) * (p1 * x ** 2 - 2 * (1 - x * xb) * z))


def _rhs_harmonic_g_disk_form_corrected(e):
    a = e["alpha"]
    p1, x, xb, z = e["p1"], e["x"], e["x_bar"], e["z"]
    return Fraction(1, 2160) * (1 - a) * (
        (1 - 2 * a - 8 * a ** 2) * p1 ** 3 - 18 * a * p1 * (4 - p1 ** 2) * x
        + 9 * (4 - p1 ** 2) * (p1 * x ** 2 - 2 * (1 - x * xb) * z))


def _rhs_harmonic_g_alt(e):
    return _h31_harmonic_g(_t(e), *_ps(e))


def _rhs_harmonic_g_alt_decomp(e):
    t = _t(e)
    p1, p2, p3, _ = _ps(e)
    tt = Fraction(2, 3) * t
    return Fraction(1, 540) * t * (3 * t * p1 * (p2 - tt * p1 ** 2) - 9 * (p3 - tt * p1 * p2))


def _lhs_alt_bound_gap(e):
    t = _t(e)
    return Fraction(1, 90) * t * (5 - 2 * e["alpha"]) - Fraction(1, 30) * t


def _rhs_alt_bound_gap(e):
    # positive multiple of a square: the alternative bound is strictly larger for alpha < 1
    return Fraction(1, 45) * _t(e) ** 2


def _lhs_harmonic_g_coeffs(e):
    b = _harmonic_g_seq(e)
    return b[2] + 10 * b[3] + 100 * b[4]


def _rhs_harmonic_g_coeffs(e):
    # b_3, b_4, b_5 as printed, packed into one polynomial with separating weights
    t = _t(e)
    p1, p2, p3, _ = _ps(e)
    b3 = Fraction(1, 3) * t * p1
    b4 = Fraction(1, 8) * (t ** 2 * p1 ** 2 + t * p2)
    b5 = Fraction(1, 30) * (t ** 3 * p1 ** 3 + 3 * t ** 2 * p1 * p2 + 2 * t * p3)
    return b3 + 10 * b4 + 100 * b5


_IDS = [
    Identity("starlike_h31_expansion", "H_{3,1} of S*(alpha) in p-space, prefactor 1/144",
             _lhs_starlike_h31, _rhs_starlike_h31),
    Identity("starlike_h31_decomposition", "grouped form of the S*(alpha) expansion",
             _rhs_starlike_h31, _rhs_starlike_h31_decomp),
    Identity("convex_h31_expansion", "H_{3,1} of K(alpha), b_k = a_k/k, prefactor 1/8640",
             _lhs_convex_h31, _rhs_convex_h31),
    Identity("convex_h31_decomposition_first", "K(alpha) grouping used for the analytic-class bound",
             _rhs_convex_h31, _rhs_convex_h31_decomp_first),
    Identity("convex_h31_decomposition_second", "K(alpha) grouping used for the M(alpha) h-part bound",
             _rhs_convex_h31, _rhs_convex_h31_decomp_second),
    Identity("convex_h31_decomposition_second_corrected",
             "second K(alpha) grouping without the -15(1-alpha)^2 p1^2 p2^2 term",
             _rhs_convex_h31, _rhs_convex_h31_decomp_second_corrected, printed=False),
    Identity("bounded_turning_h31_expansion", "H_{3,1} of R(alpha), prefactor 1/2160",
             _lhs_bounded_turning_h31, _rhs_bounded_turning_h31),
    Identity("bounded_turning_h31_decomposition", "grouped form of the R(alpha) expansion",
             _rhs_bounded_turning_h31, _rhs_bounded_turning_h31_decomp),
    Identity("starlike_j3_expansion", "J_3 = a_3^2 - a_5 on S*(alpha), prefactor 1/24",
             _lhs_starlike_j3, _rhs_starlike_j3),
    Identity("starlike_j3_expansion_sign_corrected", "printed S*(alpha) J_3 polynomial equals a_5 - a_3^2",
             _lhs_starlike_j3, _negated(_rhs_starlike_j3), printed=False),
    Identity("starlike_j3_decomposition", "grouped form of the S*(alpha) J_3 polynomial",
             _rhs_starlike_j3, _rhs_starlike_j3_decomp),
    Identity("convex_j3_expansion", "J_3 = b_3^2 - b_5 on K(alpha), prefactor 1/360",
             _lhs_convex_j3, _rhs_convex_j3),
    Identity("convex_j3_expansion_sign_corrected", "printed K(alpha) J_3 polynomial equals b_5 - b_3^2",
             _lhs_convex_j3, _negated(_rhs_convex_j3), printed=False),
    Identity("convex_j3_decomposition", "grouped form of the K(alpha) J_3 polynomial",
             _rhs_convex_j3, _rhs_convex_j3_decomp),
    Identity("bounded_turning_j2_expansion", "J_2 on R(alpha)",
             _lhs_bounded_turning_j(2), _rhs_bounded_turning_j(2)),
    Identity("bounded_turning_j3_expansion", "J_3 on R(alpha)",
             _lhs_bounded_turning_j(3), _rhs_bounded_turning_j(3)),
    Identity("bounded_turning_j2_decomposition", "J_2 on R(alpha), estimate-ready form",
             _rhs_bounded_turning_j(2), _rhs_bounded_turning_j_decomp(2)),
    Identity("bounded_turning_j3_decomposition", "J_3 on R(alpha), estimate-ready form",
             _rhs_bounded_turning_j(3), _rhs_bounded_turning_j_decomp(3)),
    Identity("harmonic_g_coefficients", "b_3, b_4, b_5 of the co-analytic part of M(alpha)",
             _lhs_harmonic_g_coeffs, _rhs_harmonic_g_coeffs),
    Identity("harmonic_g_h31_reduction", "H_{3,1}(g) = b_3 b_4 - b_3^3 - b_5/4 when b_1 = 0, b_2 = 1/2",
             _lhs_harmonic_g_h31, _rhs_harmonic_g_reduced),
    Identity("harmonic_g_h31_disk_form", "H_{3,1}(g) after substituting p_2, p_3 by (p_1, x, z)",
             _lhs_harmonic_g_h31_disk_form, _rhs_harmonic_g_disk_form, universe=X_SYMBOLS),
    Identity("harmonic_g_h31_disk_form_corrected",
             "H_{3,1}(g) after the (p_1, x, z) substitution, re-derived coefficients",
             _lhs_harmonic_g_h31_disk_form, _rhs_harmonic_g_disk_form_corrected,
             universe=X_SYMBOLS, printed=False),
    Identity("harmonic_g_h31_alternative", "H_{3,1}(g) in p-space, prefactor 1/540",
             _lhs_harmonic_g_h31, _rhs_harmonic_g_alt),
    Identity("harmonic_g_h31_alternative_decomposition", "grouped form of the 1/540 expression",
             _rhs_harmonic_g_alt, _rhs_harmonic_g_alt_decomp),
    Identity("harmonic_g_alternative_bound_gap",
             "(1-alpha)(5-2alpha)/90 - (1-alpha)/30 = (1-alpha)^2/45",
             _lhs_alt_bound_gap, _rhs_alt_bound_gap),
]

REGISTRY: dict[str, Identity] = {i.name: i for i in _IDS}


def identity_names(printed_only: bool = False) -> list[str]:
    return [i.name for i in _IDS if i.printed or not printed_only]


def _random_env(rng: random.Random, universe) -> dict[str, Fraction]:
    return {s: Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for s in universe}


def _as_poly(v, universe) -> Poly:
    return v if isinstance(v, Poly) else Poly.const(v, universe)


def check_sides(lhs: Side, rhs: Side, universe=P_SYMBOLS, name: str = "",
                n_points: int = 100, seed: int = 0, source: str = "",
                printed: bool = True) -> IdentityReport:
    syms = symbols(universe)
    residual = _as_poly(lhs(syms), universe) - _as_poly(rhs(syms), universe)
    rng = random.Random(seed)
    agree = True
    for _ in range(n_points):
        env = _random_env(rng, universe)
        if lhs(env) != rhs(env):
            agree = False
            break
    return IdentityReport(name, residual.is_zero(), residual, n_points, agree, source, printed)


def verify_identity(name: str, n_points: int = 100) -> IdentityReport:
    """Exact residual ``lhs - rhs`` of a registered identity plus a pointwise check.

    The pointwise check evaluates both sides directly on random rationals, bypassing
    :class:`Poly`, so it guards the polynomial arithmetic as well as the transcription.
    """
    ident = REGISTRY[name]
    return check_sides(ident.lhs, ident.rhs, ident.universe, ident.name,
                       n_points=n_points, source=ident.source, printed=ident.printed)


def verify_all(n_points: int = 100) -> list[IdentityReport]:
    return [verify_identity(name, n_points) for name in REGISTRY]


def alexander_convention_report() -> dict[str, IdentityReport]:
    """Residual of the convex expansion under ``b_k = a_k / k`` and under ``b_k = k a_k``."""

    def lhs_times_k(e):
        a = _starlike(_t(e), *_ps(e))
        return _h3((1,) + tuple(k * v for k, v in zip(range(2, 6), a)))

    return {
        "a_k/k": check_sides(_lhs_convex_h31, _rhs_convex_h31, name="convex b_k = a_k/k"),
        "k*a_k": check_sides(lhs_times_k, _rhs_convex_h31, name="convex b_k = k a_k"),
    }
