import cmath
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from hankelbounds.coeffs import ClassSpec, Kind, class_coeffs, harmonic_m_coeffs
from hankelbounds.errors import InsufficientCoefficients, UnsupportedFunctional
from hankelbounds.functionals import (
    determinant,
    fekete_szego,
    h31_expansion,
    hankel,
    hankel_matrix,
    zalcman,
)

from conftest import feasible_p

KOEBE = (1, 2, 3, 4, 5)
IDENTITY = (1, 0, 0, 0, 0)
ONES = (1, 1, 1, 1, 1)


def _h31_formula(a):
    a1, a2, a3, a4, a5 = a
    return -a2 ** 2 * a5 + 2 * a2 * a3 * a4 - a3 ** 3 + a3 * a5 - a4 ** 2


@pytest.mark.parametrize("a", [KOEBE, IDENTITY, ONES])
def test_h31_zero_examples(a):
    assert hankel(3, 1, a).value == 0


def test_h31_matches_sympy_determinant():
    a = (1, Fraction(1, 2), Fraction(-2, 3), Fraction(5, 4), Fraction(7, 9))
    oracle = sp.Matrix(3, 3, lambda i, j: sp.Rational(a[i + j])).det()
    assert hankel(3, 1, a).value == Fraction(str(oracle)) == _h31_formula(a)


def test_determinant_4x4_against_sympy():
    m = [[Fraction(i * 3 + j * j - 2, j + 1) for j in range(4)] for i in range(4)]
    assert determinant(m) == Fraction(str(sp.Matrix(m).det()))


def test_hankel_other_orders():
    assert hankel(2, 2, KOEBE).value == 2 * 4 - 3 * 3
    assert hankel(1, 3, KOEBE).value == 3
    assert hankel_matrix(2, 1, KOEBE) == [[1, 2], [2, 3]]


def test_hankel_insufficient():
    with pytest.raises(InsufficientCoefficients):
        hankel(3, 2, KOEBE)
    with pytest.raises(TypeError):
        hankel(3, 1, harmonic_m_coeffs(0, (0, 0, 0, 0)))


@pytest.mark.parametrize("a, n, value", [(KOEBE, 2, 1), (KOEBE, 3, 4), (IDENTITY, 2, 0),
                                         (IDENTITY, 3, 0), (ONES, 3, 0)])
def test_zalcman_examples(a, n, value):
    assert zalcman(n, a).value == value


def test_zalcman_needs_enough_terms():
    with pytest.raises(InsufficientCoefficients):
        zalcman(4, KOEBE)
    with pytest.raises(ValueError):
        zalcman(1, KOEBE)


def test_magnitude_is_abs():
    v = zalcman(2, (1, 1j, 0))
    assert v.value == -1 and v.magnitude == 1


def test_coanalytic_part_uses_zero_leading_term():
    g = harmonic_m_coeffs(0, (2, 2, 2, 2)).g
    # H_{3,1}(g) with b_1 = 0 reduces to b_3 b_4 - b_3^3 - b_5/4
    b = g
    assert hankel(3, 1, g).value == b[2] * b[3] - b[2] ** 3 - b[4] / 4 == Fraction(1, 270)


fracs = st.fractions(min_value=-3, max_value=3, max_denominator=30)


@given(st.tuples(fracs, fracs))
def test_second_hankel_is_fekete_szego(a23):
    a = (1,) + a23
    h21 = hankel(2, 1, a).value
    assert h21 == fekete_szego(a).value == -zalcman(2, a).value


def test_starlike_expansion_koebe():
    assert h31_expansion(ClassSpec(Kind.STARLIKE, 0), (2, 2, 2, 2)).value == 0


@pytest.mark.parametrize("kind", list(Kind))
def test_expansion_at_zero_p(kind):
    assert h31_expansion(ClassSpec(kind, 0), (0, 0, 0, 0)).value == 0


def test_unknown_harmonic_part():
    with pytest.raises(UnsupportedFunctional):
        h31_expansion(ClassSpec(Kind.HARMONIC_M, 0), (0, 0, 0, 0), part="x")


def _definition(spec, p, part="h"):
    c = class_coeffs(spec, p)
    if spec.kind is Kind.HARMONIC_M:
        c = c.h if part == "h" else c.g
    return hankel(3, 1, c).value


CASES = [(k, a) for k in Kind for a in (0, 0.25, 0.75)] + [(Kind.CONVEX, -0.5), (Kind.HARMONIC_M, -0.5)]


@pytest.mark.parametrize("kind, alpha", CASES)
@given(p=feasible_p())
def test_expansion_agrees_with_definition(kind, alpha, p):
    spec = ClassSpec(kind, alpha)
    for part in ("h", "g") if kind is Kind.HARMONIC_M else ("h",):
        assert abs(h31_expansion(spec, p, part).value - _definition(spec, p, part)) <= 1e-12


@given(st.tuples(fracs, fracs, fracs, fracs), st.sampled_from(list(Kind)))
def test_expansion_exact_on_rationals(p, kind):
    spec = ClassSpec(kind, Fraction(1, 3))
    assert h31_expansion(spec, p).value == _definition(spec, p)


@given(feasible_p(), st.floats(0, 6.283))
def test_h31_rotation_invariance(p, theta):
    for kind in Kind:
        a = class_coeffs(ClassSpec(kind, 0.5), p)
        seqs = [a.h.a, a.g] if kind is Kind.HARMONIC_M else [a.a]
        for s in seqs:
            turned = [cmath.exp(1j * k * theta) * v for k, v in enumerate(s)]
            assert abs(hankel(3, 1, turned).magnitude - hankel(3, 1, s).magnitude) <= 1e-12
