import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankelbounds.bounds import (
    H31, H31_G, H31_H, J2, J3,
    BoundResult,
    Functional,
    alternative_g_bound,
    bound_for,
    bound_h31,
    bound_zalcman,
    chi,
    chi_max,
    exact_alpha,
    reference_bounds,
)
from hankelbounds.coeffs import ClassSpec, Kind
from hankelbounds.errors import AlphaOutOfRange, UnsupportedFunctional

S, K, R, M = Kind.STARLIKE, Kind.CONVEX, Kind.BOUNDED_TURNING, Kind.HARMONIC_M


def h31(kind, alpha):
    return bound_h31(ClassSpec(kind, Fraction(alpha))).value


def test_alpha_zero_values():
    assert h31(S, 0) == 1
    assert h31(K, 0) == Fraction(49, 540)
    assert h31(R, 0) == Fraction(41, 60)


def test_harmonic_at_minus_half():
    h, g = bound_h31(ClassSpec(M, Fraction(-1, 2)))
    assert h.value == Fraction(291, 960)
    assert g.value == Fraction(1, 20)
    assert h.functional == H31_H and g.functional == H31_G


def test_harmonic_g_at_zero():
    assert bound_h31(ClassSpec(M, 0))[1].value == Fraction(1, 30)


def test_convex_negative_alpha_uses_harmonic_h_bound():
    assert h31(K, Fraction(-1, 2)) == Fraction(291, 960)


def test_bounded_turning_kink():
    # |1 - 4 alpha| switches branch at 1/4
    assert h31(R, Fraction(1, 4)) == Fraction(1, 60) * Fraction(9, 16) * 31
    left = h31(R, Fraction(1, 4) - Fraction(1, 10 ** 6))
    right = h31(R, Fraction(1, 4) + Fraction(1, 10 ** 6))
    assert left > h31(R, Fraction(1, 4)) > right


@pytest.mark.parametrize("kind, n, value", [
    (S, 2, 1), (S, 3, 4), (K, 2, Fraction(1, 3)), (K, 3, Fraction(127, 360)),
    (R, 2, Fraction(2, 3)), (R, 3, Fraction(2, 5)), (R, 7, Fraction(2, 13)),
])
def test_zalcman_values(kind, n, value):
    assert bound_zalcman(ClassSpec(kind, 0), n).value == value


def test_zalcman_unsupported():
    with pytest.raises(UnsupportedFunctional):
        bound_zalcman(ClassSpec(S, 0), 4)
    with pytest.raises(UnsupportedFunctional):
        bound_zalcman(ClassSpec(M, 0), 2)


def test_bound_for_dispatch():
    spec = ClassSpec(M, 0)
    assert bound_for(spec, H31_G).value == Fraction(1, 30)
    with pytest.raises(UnsupportedFunctional):
        bound_for(spec, H31)
    with pytest.raises(UnsupportedFunctional):
        bound_for(ClassSpec(S, 0), H31_H)
    assert bound_for(ClassSpec(S, 0), J2).value == 1


def test_float_alpha_goes_through_repr():
    assert exact_alpha(0.1) == Fraction(1, 10)
    assert h31(S, Fraction(1, 10)) == bound_h31(ClassSpec(S, 0.1)).value
    assert bound_h31(ClassSpec(S, 0.1)).is_exact
    with pytest.raises(AlphaOutOfRange):
        exact_alpha(math.nan)


def test_bound_result_rejects_negative():
    with pytest.raises(ValueError):
        BoundResult(None, H31, -1, "x")


def test_functional_parse():
    assert Functional.parse("J3") == J3
    assert Functional.parse("jn:5") == Functional.zalcman(5)
    assert Functional.parse("h31-g") == H31_G
    assert Functional.zalcman(4).label == "j4"
    for bad in ("h32", "j1", "jn:"):
        with pytest.raises(UnsupportedFunctional):
            Functional.parse(bad)


def test_reference_constants():
    a = reference_bounds("A")
    assert a[0].value == 16
    assert a[1].value == pytest.approx(0.714933452973167006, rel=1e-14)
    assert a[2].value == pytest.approx(0.742267747509602634, rel=1e-14)
    assert [r.value for r in reference_bounds("B")] == [1, Fraction(49, 540), Fraction(41, 60)]
    c = reference_bounds(" c")
    assert c[0].value == pytest.approx(3.6086187548277815, rel=1e-15)
    assert c[1].value == Fraction(439, 540)
    assert reference_bounds("D", 0)[0].value == pytest.approx(0.74226774750960267, rel=1e-15)
    with pytest.raises(AlphaOutOfRange):
        reference_bounds("D", 0.3)
    with pytest.raises(ValueError):
        reference_bounds("E")


def test_new_harmonic_h_bound_improves_reference():
    assert bound_h31(ClassSpec(M, Fraction(-1, 2)))[0].value < reference_bounds("C")[0].value


def test_new_bounds_improve_older_constants_at_zero():
    b = reference_bounds("B")
    assert h31(S, 0) < reference_bounds("A")[0].value
    assert [h31(k, 0) for k in (S, K, R)] == [r.value for r in b]


def _all_bounds(kind, a):
    spec = ClassSpec(kind, a)
    if kind is M:
        return [r.value for r in bound_h31(spec)]
    out = [bound_h31(spec).value, bound_zalcman(spec, 2).value]
    if kind is not R:
        out.append(bound_zalcman(spec, 3).value)
    return out


def _alpha(kind):
    lo = Fraction(-1, 2) if kind in (K, M) else Fraction(0)
    return st.fractions(min_value=lo, max_value=Fraction(999, 1000), max_denominator=1000)


@pytest.mark.parametrize("kind", [S, K, R, M])
@given(data=st.data())
def test_bounds_decrease_in_alpha(kind, data):
    a = data.draw(_alpha(kind))
    b = data.draw(_alpha(kind))
    a, b = min(a, b), max(a, b)
    for x, y in zip(_all_bounds(kind, a), _all_bounds(kind, b)):
        assert x >= y >= 0


@pytest.mark.parametrize("kind", [S, K, R, M])
def test_bounds_vanish_as_alpha_tends_to_one(kind):
    near = Fraction(1) - Fraction(1, 10 ** 8)
    assert all(v < Fraction(1, 10 ** 7) for v in _all_bounds(kind, near))


@given(st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(999, 1000), max_denominator=1000))
def test_alternative_g_bound_is_weaker(a):
    g = bound_h31(ClassSpec(M, a))[1].value
    alt = alternative_g_bound(a)
    assert alt > g
    assert alt - g == (1 - a) ** 2 / 45


def test_chi_examples():
    assert chi(0, 0) == 72
    assert chi(0, 2) == 8 - 72 + 72
    assert chi_max(Fraction(-1, 2)) == (72, 0)


def test_chi_max_on_grid():
    grid = [Fraction(-50 + i, 100) for i in range(150)]
    assert grid[0] == Fraction(-1, 2) and grid[-1] == Fraction(99, 100)
    for a in grid:
        value, c = chi_max(a)
        assert value == 72 and c == 0
        # the maximum is 72 / 2160 * 2160 / 30 scaled: g-part bound (1-a)/30 = (1-a) * 72 / 2160
        assert (1 - a) * value / 2160 == bound_h31(ClassSpec(M, a))[1].value


def test_chi_max_range():
    with pytest.raises(AlphaOutOfRange):
        chi_max(Fraction(-3, 5))
