from fractions import Fraction

import pytest

from hankelbounds.bounds import H31, H31_G, H31_H, J2, J3, Functional
from hankelbounds.caratheodory import is_feasible
from hankelbounds.coeffs import ClassSpec, Kind, class_coeffs
from hankelbounds.errors import UnsupportedFunctional
from hankelbounds.functionals import hankel, zalcman
from hankelbounds.search import SearchConfig, alpha_sweep, default_workers, maximize, objective


def cfg(kind, alpha, fn, **kw):
    kw.setdefault("restarts", 8)
    return SearchConfig(ClassSpec(kind, alpha), fn, **kw)


@pytest.mark.parametrize("kw", [{"restarts": 0}, {"atoms": 0}, {"refine_iters": -1}, {"tol": 0}])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        cfg(Kind.STARLIKE, 0, H31, **kw)


def test_config_rejects_unsupported_pair():
    with pytest.raises(UnsupportedFunctional):
        cfg(Kind.HARMONIC_M, 0, H31)


def test_objective_matches_exact_functionals():
    p = (1.2 + 0.3j, -0.4 + 0.1j, 0.7j, 0.2 - 0.9j)
    for kind, fn in [(Kind.STARLIKE, H31), (Kind.CONVEX, J3), (Kind.BOUNDED_TURNING, J2)]:
        spec = ClassSpec(kind, 0.25)
        a = class_coeffs(spec, p)
        expected = hankel(3, 1, a) if fn is H31 else zalcman(fn.n, a)
        assert objective(spec, fn)(p) == pytest.approx(expected.magnitude, rel=1e-13)
    spec = ClassSpec(Kind.HARMONIC_M, -0.5)
    hm = class_coeffs(spec, p)
    assert objective(spec, H31_H)(p) == pytest.approx(hankel(3, 1, hm.h).magnitude, rel=1e-13)
    assert objective(spec, H31_G)(p) == pytest.approx(hankel(3, 1, hm.g).magnitude, rel=1e-13)


def test_best_point_is_feasible_and_consistent():
    rep = maximize(cfg(Kind.STARLIKE, 0, H31))
    assert is_feasible(rep.best_p.p)
    f = objective(ClassSpec(Kind.STARLIKE, 0), H31)
    assert f(rep.best_p.p) == pytest.approx(rep.best_magnitude, rel=1e-12)
    assert rep.best_magnitude == max(rep.per_restart)
    assert rep.evaluations > rep.config.restarts


def test_deterministic():
    a = maximize(cfg(Kind.CONVEX, 0.25, H31, seed=4))
    b = maximize(cfg(Kind.CONVEX, 0.25, H31, seed=4))
    assert a.best_magnitude == b.best_magnitude and a.best_measure == b.best_measure
    c = maximize(cfg(Kind.CONVEX, 0.25, H31, seed=5))
    assert c.per_restart != a.per_restart


def test_more_restarts_never_worse():
    few = maximize(cfg(Kind.BOUNDED_TURNING, 0, H31, restarts=4, seed=2))
    more = maximize(cfg(Kind.BOUNDED_TURNING, 0, H31, restarts=12, seed=2))
    assert more.per_restart[:4] == few.per_restart
    assert more.best_magnitude >= few.best_magnitude


def test_workers_do_not_change_result():
    one = maximize(cfg(Kind.STARLIKE, 0.5, J2, restarts=6, workers=1))
    two = maximize(cfg(Kind.STARLIKE, 0.5, J2, restarts=6, workers=2))
    assert one.per_restart == two.per_restart and one.best_restart == two.best_restart


def test_default_workers_env(monkeypatch):
    monkeypatch.setenv("HANKEL_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("HANKEL_THREADS", "junk")
    assert default_workers() == 1


def test_unpinned_search_respects_bound():
    rep = maximize(cfg(Kind.STARLIKE, 0.25, H31, pin_rotation=False))
    assert rep.respects_bound


def test_zero_refinement_only_evaluates_starts():
    rep = maximize(cfg(Kind.STARLIKE, 0, H31, refine_iters=0))
    assert rep.evaluations == rep.config.restarts


def test_single_atom_has_no_free_parameters():
    # one pinned atom is the Koebe point, where |H31| = 0 for the starlike class
    rep = maximize(cfg(Kind.STARLIKE, 0, H31, atoms=1, restarts=2))
    assert rep.best_magnitude == pytest.approx(0, abs=1e-14)


def test_koebe_j2_attained():
    rep = maximize(cfg(Kind.STARLIKE, 0, J2, restarts=40))
    assert rep.best_magnitude >= 1 - 1e-6 and rep.respects_bound


def test_bounded_turning_high_order_zalcman():
    rep = maximize(cfg(Kind.BOUNDED_TURNING, 0, Functional.zalcman(5), restarts=10))
    assert rep.best_magnitude == pytest.approx(2 / 9, abs=1e-6)
    assert rep.respects_bound


@pytest.mark.parametrize("alpha", [Fraction(-1, 2), Fraction(3, 4)])
def test_convex_j3_bound_violation_is_reported(alpha):
    # the closed form is exceeded by explicit feasible points; the search must say so
    rep = maximize(cfg(Kind.CONVEX, alpha, J3, restarts=10))
    assert not rep.respects_bound
    assert rep.gap < -1e-3
    assert is_feasible(rep.best_p.p)


def test_sweep_orders_rows_and_validates_grid():
    rows = alpha_sweep(Kind.HARMONIC_M, H31_G, [Fraction(1, 2), Fraction(-1, 2)], restarts=3)
    assert [r.config.class_spec.alpha for r in rows] == [Fraction(-1, 2), Fraction(1, 2)]
    assert all(r.respects_bound for r in rows)
    with pytest.raises(ValueError):
        alpha_sweep(Kind.STARLIKE, H31, [0, -0.5], restarts=3)
