"""Multistart search for large ``|H_{3,1}|`` and ``|J_n|`` over each class.

The search space is the set of ``m``-atom Herglotz measures: ``m`` weight
logits (softmax keeps them on the simplex) and ``m`` angles.  Every iterate
therefore yields a feasible coefficient sequence, so the largest value found
is a certified lower bound for the true maximum and may never exceed the
closed-form bound.

All of ``|H_{3,1}|``, ``|H_{3,1}(g)|`` and ``|J_n|`` are invariant under
``p_n -> e^{i n theta} p_n``, so by default the first atom is pinned at angle 0
and the first logit at 0, which removes two redundant directions.
"""

from __future__ import annotations

import cmath
import math
import operator
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.optimize import minimize

from .bounds import BoundResult, Functional, bound_for
from .caratheodory import CaratheodoryCoeffs, HerglotzMeasure, coeffs_from_measure, sample_measure
from .coeffs import ClassSpec, Kind, _bounded_turning, _convex, _harmonic_g, _starlike

__all__ = [
    "SearchConfig",
    "SearchReport",
    "objective",
    "maximize",
    "alpha_sweep",
    "default_workers",
]

THREADS_ENV = "HANKEL_THREADS"


@dataclass(frozen=True)
class SearchConfig:
    class_spec: ClassSpec
    functional: Functional
    restarts: int = 200
    atoms: int = 4
    refine_iters: int = 500
    seed: int = 0
    tol: float = 1e-9
    pin_rotation: bool = True
    # None reads HANKEL_THREADS (default 1)
    workers: int | None = None

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.atoms < 1:
            raise ValueError(f"atoms must be >= 1, got {self.atoms}")
        if self.refine_iters < 0:
            raise ValueError(f"refine_iters must be >= 0, got {self.refine_iters}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        bound_for(self.class_spec, self.functional)  # raises for unsupported pairs


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    best_magnitude: float
    best_measure: HerglotzMeasure
    best_p: CaratheodoryCoeffs
    bound: BoundResult
    best_restart: int
    evaluations: int
    per_restart: tuple[float, ...] = field(repr=False, default=())

    @property
    def gap(self) -> float:
        return float(self.bound.value) - self.best_magnitude

    @property
    def respects_bound(self) -> bool:
        return self.gap >= -self.config.tol


def objective(spec: ClassSpec, functional: Functional) -> Callable[[Sequence[complex]], float]:
    """``p_1..p_4 -> |functional|`` for the class, in plain complex arithmetic."""
    bound_for(spec, functional)
    t = float(1 - spec.alpha)
    q = operator.truediv
    kind = spec.kind

    if kind is Kind.HARMONIC_M:
        if functional.kind == "h31-g":
            def seq(p):
                return _harmonic_g(_convex(t, p[0], p[1], p[2], p[3], q), q)
        else:
            def seq(p):
                return (1.0,) + _convex(t, p[0], p[1], p[2], p[3], q)
    else:
        cmap = {Kind.STARLIKE: _starlike, Kind.CONVEX: _convex,
                Kind.BOUNDED_TURNING: _bounded_turning}[kind]

        def seq(p):
            return (1.0,) + cmap(t, p[0], p[1], p[2], p[3], q)

    if functional.kind == "j":
        n = functional.n
        if 2 * n - 1 > 5:
            # only R(alpha) supports n > 3; its coefficients are linear in p
            def value(p):
                return abs((t * p[n - 2] / n) ** 2 - t * p[2 * n - 3] / (2 * n - 1))
            return value

        def value(p):
            a = seq(p)
            return abs(a[n - 1] ** 2 - a[2 * n - 2])
        return value

    def value(p):
        a1, a2, a3, a4, a5 = seq(p)
        return abs(a1 * (a3 * a5 - a4 * a4) - a2 * (a2 * a5 - a3 * a4) + a3 * (a2 * a4 - a3 * a3))
    return value


def _n_coeffs(functional: Functional) -> int:
    return max(4, 2 * functional.n - 2) if functional.kind == "j" else 4


def _unpack(v: Sequence[float], m: int, pin: bool) -> tuple[list[float], list[float]]:
    v = list(v)
    if pin:
        logits, angles = [0.0] + v[: m - 1], [0.0] + v[m - 1:]
    else:
        logits, angles = v[:m], v[m:]
    top = max(logits)
    w = [math.exp(x - top) for x in logits]
    total = math.fsum(w)
    return [x / total for x in w], angles


def _pack(measure: HerglotzMeasure, pin: bool) -> np.ndarray:
    w = np.maximum(measure.weights, 1e-300)
    logits = np.log(w)
    angles = measure.angles
    if pin:
        logits = logits[1:] - logits[0]
        angles = (angles[1:] - angles[0]) % (2 * math.pi)
    return np.concatenate((logits, angles))


def _p_of(w: Sequence[float], angles: Sequence[float], N: int) -> list[complex]:
    units = [cmath.exp(1j * a) for a in angles]
    p = []
    powers = [1.0 + 0j] * len(units)
    for _ in range(N):
        powers = [pw * u for pw, u in zip(powers, units)]
        p.append(2.0 * sum(wi * pw for wi, pw in zip(w, powers)))
    return p


def _run_restart(config: SearchConfig, r: int) -> tuple[float, list, list, int]:
    m, pin = config.atoms, config.pin_rotation
    N = _n_coeffs(config.functional)
    f = objective(config.class_spec, config.functional)
    counter = [0]

    def neg(v):
        counter[0] += 1
        w, ang = _unpack(v, m, pin)
        return -f(_p_of(w, ang, N))

    x0 = _pack(sample_measure((config.seed, r), m), pin)
    if x0.size == 0 or config.refine_iters == 0:
        best_v, best_val = x0, neg(x0)
    else:
        res = minimize(neg, x0, method="Nelder-Mead",
                       options={"maxiter": config.refine_iters, "xatol": 1e-10,
                                "fatol": 1e-14, "adaptive": x0.size > 4})
        best_v, best_val = (res.x, res.fun) if res.fun <= neg(x0) else (x0, neg(x0))
    w, ang = _unpack(np.asarray(best_v, float).tolist(), m, pin)
    return -best_val, w, ang, counter[0]


def _run_chunk(config: SearchConfig, indices: Sequence[int]):
    return [(r,) + _run_restart(config, r) for r in indices]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def maximize(config: SearchConfig) -> SearchReport:
    """Run the multistart search; deterministic for a fixed config.

    Restart ``r`` starts from ``sample_measure((seed, r), atoms)`` and is refined
    by Nelder-Mead on the negated magnitude.  The best restart wins, ties going
    to the lower restart index, so the result does not depend on ``workers``.
    """
    workers = config.workers if config.workers is not None else default_workers()
    indices = list(range(config.restarts))
    if workers > 1 and config.restarts > 1:
        chunks = [indices[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [row for part in pool.map(_run_chunk, [config] * len(chunks), chunks)
                       for row in part]
    else:
        results = _run_chunk(config, indices)
    results.sort(key=lambda row: row[0])

    best = max(results, key=lambda row: (row[1], -row[0]))
    r, mag, w, ang, _ = best
    measure = HerglotzMeasure.from_arrays(w, ang)
    return SearchReport(
        config=config,
        best_magnitude=float(mag),
        best_measure=measure,
        best_p=coeffs_from_measure(measure, _n_coeffs(config.functional)),
        bound=bound_for(config.class_spec, config.functional),
        best_restart=r,
        evaluations=sum(row[4] for row in results),
        per_restart=tuple(float(row[1]) for row in results),
    )


def alpha_sweep(kind: Kind, functional: Functional, alpha_grid: Iterable,
                config: SearchConfig | None = None, **overrides) -> list[SearchReport]:
    """One :func:`maximize` per alpha, rows in ascending alpha order.

    ``config`` supplies the search budget (its class is replaced per row);
    keyword ``overrides`` are forwarded to :class:`SearchConfig` otherwise.
    """
    alphas = sorted(alpha_grid)
    specs = [ClassSpec(kind, a) for a in alphas]  # validates the whole grid up front
    rows = []
    for spec in specs:
        if config is not None:
            cfg = SearchConfig(spec, functional, config.restarts, config.atoms,
                               config.refine_iters, config.seed, config.tol,
                               config.pin_rotation, config.workers)
        else:
            cfg = SearchConfig(spec, functional, **overrides)
        rows.append(maximize(cfg))
    return rows
