"""Caratheodory-class coefficient sequences.

Members of the class are generated from finite atomic probability measures on
the unit circle (Herglotz representation)::

    p(z) = sum_j w_j (1 + e^{-i t_j} z) / (1 - e^{-i t_j} z)
    p_n  = 2 sum_j w_j e^{i n t_j}

A truncated sequence ``(p_1, ..., p_N)`` extends to a member of the class iff
the Hermitian Toeplitz matrix with first row ``(2, p_1, ..., p_N)`` is positive
semidefinite, which is what :func:`is_feasible` tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .errors import IndexOutOfRange, InfeasibleInput

__all__ = [
    "HerglotzMeasure",
    "CaratheodoryCoeffs",
    "DiskWitness",
    "coeffs_from_measure",
    "is_feasible",
    "toeplitz_matrix",
    "disk_witness",
    "disk_reconstruct",
    "lemma_residuals",
    "sample_measure",
    "draw_measure",
    "LemmaSuiteResult",
    "lemma_suite",
    "FEASIBILITY_TOL",
]

TWO_PI = 2.0 * math.pi
WEIGHT_SUM_TOL = 1e-14
FEASIBILITY_TOL = 1e-10
# below this 4 - |p1|^2 is treated as zero (|p1| = 2)
DEGENERATE_TOL = 1e-13


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite atomic probability measure on the circle.

    ``atoms`` is a tuple of ``(weight, angle)`` pairs; angles are reduced
    modulo 2*pi on construction.
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        atoms = tuple((float(w), float(t) % TWO_PI) for w, t in self.atoms)
        if not atoms:
            raise ValueError("a measure needs at least one atom")
        if any(w < 0.0 for w, _ in atoms):
            raise ValueError("atom weights must be non-negative")
        total = math.fsum(w for w, _ in atoms)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"atom weights sum to {total!r}, not 1")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_arrays(cls, weights, angles) -> "HerglotzMeasure":
        return cls(tuple(zip(np.asarray(weights, float), np.asarray(angles, float))))

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for w, _ in self.atoms])

    @property
    def angles(self) -> np.ndarray:
        return np.array([t for _, t in self.atoms])

    def __len__(self):
        return len(self.atoms)


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    """Coefficients ``p_1..p_N`` of ``p(z) = 1 + sum p_n z^n``; ``p_0 = 2`` is implicit."""

    p: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(complex(v) for v in self.p))

    @property
    def N(self) -> int:
        return len(self.p)

    def __len__(self):
        return len(self.p)

    def __iter__(self):
        return iter(self.p)

    def __getitem__(self, i):
        return self.p[i]

    def coeff(self, n: int) -> complex:
        """Return ``p_n`` with the Toeplitz convention ``p_0 = 2``, ``p_{-n} = conj(p_n)``."""
        if n == 0:
            return 2.0 + 0.0j
        if abs(n) > self.N:
            raise IndexOutOfRange(f"p_{n} requested but only N={self.N} coefficients stored")
        return self.p[n - 1] if n > 0 else self.p[-n - 1].conjugate()


@dataclass(frozen=True)
class DiskWitness:
    x: complex
    z: complex
    degenerate: bool = False


def _as_coeffs(p) -> CaratheodoryCoeffs:
    return p if isinstance(p, CaratheodoryCoeffs) else CaratheodoryCoeffs(tuple(p))


def coeffs_from_measure(measure: HerglotzMeasure, N: int) -> CaratheodoryCoeffs:
    if N < 1:
        raise ValueError("N must be positive")
    p = []
    for n in range(1, N + 1):
        p.append(2.0 * sum(w * cmath.exp(1j * n * t) for w, t in measure.atoms))
    return CaratheodoryCoeffs(tuple(p))


def toeplitz_matrix(p) -> np.ndarray:
    """Hermitian Toeplitz matrix with first row ``(2, p_1, ..., p_N)``."""
    row = np.concatenate(([2.0 + 0.0j], np.asarray(tuple(_as_coeffs(p)), dtype=complex)))
    return scipy.linalg.toeplitz(row.conj(), row)


def is_feasible(p, tol: float = FEASIBILITY_TOL) -> bool:
    coeffs = _as_coeffs(p)
    if not all(cmath.isfinite(v) for v in coeffs):
        return False
    eigs = np.linalg.eigvalsh(toeplitz_matrix(coeffs))
    return bool(eigs[0] >= -tol)


def disk_witness(p1: complex, p2: complex, p3: complex) -> DiskWitness:
    """Recover ``(x, z)`` with ``|x|, |z| <= 1`` parametrizing ``p_2, p_3`` from ``p_1``.

    For real ``p_1 >= 0`` the relations are::

        2 p2 = p1^2 + (4 - p1^2) x
        4 p3 = p1^3 + 2 p1 (4 - p1^2) x - p1 (4 - p1^2) x^2 + 2 (4 - p1^2)(1 - |x|^2) z

    For complex ``p_1`` the factor ``4 - p1^2`` becomes ``4 - |p1|^2`` and the
    ``x^2`` term carries ``conj(p1)``; both reduce to the above on the real
    axis, and only this form keeps ``|z| <= 1`` off it.

    Conventions where the witness is not unique: ``|p1| = 2`` gives
    ``x = z = 0`` with ``degenerate=True``; ``|x| = 1`` gives ``z = 0``.
    Values pushed just outside the unit disk by rounding are projected back
    radially, which moves the reconstructed ``p2, p3`` only at rounding level.
    """
    p1, p2, p3 = complex(p1), complex(p2), complex(p3)
    if not is_feasible((p1, p2, p3)):
        raise InfeasibleInput(f"({p1}, {p2}, {p3}) is not a Caratheodory coefficient triple")
    d = 4.0 - abs(p1) ** 2
    if d <= DEGENERATE_TOL:
        return DiskWitness(0j, 0j, degenerate=True)
    x = (2.0 * p2 - p1 * p1) / d
    if abs(x) >= 1.0:
        return DiskWitness(x / abs(x), 0j)
    s = 1.0 - abs(x) ** 2
    z = (4.0 * p3 - p1 ** 3 - 2.0 * d * p1 * x + d * p1.conjugate() * x * x) / (2.0 * d * s)
    if abs(z) > 1.0:
        z /= abs(z)
    return DiskWitness(x, z)


def disk_reconstruct(p1: complex, x: complex, z: complex) -> tuple[complex, complex]:
    """Inverse of :func:`disk_witness`: ``(p1, x, z) -> (p2, p3)``."""
    p1 = complex(p1)
    d = 4.0 - abs(p1) ** 2
    p2 = (p1 * p1 + d * x) / 2.0
    p3 = (p1 ** 3 + 2.0 * d * p1 * x - d * p1.conjugate() * x * x
          + 2.0 * d * (1.0 - abs(x) ** 2) * z) / 4.0
    return p2, p3


def lemma_residuals(p, n: int, k: int, mu: float) -> tuple[float, float, float]:
    """Slack in the three coefficient estimates for ``p_n``.

    Returns ``(|p_n| - 2, |p_n - p_k p_{n-k}| - 2, |p_n - mu p_k p_{n-k}| - 2)``;
    all three are ``<= 0`` for members of the class.
    """
    coeffs = _as_coeffs(p)
    if n > coeffs.N:
        raise IndexOutOfRange(f"n={n} exceeds N={coeffs.N}")
    if not 1 <= k < n:
        raise IndexOutOfRange(f"need 1 <= k < n, got k={k}, n={n}")
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu}")
    pn = coeffs.coeff(n)
    prod = coeffs.coeff(k) * coeffs.coeff(n - k)
    return abs(pn) - 2.0, abs(pn - prod) - 2.0, abs(pn - mu * prod) - 2.0


def draw_measure(rng: np.random.Generator, n_atoms: int) -> HerglotzMeasure:
    """Draw a measure from an existing generator (flat simplex weights, uniform angles)."""
    if n_atoms < 1:
        raise ValueError("n_atoms must be >= 1")
    cuts = np.sort(rng.uniform(size=n_atoms - 1))
    weights = np.diff(np.concatenate(([0.0], cuts, [1.0])))
    angles = rng.uniform(0.0, TWO_PI, size=n_atoms)
    # spacings sum to 1 only up to rounding; renormalize so the invariant is exact-ish
    weights = weights / math.fsum(weights)
    return HerglotzMeasure.from_arrays(weights, angles)


def sample_measure(rng_seed: int | Sequence[int], n_atoms: int) -> HerglotzMeasure:
    """Deterministic random measure for ``rng_seed`` (an int or a tuple of ints)."""
    return draw_measure(np.random.default_rng(rng_seed), n_atoms)


@dataclass(frozen=True)
class LemmaSuiteResult:
    """Worst-case slack over a Monte-Carlo sweep of sampled measures.

    ``max_r1..max_r3`` are the largest values returned by :func:`lemma_residuals`;
    ``max_roundtrip`` is the largest ``|p_j - reconstructed p_j|`` (j = 2, 3)
    after :func:`disk_witness` followed by :func:`disk_reconstruct`.
    """

    samples: int
    seed: int
    max_r1: float
    max_r2: float
    max_r3: float
    max_roundtrip: float
    max_abs_x: float
    max_abs_z: float
    worst: dict

    def passed(self, tol: float = 1e-12) -> bool:
        return max(self.max_r1, self.max_r2, self.max_r3, self.max_roundtrip) <= tol

    def violations(self, tol: float = 1e-12) -> dict[str, HerglotzMeasure]:
        values = {"r1": self.max_r1, "r2": self.max_r2, "r3": self.max_r3,
                  "roundtrip": self.max_roundtrip}
        return {k: self.worst[k] for k, v in values.items() if v > tol}


def lemma_suite(samples: int, seed: int, max_atoms: int = 6, N: int = 4) -> LemmaSuiteResult:
    """Check the coefficient estimates and the witness round trip on random measures.

    Atom counts are drawn uniformly from ``1..max_atoms`` so that the boundary
    cases (one atom: ``|p_1| = 2``; two atoms: ``|x| = 1``) are exercised too.
    For every ``1 <= k < n <= N`` the weighted estimate is checked at
    ``mu in {0, 1/2, 1}`` and one uniform draw.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    maxima = dict.fromkeys(("r1", "r2", "r3", "roundtrip", "x", "z"), -math.inf)
    worst: dict = {}
    pairs = [(n, k) for n in range(2, N + 1) for k in range(1, n)]
    for _ in range(samples):
        measure = draw_measure(rng, int(rng.integers(1, max_atoms + 1)))
        u = float(rng.uniform())
        p = coeffs_from_measure(measure, N)
        found = {"r1": max(abs(v) for v in p) - 2.0, "r2": -math.inf, "r3": -math.inf}
        for n, k in pairs:
            for mu in (0.0, 0.5, 1.0, u):
                _, r2, r3 = lemma_residuals(p, n, k, mu)
                found["r2"] = max(found["r2"], r2)
                found["r3"] = max(found["r3"], r3)
        wit = disk_witness(p[0], p[1], p[2])
        q2, q3 = disk_reconstruct(p[0], wit.x, wit.z)
        found["roundtrip"] = max(abs(q2 - p[1]), abs(q3 - p[2]))
        found["x"], found["z"] = abs(wit.x), abs(wit.z)
        for key, val in found.items():
            if val > maxima[key]:
                maxima[key] = val
                worst[key] = measure
    return LemmaSuiteResult(samples, seed, maxima["r1"], maxima["r2"], maxima["r3"],
                            maxima["roundtrip"], maxima["x"], maxima["z"], worst)
