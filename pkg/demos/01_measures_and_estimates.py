"""
Atomic measures, Toeplitz feasibility and coefficient estimates
================================================================

Every Caratheodory function is an average of half-plane maps against a
probability measure on the circle.  With finitely many atoms the
coefficients are simply p_n = 2 * sum w_j exp(i n theta_j).
"""

import numpy as np

from hankelbounds import (
    HerglotzMeasure, coeffs_from_measure, is_feasible, disk_reconstruct,
    disk_witness, lemma_suite, toeplitz_matrix,
)

# a three-atom measure
mu = HerglotzMeasure(((0.5, 0.0), (0.3, 2.0), (0.2, 4.5)))
p = coeffs_from_measure(mu, 4)
print("p_1..p_4 =", np.round(np.array(p.p), 4))

# the Toeplitz matrix built from (2, p_1, ..., p_4) is positive semidefinite
T = toeplitz_matrix(p)
print("smallest eigenvalue:", np.linalg.eigvalsh(T).min())
print("feasible:", is_feasible(p))

# push p_2 outside the disk of radius 2 and feasibility is lost
print("feasible after p_2 -> 2.5:", is_feasible((p[0], 2.5, p[2], p[3])))

# (p_1, p_2, p_3) is recovered from p_1 and two points x, z of the closed disk
w = disk_witness(p[0], p[1], p[2])
print(f"|x| = {abs(w.x):.6f}, |z| = {abs(w.z):.6f}")
q2, q3 = disk_reconstruct(p[0], w.x, w.z)
print("round trip error:", max(abs(q2 - p[1]), abs(q3 - p[2])))

# Monte-Carlo sweep of the estimates |p_n| <= 2 and |p_n - mu p_k p_{n-k}| <= 2
res = lemma_suite(20_000, seed=7)
print(f"largest slack over 20k measures: {max(res.max_r1, res.max_r2, res.max_r3):.2e}")
print(f"largest round trip error: {res.max_roundtrip:.2e}")
