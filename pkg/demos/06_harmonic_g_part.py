"""
The co-analytic part of the harmonic class
===========================================

For f = h + conj(g) with g' = z h', the g coefficients start with b_1 = 0,
so the 3x3 Hankel determinant collapses to b_3 b_4 - b_3^3 - b_5 / 4.
Its bound (1 - alpha)/30 is attained.
"""

from fractions import Fraction

from hankelbounds import H31_G, ClassSpec, Kind, SearchConfig, harmonic_m_coeffs, hankel, maximize

g = harmonic_m_coeffs(Fraction(1, 3), (Fraction(1), Fraction(1, 2), Fraction(-1, 3), 0)).g
b = g
print("b =", [str(x) for x in g])
print("H_{3,1}(g) =", hankel(3, 1, g).value, "=", b[2] * b[3] - b[2] ** 3 - b[4] / 4)

for a in (Fraction(-1, 2), Fraction(0), Fraction(1, 2)):
    rep = maximize(SearchConfig(ClassSpec(Kind.HARMONIC_M, a), H31_G, restarts=30))
    print(f"alpha={str(a):5s} best {rep.best_magnitude:.15f}  bound {rep.bound.value} = "
          f"{float(rep.bound.value):.15f}")

# attained at p_1 = 0, |p_3| = 2: equal atoms at the cube roots of unity, up to rotation
rep = maximize(SearchConfig(ClassSpec(Kind.HARMONIC_M, 0), H31_G, restarts=30))
print("maximizing p_1, p_3:", [complex(round(v.real, 6), round(v.imag, 6)) for v in (rep.best_p[0], rep.best_p[2])])
