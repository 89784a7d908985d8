"""
A Zalcman bound that does not hold
==================================

For convex maps of order alpha the stated J_3 bound is
(1-alpha)(127-109 alpha)/360.  The search finds feasible points above it,
which makes the bound false.  Applying the triangle inequality to the same
decomposition gives a denominator of 180, and that bound is respected.
"""

from fractions import Fraction

from hankelbounds import J3, ClassSpec, Kind, SearchConfig, class_coeffs, is_feasible, maximize, zalcman

for a in (Fraction(-1, 2), Fraction(0), Fraction(3, 4)):
    rep = maximize(SearchConfig(ClassSpec(Kind.CONVEX, a), J3, restarts=20))
    doubled = 2 * rep.bound.value
    print(f"alpha={str(a):5s} found {rep.best_magnitude:.6f}  stated {float(rep.bound.value):.6f}  "
          f"x2 {float(doubled):.6f}  respects stated: {rep.respects_bound}")

# an explicit witness at alpha = -1/2, checked directly
rep = maximize(SearchConfig(ClassSpec(Kind.CONVEX, Fraction(-1, 2)), J3, restarts=20))
p = rep.best_p
print("\nwitness measure:", [(round(w, 6), round(t, 6)) for w, t in rep.best_measure.atoms])
print("feasible:", is_feasible(p))
print("|J_3| from the coefficient map:", abs(zalcman(3, class_coeffs(ClassSpec(Kind.CONVEX, -0.5), p)).value))
