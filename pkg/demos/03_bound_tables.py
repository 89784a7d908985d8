"""
Bound tables across alpha
=========================

Bounds are exact rationals in alpha.  They shrink to zero as alpha -> 1
and the harmonic g-part bound comes from maximizing a cubic in c = |p_1|.
"""

from fractions import Fraction

from hankelbounds import ClassSpec, Kind, bound_h31, bound_zalcman, chi_max, reference_bounds
from hankelbounds.bounds import alternative_g_bound

print("alpha   S*(a)        K(a)          R(a)")
for k in range(0, 5):
    a = Fraction(k, 5)
    row = [bound_h31(ClassSpec(kind, a)).value
           for kind in (Kind.STARLIKE, Kind.CONVEX, Kind.BOUNDED_TURNING)]
    print(f"{str(a):6s}", "  ".join(f"{str(v):12s}" for v in row))

print("\nZalcman J_2, J_3 at alpha = 0")
for kind in (Kind.STARLIKE, Kind.CONVEX, Kind.BOUNDED_TURNING):
    spec = ClassSpec(kind, 0)
    print(f"  {kind.value:16s}", bound_zalcman(spec, 2).value, bound_zalcman(spec, 3).value)

# harmonic class at the lower end of its range
h, g = bound_h31(ClassSpec(Kind.HARMONIC_M, Fraction(-1, 2)))
older = reference_bounds("C")[0].value
print(f"\nharmonic h-part at -1/2: {h.value} = {float(h.value):.6f} (older constant {older:.6f})")
print(f"harmonic g-part at -1/2: {g.value}")

# the cubic is maximal at c = 0 for every admissible alpha
print("chi_max at -1/2, 0, 0.9:", [str(chi_max(Fraction(x))[0]) for x in ("-1/2", "0", "0.9")])
print("grouping in p-space instead gives", alternative_g_bound(Fraction(-1, 2)), "> 1/20")
