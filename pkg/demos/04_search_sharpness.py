"""
How close can feasible points get to the bounds?
================================================

A multistart Nelder-Mead search runs over four-atom measures.  Every point
it visits is feasible, so the best value is a certified lower bound for the
true maximum.  Zalcman bounds are reached.  The H_{3,1} bounds are not claimed
to be sharp, and the search shows how much room is left.
"""

from hankelbounds import H31, J2, J3, ClassSpec, Kind, SearchConfig, maximize

cases = [
    (Kind.STARLIKE, J2),
    (Kind.BOUNDED_TURNING, J3),
    (Kind.STARLIKE, H31),
    (Kind.CONVEX, H31),
    (Kind.BOUNDED_TURNING, H31),
]
for kind, fn in cases:
    rep = maximize(SearchConfig(ClassSpec(kind, 0), fn, restarts=40))
    print(f"{kind.value:16s} {fn.label:4s} best {rep.best_magnitude:.10f}  "
          f"bound {float(rep.bound.value):.10f}  gap {rep.gap:.3e}")

# the J_2 maximizer for starlike maps is the point mass: p_n = 2 (Koebe)
rep = maximize(SearchConfig(ClassSpec(Kind.STARLIKE, 0), J2, restarts=40))
print("\nbest p for starlike J_2:", [complex(round(v.real, 6), round(v.imag, 6)) for v in rep.best_p])
