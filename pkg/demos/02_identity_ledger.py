"""
Checking closed-form expansions exactly
========================================

Each class has an expansion of H_{3,1} as a polynomial in p_1..p_4 and
alpha.  We build both sides with exact rational arithmetic and look at the
residual.  A handful of the printed forms do not hold; for each there is a
corrected variant that does.
"""

from hankelbounds import polyid

for report in polyid.verify_all():
    flag = "ok " if report.holds else "BAD"
    kind = "" if report.printed else "  (corrected)"
    print(f"{flag} {report.name:45s} residual terms: {report.residual_term_count}{kind}")

# the offending term of the second convex decomposition
res = polyid.verify_identity("convex_h31_decomposition_second").residual
print("\nresidual of the second convex decomposition:")
for exps, c in res.terms():
    mono = " ".join(f"{s}^{e}" for s, e in zip(res.symbols, exps) if e)
    print(f"  {c} * {mono}")

# the coefficient convention for convex maps: only a_k / k reproduces the expansion
for label, rep in polyid.alexander_convention_report().items():
    print(f"convex coefficients as {label}: holds={rep.holds}, residual terms={rep.residual_term_count}")
