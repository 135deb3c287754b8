"""The rational dual certificate and the O(a^2) upper bound.

Three multipliers alpha, beta, gamma weight the frequency rows and two
shapes of union rows of the f(n,a) program.  When every per-variable
coefficient c_k reaches 1 the weighted right-hand sides certify
f(n,a) <= fbar(n,a); all arithmetic is exact rationals so the checks
are proofs, not approximations.
"""

import math

from frankl_lab import (bar_f, bar_f_diag, bound_table, make_certificate,
                        verify_certificate)

cert = make_certificate(7)
print("multipliers at n=7:")
print("  alpha =", cert.alpha)
print("  beta  =", cert.beta)
print("  gamma =", cert.gamma)

print("\nper-cardinality coefficients c_k:")
for k, c in sorted(cert.coefficients.items()):
    print(f"  c_{k} = {c}")

report = verify_certificate(cert)
print("\nall checks pass:", report.passed)
print("slack of c_4 >= 1:", [c.slack for c in report.checks if c.name == "c_4 >= 1"][0])

# gamma changes sign at n = 7: below that the combination is not a
# valid certificate, and the report flags it instead of raising.
low = verify_certificate(make_certificate(6))
print("\nat n=6:", [c.name for c in low.checks if not c.passed], "->", low.notes[0])

# The certified value, and the closed form it collapses to on n = a.
print("\nfbar(7,7) =", bar_f(7, 7), "=", bar_f_diag(7))
print("floor:", math.floor(bar_f(7, 7)))

# The table of diagonal floors; note the exact a=9 entry.
table = bound_table(7, 16)
print("\nfloor(fbar(a,a)) for a = 7..16:")
for a, v in table.rows:
    print(f"  {a:3d}  {v}")
for note in table.notes:
    print("note:", note)
