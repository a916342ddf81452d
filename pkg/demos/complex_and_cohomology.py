"""
The differential, nilpotency and cohomology
===========================================

d takes a field of shape Y^N_p to Y^N_{p+1}: differentiate, then project.
Applying it N times gives zero. The generalized cohomology
ker d^k / im d^(N-k) is computed here by exact rank counts.
"""

import random

from ncomplex import cohomology_dim, d_power, differential, enumerate_space, scan_cohomology
from ncomplex.cohomology import reports_to_csv
from ncomplex.generate import random_typed

rng = random.Random(0)

# --- d^N = 0 -----------------------------------------------------------------
# A random vector field (p=1) in the 3-complex on R^3 with cubic coefficients.
v = random_typed(rng, 3, 3, 1, 3)
dv = differential(3, v)
print("d v has", len(dv.terms), "terms, degree", dv.degree)
print("d^2 v is nonzero:", bool(d_power(3, v, 2)))
print("d^3 v is zero:", d_power(3, v, 3).is_zero())

# For p=0 and N=3, d^2 f is the (symmetric) Hessian.
f = random_typed(rng, 3, 2, 0, 3)
H = d_power(3, f, 2)
print("Hessian symmetric:", all(H.component((a, b)) == H.component((b, a)) for a in range(2) for b in range(2)))

# --- sizes of the spaces -----------------------------------------------------
for p in range(5):
    print(f"dim Omega^{p} at polynomial degree 2:", enumerate_space(3, 3, p, 2).dim)

# --- Killing vectors ---------------------------------------------------------
# H^1_(1) of the 3-complex: vector fields with vanishing symmetrized gradient.
# Translations live at degree 0, rotations at degree 1.
print()
for D in (2, 3):
    dims = [cohomology_dim(3, D, 1, 1, g).dim_H for g in range(4)]
    print(f"D={D}: Killing vectors by degree {dims}, total {sum(dims)}")

# --- a scan --------------------------------------------------------------------
# At well-filled degrees (p = 0 mod N-1, p > 0) every entry vanishes.
# At p=3 for N=3, D=3 the cohomology is infinite dimensional: it grows with g.
reports = scan_cohomology(3, 3, 4, 3)
print()
print(reports_to_csv(reports)[:600], "...")
print("H^3_(1) by degree:", [cohomology_dim(3, 3, 3, 1, g).dim_H for g in range(5)])
