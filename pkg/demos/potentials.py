"""
Potentials from closed-form homotopies
======================================

Two classical reconstruction problems solved by explicit radial
integrals: a symmetric 2-tensor from its symmetrized gradient, and a
metric perturbation from its linearized Riemann tensor. A third section
writes a divergence-free symmetric tensor as a double divergence.
"""


from ncomplex import d_power, homotopy_eq4, homotopy_eq5, divergence_free_potential
from ncomplex.duality import double_divergence, dualize_symmetric
from ncomplex.generate import generate_random
from ncomplex.homotopy import linearized_curvature, symmetrized_gradient
from ncomplex.tensor import divergence

# ---------------------------------------------------------------------------
# T_abc = d_(a xi_bc).  The homotopy recovers some xi with the same gradient.
T = generate_random("closed-eq4", D=3, degree_bound=2, seed=1)
xi = homotopy_eq4(T)
print("symmetrized gradient reproduced:", symmetrized_gradient(xi) == T)

# ---------------------------------------------------------------------------
# R = linearized curvature of h0.  The reconstructed h differs from h0 by a
# gauge term, so the curvatures agree and d^2 (h - h0) = 0.
h0 = generate_random("symmetric", D=3, degree_bound=3, seed=5, p=2)
R = linearized_curvature(h0)
h = homotopy_eq5(R)
print("curvature reproduced:", linearized_curvature(h) == R)
print("h - h0 is pure gauge:", d_power(3, h - h0, 2).is_zero())

# ---------------------------------------------------------------------------
# Divergence-free T in D=2: its epsilon dual is closed, and a Riemann-symmetric
# potential R with d_l d_r R^{l m r n} = T exists.
T = generate_random("div-free", D=2, degree_bound=2, seed=3)
print("\ndivergence of T:", divergence(T, 0))
print("dual of T:", dualize_symmetric(T))
R = divergence_free_potential(T)
print("double divergence of the potential equals T:", double_divergence(R) == T)
