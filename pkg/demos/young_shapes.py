"""
Young shapes and their projectors
=================================

Each degree p of an N-complex carries one Young shape: as many full
rows of length N-1 as fit, plus a remainder row. This walks through the
shapes for N=3, builds the projectors and compares their ranks with the
hook-content count.
"""

from ncomplex import build_projector, diagram_for_degree, hook_dimension, is_well_filled

N, D = 3, 3

# the shapes Y^3_p for p = 0..7; well-filled ones have no ragged last row
for p in range(8):
    dg = diagram_for_degree(N, p)
    tag = "well-filled" if is_well_filled(N, p) else ""
    print(f"p={p}  shape {str(dg):10s} columns {dg.column_lengths}  {tag}")

# A shape with more than D rows cannot be filled, so the space is zero.
# For D=3 this happens from p=7 on.
print()
for p in range(8):
    dg = diagram_for_degree(N, p)
    P = build_projector(dg, D)
    print(f"{str(dg):10s} hook count {hook_dimension(dg, D):3d}  projector rank {P.rank():3d}")

# The projector is idempotent: check on the (2,2) shape, the Riemann symmetry class.
P = build_projector(diagram_for_degree(3, 4), 3)
print("\n(2,2) projector idempotent:", P.verify_idempotent(), " rank", P.rank())
