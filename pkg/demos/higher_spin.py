"""
Free higher-spin gauge fields
=============================

A spin-S gauge field is a symmetric rank-S tensor with gauge symmetry
h -> h + d eps. Its curvature is d^S h in the (S+1)-complex, and the
generalized Poincare lemma gives the converse statements checked below.
"""

import random

from ncomplex import (
    SpinField,
    bianchi_check,
    curvature,
    curvature_characterization,
    gauge_invariance_check,
    gauge_transform,
    pure_gauge_reconstruct,
)
from ncomplex.generate import random_typed
from ncomplex.tensor import PolyTensor

rng = random.Random(2)
D = 3

for S in (1, 2, 3):
    h = SpinField(S, random_typed(rng, S + 1, D, S, 3))
    eps = random_typed(rng, S + 1, D, S - 1, 3)
    R = curvature(h)
    print(f"S={S}: curvature rank {R.degree}, {len(R.terms)} terms")
    print("   gauge invariant:", gauge_invariance_check(h, eps))
    print("   Bianchi identity:", bianchi_check(R, S))

    # a field with zero curvature is pure gauge
    flat = gauge_transform(SpinField(S, PolyTensor.zero(D, S)), eps)
    eps2 = pure_gauge_reconstruct(flat)
    print("   flat field is a gauge transform of zero:", gauge_transform(SpinField(S, PolyTensor.zero(D, S)), eps2) == flat)

    # a Bianchi-closed tensor is the curvature of some field
    print("   curvature recovered from R:", curvature(curvature_characterization(R, S)) == R)
