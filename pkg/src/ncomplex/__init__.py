"""Exact N-complexes of irreducible polynomial tensor fields on R^D."""

from .cohomology import (
    CohomologyReport,
    NoSolution,
    cohomology_basis,
    cohomology_dim,
    preimage_solve,
    scan_cohomology,
)
from .complex import (
    ComplexSpace,
    DifferentialMatrix,
    d_power,
    differential,
    differential_by_projection,
    enumerate_space,
    is_member,
    matrix_of_d_power,
)
from .duality import divergence_free_potential, dualize_symmetric, undualize
from .errors import (
    InvariantViolation,
    MembershipError,
    NotClosedError,
    PreconditionError,
)
from .generate import generate_random
from .homotopy import homotopy_eq4, homotopy_eq5, homotopy_vs_solver_crosscheck
from .spin import (
    SpinField,
    bianchi_check,
    curvature,
    curvature_characterization,
    gauge_invariance_check,
    gauge_transform,
    pure_gauge_reconstruct,
)
from .tensor import (
    LeviCivita,
    PolyTensor,
    epsilon_contract,
    graded_product,
    partial_derivative,
    radial_rescale_integral,
)
from .young import (
    YoungDiagram,
    YoungProjector,
    apply_projector,
    build_projector,
    diagram_for_degree,
    hook_dimension,
    is_well_filled,
)

__version__ = "0.1.0"
