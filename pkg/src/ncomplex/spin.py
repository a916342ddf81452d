"""
Spin-S gauge fields as symmetric degree-S tensors in the (S+1)-complex.

The curvature is ``d^S h`` (two rows of S cells) and is gauge invariant because
``d^{S+1} = 0``. Trace conditions on fields and parameters are not imposed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import NoSolution, preimage_solve
from .complex import check_member, d_power, differential
from .errors import InvariantViolation, MembershipError, NotClosedError, PreconditionError
from .tensor import PolyTensor, symmetrize


def _is_symmetric(T: PolyTensor) -> bool:
    return T.degree < 2 or symmetrize(T, range(T.degree)) == T


@dataclass(frozen=True)
class SpinField:
    S: int
    h: PolyTensor

    def __post_init__(self):
        if self.S < 1:
            raise PreconditionError(f"spin must be positive, got {self.S}")
        if self.h.degree != self.S:
            raise PreconditionError(f"spin-{self.S} field needs degree {self.S}, got {self.h.degree}")
        if not _is_symmetric(self.h):
            raise MembershipError("gauge field is not totally symmetric")

    @property
    def N(self) -> int:
        return self.S + 1

    @property
    def D(self) -> int:
        return self.h.D


def gauge_transform(field: SpinField, epsilon: PolyTensor) -> SpinField:
    """``h + d_(a1 eps_a2..aS)``."""
    if epsilon.degree != field.S - 1 or epsilon.D != field.D:
        raise PreconditionError(
            f"gauge parameter must have degree {field.S - 1} in D={field.D}, "
            f"got degree {epsilon.degree} in D={epsilon.D}"
        )
    if not _is_symmetric(epsilon):
        raise MembershipError("gauge parameter is not totally symmetric")
    return SpinField(field.S, field.h + differential(field.N, epsilon, check=False))


def curvature(field: SpinField) -> PolyTensor:
    return d_power(field.N, field.h, field.S, check=False)


def gauge_invariance_check(field: SpinField, epsilon: PolyTensor) -> bool:
    if curvature(gauge_transform(field, epsilon)) != curvature(field):
        raise InvariantViolation("curvature changed under a gauge transformation")
    return True


def bianchi_check(R: PolyTensor, S: int) -> bool:
    """Whether ``dR = 0`` in the (S+1)-complex; R must be curvature-shaped."""
    if R.degree != 2 * S:
        raise PreconditionError(f"curvature of spin {S} has degree {2 * S}, got {R.degree}")
    check_member(S + 1, R, "curvature")
    return not differential(S + 1, R, check=False)


def pure_gauge_reconstruct(field: SpinField) -> PolyTensor:
    """Gauge parameter eps with ``d eps = h`` for a field of zero curvature."""
    if curvature(field):
        raise NotClosedError("field has nonzero curvature")
    if not field.h:
        return PolyTensor.zero(field.D, field.S - 1)
    try:
        eps = preimage_solve(field.N, field.h, k=field.S)
    except NoSolution as exc:
        raise InvariantViolation(f"flat field is not pure gauge: {exc}") from exc
    if differential(field.N, eps, check=False) != field.h:
        raise InvariantViolation("reconstructed gauge parameter does not reproduce h")
    return eps


def curvature_characterization(R: PolyTensor, S: int) -> SpinField:
    """A spin-S field whose curvature is the Bianchi-closed tensor R."""
    if not bianchi_check(R, S):
        raise NotClosedError("R does not satisfy the Bianchi identity dR = 0")
    if not R:
        return SpinField(S, PolyTensor.zero(R.D, S))
    try:
        h = preimage_solve(S + 1, R, k=1)
    except NoSolution as exc:
        raise InvariantViolation(f"Bianchi-closed tensor is not a curvature: {exc}") from exc
    field = SpinField(S, h)
    if curvature(field) != R:
        raise InvariantViolation("reconstructed field does not reproduce R")
    return field
