"""
Epsilon duality in the 3-complex: divergence-free symmetric 2-tensors are
double divergences of tensors with Riemann symmetry.

Contravariant fields share the covariant container (flat identity metric).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .cohomology import NoSolution, preimage_solve
from .complex import check_member, differential
from .errors import InvariantViolation, MembershipError, NotClosedError, PreconditionError
from .tensor import PolyTensor, divergence, epsilon_contract, symmetrize


def _require_symmetric_2(T: PolyTensor) -> None:
    if T.degree != 2:
        raise PreconditionError(f"expected a 2-tensor, got degree {T.degree}")
    if symmetrize(T, (0, 1)) != T:
        raise MembershipError("tensor is not symmetric")


def dualize_symmetric(T: PolyTensor) -> PolyTensor:
    """``tau_{m_1..m_{D-1} n_1..n_{D-1}} = T^{mn} eps_{m m_1..} eps_{n n_1..}``."""
    _require_symmetric_2(T)
    tau = epsilon_contract(epsilon_contract(T, [0]), [0])
    check_member(3, tau, "dual tensor")
    return tau


def codualize(tau: PolyTensor) -> PolyTensor:
    """``eps^{m m_1..} eps^{n n_1..} tau_{m_1.. n_1..}``; inverts :func:`dualize_symmetric` up to ``((D-1)!)^2``."""
    D = tau.D
    if tau.degree != 2 * (D - 1):
        raise PreconditionError(f"expected degree {2 * (D - 1)}, got {tau.degree}")
    first = list(range(D - 1))
    # each contraction against the leading epsilon slots costs (-1)^(D-1); the two cancel
    return epsilon_contract(epsilon_contract(tau, first), first)


def undualize(rho: PolyTensor) -> PolyTensor:
    """``R^{m1 m2 n1 n2} = eps^{m1 m2 m3..mD} eps^{n1 n2 n3..nD} rho_{m3..mD n3..nD}``."""
    D = rho.D
    if D < 2:
        raise PreconditionError("duality to Riemann tensors needs D >= 2")
    if rho.degree != 2 * (D - 2):
        raise PreconditionError(f"expected degree {2 * (D - 2)}, got {rho.degree}")
    check_member(3, rho, "rho")
    head = list(range(D - 2))
    R = epsilon_contract(epsilon_contract(rho, head), head)
    check_member(3, R, "undualized tensor")
    return R


def reduce_riemann(R: PolyTensor) -> PolyTensor:
    """``eps_{m1 m2 m3..} eps_{n1 n2 n3..} R^{m1 m2 n1 n2}``; inverts :func:`undualize` up to ``(2 (D-2)!)^2``."""
    if R.degree != 4:
        raise PreconditionError(f"expected a 4-tensor, got degree {R.degree}")
    return epsilon_contract(epsilon_contract(R, [0, 1]), [0, 1])


def dual_roundtrip_constant(D: int) -> int:
    return factorial(D - 1) ** 2


def undual_roundtrip_constant(D: int) -> int:
    return (2 * factorial(D - 2)) ** 2


def double_divergence(R: PolyTensor) -> PolyTensor:
    """``T^{mn} = d_l d_r R^{l m r n}``."""
    if R.degree != 4:
        raise PreconditionError(f"expected a 4-tensor, got degree {R.degree}")
    # d_r R^{l m r n}: divergence on slot 2 leaves (l, m, n); then d_l on slot 0
    return divergence(divergence(R, 2), 0)


def _potential_raw(T: PolyTensor) -> PolyTensor:
    tau = dualize_symmetric(T)
    if differential(3, tau, check=False):
        raise InvariantViolation("dual of a divergence-free tensor is not d-closed")
    try:
        rho = preimage_solve(3, tau, k=1)
    except NoSolution as exc:
        raise InvariantViolation(f"vanishing cohomology violated: {exc}") from exc
    return undualize(rho)


@lru_cache(maxsize=None)
def potential_constant(D: int) -> Fraction:
    """c with ``double_divergence(undualize(rho)) = c T`` along the pipeline, measured on a constant T."""
    zero = (0,) * D
    T = PolyTensor(D, 2, {((0, 0), zero): 1})
    TT = double_divergence(_potential_raw(T))
    c = TT.terms.get(((0, 0), zero), Fraction(0))
    if not c or TT != T * c:
        raise InvariantViolation(f"pipeline is not proportional to the identity at D={D}")
    return c


def divergence_free_potential(T: PolyTensor) -> PolyTensor:
    """R with Riemann symmetry and ``d_l d_r R^{l m r n} = T^{mn}``."""
    _require_symmetric_2(T)
    if divergence(T, 0):
        raise NotClosedError("T is not divergence-free")
    if not T:
        return PolyTensor.zero(T.D, 4)
    R = _potential_raw(T) / potential_constant(T.D)
    if double_divergence(R) != T:
        raise InvariantViolation("reconstructed potential does not reproduce T")
    check_member(3, R, "potential")
    return R
