"""
Two closed-form homotopies, evaluated exactly on polynomial fields.

* :func:`homotopy_eq4` inverts ``d`` on symmetric 3-tensors of the 4-complex
  whose ``d^3`` vanishes, returning a symmetric 2-tensor xi with
  ``d_(a xi_bc) = T_abc``.
* :func:`homotopy_eq5` inverts the linearized Riemann operator on
  ``(2,2)``-type tensors with ``dR = 0`` in the 3-complex.

In the 3-tensor formula the antisymmetrization brackets are plain alternating
sums (``d_[m T_a] = d_m T_a - d_a T_m``); that is the reading under which its
explicit 1/2 closes the identity. The Riemann formula and both postconditions
use averaging brackets. The line integrals along ``t -> t x`` become rational
weights per homogeneous degree, see :func:`ncomplex.tensor.radial_weight`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .complex import d_power, differential, is_member
from .errors import MembershipError, NotClosedError, PreconditionError
from .tensor import (
    PolyTensor,
    antisymmetrize,
    contract_with_x,
    partial_derivative,
    radial_rescale_integral,
    symmetrize,
)


def _require_symmetric(T: PolyTensor, degree: int, what: str) -> None:
    if T.degree != degree:
        raise PreconditionError(f"{what} must have tensor degree {degree}, got {T.degree}")
    if symmetrize(T, range(degree)) != T:
        raise MembershipError(f"{what} is not totally symmetric")


def _alternating_sum(T: PolyTensor, slots) -> PolyTensor:
    return antisymmetrize(T, slots) * factorial(len(slots))


def homotopy_eq4(T: PolyTensor) -> PolyTensor:
    """
    xi_ab = int T_abl(tx) x^l
          + 1/2 int int (d_[m T_a]bl + d_[m T_b]al)(t'x) x^m x^l
          + int int int d_[m d_[r T_a]b]l (t''x) x^l x^m x^r
    """
    _require_symmetric(T, 3, "T")
    if d_power(4, T, 3, check=False):
        raise NotClosedError("d^3 T != 0 in the 4-complex")

    # first term; slots (a, b, l)
    xi = contract_with_x(radial_rescale_integral(T, 1), 2)

    # second term; dT has slots (m, a, b, l)
    dT = partial_derivative(T)
    A = _alternating_sum(dT, (0, 1))
    X = A + A.permute_slots((0, 2, 1, 3))
    second = radial_rescale_integral(X, 2)
    second = contract_with_x(contract_with_x(second, 3), 0)
    xi = xi + second * Fraction(1, 2)

    # third term; ddT has slots (m, r, a, b, l); inner bracket [r a], outer [m b]
    ddT = partial_derivative(dT)
    W = _alternating_sum(_alternating_sum(ddT, (1, 2)), (0, 3))
    third = radial_rescale_integral(W, 3)
    third = contract_with_x(contract_with_x(contract_with_x(third, 4), 1), 0)
    return xi + third


def symmetrized_gradient(xi: PolyTensor) -> PolyTensor:
    """``d_(a xi_bc)`` with weight one; this is d of the 4-complex on degree 2."""
    return symmetrize(partial_derivative(xi), range(xi.degree + 1))


def linearized_curvature(h: PolyTensor) -> PolyTensor:
    """``R_{a1 a2 b1 b2} = 4 d_[b2 d_[a2 h_a1] b1]`` for a symmetric 2-tensor h."""
    _require_symmetric(h, 2, "h")
    # ddh slots: (b2, a2, a1, b1); move to (a1, a2, b1, b2)
    W = partial_derivative(partial_derivative(h)).permute_slots((3, 1, 0, 2))
    return antisymmetrize(antisymmetrize(W, (0, 1)), (2, 3)) * 4


def homotopy_eq5(R: PolyTensor) -> PolyTensor:
    """``h_ab = int_0^1 dt int_0^t dt' t' x^l x^m R_{a l b m}(t'x)``."""
    if R.degree != 4:
        raise PreconditionError(f"R must have tensor degree 4, got {R.degree}")
    if not is_member(3, R):
        raise MembershipError("R does not have the (2,2) symmetry")
    if differential(3, R, check=False):
        raise NotClosedError("dR != 0 in the 3-complex")
    W = radial_rescale_integral(R, 2, weighted=True)
    return contract_with_x(contract_with_x(W, 3), 1)


@lru_cache(maxsize=None)
def curvature_ratio(D: int) -> Fraction:
    """The constant c with ``d^2 h = c * linearized_curvature(h)`` in the 3-complex."""
    if D < 2:
        raise PreconditionError("curvature vanishes identically for D < 2")
    # reference field h_11 = x0^2, whose curvature has R_0101 != 0
    h = PolyTensor(D, 2, {((1, 1), (2,) + (0,) * (D - 1)): 1})
    lin = linearized_curvature(h)
    dd = d_power(3, h, 2)
    key, v = next(lin.items())
    c = dd.terms.get(key, Fraction(0)) / v
    if dd != lin * c:
        raise AssertionError("d^2 is not proportional to the linearized curvature")
    return c


def homotopy_vs_solver_crosscheck(case: str, tensor: PolyTensor) -> bool:
    """
    Whether the closed-form homotopy and the generic linear solve give
    potentials in the same coset modulo the kernel of the relevant d-power.
    """
    from .cohomology import preimage_solve

    if case == "eq4":
        xi_h = homotopy_eq4(tensor)
        xi_s = preimage_solve(4, tensor, k=3)
        return not differential(4, xi_h - xi_s, check=False)
    if case == "eq5":
        h_h = homotopy_eq5(tensor)
        c = curvature_ratio(tensor.D)
        # d^2 h_h = c R, so compare against the solver's preimage of c R
        h_s = preimage_solve(3, tensor * c, k=1)
        return not d_power(3, h_h - h_s, 2, check=False)
    raise PreconditionError(f"unknown case {case!r}; expected 'eq4' or 'eq5'")
