from fractions import Fraction

import pytest

from ncomplex import complex as cx
from ncomplex.errors import MembershipError, NotClosedError, PreconditionError
from ncomplex.homotopy import (
    curvature_ratio,
    homotopy_eq4,
    homotopy_eq5,
    homotopy_vs_solver_crosscheck,
    linearized_curvature,
    symmetrized_gradient,
)
from ncomplex.tensor import PolyTensor, monomials, symmetrize

from conftest import golden, random_symmetric2


def random_symmetric3(rng, D, gmax):
    terms = {}
    for g in range(gmax + 1):
        for e in monomials(D, g):
            for a in range(D):
                for b in range(a, D):
                    for c in range(b, D):
                        v = rng.randint(-2, 2)
                        if v:
                            for idx in {(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)}:
                                terms[idx, e] = v
    return PolyTensor(D, 3, terms)


def test_constant_input_keeps_only_the_first_term(rng):
    D = 3
    c = random_symmetric3(rng, D, 0)
    xi = homotopy_eq4(c)
    expected = {}
    for (idx, _), v in c.items():
        e = [0] * D
        e[idx[2]] = 1
        key = (idx[:2], tuple(e))
        expected[key] = expected.get(key, 0) + v
    assert xi == PolyTensor(D, 2, expected)
    assert symmetrized_gradient(xi) == c


@pytest.mark.parametrize("D", [2, 3])
def test_eq4_inverts_the_symmetrized_gradient(D, rng):
    for _ in range(4):
        xi0 = random_symmetric2(rng, D, 3)
        T = symmetrized_gradient(xi0)
        xi = homotopy_eq4(T)
        assert symmetrize(xi, (0, 1)) == xi
        assert symmetrized_gradient(xi) == T
        assert homotopy_vs_solver_crosscheck("eq4", T)


def test_eq4_zero_and_linearity(rng):
    assert homotopy_eq4(PolyTensor.zero(3, 3)).is_zero()
    a = symmetrized_gradient(random_symmetric2(rng, 3, 2))
    b = symmetrized_gradient(random_symmetric2(rng, 3, 3))
    assert homotopy_eq4(a * 2 - b) == homotopy_eq4(a) * 2 - homotopy_eq4(b)


def test_eq4_errors(rng):
    with pytest.raises(MembershipError):
        homotopy_eq4(PolyTensor.constant(2, {(0, 0, 1): 1}))
    with pytest.raises(PreconditionError):
        homotopy_eq4(PolyTensor.constant(2, {(0, 1): 1, (1, 0): 1}))
    # a generic cubic symmetric 3-tensor is not closed
    T = random_symmetric3(rng, 2, 3)
    assert cx.d_power(4, T, 3)
    with pytest.raises(NotClosedError):
        homotopy_eq4(T)


def test_eq5_on_a_single_constant_component():
    R = PolyTensor.constant(2, {(0, 1, 0, 1): 1, (1, 0, 1, 0): 1, (0, 1, 1, 0): -1, (1, 0, 0, 1): -1})
    h = homotopy_eq5(R)
    sixth = Fraction(1, 6)
    assert h == PolyTensor(
        2, 2, {((0, 0), (0, 2)): sixth, ((1, 1), (2, 0)): sixth, ((0, 1), (1, 1)): -sixth, ((1, 0), (1, 1)): -sixth}
    )
    assert linearized_curvature(h) == R


@pytest.mark.parametrize("D", [2, 3])
def test_eq5_reconstructs_curvatures(D, rng):
    for _ in range(4):
        h0 = random_symmetric2(rng, D, 3)
        R = linearized_curvature(h0)
        h = homotopy_eq5(R)
        assert symmetrize(h, (0, 1)) == h
        assert linearized_curvature(h) == R
        assert cx.d_power(3, h - h0, 2).is_zero()
        assert homotopy_vs_solver_crosscheck("eq5", R)


def test_eq5_zero_and_linearity(rng):
    assert homotopy_eq5(PolyTensor.zero(3, 4)).is_zero()
    a = linearized_curvature(random_symmetric2(rng, 3, 2))
    b = linearized_curvature(random_symmetric2(rng, 3, 3))
    assert homotopy_eq5(a - b * 3) == homotopy_eq5(a) - homotopy_eq5(b) * 3


def test_eq5_errors(rng):
    with pytest.raises(PreconditionError):
        homotopy_eq5(PolyTensor.zero(2, 3))
    with pytest.raises(MembershipError):
        homotopy_eq5(PolyTensor.constant(2, {(0, 1, 0, 1): 1}))
    # a (2,2) tensor that is not Bianchi closed
    space = cx.enumerate_space(3, 3, 4, 1)
    M = cx.matrix_of_d_power(3, 3, 4, 1, 1).matrix
    n = next(j for j in range(space.dim) if M.column(j))
    with pytest.raises(NotClosedError):
        homotopy_eq5(space.basis_element(n))


@pytest.mark.parametrize("D", [2, 3])
def test_curvature_ratio_is_frozen(D, rng):
    assert curvature_ratio(D) == golden("curvature_ratio_d2_over_4ddh", D)
    h = random_symmetric2(rng, D, 3)
    assert cx.d_power(3, h, 2) == linearized_curvature(h) * curvature_ratio(D)


def test_crosscheck_zero_input_and_bad_case():
    assert homotopy_vs_solver_crosscheck("eq4", PolyTensor.zero(2, 3))
    assert homotopy_vs_solver_crosscheck("eq5", PolyTensor.zero(2, 4))
    with pytest.raises(PreconditionError):
        homotopy_vs_solver_crosscheck("eq6", PolyTensor.zero(2, 4))
