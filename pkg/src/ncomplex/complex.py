"""
The N-complex of tensor fields of maximal Young type and its differential.

``d = P_{p+1} o partial`` maps degree-p fields of type ``diagram_for_degree(N, p)``
to degree p+1. Spaces are graded by tensor degree p and homogeneous polynomial
degree g; d maps (p, g) to (p+1, g-1).

A space basis is the canonical echelon basis of the projector image (pivot
index tuples, lexicographic) tensored with the degree-g monomials, ordered
index-vector-major. The coordinates of a member tensor are its values at the
(pivot, monomial) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import MembershipError, PreconditionError
from .linalg import SparseMatrix
from .tensor import PolyTensor, monomials, partial_derivative
from .young import (
    YoungDiagram,
    YoungProjector,
    apply_projector,
    build_projector,
    diagram_for_degree,
    hook_dimension,
)


def projector_for(N: int, D: int, p: int) -> YoungProjector:
    return build_projector(diagram_for_degree(N, p), D)


def is_member(N: int, T: PolyTensor) -> bool:
    """Whether ``T`` lies in the type-``Y^N_p`` subspace."""
    for g, part in T.homogeneous_components().items():
        space = enumerate_space(N, T.D, T.degree, g)
        if space.from_coords(space.coords(part, check=False)) != part:
            return False
    return True


def check_member(N: int, T: PolyTensor, what: str = "tensor") -> None:
    if not is_member(N, T):
        raise MembershipError(
            f"{what} of degree {T.degree} is not of type {diagram_for_degree(N, T.degree)} (N={N})"
        )


def differential_by_projection(N: int, T: PolyTensor) -> PolyTensor:
    """``P_{Y^N_{p+1}}(partial T)`` computed term by term, without the basis matrices."""
    return apply_projector(projector_for(N, T.D, T.degree + 1), partial_derivative(T))


def differential(N: int, T: PolyTensor, check: bool = True) -> PolyTensor:
    """``dT = P_{Y^N_{p+1}}(partial T)``, evaluated through the cached matrix of d."""
    return d_power(N, T, 1, check=check)


def d_power(N: int, T: PolyTensor, k: int, check: bool = True) -> PolyTensor:
    if k < 0:
        raise PreconditionError(f"power must be non-negative, got {k}")
    out = PolyTensor.zero(T.D, T.degree + k)
    for g, part in T.homogeneous_components().items():
        space = enumerate_space(N, T.D, T.degree, g)
        x = space.coords(part, check=False)
        if check and space.from_coords(x) != part:
            check_member(N, T)
        if g < k:
            continue
        M = matrix_of_d_power(N, T.D, T.degree, g, k)
        out = out + M.target.from_coords(M.matrix.apply(x))
    return out


@dataclass(frozen=True)
class ComplexSpace:
    N: int
    D: int
    p: int
    g: int
    diagram: YoungDiagram
    index_basis: tuple  # ((pivot, {index: coeff}), ...)
    monomials: tuple

    @property
    def index_dim(self) -> int:
        return len(self.index_basis)

    @property
    def dim(self) -> int:
        return len(self.index_basis) * len(self.monomials)

    def __len__(self) -> int:
        return self.dim

    def position(self, j: int, m: int) -> int:
        return j * len(self.monomials) + m

    def basis_element(self, n: int) -> PolyTensor:
        j, m = divmod(n, len(self.monomials))
        _, vec = self.index_basis[j]
        mono = self.monomials[m]
        return PolyTensor(self.D, self.p, {(idx, mono): c for idx, c in vec.items()})

    @property
    def basis(self) -> list[PolyTensor]:
        return [self.basis_element(n) for n in range(self.dim)]

    def from_coords(self, x) -> PolyTensor:
        """Tensor with coordinate vector ``x`` (dict or sequence)."""
        if not isinstance(x, dict):
            x = {n: v for n, v in enumerate(x) if v}
        nm = len(self.monomials)
        terms: dict = {}
        for n, c in x.items():
            if not c:
                continue
            j, m = divmod(n, nm)
            mono = self.monomials[m]
            for idx, v in self.index_basis[j][1].items():
                key = (idx, mono)
                terms[key] = terms.get(key, 0) + v * c
        return PolyTensor(self.D, self.p, terms)

    def coords(self, T: PolyTensor, check: bool = True) -> dict[int, Fraction]:
        """Coordinates of a member tensor; raises if ``T`` is not in the space."""
        if (T.D, T.degree) != (self.D, self.p):
            raise PreconditionError(f"tensor (D={T.D}, p={T.degree}) does not fit space (D={self.D}, p={self.p})")
        if T and T.poly_degrees() != {self.g}:
            raise PreconditionError(f"tensor is not homogeneous of polynomial degree {self.g}")
        mono_pos = {e: m for m, e in enumerate(self.monomials)}
        terms = T.terms
        x = {}
        for j, (piv, _) in enumerate(self.index_basis):
            for e, m in mono_pos.items():
                c = terms.get((piv, e))
                if c:
                    x[self.position(j, m)] = c
        if check and self.from_coords(x) != T:
            raise MembershipError(f"tensor is not of type {self.diagram} (N={self.N})")
        return x


@lru_cache(maxsize=None)
def enumerate_space(N: int, D: int, p: int, g: int) -> ComplexSpace:
    if p < 0:
        raise PreconditionError(f"tensor degree must be >= 0, got {p}")
    diagram = diagram_for_degree(N, p)
    P = build_projector(diagram, D)
    basis = tuple(P.image_basis) if g >= 0 else ()
    monos = tuple(monomials(D, g))
    space = ComplexSpace(N, D, p, g, diagram, basis, monos)
    if g >= 0:
        assert space.dim == hook_dimension(diagram, D) * comb(g + D - 1, D - 1)
    return space


@dataclass(frozen=True)
class DifferentialMatrix:
    source: ComplexSpace
    target: ComplexSpace
    k: int
    matrix: SparseMatrix

    def rank(self) -> int:
        return self.matrix.rank()

    def to_dict(self) -> dict:
        def space(s):
            return {
                "N": s.N,
                "D": s.D,
                "p": s.p,
                "g": s.g,
                "diagram": list(s.diagram.rows),
                "dim": s.dim,
                "index_pivots": [list(piv) for piv, _ in s.index_basis],
                "monomials": [list(e) for e in s.monomials],
            }

        return {
            "format": 1,
            "k": self.k,
            "source": space(self.source),
            "target": space(self.target),
            "shape": [self.matrix.nrows, self.matrix.ncols],
            "entries": [
                [i, j, f"{v.numerator}/{v.denominator}"]
                for i, row in sorted(self.matrix.rows.items())
                for j, v in sorted(row.items())
            ],
        }


@lru_cache(maxsize=None)
def _index_parts(N: int, D: int, p: int) -> tuple[SparseMatrix, ...]:
    """For each direction mu, the matrix of ``v -> P_{p+1}(e_mu (x) v)`` on index bases."""
    src = build_projector(diagram_for_degree(N, p), D).image_basis
    tgt = build_projector(diagram_for_degree(N, p + 1), D)
    pivots = [piv for piv, _ in tgt.image_basis]
    parts = []
    for mu in range(D):
        cols = []
        for _, vec in src:
            img = tgt.apply({(mu,) + idx: c for idx, c in vec.items()})
            cols.append({r: img[piv] for r, piv in enumerate(pivots) if img.get(piv)})
        parts.append(SparseMatrix.from_columns(len(pivots), cols))
    return tuple(parts)


@lru_cache(maxsize=None)
def _monomial_derivative(D: int, g: int, mu: int) -> SparseMatrix:
    """Matrix of ``partial_mu`` from degree-g monomials to degree g-1."""
    src = monomials(D, g)
    tgt = {e: i for i, e in enumerate(monomials(D, g - 1))}
    rows: dict = {}
    for j, e in enumerate(src):
        if e[mu]:
            e2 = e[:mu] + (e[mu] - 1,) + e[mu + 1:]
            rows.setdefault(tgt[e2], {})[j] = e[mu]
    return SparseMatrix(len(tgt), len(src), rows)


@lru_cache(maxsize=None)
def _matrix_of_d(N: int, D: int, p: int, g: int) -> SparseMatrix:
    source = enumerate_space(N, D, p, g)
    target = enumerate_space(N, D, p + 1, g - 1)
    M = SparseMatrix.zeros(target.dim, source.dim)
    if not source.dim or not target.dim:
        return M
    for mu, part in enumerate(_index_parts(N, D, p)):
        M = M + part.kron(_monomial_derivative(D, g, mu))
    return M


@lru_cache(maxsize=None)
def matrix_of_d_power(N: int, D: int, p: int, g: int, k: int) -> DifferentialMatrix:
    """Exact matrix of ``d^k`` from (p, g) to (p+k, g-k); the zero map when g < k."""
    if N < 2:
        raise PreconditionError(f"N must be >= 2, got {N}")
    if k < 0:
        raise PreconditionError(f"power must be non-negative, got {k}")
    source = enumerate_space(N, D, p, g)
    target = enumerate_space(N, D, p + k, g - k)
    if k == 0:
        M = SparseMatrix.identity(source.dim)
    elif g < k:
        M = SparseMatrix.zeros(target.dim, source.dim)
    else:
        M = matrix_of_d_power(N, D, p, g, k - 1).matrix
        M = _matrix_of_d(N, D, p + k - 1, g - k + 1) @ M
    return DifferentialMatrix(source, target, k, M)
