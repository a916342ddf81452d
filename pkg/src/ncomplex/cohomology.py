"""
Generalized cohomology ``H^p_(k) = Ker d^k / Im d^{N-k}`` at fixed polynomial degree.

Kernel and image are computed on the matrices of :mod:`ncomplex.complex`.
With d^k going (p, g) -> (p+k, g-k), the image part comes from
(p+k-N, g+N-k) through d^{N-k}.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import linalg
from .complex import ComplexSpace, d_power, enumerate_space, matrix_of_d_power
from .errors import InvariantViolation, NotClosedError, PreconditionError
from .tensor import PolyTensor

CSV_COLUMNS = ("N", "D", "p", "k", "g", "dim_kernel", "rank_image", "dim_H")


@dataclass(frozen=True)
class CohomologyReport:
    N: int
    D: int
    p: int
    k: int
    g: int
    dim_kernel: int
    rank_image: int

    @property
    def dim_H(self) -> int:
        return self.dim_kernel - self.rank_image

    def to_dict(self) -> dict:
        d = asdict(self)
        d["dim_H"] = self.dim_H
        return d


def _check_k(N: int, k: int) -> None:
    if N < 2:
        raise PreconditionError(f"N must be >= 2, got {N}")
    if not 1 <= k <= N - 1:
        raise PreconditionError(f"k must lie in 1..{N - 1}, got {k}")


def _image_matrix(N: int, D: int, p: int, k: int, g: int):
    """Matrix of d^{N-k} landing in (p, g), or None when its source degree is negative."""
    q = p + k - N
    if q < 0:
        return None
    return matrix_of_d_power(N, D, q, g + N - k, N - k)


def cohomology_dim(N: int, D: int, p: int, k: int, g: int) -> CohomologyReport:
    _check_k(N, k)
    if p < 0 or g < 0:
        raise PreconditionError("p and g must be non-negative")
    kernel_map = matrix_of_d_power(N, D, p, g, k)
    dim_kernel = kernel_map.source.dim - kernel_map.rank()
    image_map = _image_matrix(N, D, p, k, g)
    rank_image = 0
    if image_map is not None:
        rank_image = image_map.rank()
        # complex property: d^k d^{N-k} = 0 on the nose
        if not (kernel_map.matrix @ image_map.matrix).is_zero():
            raise InvariantViolation(f"d^{k} d^{N - k} != 0 at N={N}, D={D}, p={p}, g={g}")
    if rank_image > dim_kernel:
        raise InvariantViolation(f"image larger than kernel at N={N}, D={D}, p={p}, k={k}, g={g}")
    return CohomologyReport(N, D, p, k, g, dim_kernel, rank_image)


def cohomology_basis(N: int, D: int, p: int, k: int, g: int) -> list[PolyTensor]:
    """Representatives of a basis of ``H^p_(k)`` at polynomial degree g."""
    _check_k(N, k)
    kernel_map = matrix_of_d_power(N, D, p, g, k)
    space = kernel_map.source
    image_map = _image_matrix(N, D, p, k, g)
    image_vecs = image_map.matrix.columns() if image_map is not None else []
    pivots: dict = dict(linalg.rref(image_vecs))
    reps = []
    for v in kernel_map.matrix.nullspace():
        r = linalg._reduce(dict(v), pivots)
        if not r:
            continue
        piv = min(r)
        inv = 1 / r[piv]
        r = {j: c * inv for j, c in r.items()}
        for q, row in pivots.items():
            f = row.get(piv)
            if f:
                for j, c in r.items():
                    s = row.get(j, 0) - f * c
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        pivots[piv] = r
        reps.append(space.from_coords(v))
    report = cohomology_dim(N, D, p, k, g)
    if len(reps) != report.dim_H:
        raise InvariantViolation("quotient basis size disagrees with dimension count")
    return reps


class NoSolution(Exception):
    """
    The class of a d^k-closed tensor is nonzero, so it has no preimage.

    ``functional`` is a coordinate vector on ``space`` that vanishes on the
    image of d^{N-k} but pairs to ``pairing != 0`` with the input.
    """

    def __init__(self, space: ComplexSpace, functional: dict, pairing: Fraction):
        super().__init__(
            f"no preimage: class in H^{space.p} at polynomial degree {space.g} is nonzero"
        )
        self.space = space
        self.functional = functional
        self.pairing = pairing

    def evaluate(self, T: PolyTensor) -> Fraction:
        return linalg.dot(self.functional, self.space.coords(T))


def preimage_solve(N: int, R: PolyTensor, k: int) -> PolyTensor:
    """
    Find K with ``d^{N-k} K = R`` for a d^k-closed R of type ``Y^N_p``.

    Inhomogeneous R is handled one polynomial degree at a time. Raises
    :class:`NotClosedError` if ``d^k R != 0`` and :class:`NoSolution` if R is
    closed but not exact.
    """
    _check_k(N, k)
    D, p = R.D, R.degree
    if d_power(N, R, k):
        raise NotClosedError(f"input is not annihilated by d^{k}")
    q = p + k - N
    if q < 0:
        if R:
            g = min(R.poly_degrees())
            part = R.homogeneous_part(g)
            space = enumerate_space(N, D, p, g)
            x = space.coords(part)
            n = min(x)
            raise NoSolution(space, {n: Fraction(1)}, x[n])
        return PolyTensor.zero(D, 0)
    K = PolyTensor.zero(D, q)
    for g, part in R.homogeneous_components().items():
        space = enumerate_space(N, D, p, g)
        b = space.coords(part)
        M = matrix_of_d_power(N, D, q, g + N - k, N - k)
        try:
            x = linalg.solve(M.matrix, b)
        except linalg.Inconsistent as exc:
            raise NoSolution(space, exc.certificate, exc.pairing) from None
        K = K + M.source.from_coords(x)
    return K


def is_exact(N: int, R: PolyTensor, k: int) -> bool:
    """Rank test for membership of a closed R in the image of d^{N-k}."""
    q = R.degree + k - N
    for g, part in R.homogeneous_components().items():
        if q < 0:
            return False
        M = matrix_of_d_power(N, R.D, q, g + N - k, N - k).matrix
        b = enumerate_space(N, R.D, R.degree, g).coords(part)
        cols = M.columns()
        if linalg.rank(cols + [b]) != linalg.rank(cols):
            return False
    return True


def _cell(args):
    return cohomology_dim(*args)


def default_workers() -> int:
    env = os.environ.get("NCOMPLEX_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan_cohomology(N: int, D: int, p_max: int, g_max: int, workers: int = 1) -> list[CohomologyReport]:
    """All cells 0 <= p <= p_max, 1 <= k < N, 0 <= g <= g_max, ordered by (p, k, g)."""
    cells = [(N, D, p, k, g) for p in range(p_max + 1) for k in range(1, N) for g in range(g_max + 1)]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell, cells))
    return [cohomology_dim(*c) for c in cells]


def reports_to_csv(reports: list[CohomologyReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.N, r.D, r.p, r.k, r.g, r.dim_kernel, r.rank_image, r.dim_H])
    return buf.getvalue()
