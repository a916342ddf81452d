"""
Exact sparse linear algebra over the rationals.

Matrices are stored row-wise as ``{row: {col: Fraction}}`` with no explicit
zeros. Everything here is plain Gaussian elimination; the matrices produced by
the differential are very sparse and small enough that nothing cleverer is
needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Vector = dict  # {position: Fraction}, zeros omitted


class SparseMatrix:
    """Immutable-by-convention sparse rational matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        clean: dict[int, dict[int, Fraction]] = {}
        for i, row in (rows or {}).items():
            if not 0 <= i < nrows:
                raise IndexError(f"row {i} out of range for {nrows} rows")
            r = {}
            for j, v in row.items():
                if not 0 <= j < ncols:
                    raise IndexError(f"column {j} out of range for {ncols} columns")
                if v:
                    r[j] = Fraction(v)
            if r:
                clean[i] = r
        self.rows = clean

    @classmethod
    def from_columns(cls, nrows: int, columns: list[Mapping[int, object]]) -> "SparseMatrix":
        rows: dict[int, dict[int, object]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows.setdefault(i, {})[j] = v
        return cls(nrows, len(columns), rows)

    @classmethod
    def from_dense(cls, data: list[list[object]], ncols: int | None = None) -> "SparseMatrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, {i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(data)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows.get(i, {}).get(j, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def transpose(self) -> "SparseMatrix":
        out: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                out.setdefault(j, {})[i] = v
        m = SparseMatrix(self.ncols, self.nrows)
        m.rows = out
        return m

    T = property(transpose)

    def column(self, j: int) -> Vector:
        return {i: row[j] for i, row in self.rows.items() if j in row}

    def columns(self) -> list[Vector]:
        cols: list[Vector] = [{} for _ in range(self.ncols)]
        for i, row in self.rows.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        m = SparseMatrix(self.nrows, other.ncols)
        m.rows = out
        return m

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            target = out.setdefault(i, {})
            for j, v in row.items():
                s = target.get(j, 0) + v
                if s:
                    target[j] = s
                else:
                    target.pop(j, None)
            if not target:
                del out[i]
        m = SparseMatrix(self.nrows, self.ncols)
        m.rows = out
        return m

    def scale(self, c) -> "SparseMatrix":
        c = Fraction(c)
        if not c:
            return SparseMatrix(self.nrows, self.ncols)
        m = SparseMatrix(self.nrows, self.ncols)
        m.rows = {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()}
        return m

    def apply(self, x: Mapping[int, object]) -> Vector:
        """Matrix-vector product with a sparse vector."""
        out: Vector = {}
        for i, row in self.rows.items():
            s = sum((v * x[j] for j, v in row.items() if j in x), Fraction(0))
            if s:
                out[i] = s
        return out

    def to_dense(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product, row index ``i * other.nrows + k``."""
        out: dict[int, dict[int, Fraction]] = {}
        for i, row in self.rows.items():
            for k, orow in other.rows.items():
                r = {}
                for j, a in row.items():
                    base = j * other.ncols
                    for l, b in orow.items():
                        r[base + l] = a * b
                out[i * other.nrows + k] = r
        m = SparseMatrix(self.nrows * other.nrows, self.ncols * other.ncols)
        m.rows = out
        return m

    def rank(self) -> int:
        return len(rref(self.rows.values()))

    def nullspace(self) -> list[Vector]:
        return nullspace(self)


def _reduce(vec: dict, pivots: dict[int, dict]) -> dict:
    """Eliminate every pivot column of ``vec`` using fully reduced pivot rows."""
    # pivot rows vanish on the other pivots, so one pass is enough
    hit = [c for c in vec if c in pivots]
    for c in hit:
        f = vec.get(c)
        if not f:
            continue
        for j, v in pivots[c].items():
            s = vec.get(j, 0) - f * v
            if s:
                vec[j] = s
            else:
                vec.pop(j, None)
    return vec


def rref(vectors: Iterable[Mapping[int, object]]) -> list[tuple[int, Vector]]:
    """
    Reduced row echelon form of the span of ``vectors``.

    Returns ``[(pivot, row), ...]`` sorted by pivot, each row normalized to 1 at
    its pivot and zero at every other pivot. The result depends only on the
    span, so it serves as a canonical basis.
    """
    pivots: dict[int, dict] = {}
    for v in vectors:
        vec = _reduce({j: Fraction(x) for j, x in v.items() if x}, pivots)
        if not vec:
            continue
        p = min(vec)
        inv = 1 / vec[p]
        vec = {j: x * inv for j, x in vec.items()}
        for q, row in pivots.items():
            f = row.get(p)
            if f:
                for j, x in vec.items():
                    s = row.get(j, 0) - f * x
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        pivots[p] = vec
    return sorted(pivots.items())


def rank(vectors: Iterable[Mapping[int, object]]) -> int:
    return len(rref(vectors))


def nullspace(A: SparseMatrix) -> list[Vector]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    red = rref(A.rows.values())
    pivot_cols = {p for p, _ in red}
    basis = []
    for f in range(A.ncols):
        if f in pivot_cols:
            continue
        x = {f: Fraction(1)}
        for p, row in red:
            v = row.get(f)
            if v:
                x[p] = -v
        basis.append(x)
    return basis


def left_nullspace(A: SparseMatrix) -> list[Vector]:
    return nullspace(A.transpose())


class Inconsistent(Exception):
    """Raised by :func:`solve` when ``A x = b`` has no solution.

    ``certificate`` is a vector ``y`` with ``y^T A = 0`` and ``y . b != 0``.
    """

    def __init__(self, certificate: Vector, pairing: Fraction):
        super().__init__("system is inconsistent")
        self.certificate = certificate
        self.pairing = pairing


def solve(A: SparseMatrix, b: Mapping[int, object]) -> Vector:
    """
    One exact solution of ``A x = b`` (free variables set to zero).

    Raises :class:`Inconsistent` carrying a left-null certificate otherwise.
    """
    n = A.ncols
    aug = []
    for i in range(A.nrows):
        row = dict(A.rows.get(i, {}))
        if b.get(i):
            row[n] = Fraction(b[i])
        if row:
            aug.append(row)
    red = rref(aug)
    x: Vector = {}
    for p, row in red:
        if p == n:
            raise Inconsistent(*_certificate(A, b))
        v = row.get(n)
        if v:
            x[p] = v
    return x


def _certificate(A: SparseMatrix, b: Mapping[int, object]) -> tuple[Vector, Fraction]:
    for y in left_nullspace(A):
        s = dot(y, b)
        if s:
            return y, s
    raise AssertionError("inconsistent system without a separating functional")


def dot(u: Mapping[int, object], v: Mapping[int, object]) -> Fraction:
    if len(u) > len(v):
        u, v = v, u
    return sum((Fraction(a) * v[j] for j, a in u.items() if j in v), Fraction(0))
