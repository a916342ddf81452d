"""
Young diagrams and the idempotent Young symmetrizers acting on tensor slots.

Slots of a degree-p tensor are attached to the cells of a diagram
column-major: the cells of the first column get slots ``0 .. c0-1`` from top
to bottom, then the second column, and so on. The projector symmetrizes the
slots of each row, then antisymmetrizes the slots of each column, and is
rescaled so that it is idempotent.

Index vectors are sparse dicts ``{index_tuple: coefficient}``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterator, Mapping

from .errors import PreconditionError
from . import linalg


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def n_columns(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def column_lengths(self) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.n_columns))

    def conjugate(self) -> "YoungDiagram":
        return YoungDiagram(self.column_lengths)

    @cached_property
    def slot_of(self) -> dict[tuple[int, int], int]:
        """Map cell (row, col) -> tensor slot, column-major."""
        slots = {}
        s = 0
        for j, h in enumerate(self.column_lengths):
            for i in range(h):
                slots[i, j] = s
                s += 1
        return slots

    @property
    def row_groups(self) -> list[tuple[int, ...]]:
        return [tuple(self.slot_of[i, j] for j in range(r)) for i, r in enumerate(self.rows)]

    @property
    def column_groups(self) -> list[tuple[int, ...]]:
        return [tuple(self.slot_of[i, j] for i in range(h)) for j, h in enumerate(self.column_lengths)]

    def hook(self, i: int, j: int) -> int:
        return self.rows[i] - j + self.column_lengths[j] - i - 1

    def hook_product(self) -> int:
        return prod(self.hook(i, j) for (i, j) in self.slot_of)

    def to_json(self) -> str:
        return json.dumps(list(self.rows))

    @classmethod
    def from_json(cls, text: str) -> "YoungDiagram":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, int) for r in data):
            raise ValueError("a diagram is a JSON array of row lengths")
        return cls(tuple(data))


def diagram_for_degree(N: int, p: int) -> YoungDiagram:
    """Maximal diagram with p cells and at most N-1 columns: rows filled first."""
    if N < 2:
        raise PreconditionError(f"N must be >= 2, got {N}")
    if p < 0:
        raise PreconditionError(f"degree must be >= 0, got {p}")
    n, r = divmod(p, N - 1)
    return YoungDiagram((N - 1,) * n + ((r,) if r else ()))


def is_well_filled(N: int, p: int) -> bool:
    if N < 2:
        raise PreconditionError(f"N must be >= 2, got {N}")
    return p % (N - 1) == 0


def hook_dimension(diagram: YoungDiagram, D: int) -> int:
    """Dimension of the GL(D) irrep of the diagram (hook-content formula)."""
    num = prod(D + j - i for (i, j) in diagram.slot_of)
    if num <= 0:
        return 0
    value = Fraction(num, diagram.hook_product())
    assert value.denominator == 1
    return int(value)


def semistandard_fillings(diagram: YoungDiagram, D: int) -> Iterator[tuple[int, ...]]:
    """Index tuples of the semistandard tableaux with entries in ``0..D-1``.

    Rows weakly increase, columns strictly increase; the tuple is laid out in
    slot order.
    """
    cells = sorted(diagram.slot_of)  # row-major traversal
    filling: dict[tuple[int, int], int] = {}

    def rec(k):
        if k == len(cells):
            out = [0] * diagram.size
            for c, v in filling.items():
                out[diagram.slot_of[c]] = v
            yield tuple(out)
            return
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = filling[i, j - 1]
        if i > 0:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, D):
            filling[i, j] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def _group_action(group: tuple[int, ...], signed: bool) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for perm in itertools.permutations(range(len(group))):
        sign = 1
        if signed:
            seen = [False] * len(perm)
            for a in range(len(perm)):
                if not seen[a]:
                    b, length = a, 0
                    while not seen[b]:
                        seen[b] = True
                        b = perm[b]
                        length += 1
                    if length % 2 == 0:
                        sign = -sign
        out.append((tuple(group[q] for q in perm), sign))
    return out


def _distinct_arrangements(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    out: list[int] = []

    def rec():
        if len(out) == len(values):
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def _sum_over_group(vec: Mapping[tuple, object], group: tuple[int, ...], signed: bool) -> dict:
    """Unnormalized (anti)symmetrization of ``vec`` over the slots in ``group``."""
    out: dict = {}

    def add(key, val):
        s = out.get(key, 0) + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    if not signed:
        # every distinct arrangement of the values is hit prod(mult!) times
        for idx, c in vec.items():
            values = tuple(idx[s] for s in group)
            mult = prod(factorial(values.count(v)) for v in set(values))
            for arr in _distinct_arrangements(values):
                new = list(idx)
                for slot, v in zip(group, arr):
                    new[slot] = v
                add(tuple(new), c * mult)
        return out

    action = _group_action(group, signed=True)
    for idx, c in vec.items():
        if len({idx[s] for s in group}) < len(group):
            continue  # repeated index in a column: contributions cancel
        for src, sign in action:
            new = list(idx)
            for dst_slot, src_slot in zip(group, src):
                new[dst_slot] = idx[src_slot]
            add(tuple(new), c if sign > 0 else -c)
    return out


class YoungProjector:
    """
    Idempotent Young symmetrizer for ``diagram`` on ``(R^D)^{(x)p}``.

    ``apply`` works directly on sparse index vectors, so the full ``D^p``
    matrix is only built when :attr:`matrix` is requested.
    """

    def __init__(self, diagram: YoungDiagram, D: int):
        if D < 1:
            raise PreconditionError(f"D must be >= 1, got {D}")
        self.diagram = diagram
        self.D = D
        self.p = diagram.size
        self._rows = [g for g in diagram.row_groups if len(g) > 1]
        self._cols = [g for g in diagram.column_groups if len(g) > 1]
        self.feasible = len(diagram.rows) <= D

    def __repr__(self) -> str:
        return f"YoungProjector({self.diagram}, D={self.D})"

    def _raw(self, vec: Mapping[tuple, object]) -> dict:
        """Unnormalized column-antisymmetrizer after row-symmetrizer."""
        for g in self._rows:
            vec = _sum_over_group(vec, g, signed=False)
        for g in self._cols:
            vec = _sum_over_group(vec, g, signed=True)
        return dict(vec)

    @cached_property
    def scale(self) -> Fraction:
        """The eigenvalue ``lam`` with ``raw(raw(v)) = lam * raw(v)``; P = raw / lam."""
        if not self.feasible or self.p == 0:
            return Fraction(1)
        start = next(semistandard_fillings(self.diagram, self.D))
        v = self._raw({start: 1})
        w = self._raw(v)
        key = next(iter(v))
        lam = Fraction(w[key], v[key])
        if any(w.get(k, 0) != lam * c for k, c in v.items()) or len(w) != len(v):
            raise AssertionError(f"raw symmetrizer of {self.diagram} is not quasi-idempotent")
        return lam

    def apply(self, vec: Mapping[tuple, object]) -> dict:
        if not self.feasible:
            return {}
        for idx in vec:
            if len(idx) != self.p:
                raise PreconditionError(f"index {idx} has length {len(idx)}, expected {self.p}")
        raw = self._raw(vec)
        s = self.scale
        return {k: Fraction(c) / s for k, c in raw.items()}

    def column(self, idx: tuple[int, ...]) -> dict:
        return self.apply({tuple(idx): Fraction(1)})

    def index_tuples(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.D), repeat=self.p)

    @cached_property
    def matrix(self) -> linalg.SparseMatrix:
        """Full ``D^p x D^p`` matrix; position of an index tuple is its base-D value."""
        n = self.D ** self.p
        pos = {idx: k for k, idx in enumerate(self.index_tuples())}
        cols = [{pos[j]: v for j, v in self.column(idx).items()} for idx in self.index_tuples()]
        return linalg.SparseMatrix.from_columns(n, cols)

    @cached_property
    def image_basis(self) -> list[tuple[tuple[int, ...], dict]]:
        """
        Canonical basis of the image: reduced echelon form with index tuples in
        lexicographic order. Returns ``[(pivot_index, vector), ...]``.
        """
        if not self.feasible:
            return []
        if self.p == 0:
            return [((), {(): Fraction(1)})]
        # images of semistandard fillings span whenever they reach the full rank;
        # otherwise fall back to every row-sorted filling (which always spans)
        spanning = [self._raw({t: 1}) for t in semistandard_fillings(self.diagram, self.D)]
        red = _rref_indexed(spanning)
        if len(red) < hook_dimension(self.diagram, self.D):
            spanning = [self._raw({t: 1}) for t in self._row_sorted_fillings()]
            red = _rref_indexed(spanning)
        return red

    def _row_sorted_fillings(self) -> Iterator[tuple[int, ...]]:
        groups = self.diagram.row_groups
        choices = [itertools.combinations_with_replacement(range(self.D), len(g)) for g in groups]
        for combo in itertools.product(*choices):
            idx = [0] * self.p
            for g, vals in zip(groups, combo):
                for s, v in zip(g, vals):
                    idx[s] = v
            yield tuple(idx)

    def rank(self) -> int:
        return len(self.image_basis)

    def verify_idempotent(self) -> bool:
        """
        Check ``P o P = P`` without squaring the matrix: every column must be
        the combination of image basis vectors read off at their pivots, and
        every basis vector must be fixed by ``P``.
        """
        basis = self.image_basis
        if any(self.apply(v) != v for _, v in basis):
            return False
        for idx in self.index_tuples():
            col = self.column(idx)
            rebuilt: dict = {}
            for piv, v in basis:
                c = col.get(piv, 0)
                if c:
                    for k, x in v.items():
                        rebuilt[k] = rebuilt.get(k, 0) + c * x
            if {k: x for k, x in rebuilt.items() if x} != col:
                return False
        return True

    def contains(self, vec: Mapping[tuple, object]) -> bool:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        return self.apply(vec) == vec


def _rref_indexed(vectors: list[dict]) -> list[tuple[tuple, dict]]:
    keys = sorted({k for v in vectors for k in v})
    pos = {k: i for i, k in enumerate(keys)}
    red = linalg.rref({pos[k]: c for k, c in v.items()} for v in vectors)
    return [(keys[p], {keys[j]: c for j, c in row.items()}) for p, row in red]


@lru_cache(maxsize=None)
def build_projector(diagram: YoungDiagram, D: int) -> YoungProjector:
    if not isinstance(diagram, YoungDiagram):
        diagram = YoungDiagram(tuple(diagram))
    return YoungProjector(diagram, D)


def apply_projector(P: YoungProjector, T):
    """Apply ``P`` slot-wise to every monomial component of the tensor field ``T``."""
    from .tensor import PolyTensor

    if T.degree != P.p:
        raise PreconditionError(f"tensor degree {T.degree} does not match diagram {P.diagram}")
    if T.D != P.D:
        raise PreconditionError(f"tensor dimension {T.D} does not match projector dimension {P.D}")
    terms = {}
    for mono, vec in T.by_monomial().items():
        for idx, c in P.apply(vec).items():
            terms[idx, mono] = c
    return PolyTensor(T.D, T.degree, terms)


def antisymmetrizer_matrix(p: int, D: int) -> linalg.SparseMatrix:
    """Alternating sum over S_p with weight 1/p!, built straight from permutations."""
    n = D ** p
    tuples = list(itertools.product(range(D), repeat=p))
    pos = {idx: k for k, idx in enumerate(tuples)}
    w = Fraction(1, factorial(p))
    action = _group_action(tuple(range(p)), signed=True)
    cols = []
    for idx in tuples:
        col: dict[int, Fraction] = {}
        for src, sign in action:
            key = pos[tuple(idx[s] for s in src)]
            col[key] = col.get(key, 0) + sign * w
        cols.append({k: v for k, v in col.items() if v})
    return linalg.SparseMatrix.from_columns(n, cols)
