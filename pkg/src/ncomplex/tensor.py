"""
Covariant tensor fields on R^D with exact rational polynomial components.

A :class:`PolyTensor` of degree p is a sparse map
``(index_tuple, exponent_tuple) -> Fraction``; the term
``c * x^e`` sitting at ``indices`` is the component ``T_{indices}``.
Index raising and lowering is trivial (flat identity metric), so contravariant
fields use the same container.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .errors import PreconditionError

FORMAT_VERSION = 1

Key = tuple  # (indices, exponents)


def monomials(D: int, g: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``g`` in ``D`` variables, ascending lexicographic."""
    if g < 0:
        return []
    out = []
    for bars in itertools.combinations(range(g + D - 1), D - 1):
        e, prev = [], -1
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(g + D - 2 - prev)
        out.append(tuple(e))
    out.sort()
    assert len(out) == comb(g + D - 1, D - 1)
    return out


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class PolyTensor:
    """Immutable sparse polynomial tensor field."""

    __slots__ = ("D", "degree", "_terms", "_hash")

    def __init__(self, D: int, degree: int, terms: Mapping[Key, object] | None = None):
        if D < 1:
            raise PreconditionError(f"D must be positive, got {D}")
        if degree < 0:
            raise PreconditionError(f"tensor degree must be >= 0, got {degree}")
        self.D = D
        self.degree = degree
        clean: dict[Key, Fraction] = {}
        for (idx, exp), c in (terms or {}).items():
            idx, exp = tuple(idx), tuple(exp)
            if len(idx) != degree or any(not 0 <= i < D for i in idx):
                raise PreconditionError(f"bad index tuple {idx} for degree {degree}, D={D}")
            if len(exp) != D or any(e < 0 for e in exp):
                raise PreconditionError(f"bad exponent vector {exp} for D={D}")
            c = _frac(c)
            if c:
                clean[idx, exp] = clean.get((idx, exp), 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, D: int, degree: int) -> "PolyTensor":
        return cls(D, degree)

    @classmethod
    def scalar(cls, D: int, poly: Mapping[tuple[int, ...], object]) -> "PolyTensor":
        return cls(D, 0, {((), e): c for e, c in poly.items()})

    @classmethod
    def constant(cls, D: int, components: Mapping[tuple[int, ...], object]) -> "PolyTensor":
        degree = len(next(iter(components))) if components else 0
        zero = (0,) * D
        return cls(D, degree, {(idx, zero): c for idx, c in components.items()})

    @classmethod
    def coordinate(cls, D: int, mu: int) -> "PolyTensor":
        """The scalar field ``x^mu``."""
        e = [0] * D
        e[mu] = 1
        return cls(D, 0, {((), tuple(e)): 1})

    @classmethod
    def _raw(cls, D: int, degree: int, terms: dict) -> "PolyTensor":
        t = object.__new__(cls)
        t.D, t.degree, t._terms, t._hash = D, degree, terms, None
        return t

    # basic protocol ---------------------------------------------------------

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyTensor):
            return NotImplemented
        return (self.D, self.degree, self._terms) == (other.D, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.D, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        shown = ", ".join(f"{i}{_mono_str(e)}:{c}" for (i, e), c in list(self.items())[:6])
        more = "" if len(self) <= 6 else f", ... ({len(self)} terms)"
        return f"PolyTensor(D={self.D}, degree={self.degree}, {{{shown}{more}}})"

    def _check_compatible(self, other: "PolyTensor") -> None:
        if (self.D, self.degree) != (other.D, other.degree):
            raise PreconditionError(
                f"incompatible tensors: (D={self.D}, p={self.degree}) vs (D={other.D}, p={other.degree})"
            )

    def __add__(self, other: "PolyTensor") -> "PolyTensor":
        self._check_compatible(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyTensor._raw(self.D, self.degree, out)

    def __neg__(self) -> "PolyTensor":
        return PolyTensor._raw(self.D, self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "PolyTensor") -> "PolyTensor":
        return self + (-other)

    def __mul__(self, c) -> "PolyTensor":
        if isinstance(c, PolyTensor):
            return tensor_product(self, c)
        c = _frac(c)
        if not c:
            return PolyTensor.zero(self.D, self.degree)
        return PolyTensor._raw(self.D, self.degree, {k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "PolyTensor":
        return self * (1 / _frac(c))

    # structure ------------------------------------------------------------

    def by_monomial(self) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
        """Regroup as ``{exponents: {indices: coeff}}``."""
        out: dict = defaultdict(dict)
        for (idx, exp), c in self._terms.items():
            out[exp][idx] = c
        return dict(out)

    def component(self, indices: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """The polynomial ``T_{indices}`` as ``{exponents: coeff}``."""
        idx = tuple(indices)
        return {e: c for (i, e), c in self._terms.items() if i == idx}

    def poly_degrees(self) -> set[int]:
        return {sum(e) for (_, e) in self._terms}

    def homogeneous_components(self) -> dict[int, "PolyTensor"]:
        parts: dict[int, dict] = defaultdict(dict)
        for (idx, exp), c in self._terms.items():
            parts[sum(exp)][idx, exp] = c
        return {g: PolyTensor._raw(self.D, self.degree, t) for g, t in sorted(parts.items())}

    def homogeneous_part(self, g: int) -> "PolyTensor":
        return PolyTensor._raw(
            self.D, self.degree, {k: c for k, c in self._terms.items() if sum(k[1]) == g}
        )

    def permute_slots(self, perm: Sequence[int]) -> "PolyTensor":
        """Move slot ``s`` to position ``perm[s]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.degree)):
            raise PreconditionError(f"{perm} is not a permutation of the {self.degree} slots")
        out = {}
        for (idx, exp), c in self._terms.items():
            new = [0] * self.degree
            for s, t in enumerate(perm):
                new[t] = idx[s]
            out[tuple(new), exp] = c
        return PolyTensor._raw(self.D, self.degree, out)

    def evaluate(self, point: Sequence[object]) -> dict[tuple[int, ...], Fraction]:
        pt = [_frac(x) for x in point]
        out: dict = {}
        for (idx, exp), c in self._terms.items():
            v = c
            for x, e in zip(pt, exp):
                if e:
                    v *= x ** e
            out[idx] = out.get(idx, 0) + v
        return {k: v for k, v in out.items() if v}

    # serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "D": self.D,
            "degree": self.degree,
            "terms": [
                {"indices": list(i), "exponents": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
                for (i, e), c in self.items()
            ],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping) -> "PolyTensor":
        from .schema import validate_tensor

        validate_tensor(data)
        D, degree = data["D"], data["degree"]
        terms: dict = {}
        for n, t in enumerate(data["terms"]):
            key = (tuple(t["indices"]), tuple(t["exponents"]))
            if key in terms:
                raise PreconditionError(f"terms[{n}]: duplicate key {key}")
            try:
                terms[key] = Fraction(t["coeff"])
            except (ValueError, ZeroDivisionError) as exc:
                raise PreconditionError(f"terms[{n}].coeff: {exc}") from None
        return cls(D, degree, terms)

    @classmethod
    def from_json(cls, text: str) -> "PolyTensor":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return cls.from_dict(data)


def _mono_str(e: Sequence[int]) -> str:
    parts = [f"x{m}" + (f"^{k}" if k > 1 else "") for m, k in enumerate(e) if k]
    return "*" + "*".join(parts) if parts else ""


# operators ------------------------------------------------------------------


def partial_derivative(T: PolyTensor) -> PolyTensor:
    """``(dT)_{mu i_1..i_p} = d_mu T_{i_1..i_p}``; the new index is slot 0."""
    out: dict = {}
    for (idx, exp), c in T._terms.items():
        for mu, e in enumerate(exp):
            if e:
                e2 = exp[:mu] + (e - 1,) + exp[mu + 1:]
                k = ((mu,) + idx, e2)
                out[k] = out.get(k, 0) + c * e
    return PolyTensor._raw(T.D, T.degree + 1, {k: v for k, v in out.items() if v})


def tensor_product(a: PolyTensor, b: PolyTensor) -> PolyTensor:
    """Slot-wise product ``(a (x) b)_{I J} = a_I b_J`` with polynomial multiplication."""
    if a.D != b.D:
        raise PreconditionError(f"dimension mismatch {a.D} vs {b.D}")
    out: dict = {}
    for (i1, e1), c1 in a._terms.items():
        for (i2, e2), c2 in b._terms.items():
            k = (i1 + i2, tuple(x + y for x, y in zip(e1, e2)))
            out[k] = out.get(k, 0) + c1 * c2
    return PolyTensor._raw(a.D, a.degree + b.degree, {k: v for k, v in out.items() if v})


def graded_product(alpha: PolyTensor, beta: PolyTensor, sequence) -> PolyTensor:
    """
    Product of typed fields: project ``alpha (x) beta`` onto the type of degree
    ``a + b``. ``sequence`` maps a degree to its diagram (e.g. ``lambda p:
    diagram_for_degree(N, p)``).
    """
    from .young import apply_projector, build_projector

    for t, name in ((alpha, "alpha"), (beta, "beta")):
        P = build_projector(sequence(t.degree), t.D)
        if apply_projector(P, t) != t:
            raise PreconditionError(f"{name} is not of type {P.diagram}")
    prod_ = tensor_product(alpha, beta)
    return apply_projector(build_projector(sequence(prod_.degree), alpha.D), prod_)


def symmetrize(T: PolyTensor, slots: Sequence[int]) -> PolyTensor:
    """Weight-one symmetrization over ``slots``."""
    return _average(T, slots, signed=False)


def antisymmetrize(T: PolyTensor, slots: Sequence[int]) -> PolyTensor:
    """Weight-one antisymmetrization over ``slots``."""
    return _average(T, slots, signed=True)


def _average(T: PolyTensor, slots: Sequence[int], signed: bool) -> PolyTensor:
    slots = tuple(slots)
    n = len(slots)
    w = Fraction(1, factorial(n))
    out: dict = {}
    for perm in itertools.permutations(range(n)):
        sign = permutation_sign(perm) if signed else 1
        for (idx, exp), c in T._terms.items():
            new = list(idx)
            for a, b in zip(slots, perm):
                new[a] = idx[slots[b]]
            k = (tuple(new), exp)
            out[k] = out.get(k, 0) + sign * w * c
    return PolyTensor._raw(T.D, T.degree, {k: v for k, v in out.items() if v})


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def multiply_by_scalar_field(f: PolyTensor, T: PolyTensor) -> PolyTensor:
    if f.degree != 0:
        raise PreconditionError("the multiplier must be a scalar field")
    return tensor_product(f, T)


def contract_with_x(T: PolyTensor, slot: int) -> PolyTensor:
    """``T_{.. lambda ..} x^lambda``: removes ``slot``, multiplying by the matching coordinate."""
    if not 0 <= slot < T.degree:
        raise PreconditionError(f"slot {slot} out of range for degree {T.degree}")
    out: dict = {}
    for (idx, exp), c in T._terms.items():
        mu = idx[slot]
        e2 = exp[:mu] + (exp[mu] + 1,) + exp[mu + 1:]
        k = (idx[:slot] + idx[slot + 1:], e2)
        out[k] = out.get(k, 0) + c
    return PolyTensor._raw(T.D, T.degree - 1, {k: v for k, v in out.items() if v})


def divergence(T: PolyTensor, slot: int = 0) -> PolyTensor:
    """``d_mu T^{.. mu ..}`` taken on ``slot``."""
    dT = partial_derivative(T)
    return contract(dT, 0, slot + 1)


def contract(T: PolyTensor, s1: int, s2: int) -> PolyTensor:
    """Trace over two slots with the identity metric."""
    if s1 == s2 or not (0 <= s1 < T.degree and 0 <= s2 < T.degree):
        raise PreconditionError(f"bad contraction slots {s1}, {s2}")
    lo, hi = sorted((s1, s2))
    out: dict = {}
    for (idx, exp), c in T._terms.items():
        if idx[lo] == idx[hi]:
            k = (idx[:lo] + idx[lo + 1:hi] + idx[hi + 1:], exp)
            out[k] = out.get(k, 0) + c
    return PolyTensor._raw(T.D, T.degree - 2, {k: v for k, v in out.items() if v})


class LeviCivita:
    """Totally antisymmetric symbol on R^D with ``eps^{0 1 .. D-1} = +1``."""

    def __init__(self, D: int):
        if D < 1:
            raise PreconditionError(f"D must be positive, got {D}")
        self.D = D

    def __getitem__(self, idx: Sequence[int]) -> int:
        idx = tuple(idx)
        if len(idx) != self.D:
            raise IndexError(f"epsilon takes {self.D} indices")
        if sorted(idx) != list(range(self.D)):
            return 0
        return permutation_sign(idx)

    def nonzero(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for perm in itertools.permutations(range(self.D)):
            yield perm, permutation_sign(perm)

    def as_tensor(self) -> PolyTensor:
        return PolyTensor.constant(self.D, dict(self.nonzero()))


def epsilon_contract(T: PolyTensor, slots: Sequence[int]) -> PolyTensor:
    """
    Contract the listed slots of ``T`` (in order) with the first slots of the
    Levi-Civita symbol. Result slots: the untouched slots of ``T`` in their
    original order, followed by the ``D - len(slots)`` free slots of epsilon.
    """
    slots = list(slots)
    m = len(slots)
    if m > T.D:
        raise PreconditionError(f"cannot contract {m} slots with epsilon in D={T.D}")
    if len(set(slots)) != m or any(not 0 <= s < T.degree for s in slots):
        raise PreconditionError(f"bad slot list {slots} for degree {T.degree}")
    keep = [s for s in range(T.degree) if s not in slots]
    eps = LeviCivita(T.D)
    by_contracted: dict[tuple, list[tuple[int, ...]]] = defaultdict(list)
    for perm, sign in eps.nonzero():
        by_contracted[perm[:m]].append((perm[m:], sign))
    out: dict = {}
    for (idx, exp), c in T._terms.items():
        head = tuple(idx[s] for s in slots)
        for tail, sign in by_contracted.get(head, ()):
            k = (tuple(idx[s] for s in keep) + tail, exp)
            out[k] = out.get(k, 0) + sign * c
    return PolyTensor(T.D, T.degree - m + (T.D - m), {k: v for k, v in out.items() if v})


def radial_weight(m: int, depth: int, weighted: bool = False) -> Fraction:
    """
    ``int_0^1 dt_1 int_0^{t_1} dt_2 ... int_0^{t_{depth-1}} dt_depth  s^m``
    where ``s`` is the innermost variable, times ``s`` again if ``weighted``.
    """
    if depth < 1:
        raise PreconditionError(f"depth must be positive, got {depth}")
    w = Fraction(1)
    start = m + (1 if weighted else 0)
    for j in range(1, depth + 1):
        w /= start + j
    return w


def radial_rescale_integral(T: PolyTensor, depth: int, weighted: bool = False) -> PolyTensor:
    """Replace ``T(x)`` by the nested line integral of ``T(s x)`` (see :func:`radial_weight`)."""
    out = {}
    for (idx, exp), c in T._terms.items():
        out[idx, exp] = c * radial_weight(sum(exp), depth, weighted)
    return PolyTensor._raw(T.D, T.degree, out)
