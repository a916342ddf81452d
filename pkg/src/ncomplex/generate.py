"""Seeded random instances whose preconditions hold by construction."""

from __future__ import annotations

import random
from fractions import Fraction

from .complex import d_power, enumerate_space
from .errors import PreconditionError
from .homotopy import linearized_curvature
from .tensor import PolyTensor

KINDS = ("typed", "exact", "symmetric", "closed-eq4", "closed-eq5", "div-free")


def _coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2, 3)))


def random_typed(rng: random.Random, N: int, D: int, p: int, degree_bound: int, min_degree: int = 0) -> PolyTensor:
    """Random element of type ``Y^N_p`` with polynomial degrees in ``[min_degree, degree_bound]``."""
    T = PolyTensor.zero(D, p)
    for g in range(min_degree, degree_bound + 1):
        space = enumerate_space(N, D, p, g)
        T = T + space.from_coords({n: _coeff(rng) for n in range(space.dim)})
    return T


def generate_random(
    kind: str,
    D: int,
    degree_bound: int,
    seed: int,
    N: int | None = None,
    p: int | None = None,
    k: int | None = None,
) -> PolyTensor:
    """
    kinds:
      typed       random field of type Y^N_p (needs N, p)
      exact       d^(N-k) K for random K, so d^k of it vanishes (needs N, p, k)
      symmetric   random symmetric tensor of degree p
      closed-eq4  d xi for symmetric xi in the 4-complex (d^3 of it vanishes)
      closed-eq5  linearized curvature of a symmetric h (Bianchi closed)
      div-free    d_l d_r R^{l m r n} for R with Riemann symmetry
    ``degree_bound`` bounds the polynomial degree of the seed field.
    """
    rng = random.Random(seed)
    if degree_bound < 0:
        raise PreconditionError("degree_bound must be non-negative")
    if kind == "typed":
        if N is None or p is None:
            raise PreconditionError("kind 'typed' needs N and p")
        return random_typed(rng, N, D, p, degree_bound)
    if kind == "exact":
        if N is None or p is None or k is None:
            raise PreconditionError("kind 'exact' needs N, p and k")
        q = p + k - N
        if q < 0:
            raise PreconditionError(f"no source degree for d^{N - k} into degree {p}")
        return d_power(N, random_typed(rng, N, D, q, degree_bound), N - k, check=False)
    if kind == "symmetric":
        if p is None:
            raise PreconditionError("kind 'symmetric' needs p")
        return random_typed(rng, p + 1 if p else 2, D, p, degree_bound)
    if kind == "closed-eq4":
        return d_power(4, random_typed(rng, 4, D, 2, degree_bound), 1, check=False)
    if kind == "closed-eq5":
        return linearized_curvature(random_typed(rng, 3, D, 2, degree_bound))
    if kind == "div-free":
        from .duality import double_divergence

        return double_divergence(random_typed(rng, 3, D, 4, degree_bound))
    raise PreconditionError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
