import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from ncomplex.generate import random_typed
from ncomplex.tensor import PolyTensor, monomials

GOLDEN = json.loads((Path(__file__).parent / "golden" / "constants.json").read_text())


def golden(name, key=None):
    v = GOLDEN[name]
    return Fraction(v if key is None else v[str(key)])


@pytest.fixture
def rng():
    return random.Random(20240607)


def random_field(rng, N, D, p, gmax, gmin=0):
    return random_typed(rng, N, D, p, gmax, min_degree=gmin)


def random_symmetric2(rng, D, gmax):
    """Symmetric 2-tensor built entry by entry (independent of the projector code)."""
    terms = {}
    for g in range(gmax + 1):
        for e in monomials(D, g):
            for a in range(D):
                for b in range(a, D):
                    c = rng.randint(-3, 3)
                    if c:
                        terms[(a, b), e] = c
                        terms[(b, a), e] = c
    return PolyTensor(D, 2, terms)
