import random

import pytest

from orthoscope import RatFunc, UniPoly


@pytest.fixture
def x():
    return UniPoly.variable()


def random_unipoly(rng: random.Random, max_degree: int, lo: int = -9, hi: int = 9,
                   monic: bool = False, nonzero: bool = False) -> UniPoly:
    deg = rng.randint(0, max_degree)
    coeffs = [rng.randint(lo, hi) for _ in range(deg)]
    lead = 1 if monic else rng.choice([c for c in range(lo, hi + 1) if c != 0])
    p = UniPoly.of(coeffs + [lead])
    if nonzero and p.is_zero:
        return UniPoly.one()
    return p


def random_squarefree_denominator(rng: random.Random, max_factors: int = 3) -> UniPoly:
    """Product of distinct small irreducible-ish polynomials, squarefree."""
    from orthoscope import poly_gcd

    while True:
        d = UniPoly.one()
        for _ in range(rng.randint(1, max_factors)):
            deg = rng.randint(1, 3)
            d = d * UniPoly.of([rng.randint(-5, 5) for _ in range(deg)] + [1])
        if d.degree >= 1 and poly_gcd(d, d.derivative()).degree == 0:
            return d


def random_proper_ratfunc(rng: random.Random, den: UniPoly) -> RatFunc:
    num = UniPoly.of([rng.randint(-9, 9) for _ in range(int(den.degree))])
    if num.is_zero:
        num = UniPoly.one()
    return RatFunc(num, den)
