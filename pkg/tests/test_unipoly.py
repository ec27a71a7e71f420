import random
from fractions import Fraction

import pytest

from orthoscope import NEG_INF, UniPoly, poly_gcd, poly_xgcd, squarefree_decompose
from orthoscope.algebra.bipoly import resultant_uni

from conftest import random_unipoly


class TestArithmetic:
    def test_degree_sentinel_is_total(self, x):
        zero = UniPoly.zero()
        assert zero.degree == NEG_INF
        assert zero.degree < 0 and zero.degree < x.degree
        assert (x - x).degree == NEG_INF

    def test_leading_coefficient_never_zero(self, x):
        p = UniPoly.of([1, 2, 0, 0])
        assert p.degree == 1 and p.lc == 2

    def test_divmod_roundtrip(self, x):
        a = 3 * x**5 - x**3 + 7
        b = 2 * x**2 + x - 1
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_division_by_zero_rejected(self, x):
        with pytest.raises(ZeroDivisionError):
            divmod(x, UniPoly.zero())

    def test_compose_affine(self, x):
        p = x**2 - x
        assert p.compose_affine(2, 3) == (2 * x + 3) ** 2 - (2 * x + 3)

    def test_antiderivative_inverts_derivative(self, x):
        p = Fraction(1, 3) * x**4 - 2 * x + 5
        assert p.antiderivative().derivative() == p

    def test_string_forms(self, x):
        assert (x**2 - Fraction(1, 2) * x - 3).to_string() == "x^2 - 1/2*x - 3"
        assert UniPoly.zero().to_string() == "0"


class TestGcd:
    def test_shared_linear_factor(self, x):
        assert poly_gcd(x**2 - 1, x**2 - 2 * x + 1) == x - 1

    def test_gcd_with_zero_is_monic(self, x):
        assert poly_gcd(3 * x + 6, UniPoly.zero()) == x + 2
        assert poly_gcd(UniPoly.zero(), UniPoly.zero()).is_zero

    def test_coprime_cubic_quadratic(self, x):
        # no common root: the resultant is nonzero (independent check)
        assert resultant_uni(x**3 - 2, x**2 - 2) != 0
        assert poly_gcd(x**3 - 2, x**2 - 2) == UniPoly.one()

    def test_xgcd_identity(self, x):
        for a, b in [(x**2 - 2, x), (x**4 - 1, x**2 + x), (x**3, x**2)]:
            g, s, t = poly_xgcd(a, b)
            assert s * a + t * b == g

    def test_common_factor_divides_gcd_randomly(self):
        rng = random.Random(42)
        for _ in range(120):
            p = random_unipoly(rng, 8)
            q = random_unipoly(rng, 8)
            r = random_unipoly(rng, 4, nonzero=True)
            if p.is_zero and q.is_zero:
                continue
            g = poly_gcd(p * r, q * r)
            assert (g % r.monic()).is_zero


class TestSquarefree:
    def test_factored_input(self, x):
        sf = squarefree_decompose(x**3 * (x - 1))
        assert sf.content == 1
        assert set((f.to_string(), m) for f, m in sf.parts) == {("x", 3), ("x - 1", 1)}

    def test_squarefree_input_passes_through(self, x):
        sf = squarefree_decompose(x**2 - 2)
        assert [(f, m) for f, m in sf.parts] == [(x**2 - 2, 1)]

    def test_hidden_square(self, x):
        sf = squarefree_decompose(x**4 - 2 * x**2 + 1)
        assert [(f, m) for f, m in sf.parts] == [(x**2 - 1, 2)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decompose(UniPoly.zero())

    def test_roundtrip_bit_exact_500(self):
        rng = random.Random(2024)
        for _ in range(500):
            p = UniPoly.constant(Fraction(rng.randint(1, 5), rng.randint(1, 5)))
            for _ in range(rng.randint(1, 3)):
                base = random_unipoly(rng, 3, lo=-4, hi=4, nonzero=True)
                if base.degree < 1:
                    continue
                p = p * base ** rng.randint(1, 3)
            if p.degree < 1:
                continue
            assert squarefree_decompose(p).expand() == p
