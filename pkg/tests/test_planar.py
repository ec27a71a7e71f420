import random
from fractions import Fraction

import pytest

from orthoscope import (
    RATIONAL,
    BiPoly,
    BiRatFunc,
    PlanarVectorField,
    RatFunc,
    beta_search_log,
    classify_invariant_line_lift,
    foliation_linearize,
    invariant_line,
    lie_bracket,
    linearize_along_line,
    system_derivative,
    system_dlog,
    verify_gauge_identity,
)
from orthoscope.criteria import (
    CONCLUSION_BASE_INAPPLICABLE,
    CONCLUSION_INCONCLUSIVE_FOR_LIFT,
    CONCLUSION_ORTHOGONAL,
    STATUS_NONE,
)
from orthoscope.errors import HypothesisError


def bp(terms):
    return BiPoly.of(terms)


@pytest.fixture
def quadratic_fiber_field():
    # x' = x^3(x-1), y' = xy + y^2/2
    return PlanarVectorField(
        bp({(4, 0): 1, (3, 0): -1}), bp({(1, 1): 1, (0, 2): Fraction(1, 2)})
    )


@pytest.fixture
def dy():
    return PlanarVectorField(BiPoly.zero(), BiPoly.one())


def random_field(rng, max_deg=3, lo=-3, hi=3):
    def rand_poly():
        terms = {}
        for _ in range(rng.randint(1, 4)):
            terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = rng.randint(lo, hi)
        return bp(terms)

    return PlanarVectorField(rand_poly(), rand_poly())


class TestLieBracket:
    def test_vertical_direction(self, quadratic_fiber_field, dy):
        br = lie_bracket(quadratic_fiber_field, dy)
        assert br.fx.is_zero
        assert br.fy == bp({(1, 0): -1, (0, 1): -1})  # -(x + y), our convention

    def test_self_bracket_vanishes(self, quadratic_fiber_field):
        br = lie_bracket(quadratic_fiber_field, quadratic_fiber_field)
        assert br.fx.is_zero and br.fy.is_zero

    def test_coordinate_fields(self):
        dx = PlanarVectorField(BiPoly.one(), BiPoly.zero())
        xdy = PlanarVectorField(BiPoly.zero(), BiPoly.x())
        br = lie_bracket(dx, xdy)
        assert br.fx.is_zero and br.fy == BiPoly.one()

    def test_antisymmetry_and_jacobi_smoke(self):
        # the full 100-field run lives in the acceptance suite
        import properties

        properties.bracket_algebra(count=20)


class TestInvariantLine:
    def test_quadratic_fiber(self, quadratic_fiber_field):
        rep = invariant_line(quadratic_fiber_field)
        assert rep.invariant
        assert rep.cofactor_g1 == bp({(1, 0): 1, (0, 1): Fraction(1, 2)})

    def test_not_invariant(self):
        rep = invariant_line(PlanarVectorField(BiPoly.zero(), BiPoly.x()))
        assert not rep.invariant and rep.cofactor_g1 is None

    def test_zero_component(self):
        rep = invariant_line(PlanarVectorField(BiPoly.x(), BiPoly.zero()))
        assert rep.invariant and rep.cofactor_g1.is_zero


class TestLinearize:
    def test_quadratic_fiber(self, quadratic_fiber_field, x):
        lin = linearize_along_line(quadratic_fiber_field)
        assert lin.base_f0 == x**3 * (x - 1)
        assert lin.fiber_hZ == x
        field = lin.as_vector_field
        assert field.fx == bp({(4, 0): 1, (3, 0): -1})
        assert field.fy == bp({(1, 1): 1})

    def test_idempotent_on_fiberwise_linear(self, x):
        v = PlanarVectorField(bp({(2, 0): 1, (0, 0): -3}), bp({(1, 1): 5}))
        lin = linearize_along_line(v)
        again = linearize_along_line(lin.as_vector_field)
        assert again.base_f0 == lin.base_f0 and again.fiber_hZ == lin.fiber_hZ

    def test_deformed_instance(self, x):
        # x' = x^3(x-1) + y, y' = xy + x*y^2
        v = PlanarVectorField(
            bp({(4, 0): 1, (3, 0): -1, (0, 1): 1}), bp({(1, 1): 1, (1, 2): 1})
        )
        lin = linearize_along_line(v)
        assert lin.base_f0 == x**3 * (x - 1) and lin.fiber_hZ == x

    def test_line_not_invariant_rejected(self):
        with pytest.raises(HypothesisError):
            linearize_along_line(PlanarVectorField(BiPoly.x(), BiPoly.one()))

    def test_degenerate_base_rejected(self):
        v = PlanarVectorField(bp({(0, 1): 1}), bp({(0, 1): 1}))  # f(x,0) = 0
        with pytest.raises(HypothesisError):
            linearize_along_line(v)


class TestSystemDerivation:
    def test_defining_property(self, quadratic_fiber_field):
        v = quadratic_fiber_field
        assert system_derivative(v, BiRatFunc.from_poly(BiPoly.x())) == BiRatFunc.from_poly(v.fx)
        assert system_derivative(v, BiRatFunc.from_poly(BiPoly.y())) == BiRatFunc.from_poly(v.fy)

    def test_leibniz_200(self):
        rng = random.Random(606)
        for _ in range(200):
            v = random_field(rng, max_deg=2)
            h1 = BiRatFunc.from_poly(random_field(rng, max_deg=2).fx)
            h2 = BiRatFunc.from_poly(random_field(rng, max_deg=2).fy)
            lhs = system_derivative(v, h1 * h2)
            rhs = system_derivative(v, h1) * h2 + h1 * system_derivative(v, h2)
            assert lhs == rhs
            add_lhs = system_derivative(v, h1 + h2)
            assert add_lhs == system_derivative(v, h1) + system_derivative(v, h2)

    def test_dlog_values(self, quadratic_fiber_field):
        v = quadratic_fiber_field
        y = BiRatFunc.from_poly(BiPoly.y())
        assert system_dlog(v, y) == BiRatFunc.from_poly(bp({(1, 0): 1, (0, 1): Fraction(1, 2)}))
        assert system_dlog(v, BiRatFunc.from_poly(BiPoly.constant(9))).is_zero
        assert system_dlog(v, y * y) == BiRatFunc.from_poly(bp({(1, 0): 2, (0, 1): 1}))

    def test_dlog_homomorphism_200(self):
        rng = random.Random(808)
        done = 0
        while done < 200:
            v = random_field(rng, max_deg=2)
            h1 = random_field(rng, max_deg=2).fx
            h2 = random_field(rng, max_deg=2).fy
            if h1.is_zero or h2.is_zero:
                continue
            b1, b2 = BiRatFunc.from_poly(h1), BiRatFunc.from_poly(h2)
            assert system_dlog(v, b1 * b2) == system_dlog(v, b1) + system_dlog(v, b2)
            done += 1

    def test_dlog_of_zero_rejected(self, quadratic_fiber_field):
        with pytest.raises(ZeroDivisionError):
            system_dlog(quadratic_fiber_field, BiRatFunc.zero())


class TestFoliationLinearize:
    def test_quadratic_fiber_cofactor(self, quadratic_fiber_field, dy):
        fol = foliation_linearize(quadratic_fiber_field, dy)
        assert fol.cofactor_c == BiRatFunc.from_poly(bp({(1, 0): 1, (0, 1): 1}))

    def test_fiberwise_linear(self, dy):
        v = PlanarVectorField(bp({(3, 0): 1}), bp({(1, 1): 7}))
        fol = foliation_linearize(v, dy)
        assert fol.cofactor_c == BiRatFunc.from_poly(bp({(1, 0): 7}))

    def test_commuting_fields(self, dy):
        v = PlanarVectorField(BiPoly.one(), BiPoly.zero())
        assert foliation_linearize(v, dy).cofactor_c.is_zero

    def test_consistency_with_linearization(self, quadratic_fiber_field, dy, x):
        fol = foliation_linearize(quadratic_fiber_field, dy)
        lin = linearize_along_line(quadratic_fiber_field)
        assert fol.cofactor_c.restrict_y0() == RatFunc.from_poly(lin.fiber_hZ)

    def test_not_proportional_rejected(self, dy):
        v = PlanarVectorField(BiPoly.y(), BiPoly.zero())
        with pytest.raises(HypothesisError):
            foliation_linearize(v, dy)

    def test_zero_direction_rejected(self, quadratic_fiber_field):
        with pytest.raises(ValueError):
            foliation_linearize(
                quadratic_fiber_field, PlanarVectorField(BiPoly.zero(), BiPoly.zero())
            )


class TestGaugeIdentity:
    def test_residual_half_y(self, quadratic_fiber_field, dy):
        # the tangent cofactor x + y transformed by h = y leaves y/2, so the
        # identity fails for every constant c
        v = quadratic_fiber_field
        a = foliation_linearize(v, dy).cofactor_c
        y = BiRatFunc.from_poly(BiPoly.y())
        for c in (0, 1, -1, 2, Fraction(1, 2)):
            assert verify_gauge_identity(v, a, y, c, 1) is False
        residual = a - system_dlog(v, y)
        assert residual == BiRatFunc.from_poly(bp({(0, 1): Fraction(1, 2)}))

    def test_trivial_gauge(self, quadratic_fiber_field):
        one = BiRatFunc.one()
        zero = BiRatFunc.zero()
        assert verify_gauge_identity(quadratic_fiber_field, zero, one, 0, 1) is True
        assert verify_gauge_identity(
            quadratic_fiber_field, BiRatFunc.from_poly(BiPoly.x()), one, 0, 1
        ) is False

    def test_constructed_identity(self, quadratic_fiber_field):
        rng = random.Random(21)
        v = quadratic_fiber_field
        for _ in range(20):
            h = BiRatFunc.from_poly(
                bp({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(1, 4), (0, 0): 1})
            )
            c = Fraction(rng.randint(-5, 5))
            k = rng.choice([1, 2, 3, -1])
            a = (system_dlog(v, h) + c) / k
            assert verify_gauge_identity(v, a, h, c, k) is True

    def test_zero_h_and_zero_k_rejected(self, quadratic_fiber_field):
        with pytest.raises(ZeroDivisionError):
            verify_gauge_identity(
                quadratic_fiber_field, BiRatFunc.one(), BiRatFunc.zero(), 0, 1
            )
        with pytest.raises(ValueError):
            verify_gauge_identity(
                quadratic_fiber_field, BiRatFunc.one(), BiRatFunc.one(), 0, 0
            )


class TestLiftClassifier:
    def test_quadratic_fiber_orthogonal(self, quadratic_fiber_field):
        verdict = classify_invariant_line_lift(quadratic_fiber_field)
        assert verdict.conclusion == CONCLUSION_ORTHOGONAL
        assert verdict.base.orthogonal
        assert verdict.fibration.status == STATUS_NONE

    def test_deformed_instance_orthogonal(self):
        v = PlanarVectorField(
            bp({(4, 0): 1, (3, 0): -1, (0, 1): 1}), bp({(1, 1): 1, (1, 2): 1})
        )
        assert classify_invariant_line_lift(v).conclusion == CONCLUSION_ORTHOGONAL

    def test_internal_linearization_is_undecided(self):
        v = PlanarVectorField(bp({(3, 0): 1, (2, 0): -1, (0, 1): 1}), bp({(1, 1): 1}))
        verdict = classify_invariant_line_lift(v)
        assert verdict.conclusion == CONCLUSION_INCONCLUSIVE_FOR_LIFT
        assert verdict.fibration.beta == 0

    def test_base_hypothesis_fails(self):
        v = PlanarVectorField(bp({(2, 0): 1, (1, 0): -1}), bp({(1, 1): 1}))
        assert classify_invariant_line_lift(v).conclusion == CONCLUSION_BASE_INAPPLICABLE

    def test_coordinate_invariance_50(self):
        rng = random.Random(909)
        done = 0
        while done < 50:
            base = random_field(rng, max_deg=3)
            v = PlanarVectorField(base.fx, base.fy * BiPoly.y())
            if v.fx.subst_y(0).is_zero:
                continue
            a = Fraction(rng.choice([1, 2, 3, -1, -2]))
            b = Fraction(rng.randint(-2, 2))
            u = Fraction(rng.choice([1, 2, -1, -2, 3]))
            # X = a*x + b, Y = u*y: X' = a*fx(...), Y' = u*fy(...)
            inv_a, inv_u = Fraction(1) / a, Fraction(1) / u
            fxt = v.fx.compose_affine(inv_a, -b * inv_a, inv_u) * a
            fyt = v.fy.compose_affine(inv_a, -b * inv_a, inv_u) * u
            vt = PlanarVectorField(fxt, fyt)
            got = classify_invariant_line_lift(vt).conclusion
            want = classify_invariant_line_lift(v).conclusion
            assert got == want
            done += 1

    def test_gauge_covariance_on_fixture(self, quadratic_fiber_field, dy, x):
        # valuation-corrected covariance: restricting the transform of the
        # cofactor by y^m and adding back m * fiber reproduces the original
        # restriction; unit gauges (no y factor) leave the restricted search
        # status unchanged outright
        v = quadratic_fiber_field
        a = foliation_linearize(v, dy).cofactor_c
        lin = linearize_along_line(v)
        f = RatFunc.from_poly(lin.base_f0)
        fiber = RatFunc.from_poly(lin.fiber_hZ)
        base_status = beta_search_log(f, a.restrict_y0(), RATIONAL).status
        y = BiRatFunc.from_poly(BiPoly.y())
        for m in range(0, 4):
            shifted = a - system_dlog(v, y**m) if m else a
            corrected = shifted.restrict_y0() + fiber * m
            assert corrected == a.restrict_y0()
        for unit in (BiRatFunc.from_poly(bp({(2, 0): 1, (0, 0): 1})), BiRatFunc.one()):
            shifted = a - system_dlog(v, unit)
            status = beta_search_log(f, shifted.restrict_y0(), RATIONAL).status
            assert status == base_status
