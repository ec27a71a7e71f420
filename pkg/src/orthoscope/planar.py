"""Polynomial planar vector fields.

Invariant-line detection along y = 0, first-order linearization along that
line, Lie brackets, the system derivation and its logarithmic derivative,
rank-one foliation linearization, and the invariant-line lifting classifier
that combines the base and fiber criteria.

Bracket sign convention: [v, w] = (v.grad)w - (w.grad)v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra.bipoly import BiPoly, bipoly_gcd
from .algebra.unipoly import UniPoly, _frac
from .criteria import (
    CONCLUSION_BASE_INAPPLICABLE,
    CONCLUSION_INCONCLUSIVE,
    CONCLUSION_INCONCLUSIVE_FOR_LIFT,
    CONCLUSION_ORTHOGONAL,
    STATUS_FOUND,
    STATUS_NONE,
    SystemVerdict,
    base_orthogonal,
    beta_search_log,
)
from .errors import HypothesisError
from .ratfunc import RATIONAL, RatFunc


@dataclass(frozen=True)
class BiRatFunc:
    """Reduced bivariate rational function with a canonical denominator.

    The pair is reduced by the bivariate gcd and the denominator's
    lex-leading coefficient is normalized to 1; equality testing is by
    cross-multiplication, which is exact regardless of representation.
    """

    num: BiPoly
    den: BiPoly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("bivariate rational function with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", BiPoly.zero())
            object.__setattr__(self, "den", BiPoly.one())
            return
        g = bipoly_gcd(num, den)
        if not g.is_constant:
            num, den = num.div_exact(g), den.div_exact(g)
        lead = den.terms[max(den.terms)]
        object.__setattr__(self, "num", num * (1 / lead))
        object.__setattr__(self, "den", den * (1 / lead))

    # -- constructors ---------------------------------------------------

    @staticmethod
    def of(num, den=1) -> "BiRatFunc":
        return BiRatFunc(_as_bipoly(num), _as_bipoly(den))

    @staticmethod
    def from_poly(p) -> "BiRatFunc":
        return BiRatFunc(_as_bipoly(p), BiPoly.one())

    @staticmethod
    def zero() -> "BiRatFunc":
        return BiRatFunc(BiPoly.zero(), BiPoly.one())

    @staticmethod
    def one() -> "BiRatFunc":
        return BiRatFunc(BiPoly.one(), BiPoly.one())

    # -- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.num.constant_value() / self.den.constant_value()

    # -- field operations ----------------------------------------------------

    def _coerce(self, other) -> "BiRatFunc":
        if isinstance(other, BiRatFunc):
            return other
        return BiRatFunc.from_poly(_as_bipoly(other))

    def __add__(self, other) -> "BiRatFunc":
        other = self._coerce(other)
        return BiRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "BiRatFunc":
        return BiRatFunc(-self.num, self.den)

    def __sub__(self, other) -> "BiRatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiRatFunc":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiRatFunc":
        other = self._coerce(other)
        return BiRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BiRatFunc":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero")
        return BiRatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "BiRatFunc":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "BiRatFunc":
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return BiRatFunc(self.den, self.num) ** (-n)
        return BiRatFunc(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (BiRatFunc, BiPoly, UniPoly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    def partial(self, variable: str) -> "BiRatFunc":
        dn = self.num.partial(variable) * self.den - self.num * self.den.partial(variable)
        return BiRatFunc(dn, self.den * self.den)

    def restrict_y0(self) -> RatFunc:
        """Restriction to the line y = 0, as a univariate rational function."""
        den0 = self.den.subst_y(0)
        if den0.is_zero:
            raise ZeroDivisionError("denominator vanishes identically on y = 0")
        return RatFunc(self.num.subst_y(0), den0)

    def to_string(self) -> str:
        if self.den.is_constant and self.den.constant_value() == 1:
            return self.num.to_string()
        num_s, den_s = self.num.to_string(), self.den.to_string()
        if len(self.num.terms) > 1 or not self.num.is_constant and _coeff_not_unit(self.num):
            num_s = f"({num_s})"
        if len(self.den.terms) > 1 or _coeff_not_unit(self.den):
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"BiRatFunc({self.to_string()!r})"


def _coeff_not_unit(p: BiPoly) -> bool:
    if len(p.terms) != 1:
        return True
    ((key, c),) = p.terms.items()
    return key != (0, 0) and c != 1


def _as_bipoly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, UniPoly):
        return BiPoly.from_unipoly_x(v)
    return BiPoly.constant(_frac(v))


# -- vector fields --------------------------------------------------------------


@dataclass(frozen=True)
class PlanarVectorField:
    """v = fx * d/dx + fy * d/dy with polynomial components."""

    fx: BiPoly
    fy: BiPoly

    def is_zero(self) -> bool:
        return self.fx.is_zero and self.fy.is_zero

    def apply(self, h: BiPoly) -> BiPoly:
        """Directional derivative of a polynomial along the field."""
        return self.fx * h.partial("x") + self.fy * h.partial("y")

    def to_string(self) -> str:
        return f"x' = {self.fx}; y' = {self.fy}"

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class InvariantLineReport:
    invariant: bool
    cofactor_g1: Optional[BiPoly]


@dataclass(frozen=True)
class LinearizedSystem:
    base_f0: UniPoly    # f(x, 0)
    fiber_hZ: UniPoly   # g1(x, 0)

    @property
    def as_vector_field(self) -> PlanarVectorField:
        return PlanarVectorField(
            BiPoly.from_unipoly_x(self.base_f0),
            BiPoly.y() * BiPoly.from_unipoly_x(self.fiber_hZ),
        )


@dataclass(frozen=True)
class FoliationLinearization:
    """Cofactor c with [w, v] = c * w, exactly."""

    cofactor_c: BiRatFunc


# -- operations ---------------------------------------------------------------------


def lie_bracket(v: PlanarVectorField, w: PlanarVectorField) -> PlanarVectorField:
    """[v, w] = (v.grad)w - (w.grad)v, componentwise."""
    bx = v.apply(w.fx) - w.apply(v.fx)
    by = v.apply(w.fy) - w.apply(v.fy)
    return PlanarVectorField(bx, by)


def invariant_line(v: PlanarVectorField) -> InvariantLineReport:
    """The line y = 0 is invariant iff y divides the y-component."""
    try:
        cofactor = v.fy.div_exact_y()
    except ValueError:
        return InvariantLineReport(False, None)
    return InvariantLineReport(True, cofactor)


def linearize_along_line(v: PlanarVectorField) -> LinearizedSystem:
    """First-order linearization along the invariant line y = 0.

    Requires the line to be invariant and f(x, 0) nonzero; the result is
    the system x' = f(x, 0), y' = y * g1(x, 0).
    """
    report = invariant_line(v)
    if not report.invariant:
        raise HypothesisError("the line y = 0 is not invariant under the field")
    base = v.fx.subst_y(0)
    if base.is_zero:
        raise HypothesisError("f(x, 0) is identically zero; the base degenerates")
    return LinearizedSystem(base, report.cofactor_g1.subst_y(0))


def system_derivative(v: PlanarVectorField, h: BiRatFunc) -> BiRatFunc:
    """The derivation with delta(x) = fx, delta(y) = fy, extended to fractions."""
    dn = v.apply(h.num)
    dd = v.apply(h.den)
    return BiRatFunc(dn * h.den - h.num * dd, h.den * h.den)


def system_dlog(v: PlanarVectorField, h: BiRatFunc) -> BiRatFunc:
    """delta(h)/h for the system derivation."""
    if h.is_zero:
        raise ZeroDivisionError("logarithmic derivative of zero")
    return system_derivative(v, h) / h


def foliation_linearize(v: PlanarVectorField, w: PlanarVectorField) -> FoliationLinearization:
    """Cofactor c with [w, v] = c*w; fails if the bracket is not proportional."""
    if w.is_zero():
        raise ValueError("the foliation direction w must be nonzero")
    br = lie_bracket(w, v)
    cross = br.fx * w.fy - br.fy * w.fx
    if not cross.is_zero:
        raise HypothesisError("[w, v] is not proportional to w")
    if not w.fx.is_zero:
        c = BiRatFunc(br.fx, w.fx)
    else:
        c = BiRatFunc(br.fy, w.fy)
    if not (c * BiRatFunc.from_poly(w.fx) == BiRatFunc.from_poly(br.fx)
            and c * BiRatFunc.from_poly(w.fy) == BiRatFunc.from_poly(br.fy)):
        raise HypothesisError("[w, v] is not a rational multiple of w")
    return FoliationLinearization(c)


def verify_gauge_identity(
    v: PlanarVectorField, a: BiRatFunc, h: BiRatFunc, c, k: int
) -> bool:
    """Check k*a = c + dlog_delta(h) as an exact identity."""
    if h.is_zero:
        raise ZeroDivisionError("gauge by zero")
    if k == 0:
        raise ValueError("the integer multiplier k must be nonzero")
    lhs = a * k
    rhs = system_dlog(v, h) + BiRatFunc.from_poly(BiPoly.constant(_frac(c)))
    return lhs == rhs


def classify_invariant_line_lift(v: PlanarVectorField) -> SystemVerdict:
    """Lifting classifier along the invariant line y = 0.

    Pipeline: invariant line, linearization, base orthogonality of f(x,0),
    then the rational-class beta search on (f(x,0), g1(x,0)). A verdict of
    orthogonal-to-constants is asserted only when the base is orthogonal and
    the search finds no beta; a found beta leaves the total space undecided.
    """
    lin = linearize_along_line(v)
    f = RatFunc.from_poly(lin.base_f0)
    g = RatFunc.from_poly(lin.fiber_hZ)
    base = base_orthogonal(f)
    fibration = beta_search_log(f, g, RATIONAL)
    if not base.orthogonal:
        return SystemVerdict(base, fibration, CONCLUSION_BASE_INAPPLICABLE, None)
    if fibration.status == STATUS_NONE:
        return SystemVerdict(base, fibration, CONCLUSION_ORTHOGONAL, None)
    if fibration.status == STATUS_FOUND:
        return SystemVerdict(base, fibration, CONCLUSION_INCONCLUSIVE_FOR_LIFT, None)
    return SystemVerdict(base, fibration, CONCLUSION_INCONCLUSIVE, None)
