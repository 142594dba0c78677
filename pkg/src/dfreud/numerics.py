"""Arbitrary-precision scaffolding shared by every other module.

Everything downstream (moments, Hankel pivots, recurrence iterations, determinant
asymptotics) is computed with mpmath multiprecision floats.  The working precision
is never set globally by library code: each operation receives a NumericContext
and runs inside a scoped ``mp.workdps`` block, so callers see no precision state
leak.  Values returned are ordinary ``mpf`` numbers carrying the precision they
were created with.

Provided here:

* ``NumericContext`` -- decimal working precision plus quadrature / finite
  difference policy, threaded explicitly through every numeric operation.
* ``gamma_log`` / ``barnes_g_log`` -- log Gamma and log of the Barnes G-function.
  Barnes G is normalised by G(1) = G(2) = 1 with G(z+1) = Gamma(z) G(z) and is
  evaluated by shifting the argument up through that recursion until the
  standard asymptotic expansion (Bernoulli-number tail, Glaisher constant)
  converges below the target precision.
* ``integrate_semi_infinite`` -- double-exponential quadrature on (0, inf) with
  an optional algebraic endpoint singularity y**p, p > -1, removed by the
  substitution y = u**m before the quadrature sees it.
* ``central_difference`` -- fourth-order central stencils, used only as an
  independent oracle for analytic derivative formulas elsewhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp, mpf, mpmathify, quad, inf, loggamma, log


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class IntegrationError(ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class PrecisionExhaustedError(ArithmeticError):
    """A computation ran out of precision; ``index`` is the failing position."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PoleError(ValueError):
    """Evaluation requested too close to a pole of a rational coefficient."""


class SingularCoefficientError(ValueError):
    """An expansion coefficient is singular at the requested parameters."""


def to_fraction(value) -> Fraction:
    """Coerce a parameter to an exact rational.

    Strings are parsed as exact decimals ("0.1" -> 1/10), floats keep their
    exact binary value, ints and Fractions pass through.  Storing parameters
    as rationals makes every route see the identical number no matter what
    working precision it later converts at.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, mpf):
        sign, man, exp, bc = value._mpf_
        if bc < 0:
            raise TypeError(f"cannot interpret non-finite {value!r} as a parameter")
        if not man:
            return Fraction(0)
        return Fraction((-1) ** sign * int(man), 1) * Fraction(2) ** exp
    raise TypeError(f"cannot interpret {value!r} as an exact parameter")


def fraction_to_mpf(x: Fraction) -> mpf:
    """Convert an exact rational to mpf at the current working precision."""
    return mpf(x.numerator) / mpf(x.denominator)


@dataclass(frozen=True)
class NumericContext:
    """Working precision and tolerance policy.

    digits     : decimal working precision (>= 30).
    quad_tol   : relative tolerance for adaptive quadrature, >= 10**(-digits+10).
    diff_step  : relative step for central differences, in (0, 1e-2].  The
                 default 10**(-digits//5) balances the h**4 truncation error of
                 the fourth-order stencils against roundoff at ``digits``.
    """

    digits: int = 60
    quad_tol: Fraction = None  # type: ignore[assignment]
    diff_step: Fraction = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.digits < 30:
            raise DomainError(f"digits must be >= 30, got {self.digits}")
        if self.quad_tol is None:
            object.__setattr__(self, "quad_tol", Fraction(1, 10 ** (self.digits - 10)))
        else:
            object.__setattr__(self, "quad_tol", to_fraction(self.quad_tol))
        if self.quad_tol < Fraction(1, 10 ** (self.digits - 10)):
            raise DomainError("quad_tol below what the working precision can support")
        if self.diff_step is None:
            object.__setattr__(self, "diff_step", Fraction(1, 10 ** max(2, self.digits // 5)))
        else:
            object.__setattr__(self, "diff_step", to_fraction(self.diff_step))
        if not (0 < self.diff_step <= Fraction(1, 100)):
            raise DomainError("diff_step must lie in (0, 1e-2]")

    def with_digits(self, digits: int) -> "NumericContext":
        return NumericContext(digits=digits)


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

#: Glaisher-Kinkelin constant A = exp(1/12 - zeta'(-1)), stored literal (205 digits).
GLAISHER_A = (
    "1.28242712910062263687534256886979172776768892732500119206374002174040630885882"
    "64611297364919582023743942064612039900074893315779136277528040415907257386172752"
    "21433432714343978733506791525736685690787656115"
)


def _bernoulli_table(max_index: int) -> tuple[Fraction, ...]:
    # exact rationals via sum_{k=0}^{m-1} C(m+1,k) B_k = -(m+1) B_m
    table = [Fraction(1)]
    for m in range(1, max_index + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * table[k]
        table.append(-acc / (m + 1))
    return tuple(table)


@dataclass(frozen=True)
class Constants:
    """High-precision literals and exact tables used by the asymptotic formulas."""

    glaisher_A: str = GLAISHER_A
    bernoulli: tuple[Fraction, ...] = field(default_factory=lambda: _bernoulli_table(40))

    def glaisher_log(self) -> mpf:
        """log A at the current working precision."""
        return log(mpmathify(self.glaisher_A))


CONSTANTS = Constants()


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def gamma_log(x, ctx: NumericContext) -> mpf:
    """log Gamma(x) for real x > 0.

    Backed by mpmath's precision-parameterised Gamma; the extra ten working
    digits keep the relative error of exp(result) below 10**(-digits+5).
    """
    with mp.workdps(ctx.digits + 10):
        x = mpmathify(x)
        if x <= 0:
            raise DomainError(f"gamma_log requires x > 0, got {x}")
        return +loggamma(x).real


def barnes_g_log(z, ctx: NumericContext) -> mpf:
    """log G(z) for real z > 0, with G(1) = G(2) = 1 and G(z+1) = Gamma(z) G(z).

    The argument is shifted upward through the recursion until the asymptotic
    expansion of log G(w+1),

        w^2/4 + w logGamma(w+1) - [w(w+1)/2 + 1/12] log w - log A
        + sum_k B_{2k+2} / (2k (2k+1) (2k+2) w^{2k}),

    truncated at the exact Bernoulli table (B_40), leaves the first omitted
    term below 10**(-digits) at the shifted argument.
    """
    with mp.workdps(ctx.digits + 15):
        z = mpmathify(z)
        if z <= 0:
            raise DomainError(f"barnes_g_log requires z > 0, got {z}")
        # |B_40|/(38*39*40 w^36) < 10^-digits  =>  w > 10^((digits+12)/36)
        w_min = mpf(10) ** (mpf(ctx.digits + 12) / 36)
        shifts = max(0, int(w_min - z) + 1)
        # log G(z) = log G(z + shifts) - sum_{j<shifts} logGamma(z+j)
        shift_sum = mp.fsum(loggamma(z + j).real for j in range(shifts))
        w = z + shifts - 1
        series = (w * w / 4 + w * loggamma(w + 1).real
                  - (w * (w + 1) / 2 + mpf(1) / 12) * log(w)
                  - CONSTANTS.glaisher_log())
        bern = CONSTANTS.bernoulli
        for k in range(1, (len(bern) - 1) // 2):
            b = bern[2 * k + 2]
            series += (mpf(b.numerator) / b.denominator
                       / ((2 * k) * (2 * k + 1) * (2 * k + 2) * w ** (2 * k)))
        return +(series - shift_sum)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def integrate_semi_infinite(f: Callable, ctx: NumericContext,
                            singularity_power: float = 0.0) -> mpf:
    """Integrate f over (0, inf) to relative tolerance ``ctx.quad_tol``.

    ``singularity_power`` declares an algebraic endpoint singularity
    f(y) ~ y**p as y -> 0 with p > -1.  For p < 0 the substitution y = u**m,
    m = ceil(1/(p+1)), turns the integrand into something smooth at 0, which
    tanh-sinh quadrature then resolves at full precision; without it the
    semi-infinite transform loses digits near the endpoint.

    Raises IntegrationError when the internal error estimate will not drop
    below the tolerance (non-shrinking tail).
    """
    p = float(singularity_power)
    if p <= -1:
        raise DomainError("endpoint singularity must be integrable (p > -1)")
    m = 1 if p >= 0 else math.ceil(1.0 / (p + 1.0))

    tol_num, tol_den = ctx.quad_tol.numerator, ctx.quad_tol.denominator

    def attempt(dps: int, maxdegree: int):
        with mp.workdps(dps):
            if m == 1:
                g = f
            else:
                def g(u, _m=m):
                    return f(u ** _m) * _m * u ** (_m - 1)
            value, err = quad(g, [0, 1, inf], error=True, maxdegree=maxdegree)
            tol = mpf(tol_num) / tol_den
            scale = max(abs(value), mpf(10) ** (-dps))
            return value, err, bool(err <= tol * scale)

    base = ctx.digits + 10
    maxdeg = 8 + ctx.digits // 60
    value, err, ok = attempt(base, maxdeg)
    if not ok:
        value, err, ok = attempt(base + 20, maxdeg + 2)
    if not ok:
        raise IntegrationError(
            f"quadrature error estimate {err} exceeds tolerance {ctx.quad_tol}")
    return value


# ---------------------------------------------------------------------------
# finite differences
# ---------------------------------------------------------------------------

def central_difference(f: Callable, s0, order: int, ctx: NumericContext) -> mpf:
    """Fourth-order central difference of f at s0 (order = 1 or 2).

    The step h = diff_step * max(|s0|, 1) balances the O(h^4) truncation error
    against roundoff at ``ctx.digits``; f must be evaluable on [s0-2h, s0+2h]
    and is responsible for its own internal precision.
    """
    if order not in (1, 2):
        raise DomainError("derivative order must be 1 or 2")
    with mp.workdps(ctx.digits + 10):
        s0 = mpmathify(s0)
        h = fraction_to_mpf(ctx.diff_step) * max(abs(s0), mpf(1))
        fm2, fm1 = f(s0 - 2 * h), f(s0 - h)
        fp1, fp2 = f(s0 + h), f(s0 + 2 * h)
        if order == 1:
            return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
        f0 = f(s0)
        return (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)
