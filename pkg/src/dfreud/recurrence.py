"""The discrete Painleve I route to the recurrence coefficients.

With u = (1-s)/(2s) and Delta_n = (1 - (-1)^n)/2, the recurrence coefficients
of the deformed Freud weight satisfy the nonlinear string equation (dP_I)

    beta_n ( beta_{n+1} + beta_n + beta_{n-1} + u ) = (n + alpha Delta_n)/(4 N s),

the differential-difference equation

    beta_n'(s) = beta_n/(2s) [ N (s+1) (beta_{n+1} - beta_{n-1}) - 1 ],

and a second-order nonlinear ODE in s whose parity constants are

    p_n = n + 2 alpha (n even) | n - alpha (n odd),
    q_n = n^2        (n even)  | (n + alpha)^2 (n odd).

At s = 0 everything degenerates to the generalized Hermite closed form
beta_n = (n + alpha Delta_n)/(2N); every s-equation here carries 1/s factors,
so s = 0 is always special-cased to that closed form.

Forward iteration of the dP_I is exponentially unstable: only the initial
value beta_1 = mu_2/mu_0 continues to a positive solution, and any
perturbation eventually throws some beta_n out of the positive cone.
``dpi_forward`` therefore halts gracefully on a positivity failure (recording
the index), and ``sensitivity_run`` measures where perturbed runs die --
failure is data here, not an error.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from mpmath import mp, mpf, mpmathify, isfinite

from .numerics import NumericContext, DomainError, fraction_to_mpf
from .moments import WeightParams, mu0, mu0_gaussian
from .hankel import BetaSequence


def delta_parity(n: int) -> int:
    """Delta_n = (1 - (-1)^n)/2: 0 for even n, 1 for odd n."""
    return n % 2


@dataclass(frozen=True)
class ParityData:
    """Parity constants entering the dP_I, the second-order ODE and small-s series."""

    n: int
    delta_n: int
    p_n: Fraction
    q_n: Fraction

    @classmethod
    def for_index(cls, n: int, alpha: Fraction) -> "ParityData":
        if n % 2 == 0:
            return cls(n=n, delta_n=0, p_n=n + 2 * alpha, q_n=Fraction(n * n))
        return cls(n=n, delta_n=1, p_n=n - alpha, q_n=(n + alpha) ** 2)


@dataclass(frozen=True)
class DpiParameters:
    """Normal-form parameters of the dP_I: beta_{n+1}+beta_n+beta_{n-1} =
    (z_n + gamma (-1)^n)/beta_n + delta."""

    n: int
    z_n: Fraction
    gamma_dpi: Fraction
    delta_dpi: Fraction

    @classmethod
    def for_index(cls, n: int, params: WeightParams) -> "DpiParameters":
        if params.s == 0:
            raise DomainError("dP_I parameters are singular at s = 0")
        s, a, N = params.s, params.alpha, params.big_n
        return cls(n=n, z_n=Fraction(2 * n + a, 1) / (8 * N * s),
                   gamma_dpi=-a / (8 * N * s), delta_dpi=(s - 1) / (2 * s))


def beta_at_s0(n: int, alpha, big_n) -> Fraction:
    """Exact closed form at s = 0: beta_n = (n + alpha Delta_n)/(2N), beta_0 = 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return Fraction(0)
    from .numerics import to_fraction
    a, N = to_fraction(alpha), to_fraction(big_n)
    return (n + a * delta_parity(n)) / (2 * N)


def beta1_initial(params: WeightParams, ctx: NumericContext) -> mpf:
    """The unique admissible initial value beta_1 = mu_2/mu_0."""
    with mp.workdps(ctx.digits + 10):
        if params.is_gaussian:
            _, a, N = params.mpfs()
            return (a + 1) / (2 * N)
        return mu0(params.shifted(2), ctx) / mu0(params, ctx)


def dpi_forward(params: WeightParams, beta1, n_max: int, ctx: NumericContext,
                beta0=0) -> BetaSequence:
    """Iterate the dP_I forward from (beta_0, beta_1) up to beta_{n_max}.

    Solves beta_{n+1} = (n + alpha Delta_n)/(4 N s beta_n) - beta_n - beta_{n-1} - u.
    Halts early when some beta_n <= 0 or stops being finite, recording the
    first failing index in the returned sequence.
    """
    if params.is_gaussian:
        raise DomainError("dP_I iteration needs s > 0; use beta_at_s0 instead")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    with mp.workdps(ctx.digits):
        s, a, N = params.mpfs()
        u = (1 - s) / (2 * s)
        betas = [mpmathify(beta0), mpmathify(beta1)]
        failure = None
        if not (betas[1] > 0):
            failure = 1
        else:
            for n in range(1, n_max):
                ell = (n + a * delta_parity(n)) / (4 * N * s)
                nxt = ell / betas[n] - betas[n] - betas[n - 1] - u
                betas.append(nxt)
                if not isfinite(nxt) or nxt <= 0:
                    failure = n + 1
                    break
        return BetaSequence(params=params, route="dpi", betas=tuple(betas),
                            digits_used=ctx.digits, failure_index=failure)


def dpi_residual(betas: BetaSequence | Sequence, params: WeightParams) -> list:
    """Residuals r_n of the dP_I for n = 1 .. len(betas)-2.

    For s > 0:  r_n = beta_n (beta_{n+1}+beta_n+beta_{n-1} + u) - (n+alpha Delta_n)/(4Ns).
    At s = 0 the s-multiplied form is used (the equation times s), which the
    closed-form coefficients satisfy exactly:
                r_n = beta_n (1-s)/2 - (n + alpha Delta_n)/(4N)   (s terms absent).
    """
    seq = betas.betas if isinstance(betas, BetaSequence) else tuple(betas)
    if len(seq) < 3:
        raise DomainError("need at least beta_0, beta_1, beta_2")
    digits = betas.digits_used if isinstance(betas, BetaSequence) else mp.dps
    with mp.workdps(digits):
        s, a, N = params.mpfs()
        out = []
        for n in range(1, len(seq) - 1):
            ell4N = (n + a * delta_parity(n)) / (4 * N)
            triple = seq[n + 1] + seq[n] + seq[n - 1]
            if s == 0:
                out.append(seq[n] * (1 - s) / 2 - ell4N)
            else:
                out.append(seq[n] * (triple + (1 - s) / (2 * s)) - ell4N / s)
        return out


def beta_prime(n: int, betas, params: WeightParams) -> mpf:
    """beta_n'(s) from the differential-difference equation (needs beta_{n+-1})."""
    if params.s == 0:
        raise DomainError("beta_prime formula is singular at s = 0")
    s, a, N = params.mpfs()
    b = betas.betas if isinstance(betas, BetaSequence) else betas
    return b[n] / (2 * s) * (N * (s + 1) * (b[n + 1] - b[n - 1]) - 1)


def beta_second(n: int, betas, params: WeightParams) -> mpf:
    """beta_n''(s) by differentiating the differential-difference equation.

    Chains beta'_{n+-1} (each again from the first-order equation, using
    beta_{n+-2}) through E = N(1+s)(beta_{n+1}-beta_{n-1}) - 1:

        beta_n'' = (beta_n' E + beta_n E')/(2s) - beta_n E/(2 s^2).

    Never uses second differences; this is the analytic route.
    """
    if params.s == 0:
        raise DomainError("beta_second formula is singular at s = 0")
    s, a, N = params.mpfs()
    b = betas.betas if isinstance(betas, BetaSequence) else betas
    bp_n = beta_prime(n, betas, params)
    bp_up = beta_prime(n + 1, betas, params)
    bp_dn = beta_prime(n - 1, betas, params)
    E = N * (1 + s) * (b[n + 1] - b[n - 1]) - 1
    Ep = N * (b[n + 1] - b[n - 1]) + N * (1 + s) * (bp_up - bp_dn)
    return (bp_n * E + b[n] * Ep) / (2 * s) - b[n] * E / (2 * s * s)


def ode25_residual(n: int, params: WeightParams, ctx: NumericContext,
                   betas: Optional[BetaSequence] = None) -> mpf:
    """Signed residual beta_n'' - RHS of the second-order ODE in s.

    All inputs are analytic: beta_{n-2}..beta_{n+2} from the Hankel route,
    beta_n' from the differential-difference equation, beta_n'' from its
    analytic derivative.  The residual is pure round-off when the printed
    equation is consistent.
    """
    if params.s == 0:
        raise DomainError("the ODE is singular at s = 0")
    if n < 2:
        raise DomainError("need n >= 2 (the window uses beta_{n-2})")
    from .hankel import beta_from_moments
    if betas is None:
        betas = beta_from_moments(params, n + 2, ctx)
    with mp.workdps(betas.digits_used):
        s, a, N = params.mpfs()
        par = ParityData.for_index(n, params.alpha)
        pn, qn = fraction_to_mpf(par.p_n), fraction_to_mpf(par.q_n)
        bn = betas[n]
        bp = beta_prime(n, betas, params)
        bpp = beta_second(n, betas, params)
        rhs = (bp ** 2 / (2 * bn)
               - (2 + s) / (s * (1 + s)) * bp
               + 3 * N ** 2 * (1 + s) ** 2 / (8 * s ** 2) * bn ** 3
               + N ** 2 * (1 + s) ** 2 * (1 - s) / (4 * s ** 3) * bn ** 2
               + ((N ** 2 * (1 - s) ** 2 * (1 + s) ** 3 - 4 * s ** 2 * (3 - s))
                  / (32 * s ** 4 * (1 + s))
                  + N * (1 + s) ** 2 / (16 * s ** 3) * pn) * bn
               - (1 + s) ** 2 * qn / (128 * s ** 4 * bn))
        return +(bpp - rhs)


def upper_bound(n: int, params: WeightParams, ctx: Optional[NumericContext] = None) -> mpf:
    """Closed-form upper bound 0 < beta_n < -(1-s)/(4s) + sqrt((...)^2 + l_n/(4Ns))."""
    if params.s == 0:
        raise DomainError("the bound is stated for s > 0")
    digits = ctx.digits if ctx is not None else 50
    with mp.workdps(digits):
        from mpmath import sqrt
        s, a, N = params.mpfs()
        half = (1 - s) / (4 * s)
        ell = (n + a * delta_parity(n)) / (4 * N * s)
        return -half + sqrt(half * half + ell)


@dataclass(frozen=True)
class SensitivityRun:
    """One perturbed dP_I trajectory: where (if at all) positivity first failed."""

    params: WeightParams
    epsilon: str
    digits: int
    first_failure_index: Optional[int]
    trajectory: tuple


def sensitivity_run(params: WeightParams, epsilon, n_max: int,
                    ctx: Optional[NumericContext] = None) -> SensitivityRun:
    """Run the dP_I from beta_1 + epsilon and record the first positivity failure.

    Default precision is 500 digits, which keeps the unperturbed run positive
    far beyond n = 100; perturbed runs fail at a finite index that moves
    earlier as |epsilon| grows.
    """
    ctx = ctx or NumericContext(digits=500)
    with mp.workdps(ctx.digits + 20):
        b1 = beta1_initial(params, ctx.with_digits(ctx.digits + 20)) + mpmathify(epsilon)
    seq = dpi_forward(params, b1, n_max, ctx)
    return SensitivityRun(params=params, epsilon=str(epsilon), digits=ctx.digits,
                          first_failure_index=seq.failure_index,
                          trajectory=seq.betas)
