"""Asymptotic regimes of the recurrence coefficients, plus fluid endpoints.

Three expansions are implemented, each checkable against the Hankel oracle at
its predicted remainder order:

1. s -> 0 with n, N fixed (``beta_small_s``): a series in s with prefactor
   sqrt(q_n)/(2N) and coefficients rational in (p_n, q_n, N).  The c2 and c3
   used here are the series solution of the verified second-order ODE; the
   remainder is O(s^4).

2. n -> infinity with N fixed (``beta_large_n``): the string-equation
   expansion in n^{-1/2} with prefactor sqrt(n)/(2 sqrt(3 N s)).  For
   alpha != 0 the coefficients carry parity-alternating parts, so they are
   produced by an order-by-order series solver applied to the dP_I with the
   substitution beta_m ~ pref(m) (1 + sum_k (a_k + b_k (-1)^m) m^{-k/2});
   the solver reduces to the classical coefficient table at alpha = 0.
   Truncation after k = 7 leaves an O(n^{-7/2}) remainder.

3. n, N -> infinity with r = n/N fixed (``beta_double_scaling``):
   beta = a0(s) + a1(s)/N + a2(s)/N^2 + O(N^{-3}) where a0 solves the
   Coulomb-fluid cubic, a1 is the standard parity-dependent correction, and
   a2 is obtained by linearising the second-order ODE around a0 (the
   operator-chain construction below), which the Hankel data confirms at the
   O(N^{-3}) rate.

The fluid endpoint b^2 (support edge of the equilibrium density) and the
Mhaskar-Rakhmanov-Saff number a_mu share one quadratic-in-the-square
normalisation (3/2) N s a^4 + N (1-s) a^2 = mu; the endpoint for n particles
corresponds to mu = 2n + alpha, and beta_n / a_mu^2 -> 1/4.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from mpmath import mp, mpf, mpmathify, sqrt, matrix, lu_solve, binomial, fsum

from .numerics import NumericContext, DomainError, SingularCoefficientError, fraction_to_mpf
from .moments import WeightParams
from .recurrence import ParityData, delta_parity

_DEFAULT_DIGITS = 50


# ---------------------------------------------------------------------------
# regime 1: s -> 0
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmallSCoefficients:
    """Prefactor sqrt(q_n)/(2N) and series coefficients c_0..c_3 (c_0 = 1)."""

    n: int
    prefactor: mpf
    c: tuple  # (c0, c1, c2, c3)


def small_s_coefficients(n: int, params: WeightParams,
                         ctx: Optional[NumericContext] = None) -> SmallSCoefficients:
    """Series data for beta_n(s) = pref * (1 + c1 s + c2 s^2 + c3 s^3 + O(s^4)).

    c1 matches the theorem statement; c2 and c3 are the series solution of the
    second-order ODE in terms of p_n, q_n:

      c1 = (N - p - 2 Q)/N,
      c2 = (2N^2 - 12NQ - 6Np + 17Q^2 + 16Qp + 3p^2 + 12) / (2N^2),
      c3 = (2N^3 + 60N - 100p - 12N^2 p + 15N p^2 - 5p^3 - 224Q - 24N^2 Q
            + 80NpQ - 48p^2 Q + 85NQ^2 - 125pQ^2 - 92Q^3) / (2N^3),

    with Q = sqrt(q_n) = n + alpha Delta_n.
    """
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        par = ParityData.for_index(n, params.alpha)
        N = fraction_to_mpf(params.big_n)
        p = fraction_to_mpf(par.p_n)
        Q = fraction_to_mpf(params.alpha) * par.delta_n + n  # sqrt(q_n) exactly
        c1 = (N - p - 2 * Q) / N
        c2 = (2 * N ** 2 - 12 * N * Q - 6 * N * p + 17 * Q ** 2 + 16 * Q * p
              + 3 * p ** 2 + 12) / (2 * N ** 2)
        c3 = (2 * N ** 3 + 60 * N - 100 * p - 12 * N ** 2 * p + 15 * N * p ** 2
              - 5 * p ** 3 - 224 * Q - 24 * N ** 2 * Q + 80 * N * p * Q
              - 48 * p ** 2 * Q + 85 * N * Q ** 2 - 125 * p * Q ** 2
              - 92 * Q ** 3) / (2 * N ** 3)
        return SmallSCoefficients(n=n, prefactor=Q / (2 * N),
                                  c=(mp.one, +c1, +c2, +c3))


def beta_small_s(n: int, params: WeightParams,
                 ctx: Optional[NumericContext] = None) -> mpf:
    """Small-s evaluation of beta_n; meaningful accuracy needs s <~ 0.05."""
    if n == 0:
        return mp.zero
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    data = small_s_coefficients(n, params, ctx)
    with mp.workdps(digits + 10):
        s = fraction_to_mpf(params.s)
        c0, c1, c2, c3 = data.c
        return data.prefactor * (c0 + c1 * s + c2 * s * s + c3 * s ** 3)


# ---------------------------------------------------------------------------
# regime 2: n -> infinity, N fixed
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LargeNCoefficients:
    """Coefficients of the n^{-1/2}-expansion at given parameters and parity.

    ``d`` holds the seven coefficients multiplying n^{-k/2} for this parity,
    d_k = a_k + b_k (-1)^n; ``symmetric``/``alternating`` expose the (a_k, b_k)
    split.  The alternating parts vanish identically at alpha = 0, where the
    symmetric parts reduce to the classical closed-form table (in particular
    the symmetric n^{-3/2} coefficient is exactly zero).
    """

    params: WeightParams
    parity: str
    d: tuple
    symmetric: tuple
    alternating: tuple
    prefactor: Callable


_K_SERIES = 9  # internal truncation order in t = n^{-1/2}


def _series_mul(x, y):
    out = [[mp.zero, mp.zero] for _ in range(_K_SERIES + 1)]
    for i in range(_K_SERIES + 1):
        xi0, xi1 = x[i]
        if xi0 == 0 and xi1 == 0:
            continue
        for j in range(_K_SERIES + 1 - i):
            yj0, yj1 = y[j]
            out[i + j][0] += xi0 * yj0 + xi1 * yj1  # sigma^2 = 1
            out[i + j][1] += xi0 * yj1 + xi1 * yj0
    return out


def _binom_series(eps: int, half_power: int):
    # (1 + eps t^2)^(half_power/2), no sigma part
    out = [[mp.zero, mp.zero] for _ in range(_K_SERIES + 1)]
    for m in range(_K_SERIES // 2 + 1):
        out[2 * m][0] = binomial(mpf(half_power) / 2, m) * mpf(eps) ** m
    return out


def _beta_series(eps: int, coeffs):
    """Series of beta_{n+eps} / (C t^{-1}); sigma tracks (-1)^n, flipped at n+-1."""
    sign = -1 if eps else 1
    acc = [[mp.zero, mp.zero] for _ in range(_K_SERIES + 1)]
    acc[0][0] = mp.one
    for k in range(1, _K_SERIES + 1):
        ak, bk = coeffs[k - 1]
        scaled = _binom_series(eps, -k)
        for i in range(_K_SERIES + 1 - k):
            c = scaled[i][0]
            if c == 0:
                continue
            acc[i + k][0] += ak * c
            acc[i + k][1] += bk * sign * c
    return _series_mul(_binom_series(eps, 1), acc)


def _dpi_series_residual(coeffs, s, alpha, N):
    """Residual series of the dP_I under the expansion ansatz (times t^2/C^2)."""
    C2 = 1 / (12 * N * s)
    C = sqrt(C2)
    u = (1 - s) / (2 * s)
    center = _beta_series(0, coeffs)
    upseq = _beta_series(1, coeffs)
    dnseq = _beta_series(-1, coeffs)
    triple = [[upseq[i][0] + center[i][0] + dnseq[i][0],
               upseq[i][1] + center[i][1] + dnseq[i][1]] for i in range(_K_SERIES + 1)]
    res = _series_mul(center, triple)
    for i in range(_K_SERIES):
        res[i + 1][0] += (u / C) * center[i][0]
        res[i + 1][1] += (u / C) * center[i][1]
    res[0][0] -= 3
    res[2][0] -= alpha / (8 * N * s) / C2
    res[2][1] += alpha / (8 * N * s) / C2
    return res


def _solve_string_coefficients(s, alpha, N, kmax: int = 7):
    """(a_k, b_k) for k = 1..kmax by matching orders of the dP_I residual.

    Each order is linear in the newest pair (a_k, b_k); the two components
    (constant and (-1)^n-alternating) give a 2x2 system.
    """
    coeffs = [(mp.zero, mp.zero) for _ in range(_K_SERIES)]
    for k in range(1, kmax + 1):
        base = _dpi_series_residual(coeffs, s, alpha, N)
        with_a = list(coeffs)
        with_a[k - 1] = (mp.one, mp.zero)
        res_a = _dpi_series_residual(with_a, s, alpha, N)
        with_b = list(coeffs)
        with_b[k - 1] = (mp.zero, mp.one)
        res_b = _dpi_series_residual(with_b, s, alpha, N)
        M = matrix(2, 2)
        rhs = matrix(2, 1)
        M[0, 0] = res_a[k][0] - base[k][0]
        M[0, 1] = res_b[k][0] - base[k][0]
        M[1, 0] = res_a[k][1] - base[k][1]
        M[1, 1] = res_b[k][1] - base[k][1]
        rhs[0] = -base[k][0]
        rhs[1] = -base[k][1]
        sol = lu_solve(M, rhs)
        coeffs[k - 1] = (sol[0], sol[1])
    return coeffs[:kmax]


_string_coeff_cache: dict = {}


def large_n_coefficients(params: WeightParams, parity: str,
                         ctx: Optional[NumericContext] = None) -> LargeNCoefficients:
    """Expansion coefficients d_1..d_7 for the requested parity (cached)."""
    if params.s == 0:
        raise DomainError("the large-n expansion needs s > 0")
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    key = (params, parity, digits)
    cached = _string_coeff_cache.get(key)
    if cached is not None:
        return cached
    with mp.workdps(digits + 10):
        s, a, N = params.mpfs()
        pairs = _solve_string_coefficients(s, a, N)
        sign = 1 if parity == "even" else -1
        d = tuple(+(ak + bk * sign) for ak, bk in pairs)
        sym = tuple(+ak for ak, _ in pairs)
        alt = tuple(+bk for _, bk in pairs)

        def prefactor(n, _N=N, _s=s):
            return sqrt(mpf(n)) / (2 * sqrt(3 * _N * _s))

        result = LargeNCoefficients(params=params, parity=parity, d=d,
                                    symmetric=sym, alternating=alt,
                                    prefactor=prefactor)
        _string_coeff_cache[key] = result
        return result


def beta_large_n(n: int, params: WeightParams,
                 ctx: Optional[NumericContext] = None) -> mpf:
    """Large-n evaluation of beta_n through the n^{-3} term (O(n^{-7/2}) remainder)."""
    if params.s == 0:
        raise DomainError("the large-n expansion needs s > 0")
    if n < 1:
        raise DomainError("n must be >= 1")
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    parity = "even" if n % 2 == 0 else "odd"
    data = large_n_coefficients(params, parity, ctx)
    with mp.workdps(digits + 10):
        total = mp.one + fsum(dk * mpf(n) ** (-mpf(k) / 2)
                              for k, dk in enumerate(data.d, start=1))
        return data.prefactor(n) * total


# ---------------------------------------------------------------------------
# regime 3: n, N -> infinity with r = n/N fixed
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DoubleScalingData:
    """r = n/N, the auxiliary g(s), f(s), and expansion coefficients a0, a1, a2."""

    r: mpf
    g_s: mpf
    f_s: mpf
    a0: mpf
    a1: mpf
    a2: mpf


_F_SINGULAR_TOL = 1e-8


def _ode_operator_parts(s, r, parity, alpha):
    """The N^2, N^1 and N^0 parts of the second-order ODE as functions of beta.

    Writing the ODE (times beta) as N^2 A(beta) + N B(beta) + C(beta, beta',
    beta'') = 0 with n = r N; A is parity independent, B and the constant in C
    carry the parity structure of (p_n, q_n).
    """
    c1 = (1 + s) ** 2

    def A_d1(x):
        return (-3 * c1 * x ** 3 / (2 * s ** 2) - 3 * c1 * (1 - s) * x ** 2 / (4 * s ** 3)
                - c1 * (1 - 2 * s + 2 * r * s + s * s) * x / (16 * s ** 4))

    def A_d2(x):
        return (-9 * c1 * x ** 2 / (2 * s ** 2) - 3 * c1 * (1 - s) * x / (2 * s ** 3)
                - c1 * (1 - 2 * s + 2 * r * s + s * s) / (16 * s ** 4))

    def A_d3(x):
        return -9 * c1 * x / s ** 2 - 3 * c1 * (1 - s) / (2 * s ** 3)

    if parity == "even":
        def B(x):
            return -alpha * c1 * x ** 2 / (8 * s ** 3)

        def B_d1(x):
            return -alpha * c1 * x / (4 * s ** 3)

        def B_d2(x):
            return -alpha * c1 / (4 * s ** 3)

        c_const = mp.zero
    else:
        def B(x):
            return alpha * c1 * x ** 2 / (16 * s ** 3) + r * alpha * c1 / (64 * s ** 4)

        def B_d1(x):
            return alpha * c1 * x / (8 * s ** 3)

        def B_d2(x):
            return alpha * c1 / (8 * s ** 3)

        c_const = alpha ** 2 * c1 / (128 * s ** 4)
    return A_d1, A_d2, A_d3, B, B_d1, B_d2, c_const


def _a0_and_derivatives(s, r):
    g = sqrt(1 - 2 * s + 12 * r * s + s * s)
    gt = s * (g + s + 12 * r - 1) / (1 + g)  # s - 1 + g without cancellation
    a0 = gt / (12 * s)
    gp = (s + 6 * r - 1) / g
    gpp = (g * g - (s + 6 * r - 1) ** 2) / g ** 3
    u, up, upp = s - 1 + g, 1 + gp, gpp
    a0p = (s * up - u) / (12 * s ** 2)
    a0pp = (s * s * upp - 2 * s * up + 2 * u) / (12 * s ** 3)
    return g, gt, a0, a0p, a0pp


def double_scaling_data(n: int, big_n, s, alpha,
                        ctx: Optional[NumericContext] = None) -> DoubleScalingData:
    """a0, a1, a2 for beta_n = a0 + a1/N + a2/N^2 + O(N^{-3}), parity of n.

    a0 = (s - 1 + g)/(12 s) solves the fluid cubic; a1 = -B(a0)/A'(a0) agrees
    with the closed parity-dependent forms; a2 comes from the next order of
    the same expansion,

        a2 = -[ A''(a0) a1^2/2 + B'(a0) a1 + C(a0, a0', a0'') ] / A'(a0),

    with C the derivative-bearing part of the ODE.  a1 and a2 blow up on the
    locus f(s) = 1 - 2s - 4rs + s^2 = 0, reported as an explicit error.
    """
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        s = mpmathify(s)
        alpha = mpmathify(alpha)
        Nv = mpmathify(big_n)
        if s <= 0:
            raise DomainError("double-scaling regime needs s > 0")
        r = mpf(n) / Nv
        if not (0 < r <= 1):
            raise DomainError(f"r = n/N must lie in (0, 1], got {r}")
        f_s = 1 - 2 * s - 4 * r * s + s * s
        g, gt, a0, a0p, a0pp = _a0_and_derivatives(s, r)
        if abs(f_s) < _F_SINGULAR_TOL:
            raise SingularCoefficientError(
                f"f(s) = {f_s} vanishes; a1, a2 are unusable at these parameters")
        parity = "even" if n % 2 == 0 else "odd"
        A_d1, A_d2, A_d3, B, B_d1, B_d2, c_const = _ode_operator_parts(s, r, parity, alpha)
        a1 = -B(a0) / A_d1(a0)
        c_val = (a0 * a0pp - a0p ** 2 / 2 + (2 + s) * a0 * a0p / (s * (1 + s))
                 + (3 - s) * a0 ** 2 / (8 * s ** 2 * (1 + s)) + c_const)
        a2 = -(A_d2(a0) * a1 ** 2 / 2 + B_d1(a0) * a1 + c_val) / A_d1(a0)
        return DoubleScalingData(r=+r, g_s=+g, f_s=+f_s, a0=+a0, a1=+a1, a2=+a2)


def beta_double_scaling(n: int, big_n, s, alpha,
                        ctx: Optional[NumericContext] = None) -> mpf:
    """Double-scaling evaluation a0 + a1/N + a2/N^2 with parity-correct a1, a2."""
    data = double_scaling_data(n, big_n, s, alpha, ctx)
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        Nv = mpmathify(big_n)
        return data.a0 + data.a1 / Nv + data.a2 / Nv ** 2


# ---------------------------------------------------------------------------
# Coulomb-fluid endpoint and MRS number
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FluidEndpoint:
    """Support endpoint data for n particles: b^2 and the matching MRS number.

    a_mu is taken at the fluid normalisation mu = 2n + alpha, so a_mu^2 = b^2
    exactly and beta_n / a_mu^2 -> 1/4.
    """

    n: int
    b_squared: mpf
    a_mu: mpf


def coulomb_b_squared(n: int, params: WeightParams,
                      ctx: Optional[NumericContext] = None) -> mpf:
    """Positive root b^2 = [s - 1 + sqrt((1-s)^2 + 6 s (2n+alpha)/N)]/(3s).

    At s = 0 the root degenerates to its limit (2n + alpha)/N.
    """
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        s, a, N = params.mpfs()
        if s == 0:
            return (2 * n + a) / N
        disc = (1 - s) ** 2 + 6 * s * (2 * n + a) / N
        # s - 1 + sqrt(disc), stabilised against cancellation as s -> 0
        return +((disc - (1 - s) ** 2) / (sqrt(disc) + (1 - s))) / (3 * s)


def mrs_number(mu, params: WeightParams,
               ctx: Optional[NumericContext] = None) -> mpf:
    """Unique positive root a of (3/2) N s a^4 + N (1-s) a^2 = mu."""
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        mu = mpmathify(mu)
        if mu <= 0:
            raise DomainError("mu must be positive")
        s, a, N = params.mpfs()
        if s == 0:
            return sqrt(mu / N)
        disc = N * N * (1 - s) ** 2 + 6 * N * s * mu
        a_sq = ((disc - N * N * (1 - s) ** 2) / (sqrt(disc) + N * (1 - s))) / (3 * N * s)
        return sqrt(a_sq)


def fluid_endpoint(n: int, params: WeightParams,
                   ctx: Optional[NumericContext] = None) -> FluidEndpoint:
    """b^2 and the MRS number at the particle-number normalisation mu = 2n + alpha."""
    digits = ctx.digits if ctx is not None else _DEFAULT_DIGITS
    with mp.workdps(digits + 10):
        _, a, _ = params.mpfs()
        return FluidEndpoint(n=n,
                             b_squared=coulomb_b_squared(n, params, ctx),
                             a_mu=mrs_number(2 * n + a, params, ctx))
