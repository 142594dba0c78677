"""Large-n asymptotics of the Hankel determinant.

Exact side.  The logarithmic s-derivative of D_n(s) has a closed form in
beta_n and beta_n' alone (``logdet_derivative_exact``); the intermediate sum
formula

    D_n'/D_n = N(1+s)/(2s) sum_{j<n} (beta_{j+1}+beta_j) - n^2/(4s) - n alpha/(4s)

is kept as ``logdet_derivative_sum`` for cross-checking.  Both are verified
against central differences of log D_n(s).

Asymptotic side.  With n = r N and N -> infinity,

    D_n'/D_n = A(s) N^2 + B(s) N + C(s) + D(s)/N + O(N^-2),

and integrating over s in [0, 1] connects D_n(1) to the exactly known D_n(0).
``appendix_b_coefficients`` evaluates the four coefficient functions:

* A(s) and D(s) are explicit polynomial/surd expressions (transcribed, and
  confirmed against the expansion machinery to full precision);
* B(s) and C(s) are assembled from the generating construction itself --
  substitute beta = a0 + a1/N + a2/N^2 into the exact log-derivative and
  collect powers of N -- because the printed closed forms for them fail the
  N-fit cross-check that ``fit_abc`` performs against exact data.  B(s) comes
  out parity-independent with integral -r alpha (log 3 + log r - 1)/4.

``logdet_expansion`` evaluates the large-n displays for log(D_n(1)/D_n(0)),
log D_n(0) and log D_n(1) through their 1/n terms, with Barnes-G constant
blocks.  The n-linear coefficients of the ratio and of log D_n(1) are
parity-independent (the even-parity variants confirmed against exact
determinant data), while the 1/n terms do alternate with parity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from mpmath import mp, mpf, mpmathify, sqrt, log, pi, matrix, lu_solve, fsum

from .numerics import (NumericContext, DomainError, SingularCoefficientError,
                       barnes_g_log, gamma_log)
from .moments import WeightParams
from .hankel import BetaSequence, beta_from_moments
from .recurrence import beta_prime, delta_parity
from .asymptotics import _ode_operator_parts, _a0_and_derivatives, _F_SINGULAR_TOL


# ---------------------------------------------------------------------------
# exact logarithmic derivative
# ---------------------------------------------------------------------------

def logdet_derivative_exact(n: int, params: WeightParams, ctx: NumericContext,
                            betas: Optional[BetaSequence] = None) -> mpf:
    """d/ds log D_n(s) in closed form from beta_n and beta_n'(s).

    Requires s > 0; beta_n and its neighbours come from the Hankel route and
    beta_n' from the differential-difference equation.
    """
    if params.s == 0:
        raise DomainError("the closed form is singular at s = 0")
    if betas is None:
        betas = beta_from_moments(params, n + 1, ctx)
    with mp.workdps(betas.digits_used):
        s, a, N = params.mpfs()
        dn = delta_parity(n)
        bn = betas[n]
        bp = beta_prime(n, betas, params)
        total = (N * (s * s - 1) * (n + a * dn) - 2 * s * n * (n + a)) / (8 * s * s)
        total += (1 + s) * (n + a * dn) ** 2 / (32 * s * s * bn)
        total += ((N ** 2 * (1 - s * s) ** 2
                   + 2 * N * s * (1 + s) ** 2 * (n + 2 * a - 3 * a * dn)
                   - 4 * s * s) / (8 * s * s * (1 + s)) * bn)
        total += N ** 2 * (1 - s * s) / (2 * s) * bn ** 2
        total += N ** 2 * (1 + s) / 2 * bn ** 3
        total -= 2 * s / (1 + s) * (s * bp ** 2 / bn + bp)
        return +total


def logdet_derivative_sum(n: int, params: WeightParams, ctx: NumericContext,
                          betas: Optional[BetaSequence] = None) -> mpf:
    """The direct-summation form of D_n'/D_n (independent cross-check)."""
    if params.s == 0:
        raise DomainError("singular at s = 0")
    if betas is None:
        betas = beta_from_moments(params, n, ctx)
    with mp.workdps(betas.digits_used):
        s, a, N = params.mpfs()
        total = N * (1 + s) / (2 * s) * fsum(betas[j + 1] + betas[j] for j in range(n))
        return +(total - mpf(n) ** 2 / (4 * s) - n * a / (4 * s))


# ---------------------------------------------------------------------------
# coefficient functions of the N-expansion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AppendixBCoefficients:
    """A(s), B(s), C(s), D(s) with the auxiliary quantities they are built from."""

    s: mpf
    r: mpf
    alpha: mpf
    parity: str
    a_s: mpf
    b_s: mpf
    c_s: mpf
    d_s: mpf
    g_s: mpf
    g_tilde: mpf
    f_s: mpf


def _a_coefficient(s, r) -> mpf:
    """A(s): the N^2 coefficient, an explicit expression in g~ = s - 1 + g."""
    g = sqrt(1 - 2 * s + 12 * r * s + s * s)
    gt = s * (g + s + 12 * r - 1) / (1 + g)  # cancellation-free s - 1 + g
    return (3 * r ** 2 * (1 + s) / (8 * s * gt)
            - r * (1 + 2 * r * s - s * s) / (8 * s ** 2)
            + (1 + s) * (1 - 2 * s + 2 * r * s + s * s) * gt / (96 * s ** 3)
            + (1 - s * s) * gt ** 2 / (288 * s ** 3)
            + (1 + s) * gt ** 3 / (3456 * s ** 3))


def _d_coefficient(s, r, alpha, parity: str) -> mpf:
    """D(s): the 1/N coefficient, explicit polynomial forms per parity."""
    g = sqrt(1 - 2 * s + 12 * r * s + s * s)
    gt = s - 1 + g
    if parity == "even":
        bracket = 1 + 2 * g - 2 * s * (1 - 6 * r + g) + s * s
        d0 = -(1 + s) * alpha / (g * gt * gt * bracket ** 3)
        d1 = g * (-3 + 15 * s - 15 * r * s - 30 * s ** 2 + 45 * r * s ** 2
                  - 36 * r ** 2 * s ** 2 + 30 * s ** 3 - 45 * r * s ** 3
                  + 36 * r ** 2 * s ** 3 - 15 * s ** 4 + 15 * r * s ** 4 + 3 * s ** 5
                  + alpha ** 2 * (-1 + 5 * s - 15 * r * s - 10 * s ** 2
                                  + 45 * r * s ** 2 + 36 * r ** 2 * s ** 2
                                  + 10 * s ** 3 - 45 * r * s ** 3
                                  - 36 * r ** 2 * s ** 3 - 5 * s ** 4
                                  + 15 * r * s ** 4 + s ** 5))
        d2 = (3 - 18 * s + 33 * r * s + 45 * s ** 2 - 132 * r * s ** 2
              + 72 * r ** 2 * s ** 2 - 60 * s ** 3 + 198 * r * s ** 3
              - 144 * r ** 2 * s ** 3 - 2160 * r ** 3 * s ** 3 + 45 * s ** 4
              - 132 * r * s ** 4 + 72 * r ** 2 * s ** 4 - 18 * s ** 5
              + 33 * r * s ** 5 + 3 * s ** 6
              + alpha ** 2 * (1 - 6 * s + 21 * r * s + 15 * s ** 2
                              - 84 * r * s ** 2 + 36 * r ** 2 * s ** 2
                              - 20 * s ** 3 + 126 * r * s ** 3
                              - 72 * r ** 2 * s ** 3 - 864 * r ** 3 * s ** 3
                              + 15 * s ** 4 - 84 * r * s ** 4
                              + 36 * r ** 2 * s ** 4 - 6 * s ** 5
                              + 21 * r * s ** 5 + s ** 6))
        return d0 * (d1 + d2)
    f = 1 - 2 * s - 4 * r * s + s * s
    d0 = alpha / (4 * f * f * g ** 5)
    d1 = g * (1 - 4 * s + 56 * r * s + 5 * s ** 2 - 112 * r * s ** 2
              + 272 * r ** 2 * s ** 2 - 5 * s ** 4 + 112 * r * s ** 4
              - 272 * r ** 2 * s ** 4 + 4 * s ** 5 - 56 * r * s ** 5 - s ** 6
              + alpha ** 2 * (-1 + 4 * s - 24 * r * s - 5 * s ** 2
                              + 48 * r * s ** 2 - 144 * r ** 2 * s ** 2
                              + 5 * s ** 4 - 48 * r * s ** 4
                              + 144 * r ** 2 * s ** 4 - 4 * s ** 5
                              + 24 * r * s ** 5 + s ** 6))
    d2 = (-2 + 10 * s - 64 * r * s - 18 * s ** 2 + 192 * r * s ** 2
          - 544 * r ** 2 * s ** 2 + 10 * s ** 3 - 128 * r * s ** 3
          + 544 * r ** 2 * s ** 3 - 768 * r ** 3 * s ** 3 + 10 * s ** 4
          - 128 * r * s ** 4 + 544 * r ** 2 * s ** 4 - 768 * r ** 3 * s ** 4
          - 18 * s ** 5 + 192 * r * s ** 5 - 544 * r ** 2 * s ** 5
          + 10 * s ** 6 - 64 * r * s ** 6 - 2 * s ** 7
          + alpha ** 2 * (1 - 5 * s + 32 * r * s + 9 * s ** 2 - 96 * r * s ** 2
                          + 272 * r ** 2 * s ** 2 - 5 * s ** 3 + 64 * r * s ** 3
                          - 272 * r ** 2 * s ** 3 + 384 * r ** 3 * s ** 3
                          - 5 * s ** 4 + 64 * r * s ** 4
                          - 272 * r ** 2 * s ** 4 + 384 * r ** 3 * s ** 4
                          + 9 * s ** 5 - 96 * r * s ** 5
                          + 272 * r ** 2 * s ** 5 - 5 * s ** 6
                          + 32 * r * s ** 6 + s ** 7))
    return d0 * (d1 + d2)


def _t_operator_parts(s, r, alpha, dn: int):
    """N^2 / N^1 / N^0 parts of the exact log-derivative as functions of beta."""
    def t2(x):
        return (r * (s * s - 1) / (8 * s * s) - r * r / (4 * s)
                + (1 + s) * r * r / (32 * s * s * x)
                + ((1 - s * s) ** 2 + 2 * r * s * (1 + s) ** 2)
                / (8 * s * s * (1 + s)) * x
                + (1 - s * s) * x * x / (2 * s) + (1 + s) * x ** 3 / 2)

    def t2_d1(x):
        return (-(1 + s) * r * r / (32 * s * s * x * x)
                + ((1 - s * s) ** 2 + 2 * r * s * (1 + s) ** 2) / (8 * s * s * (1 + s))
                + (1 - s * s) * x / s + 3 * (1 + s) * x * x / 2)

    def t2_d2(x):
        return (1 + s) * r * r / (16 * s * s * x ** 3) + (1 - s * s) / s + 3 * (1 + s) * x

    def t1(x):
        return (alpha * dn * (s * s - 1) / (8 * s * s) - r * alpha / (4 * s)
                + r * alpha * dn * (1 + s) / (16 * s * s * x)
                + alpha * (2 - 3 * dn) * (1 + s) * x / (4 * s))

    def t1_d1(x):
        return (-r * alpha * dn * (1 + s) / (16 * s * s * x * x)
                + alpha * (2 - 3 * dn) * (1 + s) / (4 * s))

    def t0(x, xp):
        return (alpha * alpha * dn * (1 + s) / (32 * s * s * x)
                - x / (2 * (1 + s)) - (2 * s / (1 + s)) * (s * xp * xp / x + xp))

    return t2, t2_d1, t2_d2, t1, t1_d1, t0


def appendix_b_coefficients(s, r, alpha, parity: str,
                            ctx: Optional[NumericContext] = None) -> AppendixBCoefficients:
    """Evaluate A(s), B(s), C(s), D(s) for n of the given parity at n = r N."""
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    digits = ctx.digits if ctx is not None else 50
    with mp.workdps(digits + 15):
        s, r, alpha = mpmathify(s), mpmathify(r), mpmathify(alpha)
        if not (0 < s <= 1):
            raise DomainError("s must lie in (0, 1]")
        f_s = 1 - 2 * s - 4 * r * s + s * s
        if abs(f_s) < _F_SINGULAR_TOL:
            raise SingularCoefficientError(f"f(s) = {f_s} vanishes")
        g, gt, a0, a0p, a0pp = _a0_and_derivatives(s, r)
        # a1, a2 of the double-scaling expansion (parity dependent)
        A_d1, A_d2, A_d3, B, B_d1, B_d2, c_const = _ode_operator_parts(s, r, parity, alpha)
        a1 = -B(a0) / A_d1(a0)
        c_val = (a0 * a0pp - a0p ** 2 / 2 + (2 + s) * a0 * a0p / (s * (1 + s))
                 + (3 - s) * a0 ** 2 / (8 * s ** 2 * (1 + s)) + c_const)
        a2 = -(A_d2(a0) * a1 ** 2 / 2 + B_d1(a0) * a1 + c_val) / A_d1(a0)
        dn = 0 if parity == "even" else 1
        t2, t2_d1, t2_d2, t1, t1_d1, t0 = _t_operator_parts(s, r, alpha, dn)
        a_s = _a_coefficient(s, r)
        b_s = t2_d1(a0) * a1 + t1(a0)
        c_s = t2_d1(a0) * a2 + t2_d2(a0) * a1 ** 2 / 2 + t1_d1(a0) * a1 + t0(a0, a0p)
        d_s = _d_coefficient(s, r, alpha, parity)
        return AppendixBCoefficients(s=+s, r=+r, alpha=+alpha, parity=parity,
                                     a_s=+a_s, b_s=+b_s, c_s=+c_s, d_s=+d_s,
                                     g_s=+g, g_tilde=+gt, f_s=+f_s)


def fit_abc(s, r, alpha, big_ns, ctx: NumericContext,
            subtract_d: bool = True) -> tuple:
    """Recover (A, B, C) at fixed s by fitting exact d/ds log D_n over N values.

    Each N in ``big_ns`` must give an integer n = r N of one common parity.
    With ``subtract_d`` the known D(s)/N term is removed first, leaving an
    O(N^-2) model error; the recovered triple is the N-expansion cross-check
    for the coefficient functions.
    """
    ns = []
    for Nv in big_ns:
        n = mpmathify(r) * Nv
        if n != int(n):
            raise DomainError(f"r*N = {n} is not an integer")
        ns.append(int(n))
    parities = {n % 2 for n in ns}
    if len(parities) != 1:
        raise DomainError("all fitted n must share one parity")
    parity = "even" if ns[0] % 2 == 0 else "odd"
    with mp.workdps(ctx.digits + 10):
        rows = matrix(len(big_ns), 3)
        rhs = matrix(len(big_ns), 1)
        for i, (Nv, n) in enumerate(zip(big_ns, ns)):
            params = WeightParams(s, alpha, Nv)
            value = logdet_derivative_exact(n, params, ctx)
            if subtract_d:
                coeff = appendix_b_coefficients(s, r, alpha, parity, ctx)
                value -= coeff.d_s / mpmathify(Nv)
            rhs[i] = value
            rows[i, 0] = mpmathify(Nv) ** 2
            rows[i, 1] = mpmathify(Nv)
            rows[i, 2] = 1
        sol = lu_solve(rows, rhs)
        return +sol[0], +sol[1], +sol[2]


# ---------------------------------------------------------------------------
# large-n displays for log D_n
# ---------------------------------------------------------------------------

Quantity = Literal["ratio_10", "D0", "D1"]


@dataclass(frozen=True)
class LogDetExpansion:
    """One evaluated display: coefficients of n^2, n, log n, 1, 1/n and the sum."""

    quantity: Quantity
    n: int
    r: mpf
    alpha: mpf
    parity: str
    n2: mpf
    n1: mpf
    logn: mpf
    const: mpf
    invn: mpf

    @property
    def value(self) -> mpf:
        n = mpf(self.n)
        return (self.n2 * n * n + self.n1 * n + self.logn * log(n)
                + self.const + self.invn / n)

    def terms(self) -> dict:
        return {"n^2": self.n2, "n": self.n1, "log n": self.logn,
                "1": self.const, "1/n": self.invn}


def _barnes_block(alpha, ctx: NumericContext) -> mpf:
    """log[ G(3/2) G(1/2) / (G((alpha+3)/2) G((alpha+1)/2)) ]."""
    return (barnes_g_log(mpf(3) / 2, ctx) + barnes_g_log(mpf(1) / 2, ctx)
            - barnes_g_log((alpha + 3) / 2, ctx) - barnes_g_log((alpha + 1) / 2, ctx))


def logdet_expansion(quantity: Quantity, n: int, r, alpha,
                     parity: Optional[str] = None,
                     ctx: Optional[NumericContext] = None) -> LogDetExpansion:
    """Evaluate the cited large-n display through its 1/n term (n = r N).

    quantity = "ratio_10": log(D_n(1)/D_n(0));  "D0": log D_n(0);
    "D1": log D_n(1).  The three assemble exactly: D1 = ratio_10 + D0
    term by term, for either parity.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if parity is None:
        parity = "even" if n % 2 == 0 else "odd"
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    ctx = ctx or NumericContext(digits=50)
    with mp.workdps(ctx.digits + 10):
        r, alpha = mpmathify(r), mpmathify(alpha)
        if not (0 < r <= 1):
            raise DomainError("r must lie in (0, 1]")
        lr = log(r)
        even = parity == "even"
        from .numerics import CONSTANTS
        if quantity == "ratio_10":
            n2 = (3 - 2 * log(mpf(3)) - 2 * lr) / 8
            n1 = -alpha * (-1 + log(mpf(3)) + lr) / 4  # parity independent
            lgn = mp.zero
            const = (3 * alpha ** 2 - 1) * log(mpf(2)) / 12 - alpha ** 2 * log(mpf(3)) / 4
            invn = alpha * (alpha ** 2 + 3) / 48 if even else alpha * (alpha ** 2 - 3) / 48
        elif quantity == "D0":
            n2 = (2 * lr - 2 * log(mpf(2)) - 3) / 4
            n1 = log(2 * pi) - alpha * (1 + log(mpf(2)) - lr) / 2
            lgn = (3 * alpha ** 2 - 1) / mpf(12)
            const = (-CONSTANTS.glaisher_log()
                     + (1 + 6 * alpha * log(2 * pi) - 3 * alpha ** 2 * log(mpf(2))) / 12
                     + _barnes_block(alpha, ctx))
            invn = (alpha ** 3 + alpha) / 12 if even else (alpha ** 3 - 2 * alpha) / 12
        elif quantity == "D1":
            n2 = (2 * lr - log(mpf(144)) - 3) / 8
            n1 = (alpha * lr + 4 * log(2 * pi) - alpha * (1 + log(mpf(12)))) / 4
            lgn = (3 * alpha ** 2 - 1) / mpf(12)
            const = ((1 - log(mpf(2)) + 6 * alpha * log(2 * pi)
                      - 3 * alpha ** 2 * log(mpf(3))) / 12
                     - CONSTANTS.glaisher_log() + _barnes_block(alpha, ctx))
            invn = (alpha * (5 * alpha ** 2 + 7) / 48 if even
                    else alpha * (5 * alpha ** 2 - 11) / 48)
        else:
            raise DomainError(f"unknown quantity {quantity!r}")
        return LogDetExpansion(quantity=quantity, n=n, r=+r, alpha=+alpha,
                               parity=parity, n2=+n2, n1=+n1, logn=+lgn,
                               const=+const, invn=+invn)
