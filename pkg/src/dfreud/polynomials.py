"""Monic orthogonal polynomials, ladder operators, and their second-order ODE.

The polynomials are held as full coefficient vectors built from the three-term
recurrence P_{n+1} = z P_n - beta_n P_{n-1}, so derivatives are exact
coefficient operations and the even/odd parity zeros are exact (the recurrence
never mixes parities).

The ladder machinery for v_0(x) = N s x^4 + N (1-s) x^2:

    A_n(z) = 4 N s z^2 + 4 N s (beta_{n+1} + beta_n) + 2 N (1-s),
    B_n(z) = 4 N s beta_n z + alpha Delta_n / z,
    P_n'(z) = beta_n A_n(z) P_{n-1}(z) - B_n(z) P_n(z),

with the supplementary conditions (S1), (S2) and the sum rule (S2') tying the
A's and B's to the string equation.  Eliminating P_{n-1} yields the linear
second-order ODE P_n'' + R_n P_n' + Q_n P_n = 0 whose coefficients R_n, Q_n
are rational in z with a movable pole at z^2 = -((1-s)/(2s) + beta_n +
beta_{n+1}); evaluation near that pole (or near z = 0 for the alpha terms)
raises PoleError rather than returning junk.

In the regime N s -> 0+, n -> infinity with kappa = (Ns)^(1/3) n fixed, the
ODE collapses to a biconfluent-Heun form; ``heun_parameters`` packages the
limit parameters and ``heun_operator_residual`` verifies the exact operator
identity behind the substitution x = sqrt(2) z^2 (see the docstring there for
the sign convention).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from mpmath import mp, mpf, mpmathify, sqrt, exp, fsum, quad, inf

from .numerics import NumericContext, DomainError, PoleError
from .moments import WeightParams
from .hankel import BetaSequence
from .recurrence import delta_parity


@dataclass(frozen=True)
class MonicPolynomial:
    """Coefficient form of P_n: coeffs[k] multiplies z^k, leading coefficient 1."""

    n: int
    coeffs: tuple
    params: WeightParams


def _work_dps(betas) -> int:
    """Precision for operations on a beta sequence: never below its own."""
    if isinstance(betas, BetaSequence):
        return max(mp.dps, betas.digits_used)
    return mp.dps


def build_polynomials(betas: BetaSequence | Sequence, n_max: int,
                      params: Optional[WeightParams] = None) -> list[MonicPolynomial]:
    """P_0..P_{n_max} from the recurrence P_{n+1} = z P_n - beta_n P_{n-1}."""
    if isinstance(betas, BetaSequence):
        params = betas.params
        seq = betas.betas
    else:
        seq = tuple(betas)
    if len(seq) < n_max:
        raise DomainError("beta sequence too short for requested degree")
    with mp.workdps(_work_dps(betas)):
        polys = [[mp.one], [mp.zero, mp.one]]
        for n in range(1, n_max):
            shifted = [mp.zero] + list(polys[n])          # z * P_n
            for i, c in enumerate(polys[n - 1]):          # - beta_n * P_{n-1}
                shifted[i] -= seq[n] * c
            polys.append(shifted)
    return [MonicPolynomial(n=k, coeffs=tuple(c), params=params)
            for k, c in enumerate(polys[: n_max + 1])]


def eval_poly(poly: MonicPolynomial, z, derivative_order: int = 0) -> mpf:
    """Value of P, P' or P'' at z by Horner evaluation of the coefficients."""
    if derivative_order not in (0, 1, 2):
        raise DomainError("derivative_order must be 0, 1 or 2")
    coeffs = list(poly.coeffs)
    for _ in range(derivative_order):
        coeffs = [i * coeffs[i] for i in range(1, len(coeffs))]
    z = mpmathify(z)
    acc = mp.zero
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


# ---------------------------------------------------------------------------
# ladder operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LadderPair:
    """A_n, B_n and v_0' evaluated at a point z."""

    n: int
    z: mpf
    a_n: mpf
    b_n: mpf
    v0_prime: mpf


def v0_prime(z, params: WeightParams) -> mpf:
    s, a, N = params.mpfs()
    z = mpmathify(z)
    return 4 * N * s * z ** 3 + 2 * N * (1 - s) * z


def ladder_pair(n: int, z, params: WeightParams, betas) -> LadderPair:
    """Closed-form A_n(z), B_n(z); the 1/z term of B_n exists iff n is odd."""
    with mp.workdps(_work_dps(betas)):
        z = mpmathify(z)
        s, a, N = params.mpfs()
        b = betas.betas if isinstance(betas, BetaSequence) else betas
        if z == 0 and n % 2 == 1:
            raise PoleError("B_n has a 1/z pole at z = 0 for odd n")
        a_n = 4 * N * s * z * z + 4 * N * s * (b[n + 1] + b[n]) + 2 * N * (1 - s)
        b_n = 4 * N * s * b[n] * z
        if n % 2 == 1:
            b_n += a * delta_parity(n) / z
        return LadderPair(n=n, z=z, a_n=a_n, b_n=b_n, v0_prime=v0_prime(z, params))


def lowering_residual(n: int, z, params: WeightParams, betas,
                      polys: Optional[Sequence[MonicPolynomial]] = None) -> mpf:
    """P_n'(z) - [beta_n A_n(z) P_{n-1}(z) - B_n(z) P_n(z)]."""
    if polys is None:
        polys = build_polynomials(betas, n + 1)
    with mp.workdps(_work_dps(betas)):
        b = betas.betas if isinstance(betas, BetaSequence) else betas
        pair = ladder_pair(n, z, params, betas)
        return (eval_poly(polys[n], z, 1)
                - (b[n] * pair.a_n * eval_poly(polys[n - 1], z)
                   - pair.b_n * eval_poly(polys[n], z)))


def sum_rule_residual(n: int, params: WeightParams, betas) -> mpf:
    """Residual of the z^0 content of the sum rule (S2'):

    sum_{j=0}^{n-1} (beta_{j+1} + beta_j)
      = 4 N s beta_n [beta_{n+1}+beta_n+u][beta_n+beta_{n-1}+u]
        + alpha beta_n (1 - 2 Delta_n) - u (n + alpha Delta_n),   u = (1-s)/(2s).
    """
    if params.s == 0:
        raise DomainError("sum rule stated for s > 0")
    with mp.workdps(_work_dps(betas)):
        s, a, N = params.mpfs()
        b = betas.betas if isinstance(betas, BetaSequence) else betas
        u = (1 - s) / (2 * s)
        dn = delta_parity(n)
        lhs = fsum(b[j + 1] + b[j] for j in range(n))
        rhs = (4 * N * s * b[n] * (b[n + 1] + b[n] + u) * (b[n] + b[n - 1] + u)
               + a * b[n] * (1 - 2 * dn) - u * (n + a * dn))
        return lhs - rhs


def compatibility_residuals(n: int, z, params: WeightParams, betas) -> tuple:
    """Residuals (r_S1, r_S2, r_S2prime) of the supplementary conditions at z.

    (S1):  B_{n+1} + B_n = z A_n - v_0' + alpha/z
    (S2):  1 + z (B_{n+1} - B_n) = beta_{n+1} A_{n+1} - beta_n A_{n-1}
    (S2'): B_n^2 + (v_0' - alpha/z) B_n + sum_{j<n} A_j = beta_n A_n A_{n-1}
    """
    with mp.workdps(_work_dps(betas)):
        z = mpmathify(z)
        if z == 0:
            raise PoleError("the conditions carry alpha/z terms; z = 0 excluded")
        s, a, N = params.mpfs()
        b = betas.betas if isinstance(betas, BetaSequence) else betas
        if len(b) < n + 2:
            raise DomainError("betas must cover indices 0..n+1")
        pairs = {m: ladder_pair(m, z, params, betas) for m in range(n + 2)}
        v0p = pairs[n].v0_prime
        r_s1 = (pairs[n + 1].b_n + pairs[n].b_n) - (z * pairs[n].a_n - v0p + a / z)
        r_s2 = (1 + z * (pairs[n + 1].b_n - pairs[n].b_n)
                - (b[n + 1] * pairs[n + 1].a_n - b[n] * pairs[n - 1].a_n))
        r_s2p = (pairs[n].b_n ** 2 + (v0p - a / z) * pairs[n].b_n
                 + fsum(pairs[j].a_n for j in range(n))
                 - b[n] * pairs[n].a_n * pairs[n - 1].a_n)
        return r_s1, r_s2, r_s2p


# ---------------------------------------------------------------------------
# the second-order ODE in z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OdeCoefficients:
    """R_n(z) and Q_n(z) of P_n'' + R_n P_n' + Q_n P_n = 0, evaluated at z."""

    n: int
    z: mpf
    r_n: mpf
    q_n: mpf


def _pole_guard(denom, digits: int):
    if abs(denom) < mpf(10) ** (-(digits // 2)):
        raise PoleError(f"denominator {denom} within pole guard")


def ode_coefficients(n: int, z, params: WeightParams, betas,
                     ctx: Optional[NumericContext] = None) -> OdeCoefficients:
    """Closed-form R_n(z), Q_n(z); raises PoleError near the movable pole."""
    digits = ctx.digits if ctx is not None else mp.dps
    with mp.workdps(_work_dps(betas)):
        z = mpmathify(z)
        s, a, N = params.mpfs()
        if s == 0:
            raise DomainError("the z-ODE coefficients are stated for s > 0")
        b = betas.betas if isinstance(betas, BetaSequence) else betas
        u = (1 - s) / (2 * s)
        pole = z * z + u + b[n] + b[n + 1]
        _pole_guard(pole, digits)
        if a != 0:
            _pole_guard(z, digits)
        sgn = (-1) ** n
        r_n = -4 * N * s * z ** 3 - 2 * N * (1 - s) * z + a / z - 2 * z / pole
        q_n = (4 * N * s * b[n] * (1 + a * sgn)
               + 16 * N ** 2 * s ** 2 * b[n] * (u + b[n] + b[n - 1]) * (u + b[n] + b[n + 1])
               - a * (1 - sgn) * (N * (1 - s) + 1 / (2 * z * z))
               - (8 * N * s * b[n] * z * z + a * (1 - sgn)) / pole
               + 4 * n * N * s * z * z)
        return OdeCoefficients(n=n, z=z, r_n=r_n, q_n=q_n)


def pn_ode_residual(n: int, z, params: WeightParams, betas,
                    polys: Optional[Sequence[MonicPolynomial]] = None,
                    ctx: Optional[NumericContext] = None) -> mpf:
    """|P_n'' + R_n P_n' + Q_n P_n| relative to the largest of the three terms."""
    if polys is None:
        polys = build_polynomials(betas, n + 1)
    with mp.workdps(_work_dps(betas)):
        co = ode_coefficients(n, z, params, betas, ctx)
        t2 = eval_poly(polys[n], z, 2)
        t1 = co.r_n * eval_poly(polys[n], z, 1)
        t0 = co.q_n * eval_poly(polys[n], z)
        scale = max(abs(t2), abs(t1), abs(t0))
        return abs(t2 + t1 + t0) / scale


# ---------------------------------------------------------------------------
# biconfluent Heun limit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeunParameters:
    """Parameters of the biconfluent-Heun limit at kappa = (Ns)^(1/3) n fixed.

    gamma_h = -(1+alpha)/2, delta_h = sqrt(2) N (1-s)/2, eta_h = 0,
    rho_h = -(sqrt(6)/9) kappa^(3/2); q_tilde = (4 (Ns)^(1/3) n / 3)^(3/2) is
    the constant term of the limiting z-equation, whose first-order coefficient
    is r_tilde(z) = -[4 N s z^3 + 2 N (1-s) z - alpha/z].
    """

    kappa: mpf
    gamma_h: mpf
    delta_h: mpf
    eta_h: mpf
    rho_h: mpf
    q_tilde: mpf
    r_tilde: Callable


def heun_parameters(alpha, big_n, s, n: int,
                    ctx: Optional[NumericContext] = None) -> HeunParameters:
    digits = ctx.digits if ctx is not None else 50
    with mp.workdps(digits + 10):
        alpha, N, s = mpmathify(alpha), mpmathify(big_n), mpmathify(s)
        if N * s <= 0:
            raise DomainError("need N s > 0")
        kappa = (N * s) ** (mpf(1) / 3) * n
        q_tilde = (4 * (N * s) ** (mpf(1) / 3) * n / 3) ** (mpf(3) / 2)

        def r_tilde(z, _N=N, _s=s, _a=alpha):
            z = mpmathify(z)
            return -(4 * _N * _s * z ** 3 + 2 * _N * (1 - _s) * z - _a / z)

        return HeunParameters(kappa=+kappa,
                              gamma_h=-(1 + alpha) / 2,
                              delta_h=sqrt(mpf(2)) * N * (1 - s) / 2,
                              eta_h=mp.zero,
                              rho_h=-sqrt(mpf(6)) / 9 * kappa ** (mpf(3) / 2),
                              q_tilde=+q_tilde,
                              r_tilde=r_tilde)


def heun_operator_residual(hp: HeunParameters, params: WeightParams,
                           u: Callable, du: Callable, d2u: Callable, z) -> mpf:
    """Exact operator identity behind the substitution x = sqrt(2) z^2.

    With P(z) := u(sqrt(2) z^2) and the biconfluent Heun operator written in
    its customary minus-sign normal form, carrying the N s scale on the linear
    term,

        L_bhe[u](x) = u'' - (gamma_h/x + delta_h + N s x) u' + (eta_h - rho_h/x) u,

    the limiting z-operator factors exactly:

        P'' + r_tilde(z) P' + q_tilde P  =  8 z^2 * L_bhe[u](sqrt(2) z^2).

    Returns the difference of the two sides at z (round-off for any smooth u).
    """
    z = mpmathify(z)
    s, a, N = params.mpfs()
    x = sqrt(mpf(2)) * z * z
    P = u(x)
    Pp = du(x) * 2 * sqrt(mpf(2)) * z
    Ppp = d2u(x) * 8 * z * z + du(x) * 2 * sqrt(mpf(2))
    lhs = Ppp + hp.r_tilde(z) * Pp + hp.q_tilde * P
    bhe = (d2u(x) - (hp.gamma_h / x + hp.delta_h + N * s * x) * du(x)
           + (hp.eta_h - hp.rho_h / x) * u(x))
    return lhs - 8 * z * z * bhe


# ---------------------------------------------------------------------------
# orthogonality oracle
# ---------------------------------------------------------------------------

def orthogonality_check(n_max: int, params: WeightParams, ctx: NumericContext,
                        betas: Optional[BetaSequence] = None,
                        hs: Optional[Sequence] = None) -> list[list]:
    """Normalized Gram matrix G_jk = int P_j P_k w / sqrt(h_j h_k) by quadrature.

    Diagonal entries should be 1 and off-diagonal entries 0 to quadrature
    accuracy; this is the direct integral oracle for the whole construction.
    """
    from .hankel import beta_from_moments, h_sequence
    with mp.workdps(ctx.digits + 15):
        if betas is None:
            betas = beta_from_moments(params, n_max + 1, ctx)
        if hs is None:
            hs = h_sequence(params, n_max + 1, ctx).h
        polys = build_polynomials(betas, n_max)
        s, a, N = params.mpfs()

        gram = [[mp.zero] * (n_max + 1) for _ in range(n_max + 1)]
        for j in range(n_max + 1):
            for k in range(j + 1):
                def f(x, _j=j, _k=k):
                    return (eval_poly(polys[_j], x) * eval_poly(polys[_k], x)
                            * params.weight(x))
                val = quad(f, [-inf, 0, inf])
                g = val / sqrt(hs[j] * hs[k])
                gram[j][k] = gram[k][j] = g
        return gram
