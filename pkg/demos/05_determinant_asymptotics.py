"""Hankel-determinant asymptotics: from the exact log-derivative to the
large-n expansion of log D_n.

The logarithmic s-derivative of the determinant has a closed form in beta_n
alone; expanded at n = r N it produces coefficient functions A(s)..D(s) whose
s-integrals assemble the large-n displays connecting D_n(1) to the exactly
known Gaussian determinant D_n(0).
"""
from mpmath import mp, mpf, nstr, quad, log

from dfreud import (NumericContext, WeightParams, logdet_derivative_exact,
                    logdet_derivative_sum, appendix_b_coefficients, fit_abc,
                    logdet_expansion, mehta_normand_logD0)
from dfreud.hankel import logdet

ctx = NumericContext(digits=60)

print("exact d/ds log D_8 at (s, alpha, N) = (1/2, 1, 2), two forms:")
with mp.workdps(70):
    params = WeightParams("0.5", 1, 2)
    a = logdet_derivative_exact(8, params, ctx)
    b = logdet_derivative_sum(8, params, ctx)
    print(f"  closed form : {nstr(a, 30)}")
    print(f"  direct sum  : {nstr(b, 30)}  (|diff| = {nstr(abs(a - b), 3)})")

print("\ncoefficient functions at s = 1/2, r = 1, alpha = 1 (even parity):")
co = appendix_b_coefficients("0.5", 1, 1, "even", ctx)
with mp.workdps(50):
    print(f"  A = {nstr(co.a_s, 10)}, B = {nstr(co.b_s, 3)}, "
          f"C = {nstr(co.c_s, 10)}, D = {nstr(co.d_s, 10)}")

print("\nN-fit of exact data at N in {20, 30, 40} recovers them:")
fit_ctx = NumericContext(digits=80)
a_fit, b_fit, c_fit = fit_abc("0.5", 1, 1, (20, 30, 40), fit_ctx)
with mp.workdps(50):
    print(f"  A_fit = {nstr(a_fit, 10)}, B_fit = {nstr(b_fit, 3)}, "
          f"C_fit = {nstr(c_fit, 10)}")

print("\nintegral of A(s) vs the closed form r^2 (3 - 2 log 3 - 2 log r)/8:")
with mp.workdps(50):
    from dfreud.detasympt import _a_coefficient
    got = quad(lambda x: _a_coefficient(x, mpf(1)), [0, 1], method="gauss-legendre")
    want = (3 - 2 * log(mpf(3))) / 8
    print(f"  {nstr(got, 12)} vs {nstr(want, 12)}")

print("\nlarge-n display for log D_n(0) against the exact Gamma product (r = 1):")
with mp.workdps(70):
    for n in (20, 40):
        disp = logdet_expansion("D0", n, 1, 1, ctx=ctx).value
        exact = mehta_normand_logD0(n, 1, n, ctx)
        print(f"  n = {n}: display - exact = {nstr(disp - exact, 4)}")

print("\nand for log D_n(1) against Hankel pivots at s = 1 (r = 1):")
with mp.workdps(80):
    for n in (16, 32):
        disp = logdet_expansion("D1", n, 1, 1, ctx=ctx).value
        exact = logdet(WeightParams(1, 1, n), n, ctx)
        print(f"  n = {n}: display - exact = {nstr(disp - exact, 4)}")
