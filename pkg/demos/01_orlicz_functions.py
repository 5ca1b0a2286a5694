"""Tour of the Orlicz-function calculus.

Builds each family, evaluates in linear and log domain, inverts, conjugates,
and walks through the knotted counterexample construction whose growth
quotient refuses to settle.
"""

import math

from orlicz_lab import (
    ExpLogSquared,
    ExpMinusOne,
    PowerFunction,
    arg_square,
    build_counterexample,
    counterexample_delta,
    counterexample_knot_points,
    square_compose,
)

print("== closed-form families ==")
p2 = PowerFunction(2)
print(f"power p=2:      Psi(3) = {p2.eval(3.0):g}, inverse(9) = {p2.inverse(9.0):g}, "
      f"conjugate(2) = {p2.conjugate(2.0):g}")
els = ExpLogSquared()
print(f"exp_log_squared: Psi(1.7) = {els.eval(1.7):.6f}, "
      f"Psi^-1(Psi(1.7)) = {els.inverse(els.eval(1.7)):.6f}")
em = ExpMinusOne()
print(f"exp_minus_one:   Psi(2) = {em.eval(2.0):.6f}  (grows too fast for the "
      "embedding to stay weakly compact)")

print("\n== the knotted counterexample ==")
xs = counterexample_knot_points(5)
print("knot abscissas x_n (x_{n+1} = x_n^3 - 2 x_n):")
for n, x in enumerate(xs, 1):
    print(f"  x_{n} = {x}")

psi = build_counterexample(4)
print("\nknot identities (exact):")
for x in xs[:4]:
    print(f"  Psi({x}) = {psi.eval(float(x)):g} = x^2,   "
          f"Psi({2 * x}) = {psi.eval(float(2 * x)):g} = x^4")

print("\naffine between knots: Psi(6) =", psi.eval(6.0), "(= 16 + 60*(6-4))")
print("initial segment:      Psi(1) =", psi.eval(1.0), "(= 4x on [0, 4])")
print("delta_2 = 2 x_1 / x_2 =", counterexample_delta(2))

print("\nthe squared sandwich x^2 <= Psi(x) <= x^4 in the log domain:")
for x in (10.0, 1000.0, 1e6, 1e12):
    v = float(psi.eval_log(math.log(x)))
    print(f"  x = {x:8.0e}: 2 log x = {2 * math.log(x):8.2f} <= "
          f"log Psi = {v:8.2f} <= 4 log x = {4 * math.log(x):8.2f}")

print("\nthe doubling quotient Psi(2x)/Psi(x)^2 equals 1 exactly at knots:")
for x in xs[:4]:
    lx = math.log(float(x))
    ratio = math.exp(float(psi.eval_log(math.log(float(2 * x)))) - 2 * float(psi.eval_log(lx)))
    print(f"  x = x_n = {x}: quotient = {ratio}")

print("\n== compositions ==")
print("square_compose(power 2) at 3:", square_compose(p2).eval(3.0))
aq = arg_square(psi)
print("arg_square(counterexample) at sqrt(56):", aq.eval(math.sqrt(56.0)))
print("log-domain evaluation reaches values like Psi(2 x_5) ~ 1e188 without "
      "ever leaving double range:")
psi5 = build_counterexample(5)
x5 = counterexample_knot_points(5)[-1]
print(f"  log Psi(2 x_5) = {float(psi5.eval_log(math.log(float(2 * x5)))):.2f} "
      f"(= 4 log x_5)")
