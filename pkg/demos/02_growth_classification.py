"""Classification of the circle-to-disk embedding from growth conditions.

The quotient Q_A = limsup Psi(Ax)/Psi(x)^2 decides everything: the embedding
is compact when Q_A = 0 for all A > 1, weakly compact when Q_A < infinity for
all A > 1.  The five test functions cover all three outcomes.
"""

from orlicz_lab import (
    ExpLogSquared,
    ExpMinusOne,
    PowerFunction,
    arg_square,
    build_counterexample,
    classify_injection,
)

functions = [
    PowerFunction(2),
    ExpLogSquared(),
    ExpMinusOne(),
    build_counterexample(4),
    arg_square(build_counterexample(4)),
]

for psi in functions:
    rep = classify_injection(psi)
    print(f"\n=== {rep.function_label} ===")
    print(f"verdict: {rep.verdict}  ({rep.evidence_label})")
    print("quotient evidence per amplification factor:")
    for q in rep.q_a_table:
        sup = "inf" if q.tail_sup == float("inf") else f"{q.tail_sup:.4g}"
        print(f"  A = {q.a:<4g} trend = {q.trend:<20s} tail sup = {sup}")
    print("growth conditions:")
    for c in rep.conditions:
        print(f"  {c.condition:<18s} {c.holds}")
    cq = rep.consequences
    print(f"inclusion into the bounded-closure subspace: {cq['morse_transue_inclusion']}")
    print(f"smallest q with Psi = O(x^q) evidence:       {cq['summing_bound_q']}")
    print(f"Dunford-Pettis note: {cq['dunford_pettis_note']}")

print("\nThe knotted counterexample is the interesting row: every quotient")
print("stays bounded (weak compactness) yet the A = 2 quotient sits at 1 on")
print("the knot sequence, so it cannot collapse to 0 (no compactness).")
