"""Walk through the axioms a norm of vector pairs must satisfy.

Run:  python3 demos/01_axioms.py
"""

import numpy as np

from pairnorm import (
    EuclideanGram,
    WhitePolynomial,
    check_axioms,
    dependent_triple_check,
    shift_identity_check,
    two_norm,
    two_norm_rows,
)

gram = EuclideanGram(dim=3)
white = WhitePolynomial(degree=2, points=(0.0, 0.3, 0.7, 1.0))

print("A 2-norm measures a *pair* of vectors: ||x, y|| is the area-like size")
print("of the parallelogram they span, zero exactly when they are dependent.")
print()

x = [1.0, 0.0, 0.0]
y = [0.0, 2.0, 0.0]
print(f"Euclidean example: ||e1, 2*e2|| = {two_norm(gram, x, y)}  (area 2)")
print(f"dependent pair:    ||e1, 3*e1|| = {two_norm(gram, x, [3.0, 0.0, 0.0])}")

p = [0.0, 1.0, 0.0]  # t
q = [0.0, 0.0, 1.0]  # t^2
print(f"polynomial pair:   ||t, t^2||  = {two_norm(white, p, q)}  (Wronskian sums)")
print()

for name, space in (("EuclideanGram(3)", gram), ("WhitePolynomial(2)", white)):
    report = check_axioms(space, samples=2000, seed=7)
    status = "pass" if report.passed else "FAIL"
    print(f"{name}: axiom sweep on {report.samples} samples -> {status}")
    for check, count in report.counts.items():
        print(f"    {check}: {count} violations")

print()
print("The checker is not a rubber stamp.  Feed it a corrupted norm and it")
print("finds counterexamples:")


def corrupted(X, Y):
    # break the triangle inequality by squaring large values
    vals = two_norm_rows(gram, X, Y)
    return np.where(vals > 1.0, vals**2, vals)


bad = check_axioms(gram, samples=500, seed=7, norm_fn=corrupted)
print(f"corrupted norm: passed={bad.passed}, "
      f"N4 violations={bad.counts['N4_triangle']}")
first = next(v for v in bad.violations if v.check == "N4_triangle")
excess = first.detail["lhs"] - first.detail["rhs"]
print(f"first witness: sample {first.index}, ||x+y, z|| exceeds the bound by {excess:.3e}")
print()

print("Two structural identities follow from the axioms.")
print()

shift = shift_identity_check(gram, samples=2000, seed=11)
print(f"shift invariance ||x, y + a*x|| == ||x, y||: "
      f"{'pass' if shift.passed else 'FAIL'} on {shift.samples} samples")

triple = dependent_triple_check(gram, samples=2000, seed=11)
print(f"dependent triples ||x, y +/- z|| == ||x, y|| + ||x, z||: "
      f"{'pass' if triple.passed else 'FAIL'}")
print(f"    plus branch held:  {triple.branch_plus}")
print(f"    minus branch held: {triple.branch_minus}")
print(f"    both branches:     {triple.branch_both}")
