"""Probe convergence of a finite sequence prefix.

Run:  python3 demos/04_sequences.py
"""

import numpy as np

from pairnorm import (
    EuclideanGram,
    SequencePrefix,
    cauchy_profile,
    convergence_profile,
    norm_limit_check,
)

gram = EuclideanGram(dim=3)

print("Only a finite prefix of a sequence is ever available, so the profiles")
print("report tail suprema for the caller to judge, never a verdict.")
print()

# x_n = (1/n, 0, 0): converges to the origin.
n_terms = 50
elements = [[1.0 / n, 0.0, 0.0] for n in range(1, n_terms + 1)]
seq = SequencePrefix(
    gram, elements, probe_y=[0.0, 1.0, 0.0], probe_z=[0.0, 0.0, 1.0]
)

print(f"x_n = e1/n, first {n_terms} terms, probes y = e2 and z = e3:")
for tail_from in (0, 10, 25, 40):
    prof = cauchy_profile(gram, seq, tail_from=tail_from)
    print(f"    tail from {tail_from:2d}: sup ||x_i - x_j, y|| = {prof.sup_y:.6f}, "
          f"sup against z = {prof.sup_z:.6f}")
print("the suprema shrink as the tail advances, as a Cauchy tail should.")
print()

# Against a claimed limit, each probe direction sees its own residual series.
profiles = convergence_profile(
    gram, seq, limit=[0.0, 0.0, 0.0],
    probe_dirs=[[0.0, 1.0, 0.0], [1.0, 0.0, 0.0]],
)
for prof in profiles:
    head = ", ".join(f"{v:.4f}" for v in prof.series[:4])
    print(f"probe {prof.probe}: series starts [{head}, ...], "
          f"tail max {prof.tail_max:.6f}, blind_spot={prof.blind_spot}")
print("the second probe is collinear with every x_n - limit, so it sees only")
print("zeros; the profile flags that blind spot instead of reporting success.")
print()

# The norm values ||x_n, y|| must approach ||limit, y|| no faster than the
# reverse triangle inequality allows.
drift = [[1.0 + 0.5 / n, 1.0 / n, 0.0] for n in range(1, 31)]
seq2 = SequencePrefix(gram, drift)
report = norm_limit_check(gram, seq2, limit=[1.0, 0.0, 0.0], y=[0.0, 1.0, 0.0])
print(f"x_n = (1 + 0.5/n, 1/n, 0) vs limit e1, probe y = e2:")
print(f"    max | ||x_n, y|| - ||limit, y|| | = {report.max_deviation:.6f}")
print(f"    reverse-triangle bound violated: {len(report.violations)} times")
print(f"    passed: {report.passed}")
