"""Solver, oracle, distance, certificate, blend, and uniqueness tests."""

import dataclasses
import math

import numpy as np
import pytest

from pairnorm import (
    EuclideanGram,
    SimultaneousProblem,
    SolverConfig,
    SubspaceBasis,
    WhitePolynomial,
    blend_check,
    certificate,
    certificate_soundness,
    distance_to_subspace,
    objective,
    oracle_solve,
    seminorm_b,
    set_distance,
    solve,
    two_norm,
    uniqueness_probe,
)

GRAM = EuclideanGram(3)
WHITE = WhitePolynomial(1, (0.0, 1.0))
E1, E2, E3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]


def gram_problem(targets, basis, b=E3, **solver_kw):
    return SimultaneousProblem(
        GRAM,
        targets=targets,
        g_basis=SubspaceBasis(GRAM, basis),
        b=b,
        solver=SolverConfig(**solver_kw) if solver_kw else None,
    )


# ---------------------------------------------------------------- objective


def test_objective_two_opposite_targets():
    prob = gram_problem([[1, 0, 0], [-1, 0, 0]], [E1])
    assert objective(prob, [0, 0, 0]) == pytest.approx(1.0, rel=1e-12)


def test_objective_zero_at_target():
    prob = gram_problem([[0.3, -0.7, 0.2]], [E1])
    assert objective(prob, [0.3, -0.7, 0.2]) == 0.0


def test_objective_single_target_offset():
    prob = gram_problem([[1, 0, 0]], [E1])
    assert objective(prob, [0, 2, 0]) == pytest.approx(math.sqrt(5), rel=1e-12)


# ---------------------------------------------------------------- distance


def test_distance_orthogonal_point():
    delta, w_star = distance_to_subspace(GRAM, [0, 1, 0], SubspaceBasis(GRAM, [E1]), E3)
    assert delta == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(w_star, [0, 0, 0], atol=1e-12)


def test_distance_zero_inside_span():
    delta, w_star = distance_to_subspace(
        GRAM, [0.4, 0, 0], SubspaceBasis(GRAM, [E1]), E3
    )
    assert delta <= 1e-12
    assert np.allclose(w_star, [0.4, 0, 0], atol=1e-9)


def test_distance_diagonal_point():
    delta, w_star = distance_to_subspace(GRAM, [1, 1, 0], SubspaceBasis(GRAM, [E1]), E3)
    assert delta == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(w_star, [1, 0, 0], atol=1e-9)


def test_distance_matches_tiny_grid():
    # independent check: dense 1-D sweep over the coefficient
    rng = np.random.default_rng(7)
    for _ in range(5):
        x0 = rng.uniform(-1, 1, 3)
        u = rng.uniform(-1, 1, 3)
        delta, _ = distance_to_subspace(GRAM, x0, SubspaceBasis(GRAM, [u]), E3)
        alphas = np.linspace(-4, 4, 20001)
        grid = min(
            two_norm(GRAM, x0 - a * np.asarray(u), E3) for a in alphas
        )
        assert delta <= grid + 1e-9
        assert abs(delta - grid) <= 1e-3


def test_distance_white_space():
    # ||t - c, 1 + t|| over points {0, 1} equals |c + 1| at both points
    delta, w_star = distance_to_subspace(
        WHITE, [0, 1], SubspaceBasis(WHITE, [[1, 0]]), [1, 1]
    )
    assert delta <= 1e-9
    assert w_star[0] == pytest.approx(-1.0, abs=1e-6)


def test_distance_rejects_dependent_b():
    with pytest.raises(ValueError, match="independent"):
        distance_to_subspace(GRAM, [0, 1, 0], SubspaceBasis(GRAM, [E1]), [2, 0, 0])


# ---------------------------------------------------------------- set distance


def test_set_distance_singleton_equals_distance():
    basis = SubspaceBasis(GRAM, [E1, E2])
    x0 = [0.3, 0.8, 0.5]
    delta, _ = distance_to_subspace(GRAM, x0, basis, E3)
    assert set_distance(GRAM, [x0], basis, E3) == pytest.approx(delta, abs=1e-9)


def test_set_distance_symmetric_pair():
    val = set_distance(GRAM, [[1, 0, 0], [-1, 0, 0]], SubspaceBasis(GRAM, [E1]), E3)
    assert val == pytest.approx(1.0, abs=1e-9)


def test_set_distance_duplicate_points():
    basis = SubspaceBasis(GRAM, [E1])
    x0 = [0.2, 0.9, -0.4]
    delta, _ = distance_to_subspace(GRAM, x0, basis, E3)
    assert set_distance(GRAM, [x0, x0], basis, E3) == pytest.approx(delta, abs=1e-9)


# ---------------------------------------------------------------- solve


def test_solve_symmetric_pair():
    prob = gram_problem([[1, 0, 0], [-1, 0, 0]], [E1])
    rep = solve(prob)
    assert rep.converged
    assert rep.value == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(rep.g_star, [0, 0, 0], atol=1e-6)


def test_solve_exact_representation():
    prob = gram_problem([[1.5, -0.5, 0]], [E1, E2])
    rep = solve(prob)
    assert rep.value <= 1e-9
    assert np.allclose(rep.g_star, [1.5, -0.5, 0], atol=1e-6)


def test_solve_midpoint_two_targets():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    rep = solve(prob)
    half_gap = 0.5 * two_norm(GRAM, np.array([2, 0, 0]) - np.array([0, 2, 0]), E3)
    assert rep.value == pytest.approx(half_gap, abs=1e-9)
    assert rep.value == pytest.approx(math.sqrt(2), abs=1e-9)
    assert np.allclose(rep.g_star, [1, 1, 0], atol=1e-6)


def test_solve_report_invariants():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    rep = solve(prob)
    assert rep.value == pytest.approx(objective(prob, rep.g_star), abs=1e-9)
    for r in rep.per_restart:
        assert rep.value <= r.value + prob.solver.tol
    assert len(rep.per_restart) == prob.solver.restarts
    assert rep.spread >= 0.0


def test_solve_deterministic():
    prob1 = gram_problem([[0.4, 0.9, 0], [-0.2, 0.3, 0]], [E1, E2], seed=5)
    prob2 = gram_problem([[0.4, 0.9, 0], [-0.2, 0.3, 0]], [E1, E2], seed=5)
    a, b = solve(prob1), solve(prob2)
    assert a.to_dict() == b.to_dict()


def test_solve_requires_independent_b():
    prob = gram_problem([[1, 0, 0]], [E1], b=[3, 0, 0])
    with pytest.raises(ValueError, match="independent"):
        solve(prob)


def test_solve_white_space():
    prob = SimultaneousProblem(
        WHITE,
        targets=[[0, 1], [0, -1]],
        g_basis=SubspaceBasis(WHITE, [[0, 1]]),
        b=[1, 0],
    )
    rep = solve(prob)
    # symmetric targets: optimum at g = 0 with value ||t, 1|| = 2
    assert rep.value == pytest.approx(2.0, abs=1e-6)
    assert abs(rep.g_star[1]) <= 1e-6


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(max_iters=0)
    with pytest.raises(ValueError):
        SolverConfig(restarts=0)
    with pytest.raises(ValueError):
        SolverConfig(tol=-1.0)
    with pytest.raises(ValueError):
        SolverConfig(step0=0.0)


def test_basis_independence_required():
    with pytest.raises(ValueError, match="dependent"):
        SubspaceBasis(GRAM, [E1, [2, 0, 0]])


def test_trivial_basis_allowed():
    prob = gram_problem([[1, 0, 0]], [])
    rep = solve(prob)
    assert rep.value == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rep.g_star, 0.0)


# ---------------------------------------------------------------- oracle


def test_oracle_1d_example():
    prob = gram_problem([[1, 0, 0], [-1, 0, 0]], [E1])
    value, g = oracle_solve(prob, 2.0, 1000)
    assert abs(value - 1.0) <= 1e-3
    assert np.allclose(g, [0, 0, 0], atol=1e-2)


def test_oracle_trivial_subspace():
    prob = gram_problem([[1, 0, 0]], [])
    value, g = oracle_solve(prob, 2.0, 100)
    assert value == objective(prob, [0, 0, 0])
    assert np.allclose(g, 0.0)


def test_oracle_rejects_large_k():
    space = EuclideanGram(6)
    basis = SubspaceBasis(space, np.eye(6)[:4])
    prob = SimultaneousProblem(space, [[0, 0, 0, 0, 0, 1]], basis, [0, 0, 0, 0, 1, 0])
    with pytest.raises(ValueError, match="at most 3"):
        oracle_solve(prob, 1.0, 50)


def test_oracle_rejects_bad_grid():
    prob = gram_problem([[1, 0, 0]], [E1])
    with pytest.raises(ValueError):
        oracle_solve(prob, 1.0, 5)
    with pytest.raises(ValueError):
        oracle_solve(prob, -1.0, 50)


def test_oracle_never_below_converged_solve():
    rng = np.random.default_rng(21)
    for _ in range(5):
        targets = rng.uniform(-0.5, 0.5, (2, 3))
        targets[:, 2] = 0.0  # keep b = e3 independent of the problem span
        prob = gram_problem(targets, [E1, E2])
        rep = solve(prob)
        value, _ = oracle_solve(prob, 2.0, 201)
        if rep.converged:
            assert value >= rep.value - prob.solver.tol


# ---------------------------------------------------------------- blend


def test_blend_degenerate_pair():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    g_star = solve(prob).g_star
    rep = blend_check(prob, g_star, g_star)
    assert rep.passed
    vals = [e.value for e in rep.entries]
    assert max(vals) - min(vals) <= 1e-12


def test_blend_endpoint_identity():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    g1 = [1, 1, 0]
    g2 = [1.0000000001, 1, 0]
    rep = blend_check(prob, g1, g2, lambdas=[0.0, 1.0])
    assert rep.entries[0].value == objective(prob, g2)
    assert rep.entries[1].value == objective(prob, g1)


def test_blend_flat_face():
    # basis contains a direction collinear with b, so the objective is
    # constant along it and the optimal face is a segment
    prob = gram_problem([[0.5, 0.25, 0.8]], [E1, [0, 0, 0.5]])
    g1 = np.array([0.5, 0, 0])
    g2 = np.array([0.5, 0, 1.0])
    rep = blend_check(prob, g1, g2, tol=1e-9)
    assert rep.passed
    assert rep.value_g1 == pytest.approx(rep.value_g2, abs=1e-12)


def test_blend_rejects_unequal_endpoints():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    with pytest.raises(ValueError, match="endpoints differ"):
        blend_check(prob, [1, 1, 0], [0, 0, 0])


def test_blend_rejects_lambda_outside_unit():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    with pytest.raises(ValueError):
        blend_check(prob, [1, 1, 0], [1, 1, 0], lambdas=[-0.5])


# ---------------------------------------------------------------- certificate


def test_certificate_hand_example():
    cert = certificate(GRAM, [0, 1, 0], SubspaceBasis(GRAM, [E1]), E3)
    assert cert.delta == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(cert.functional, [0, 1, 0], atol=1e-12)
    snd = certificate_soundness(
        GRAM, cert, [0, 1, 0], SubspaceBasis(GRAM, [E1]), E3, samples=1000, seed=0
    )
    assert snd.passed
    assert snd.max_ratio <= (1.0 / cert.delta) * (1 + 1e-6)
    assert abs(snd.attained_ratio - 1.0 / cert.delta) <= 1e-4


def test_certificate_scaling():
    basis = SubspaceBasis(GRAM, [E1])
    c1 = certificate(GRAM, [0, 1, 0], basis, E3)
    c2 = certificate(GRAM, [0, 2, 0], basis, E3)
    assert c2.delta == pytest.approx(2 * c1.delta, rel=1e-12)
    assert np.allclose(c2.functional, 0.5 * np.asarray(c1.functional), atol=1e-12)


def test_certificate_normalization():
    rng = np.random.default_rng(31)
    for _ in range(10):
        x0 = rng.uniform(-1, 1, 3)
        u = rng.uniform(-1, 1, 3)
        b = rng.uniform(-1, 1, 3)
        basis = SubspaceBasis(GRAM, [u])
        delta, _ = distance_to_subspace(GRAM, x0, basis, b)
        if delta <= 1e-6:
            continue
        cert = certificate(GRAM, x0, basis, b)
        h = np.asarray(cert.functional)
        assert h @ x0 == pytest.approx(1.0, abs=1e-9)
        assert abs(h @ np.asarray(u, dtype=float)) <= 1e-9


def test_certificate_rejects_point_in_subspace():
    with pytest.raises(ValueError, match="too small"):
        certificate(GRAM, [2, 0, 0], SubspaceBasis(GRAM, [E1]), E3)


def test_certificate_gram_only():
    with pytest.raises(ValueError, match="EuclideanGram"):
        certificate(WHITE, [0, 1], SubspaceBasis(WHITE, [[1, 0]]), [1, 1])


# ---------------------------------------------------------------- uniqueness


def test_uniqueness_strictly_convex_1d():
    prob = gram_problem([[0.3, 0.9, 0.0]], [E1])
    rep = uniqueness_probe(prob, restarts=16)
    assert rep.distinct_optimizers == 1
    assert rep.spread < 1e-5


def test_uniqueness_midpoint_instance():
    prob = gram_problem([[2, 0, 0], [0, 2, 0]], [E1, E2])
    rep = uniqueness_probe(prob, restarts=16)
    assert rep.distinct_optimizers == 1
    assert rep.spread < 1e-5


def test_uniqueness_white_informational():
    prob = SimultaneousProblem(
        WHITE,
        targets=[[0, 1], [0, -1]],
        g_basis=SubspaceBasis(WHITE, [[0, 1]]),
        b=[1, 0],
    )
    rep = uniqueness_probe(prob, restarts=8)
    assert rep.distinct_optimizers >= 1
    assert len(rep.values) == 8


def test_uniqueness_requires_two_restarts():
    prob = gram_problem([[0.3, 0.9, 0.0]], [E1])
    with pytest.raises(ValueError):
        uniqueness_probe(prob, restarts=1)


# ---------------------------------------------------------------- properties


def test_lipschitz_bound():
    rng = np.random.default_rng(41)
    for space, d in ((GRAM, 3), (WhitePolynomial(2, (0.0, 0.2, 0.4, 0.6)), 3)):
        prob = SimultaneousProblem(
            space,
            targets=rng.uniform(-1, 1, (3, d)),
            g_basis=SubspaceBasis(space, np.eye(d)[:1]),
            b=rng.uniform(-1, 1, d),
        )
        for _ in range(200):
            g1 = rng.uniform(-2, 2, d)
            g2 = rng.uniform(-2, 2, d)
            lhs = abs(objective(prob, g1) - objective(prob, g2))
            rhs = seminorm_b(space, prob.b, g1 - g2)
            assert lhs <= rhs + 1e-9


def test_convexity_of_objective():
    rng = np.random.default_rng(42)
    prob = gram_problem(rng.uniform(-1, 1, (4, 3)), [E1, E2])
    for _ in range(200):
        g1 = rng.uniform(-2, 2, 3)
        g2 = rng.uniform(-2, 2, 3)
        lam = rng.uniform()
        mid = objective(prob, lam * g1 + (1 - lam) * g2)
        assert mid <= lam * objective(prob, g1) + (1 - lam) * objective(prob, g2) + 1e-9


def test_monotonicity_in_basis():
    rng = np.random.default_rng(43)
    space = EuclideanGram(5)
    for _ in range(10):
        targets = rng.uniform(-1, 1, (2, 5))
        b = rng.uniform(-1, 1, 5)
        v1 = rng.uniform(-1, 1, 5)
        v2 = rng.uniform(-1, 1, 5)
        small = SimultaneousProblem(space, targets, SubspaceBasis(space, [v1]), b)
        big = SimultaneousProblem(space, targets, SubspaceBasis(space, [v1, v2]), b)
        r_small, r_big = solve(small), solve(big)
        assert r_big.value <= r_small.value + small.solver.tol


def test_problem_validation():
    with pytest.raises(ValueError):
        gram_problem([], [E1])  # no targets
    with pytest.raises(ValueError):
        gram_problem([[1, 0, 0]], [E1], b=[0, 0, 0])  # zero b
    with pytest.raises(ValueError):
        SimultaneousProblem(GRAM, [[1, 0, np.inf]], SubspaceBasis(GRAM, [E1]), E3)
