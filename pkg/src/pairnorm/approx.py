"""Best simultaneous approximation under a fixed-direction seminorm.

Given finitely many targets f_1..f_m, a subspace G spanned by basis vectors,
and a nonzero direction b, the central problem is

    minimize over g in G:   objective(g) = max_i ||f_i - g, b||.

The objective is a max of seminorms of affine arguments, hence convex and
1-Lipschitz with respect to p_b, but generally nonsmooth.  ``solve`` runs a
multi-start subgradient method: a 1/sqrt(t) warm-up schedule followed by a
target-level refinement stage (Polyak steps toward a level just below the
incumbent, with the level gap shrunk whenever a round stops being productive
at its current scale) that polishes the incumbent far beyond what the plain
schedule reaches.  ``oracle_solve`` is an
independent exhaustive grid search (k <= 3) used as ground truth in tests.

``distance_to_subspace`` specializes to one target (solved exactly for
``EuclideanGram`` via least squares on b-orthogonal projections),
``certificate`` builds the dual functional witnessing that distance, and
``blend_check`` / ``uniqueness_probe`` exercise convexity of the argmin set
and uniqueness of minimizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .spaces import (
    EuclideanGram,
    SpaceSpec,
    WhitePolynomial,
    as_element,
    element_dim,
    seminorm_map,
    two_norm,
    two_norm_rows,
)

__all__ = [
    "SolverConfig",
    "SubspaceBasis",
    "SimultaneousProblem",
    "SolveReport",
    "RestartResult",
    "Certificate",
    "CertificateSoundness",
    "BlendReport",
    "UniquenessReport",
    "objective",
    "solve",
    "oracle_solve",
    "distance_to_subspace",
    "set_distance",
    "certificate",
    "certificate_soundness",
    "blend_check",
    "uniqueness_probe",
]


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the multi-start subgradient solver."""

    max_iters: int = 20000
    tol: float = 1e-6
    restarts: int = 8
    seed: int = 0
    step0: float = 1.0

    def __post_init__(self) -> None:
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not (self.tol > 0.0):
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if not (self.step0 > 0.0):
            raise ValueError(f"step0 must be positive, got {self.step0}")


class SubspaceBasis:
    """An ordered list of linearly independent vectors; k = 0 is the trivial subspace."""

    def __init__(self, space: SpaceSpec, vectors: Sequence) -> None:
        self.space = space
        rows = [as_element(space, v, f"basis[{i}]") for i, v in enumerate(vectors)]
        d = element_dim(space)
        self.matrix = np.array(rows, dtype=float).reshape(len(rows), d)
        if rows:
            norms = np.linalg.norm(self.matrix, axis=1)
            if np.any(norms == 0.0):
                raise ValueError("basis contains a zero vector")
            unit = self.matrix / norms[:, None]
            gram = unit @ unit.T
            if np.linalg.det(gram) <= 1e-12:
                raise ValueError("basis vectors are numerically linearly dependent")

    @property
    def k(self) -> int:
        return self.matrix.shape[0]

    def combine(self, coeffs: np.ndarray) -> np.ndarray:
        """Element of the subspace with the given coefficients."""
        c = np.asarray(coeffs, dtype=float)
        if self.k == 0:
            return np.zeros(element_dim(self.space))
        return c @ self.matrix


class SimultaneousProblem:
    """Targets, a subspace to approximate from, a direction b, and solver knobs.

    ``b_independent`` records whether b lies outside the span of the targets
    and the basis.  Solving requires it; evaluation-only routines such as
    :func:`objective` and :func:`blend_check` do not, so degenerate problems
    (a basis direction collinear with b, giving a flat optimal face) can still
    be constructed and inspected.
    """

    def __init__(
        self,
        space: SpaceSpec,
        targets: Sequence,
        g_basis,
        b,
        solver: Optional[SolverConfig] = None,
    ) -> None:
        self.space = space
        rows = [as_element(space, t, f"targets[{i}]") for i, t in enumerate(targets)]
        if not rows:
            raise ValueError("targets must be nonempty")
        self.targets = np.array(rows, dtype=float)
        if not isinstance(g_basis, SubspaceBasis):
            g_basis = SubspaceBasis(space, g_basis)
        self.g_basis = g_basis
        self.b = as_element(space, b, "b")
        if not np.any(self.b != 0.0):
            raise ValueError("b: direction must be nonzero")
        self.solver = solver if solver is not None else SolverConfig()
        self.b_independent = _independent_from_span(
            np.vstack([self.targets, self.g_basis.matrix]), self.b
        )


def _independent_from_span(rows: np.ndarray, v: np.ndarray) -> bool:
    if rows.size == 0:
        return bool(np.any(v != 0.0))
    r0 = np.linalg.matrix_rank(rows)
    r1 = np.linalg.matrix_rank(np.vstack([rows, v]))
    return r1 == r0 + 1


class _Objective:
    """Batch evaluator for max_i p_b(f_i - g) with g = coeffs @ basis.

    Residuals are pushed through the seminorm's linear-map form once, so grid
    sweeps and subgradient steps cost one small matmul per batch.
    """

    def __init__(
        self, space: SpaceSpec, targets: np.ndarray, basis: np.ndarray, b: np.ndarray
    ) -> None:
        M = seminorm_map(space, b)
        self.l1 = isinstance(space, WhitePolynomial)
        self.TM = targets @ M.T  # (m, p)
        self.BM = basis @ M.T  # (k, p)
        self.m = targets.shape[0]

    def _norm_rows(self, R: np.ndarray) -> np.ndarray:
        if self.l1:
            return np.abs(R).sum(axis=1)
        return np.sqrt(np.einsum("ij,ij->i", R, R))

    def values(self, C: np.ndarray) -> np.ndarray:
        Z = C @ self.BM
        out = self._norm_rows(self.TM[0] - Z)
        for i in range(1, self.m):
            np.maximum(out, self._norm_rows(self.TM[i] - Z), out=out)
        return out

    def values_active_subgrad(
        self, C: np.ndarray, level: Optional[np.ndarray] = None
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Objective values, active target indices (ties -> lowest index),
        and coefficient-space subgradients, one row per point.

        With ``level`` (the per-row target value the caller is stepping
        toward), residuals within twice the current gap to the level count as
        tied; tied pairs get the minimum-norm combination of their gradients
        (three or more tied fall back to the plain average).  Near a kink the
        minimum-norm direction tracks the valley floor instead of bouncing
        between its walls, and a margin that scales with the remaining gap
        keeps that tracking engaged at every stage of the descent.
        """
        Z = C @ self.BM
        n = C.shape[0]
        vals = np.empty((self.m, n))
        for i in range(self.m):
            vals[i] = self._norm_rows(self.TM[i] - Z)
        act = np.argmax(vals, axis=0)
        rows = np.arange(n)
        cur = vals[act, rows]
        if level is not None and self.m > 1:
            margin = np.maximum(2.0 * (cur - level), 0.0)
            near = vals >= (cur - margin)[None, :]
            count = near.sum(axis=0)
            if np.any(count > 1):
                k = self.BM.shape[0]
                Gs = np.empty((self.m, n, k))
                for i in range(self.m):
                    U = self.TM[i] - Z
                    if self.l1:
                        S = np.sign(U)
                    else:
                        S = np.zeros_like(U)
                        pos = vals[i] > 0.0
                        S[pos] = U[pos] / vals[i][pos, None]
                    Gs[i] = -(S @ self.BM.T)
                g1 = Gs[act, rows]
                masked = np.where(near, vals, -np.inf)
                masked[act, rows] = -np.inf
                second = np.argmax(masked, axis=0)
                g2 = Gs[second, rows]
                d = g1 - g2
                dn = np.einsum("ij,ij->i", d, d)
                lam = np.zeros(n)
                np.divide(
                    np.einsum("ij,ij->i", g1, d), dn, out=lam, where=dn > 0.0
                )
                pair = g1 - np.clip(lam, 0.0, 1.0)[:, None] * d
                avg = np.einsum("in,ink->nk", near / count[None, :], Gs)
                G = np.where(
                    (count == 1)[:, None],
                    g1,
                    np.where((count == 2)[:, None], pair, avg),
                )
                return cur, act, G
        U = self.TM[act] - Z
        if self.l1:
            S = np.sign(U)
        else:
            S = np.zeros_like(U)
            pos = cur > 0.0
            S[pos] = U[pos] / cur[pos, None]
        return cur, act, -(S @ self.BM.T)


@dataclass
class RestartResult:
    start: list[float]
    value: float
    iterations: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "start": list(self.start),
            "value": self.value,
            "iterations": self.iterations,
            "converged": self.converged,
        }


@dataclass
class SolveReport:
    g_star: np.ndarray
    value: float
    converged: bool
    per_restart: list[RestartResult]
    spread: float

    def to_dict(self) -> dict:
        return {
            "g_star": [float(v) for v in self.g_star],
            "value": self.value,
            "converged": self.converged,
            "per_restart": [r.to_dict() for r in self.per_restart],
            "spread": self.spread,
        }


@dataclass
class _MinimizeResult:
    starts: np.ndarray
    best_coeffs: np.ndarray
    best_values: np.ndarray
    iterations: int
    converged: np.ndarray
    winner: int


_WINDOW = 50  # iterations per improvement window for the stopping rule
_ROUND = 100  # iterations per target-level round in the refinement stage
_LEVEL_GAP0 = 1e-2  # initial target gap, relative to 1 + incumbent value
_LEVEL_FLOOR = 1e-16  # stop refining once the relative gap is below this
_HOLD_FRAC = 0.25  # keep the gap while a round removes this much of it
_STEP_CAP = 1e3  # safety cap on the Polyak step length, times 1 + scale


def _minimize(
    space: SpaceSpec,
    targets: np.ndarray,
    basis: np.ndarray,
    b: np.ndarray,
    cfg: SolverConfig,
) -> _MinimizeResult:
    obj = _Objective(space, targets, basis, b)
    k = basis.shape[0]
    R = cfg.restarts

    if k == 0:
        starts = np.zeros((1, 0))
        val = obj.values(starts)
        return _MinimizeResult(
            starts=starts,
            best_coeffs=starts.copy(),
            best_values=val,
            iterations=0,
            converged=np.array([True]),
            winner=0,
        )

    scale = 2.0 * float(np.max(np.abs(targets)))
    rng = np.random.default_rng(cfg.seed)
    starts = np.zeros((R, k))
    if R > 1:
        starts[1:] = rng.standard_normal((R - 1, k)) * scale

    C = starts.copy()
    best_C = C.copy()
    best_v = obj.values(C).copy()
    prev_window_best = best_v.copy()
    window_improve = np.full(R, np.inf)

    warmup_end = min(cfg.max_iters, max(100, cfg.max_iters // 10))
    step_cap = _STEP_CAP * (1.0 + scale)

    t = 0
    delta = None
    round_base = None
    while t < cfg.max_iters:
        step_index = t + 1
        in_warmup = step_index <= warmup_end
        if not in_warmup:
            pos = (step_index - warmup_end - 1) % _ROUND
            if pos == 0:
                if delta is None:
                    delta = _LEVEL_GAP0 * (1.0 + best_v)
                else:
                    # Level adjustment: halve the target gap only once a
                    # round stops being productive at the current scale, so
                    # a restart that fell behind the shrinking gap catches
                    # up instead of freezing there.
                    hold = round_base - best_v >= _HOLD_FRAC * _ROUND * delta
                    delta = np.where(hold, delta, 0.5 * delta)
                if float(np.max(delta / (1.0 + best_v))) < _LEVEL_FLOOR:
                    break
                C = best_C.copy()
                round_base = best_v.copy()
        t = step_index

        level = None if delta is None else best_v - delta
        vals, _, grads = obj.values_active_subgrad(C, level=level)
        upd = vals < best_v
        best_C[upd] = C[upd]
        best_v = np.where(upd, vals, best_v)

        norms = np.linalg.norm(grads, axis=1)
        dirs = np.zeros_like(grads)
        nz = norms > 0.0
        dirs[nz] = grads[nz] / norms[nz, None]
        if in_warmup:
            eta = np.full(R, cfg.step0 / np.sqrt(step_index))
        else:
            # Target-level step: move by (value - level) / |subgradient|
            # toward level best_v - delta, shrinking delta between rounds.
            # The step stays proportional to the value gap, so progress
            # along kink ridges does not stall as fixed halved steps would.
            gap = vals - (best_v - delta)
            eta = np.zeros(R)
            eta[nz] = np.minimum(gap[nz] / norms[nz], step_cap)
        C = C - eta[:, None] * dirs

        if t % _WINDOW == 0:
            window_improve = prev_window_best - best_v
            prev_window_best = best_v.copy()

    vals = obj.values(C)
    upd = vals < best_v
    best_C[upd] = C[upd]
    best_v = np.where(upd, vals, best_v)

    converged = window_improve < cfg.tol
    winner = min(range(R), key=lambda r: (best_v[r], tuple(best_C[r])))
    return _MinimizeResult(
        starts=starts,
        best_coeffs=best_C,
        best_values=best_v,
        iterations=t,
        converged=converged,
        winner=winner,
    )


def objective(problem: SimultaneousProblem, g) -> float:
    """Worst residual seminorm max_i ||f_i - g, b|| at a candidate g."""
    gv = as_element(problem.space, g, "g")
    return max(
        two_norm(problem.space, f - gv, problem.b) for f in problem.targets
    )


def _spread(space: SpaceSpec, elements: np.ndarray, b: np.ndarray) -> float:
    n = elements.shape[0]
    if n < 2:
        return 0.0
    i, j = np.triu_indices(n, 1)
    diffs = elements[i] - elements[j]
    vals = two_norm_rows(space, diffs, np.tile(b, (diffs.shape[0], 1)))
    return float(vals.max())


def _require_solvable(problem: SimultaneousProblem) -> None:
    if not problem.b_independent:
        raise ValueError(
            "b must be linearly independent from the span of the targets and the basis"
        )


def solve(problem: SimultaneousProblem) -> SolveReport:
    """Minimize the worst residual seminorm over the spanned subspace.

    Deterministic for a fixed problem and seed.  Restarts launch from the
    origin plus seeded Gaussian points scaled by twice the largest target
    coordinate; the subgradient of the max comes from the target with the
    largest residual, averaged over any targets tied within a tiny relative
    margin; the winner is the lowest value with lexicographic coefficient
    tie-breaking.  A restart counts as converged when its best value improved
    by less than ``tol`` over the last 50 iterations.
    """
    _require_solvable(problem)
    res = _minimize(
        problem.space, problem.targets, problem.g_basis.matrix, problem.b, problem.solver
    )
    return _report_from(problem, res)


def _report_from(problem: SimultaneousProblem, res: _MinimizeResult) -> SolveReport:
    elements = (
        res.best_coeffs @ problem.g_basis.matrix
        if problem.g_basis.k
        else np.zeros((res.best_coeffs.shape[0], element_dim(problem.space)))
    )
    g_star = elements[res.winner]
    per_restart = [
        RestartResult(
            start=[float(v) for v in res.starts[r]],
            value=float(res.best_values[r]),
            iterations=res.iterations,
            converged=bool(res.converged[r]),
        )
        for r in range(res.starts.shape[0])
    ]
    return SolveReport(
        g_star=g_star,
        value=objective(problem, g_star),
        converged=bool(res.converged[res.winner]),
        per_restart=per_restart,
        spread=_spread(problem.space, elements, problem.b),
    )


def oracle_solve(
    problem: SimultaneousProblem, radius: float, resolution: int
) -> tuple[float, np.ndarray]:
    """Exhaustive grid minimization over [-radius, radius]^k, k <= 3.

    A coarse sweep at ``resolution`` points per axis is followed by one
    refinement pass around the best cell with a tenfold finer step.  Used as
    ground truth for :func:`solve` on small problems; the cost explodes with
    k, hence the hard cap.
    """
    k = problem.g_basis.k
    if k > 3:
        raise ValueError(f"grid oracle supports at most 3 basis vectors, got {k}")
    if isinstance(resolution, bool) or not isinstance(resolution, int) or resolution < 10:
        raise ValueError(f"resolution must be an integer >= 10, got {resolution!r}")
    if not (radius > 0.0):
        raise ValueError(f"radius must be positive, got {radius!r}")

    obj = _Objective(problem.space, problem.targets, problem.g_basis.matrix, problem.b)
    if k == 0:
        g = problem.g_basis.combine(np.zeros(0))
        return objective(problem, g), g

    axes = [np.linspace(-radius, radius, resolution)] * k
    best_val, best_c = _grid_min(obj, axes)

    h = 2.0 * radius / (resolution - 1)
    fine_axes = [np.linspace(c - h, c + h, 21) for c in best_c]
    fine_val, fine_c = _grid_min(obj, fine_axes)
    if fine_val < best_val:
        best_val, best_c = fine_val, fine_c

    g = problem.g_basis.combine(best_c)
    return objective(problem, g), g


def _grid_min(obj: _Objective, axes: list[np.ndarray]) -> tuple[float, np.ndarray]:
    k = len(axes)
    if k == 1:
        C = axes[0][:, None]
        vals = obj.values(C)
        i = int(np.argmin(vals))
        return float(vals[i]), C[i].copy()
    if k == 2:
        A, B = np.meshgrid(axes[0], axes[1], indexing="ij")
        C = np.column_stack([A.ravel(), B.ravel()])
        vals = obj.values(C)
        i = int(np.argmin(vals))
        return float(vals[i]), C[i].copy()
    # k == 3: sweep the first axis in slabs to bound memory
    A, B = np.meshgrid(axes[1], axes[2], indexing="ij")
    tail = np.column_stack([A.ravel(), B.ravel()])
    buf = np.empty((tail.shape[0], 3))
    buf[:, 1:] = tail
    best_val = np.inf
    best_c = None
    for v0 in axes[0]:
        buf[:, 0] = v0
        vals = obj.values(buf)
        i = int(np.argmin(vals))
        if vals[i] < best_val:
            best_val = float(vals[i])
            best_c = buf[i].copy()
    return best_val, best_c


def distance_to_subspace(
    space: SpaceSpec, x0, w_basis, b, cfg: Optional[SolverConfig] = None
) -> tuple[float, np.ndarray]:
    """Distance min over w in span(w_basis) of ||x0 - w, b|| and a minimizer.

    ``EuclideanGram`` is solved exactly: p_b(u) = |b| * |P u| with P the
    orthogonal projector onto the complement of b, so the problem is a least
    squares fit of P x0 against the projected basis.  ``WhitePolynomial``
    falls back to the subgradient solver.
    """
    x0v = as_element(space, x0, "x0")
    if not isinstance(w_basis, SubspaceBasis):
        w_basis = SubspaceBasis(space, w_basis)
    bv = as_element(space, b, "b")
    if not np.any(bv != 0.0):
        raise ValueError("b: direction must be nonzero")
    if not _independent_from_span(w_basis.matrix, bv):
        raise ValueError("b must be linearly independent from the subspace span")

    if isinstance(space, EuclideanGram):
        P = np.eye(space.dim) - np.outer(bv, bv) / float(bv @ bv)
        if w_basis.k:
            A = w_basis.matrix @ P.T  # row i = P w_i
            coeffs, *_ = np.linalg.lstsq(A.T, P @ x0v, rcond=None)
            w_star = w_basis.combine(coeffs)
        else:
            w_star = np.zeros(space.dim)
        return two_norm(space, x0v - w_star, bv), w_star

    solver = cfg if cfg is not None else SolverConfig()
    res = _minimize(space, x0v[None, :], w_basis.matrix, bv, solver)
    w_star = w_basis.combine(res.best_coeffs[res.winner])
    return two_norm(space, x0v - w_star, bv), w_star


def set_distance(
    space: SpaceSpec, a_set: Sequence, w_basis, b, cfg: Optional[SolverConfig] = None
) -> float:
    """inf over w in span(w_basis) of max over the set of ||a - w, b||."""
    rows = [as_element(space, a, f"a_set[{i}]") for i, a in enumerate(a_set)]
    if not rows:
        raise ValueError("a_set must be nonempty")
    targets = np.array(rows, dtype=float)
    if not isinstance(w_basis, SubspaceBasis):
        w_basis = SubspaceBasis(space, w_basis)
    bv = as_element(space, b, "b")
    if not np.any(bv != 0.0):
        raise ValueError("b: direction must be nonzero")
    if not _independent_from_span(w_basis.matrix, bv):
        raise ValueError("b must be linearly independent from the subspace span")
    solver = cfg if cfg is not None else SolverConfig()
    res = _minimize(space, targets, w_basis.matrix, bv, solver)
    w = w_basis.combine(res.best_coeffs[res.winner])
    return float(
        max(two_norm(space, a - w, bv) for a in targets)
    )


@dataclass
class Certificate:
    """Dual witness for a positive subspace distance.

    ``functional`` holds coordinates of a linear functional h with h = 0 on
    the subspace and h(x0) = 1; the induced bilinear form F(x, beta*b) =
    beta * h(x) has operator norm 1/delta against the 2-norm, attained along
    the residual direction x0 - w_star.
    """

    functional: np.ndarray
    delta: float

    def evaluate(self, x, beta: float) -> float:
        """F(x, beta*b)."""
        return float(beta) * float(self.functional @ np.asarray(x, dtype=float))

    def to_dict(self) -> dict:
        return {
            "functional": [float(v) for v in self.functional],
            "delta": self.delta,
        }


def certificate(space: SpaceSpec, x0, w_basis, b) -> Certificate:
    """Construct the dual certificate for ``distance_to_subspace``.

    Only implemented for ``EuclideanGram``, where the b-orthogonal projection
    makes the residual explicit.  Requires the distance to be bounded away
    from zero; an x0 inside the subspace (modulo the b line) has no
    separating functional.
    """
    if not isinstance(space, EuclideanGram):
        raise ValueError("certificates are only constructed for EuclideanGram spaces")
    x0v = as_element(space, x0, "x0")
    bv = as_element(space, b, "b")
    delta, w_star = distance_to_subspace(space, x0v, w_basis, bv)
    if delta <= 1e-9:
        raise ValueError(
            f"distance {delta:.3e} is too small; x0 lies in the subspace modulo b"
        )
    u = x0v - w_star
    r = u - bv * float(u @ bv) / float(bv @ bv)
    h = r / float(r @ x0v)
    return Certificate(functional=h, delta=float(delta))


@dataclass
class CertificateSoundness:
    delta: float
    bound: float
    max_ratio: float
    attained_ratio: float
    h_on_basis_max: float
    h_at_x0: float
    samples: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "bound": self.bound,
            "max_ratio": self.max_ratio,
            "attained_ratio": self.attained_ratio,
            "h_on_basis_max": self.h_on_basis_max,
            "h_at_x0": self.h_at_x0,
            "samples": self.samples,
            "passed": self.passed,
        }


def certificate_soundness(
    space: SpaceSpec,
    cert: Certificate,
    x0,
    w_basis,
    b,
    samples: int = 1000,
    seed: int = 0,
    ratio_slack: float = 1e-6,
    attain_tol: float = 1e-4,
) -> CertificateSoundness:
    """Sample |F(x, beta*b)| / ||x, beta*b|| and compare against 1/delta.

    The ratio must stay below (1/delta) * (1 + ratio_slack) everywhere and
    reach 1/delta within ``attain_tol`` along the residual direction.
    """
    if not isinstance(space, EuclideanGram):
        raise ValueError("certificates are only constructed for EuclideanGram spaces")
    x0v = as_element(space, x0, "x0")
    bv = as_element(space, b, "b")
    if not isinstance(w_basis, SubspaceBasis):
        w_basis = SubspaceBasis(space, w_basis)
    h = cert.functional

    rng = np.random.default_rng(seed)
    X = rng.uniform(-1.0, 1.0, (samples, space.dim))
    beta = rng.uniform(-1.0, 1.0, samples)
    numer = np.abs(beta * (X @ h))
    denom = two_norm_rows(space, X, beta[:, None] * bv[None, :])
    ok = denom > 1e-12
    ratios = numer[ok] / denom[ok]
    max_ratio = float(ratios.max()) if ratios.size else 0.0

    _, w_star = distance_to_subspace(space, x0v, w_basis, bv)
    witness = x0v - w_star
    attained = abs(float(h @ witness)) / two_norm(space, witness, bv)

    bound = 1.0 / cert.delta
    h_on_basis = (
        float(np.max(np.abs(w_basis.matrix @ h))) if w_basis.k else 0.0
    )
    h_at_x0 = float(h @ x0v)
    passed = (
        max_ratio <= bound * (1.0 + ratio_slack)
        and abs(attained - bound) <= attain_tol
        and h_on_basis <= 1e-9
        and abs(h_at_x0 - 1.0) <= 1e-9
    )
    return CertificateSoundness(
        delta=cert.delta,
        bound=bound,
        max_ratio=max_ratio,
        attained_ratio=float(attained),
        h_on_basis_max=h_on_basis,
        h_at_x0=h_at_x0,
        samples=int(np.sum(ok)),
        passed=passed,
    )


@dataclass
class BlendEntry:
    lam: float
    value: float
    ok: bool

    def to_dict(self) -> dict:
        return {"lam": self.lam, "value": self.value, "ok": self.ok}


@dataclass
class BlendReport:
    value_g1: float
    value_g2: float
    entries: list[BlendEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "value_g1": self.value_g1,
            "value_g2": self.value_g2,
            "entries": [e.to_dict() for e in self.entries],
            "passed": self.passed,
        }


def blend_check(
    problem: SimultaneousProblem,
    g1,
    g2,
    lambdas: Optional[Sequence[float]] = None,
    tol: float = 1e-9,
) -> BlendReport:
    """Evaluate the objective along lam*g1 + (1-lam)*g2.

    The endpoints must have objective values within ``tol`` of each other;
    convexity then forces every blend at or below min + tol, and when both
    endpoints are minimizers the whole segment stays optimal.  lam = 1
    reproduces the g1 value bit for bit, lam = 0 the g2 value.
    """
    g1v = as_element(problem.space, g1, "g1")
    g2v = as_element(problem.space, g2, "g2")
    lams = (
        np.linspace(0.0, 1.0, 11)
        if lambdas is None
        else np.asarray(list(lambdas), dtype=float)
    )
    if lams.size == 0:
        raise ValueError("lambdas must be nonempty")
    if np.any(lams < 0.0) or np.any(lams > 1.0):
        raise ValueError("lambdas must lie in [0, 1]")
    v1 = objective(problem, g1v)
    v2 = objective(problem, g2v)
    if abs(v1 - v2) > tol:
        raise ValueError(
            f"blend endpoints differ by {abs(v1 - v2):.3e} > tol={tol:.3e}"
        )
    base = min(v1, v2)
    report = BlendReport(value_g1=v1, value_g2=v2)
    for lam in lams:
        g = lam * g1v + (1.0 - lam) * g2v
        v = objective(problem, g)
        report.entries.append(
            BlendEntry(lam=float(lam), value=v, ok=bool(v <= base + tol))
        )
    return report


@dataclass
class UniquenessReport:
    distinct_optimizers: int
    spread: float
    restarts: int
    values: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "distinct_optimizers": self.distinct_optimizers,
            "spread": self.spread,
            "restarts": self.restarts,
            "values": list(self.values),
        }


def uniqueness_probe(
    problem: SimultaneousProblem, restarts: int = 16, cluster_tol: float = 1e-5
) -> UniquenessReport:
    """Cluster restart optimizers by seminorm distance.

    On ``EuclideanGram`` the objective's strict convexity (the parallelogram
    law in the second slot) forces a unique minimizer, so a healthy run
    reports one cluster.  On ``WhitePolynomial`` flat optimal faces are
    possible and more clusters are informational, not an error.
    """
    if restarts < 2:
        raise ValueError(f"restarts must be >= 2, got {restarts}")
    _require_solvable(problem)
    cfg = replace(problem.solver, restarts=restarts)
    res = _minimize(problem.space, problem.targets, problem.g_basis.matrix, problem.b, cfg)
    elements = (
        res.best_coeffs @ problem.g_basis.matrix
        if problem.g_basis.k
        else np.zeros((restarts, element_dim(problem.space)))
    )

    n = elements.shape[0]
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    spread = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            dist = two_norm(problem.space, elements[i] - elements[j], problem.b)
            spread = max(spread, dist)
            if dist < cluster_tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    clusters = len({find(i) for i in range(n)})
    return UniquenessReport(
        distinct_optimizers=clusters,
        spread=spread,
        restarts=restarts,
        values=[float(v) for v in res.best_values],
    )
