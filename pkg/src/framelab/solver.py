"""Coherence minimization over unit-norm frames.

The nonsmooth objective max_{j<l} |<phi_j, phi_l>|^2 is replaced by the
log-sum-exp surrogate

    f_beta(Phi) = (1/(2 beta)) log sum_{j<l} exp(2 beta g_jl),
    g_jl = |<phi_j, phi_l>|^2,

which upper-bounds the max and converges to it as beta grows.  Each restart
runs projected gradient descent with Armijo backtracking on the product of
unit spheres, under a continuation schedule of increasing beta.  Restarts are
independent; the reduction (min by true coherence, ties by restart index) is
deterministic, and restart number r always starts from random_frame seeded
with (seed, r), so parallel execution cannot change the answer.

Set the environment variable FRAMELAB_WORKERS to a value > 1 to evaluate
restarts in a process pool.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import BoundReport, best_bound
from .catalog import random_frame
from .errors import ConfigInvalid, Diverged
from .frames import FIELDS, Frame, frame_from_columns
from .analysis import coherence

_ARMIJO_C = 1e-4
_MAX_HALVINGS = 40


@dataclass(frozen=True)
class SearchConfig:
    n: int
    m: int
    field: str = "C"
    restarts: int = 50
    max_iters: int = 2000              # per smoothing stage
    smoothing_schedule: tuple[float, ...] = (10.0, 30.0, 100.0, 300.0, 1000.0,
                                             3000.0, 10000.0, 30000.0)
    step_rule: str = "armijo"
    seed: int = 0
    target_tol: float = 1e-3           # certification threshold on the bound gap
    record_trace: bool = False

    def __post_init__(self):
        if self.field not in FIELDS:
            raise ConfigInvalid(f"field must be one of {FIELDS}")
        if self.n < 1 or self.m < 1:
            raise ConfigInvalid("n and m must be positive")
        if self.restarts < 1:
            raise ConfigInvalid("restarts must be >= 1")
        if self.max_iters < 1:
            raise ConfigInvalid("max_iters must be >= 1")
        if len(self.smoothing_schedule) == 0 or any(b <= 0 for b in self.smoothing_schedule):
            raise ConfigInvalid("smoothing_schedule must be positive")
        if any(b1 >= b2 for b1, b2 in zip(self.smoothing_schedule,
                                          self.smoothing_schedule[1:])):
            raise ConfigInvalid("smoothing temperatures must be strictly increasing")
        if self.step_rule != "armijo":
            raise ConfigInvalid(f"unknown step rule {self.step_rule!r}")
        if self.target_tol <= 0:
            raise ConfigInvalid("target_tol must be positive")


@dataclass(frozen=True)
class RestartTrace:
    restart: int
    coherence: float
    objectives: tuple[tuple[float, ...], ...]  # accepted objective values per stage


@dataclass(frozen=True)
class SearchResult:
    best_frame: Frame
    best_coherence: float
    bound: BoundReport
    gap: float
    certified: bool
    iterations_used: int
    restarts_used: int
    trace: Optional[tuple[RestartTrace, ...]] = None


def _objective_grad_matrix(v: np.ndarray, beta: float):
    """Smoothed objective and its Euclidean gradient for a synthesis matrix."""
    n = v.shape[1]
    g = v.conj().T @ v
    gsq = np.abs(g) ** 2
    iu, il = np.triu_indices(n, 1)
    pair_vals = gsq[iu, il]
    gmax = float(pair_vals.max())
    expw = np.exp(2.0 * beta * (pair_vals - gmax))  # max-subtracted: never overflows
    total = float(expw.sum())
    obj = gmax + math.log(total) / (2.0 * beta)

    w = np.zeros((n, n))
    w[iu, il] = expw / total
    w = w + w.T
    grad = 2.0 * v @ (w * g)
    return obj, grad


def objective_and_gradient(frame: Frame, beta: float):
    """Public wrapper over the smoothed objective; gradient has the same
    (M, N) layout as frame.vectors, before any tangent-space projection."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    return _objective_grad_matrix(frame.vectors, beta)


def _project_tangent(v: np.ndarray, grad: np.ndarray) -> np.ndarray:
    """Remove the radial component of each column's gradient."""
    radial = np.real(np.sum(np.conj(v) * grad, axis=0))
    return grad - v * radial


def _renormalize(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=0)


def _descend_stage(v, beta, max_iters, step0):
    """Projected gradient descent with Armijo backtracking at fixed beta.

    Returns (iterate, accepted objective path, iterations, last step size).
    """
    f, grad = _objective_grad_matrix(v, beta)
    if not math.isfinite(f):
        raise Diverged("non-finite objective at stage start")
    path = [f]
    step = step0
    stall = 0
    iters = 0
    for _ in range(max_iters):
        rg = _project_tangent(v, grad)
        gn2 = float(np.sum(np.abs(rg) ** 2))
        if gn2 <= 1e-24:
            break
        accepted = False
        t = step
        for _ in range(_MAX_HALVINGS):
            cand = v - t * rg
            norms = np.linalg.norm(cand, axis=0)
            if np.any(norms < 1e-12):
                t *= 0.5
                continue
            cand = cand / norms
            fc, gc = _objective_grad_matrix(cand, beta)
            if not math.isfinite(fc):
                raise Diverged("non-finite iterate during line search")
            if fc <= f - _ARMIJO_C * t * gn2:
                accepted = True
                break
            t *= 0.5
        if not accepted:
            break
        df = f - fc
        v, f, grad = cand, fc, gc
        path.append(f)
        step = t * 2.0
        iters += 1
        # three consecutive negligible decreases: the stage has converged
        stall = stall + 1 if df <= 1e-14 * max(1.0, abs(f)) else 0
        if stall >= 3:
            break
    return v, path, iters, step


def _true_coherence(v: np.ndarray) -> float:
    g = np.abs(v.conj().T @ v)
    np.fill_diagonal(g, 0.0)
    return float(g.max())


def _run_restart(config: SearchConfig, restart: int):
    """One full continuation run; returns (coherence, matrix, iters, stage paths)."""
    v = random_frame(config.n, config.m, config.field, seed=[config.seed, restart]).vectors
    return _polish(v, config, restart)


def _polish(v, config: SearchConfig, restart: int):
    total_iters = 0
    paths = []
    step = 0.5
    for beta in config.smoothing_schedule:
        v, path, iters, step = _descend_stage(v, beta, config.max_iters, step)
        total_iters += iters
        paths.append(tuple(path))
    return _true_coherence(v), v, total_iters, tuple(paths)


def _workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("FRAMELAB_WORKERS", "1")))
    except ValueError:
        return 1


def _restart_results(config: SearchConfig):
    """Yield per-restart results in index order, honoring FRAMELAB_WORKERS."""
    workers = _workers_from_env()
    if workers == 1:
        for r in range(config.restarts):
            yield _run_restart(config, r)
        return
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_restart, [config] * config.restarts,
                            range(config.restarts))


def _assemble(config: SearchConfig, bound: BoundReport, best, total_iters,
              restarts_used, traces) -> SearchResult:
    best_mu, best_v = best
    frame = frame_from_columns(config.field, _renormalize(best_v).T)
    mu = coherence(frame)  # recomputed from the frame, not trusted from the loop
    gap = mu - bound.best
    if gap < -config.target_tol:
        raise RuntimeError(
            f"coherence {mu!r} beat the proven lower bound {bound.best!r}; "
            "this indicates a bug in the solver or the bounds")
    return SearchResult(best_frame=frame, best_coherence=mu, bound=bound, gap=gap,
                        certified=gap <= config.target_tol,
                        iterations_used=total_iters, restarts_used=restarts_used,
                        trace=tuple(traces) if config.record_trace else None)


def minimize_coherence(config: SearchConfig) -> SearchResult:
    """Multi-restart search for the minimal-coherence frame at (N, M).

    Restarts are examined in seed order and the search stops at the first
    restart whose result is certified (bound gap <= target_tol); the reported
    frame is the best seen up to that point.  Deterministic given the seed.
    """
    if config.n <= config.m:
        raise ConfigInvalid("search needs N > M (otherwise an orthonormal set is optimal)")
    bound = best_bound(config.n, config.m, config.field)
    best = None
    total_iters = 0
    restarts_used = 0
    traces = []
    for r, (mu, v, iters, paths) in enumerate(_restart_results(config)):
        total_iters += iters
        restarts_used = r + 1
        if config.record_trace:
            traces.append(RestartTrace(restart=r, coherence=mu, objectives=paths))
        if best is None or mu < best[0]:
            best = (mu, v)
        if best[0] - bound.best <= config.target_tol:
            break
    return _assemble(config, bound, best, total_iters, restarts_used, traces)


def refine(frame: Frame, config: SearchConfig) -> SearchResult:
    """Single-restart polish starting from the given frame.

    Never reports a coherence above the input's (falls back to the input
    frame when the continuation fails to improve it).
    """
    if (frame.field != config.field or frame.dim_m != config.m
            or frame.count_n != config.n):
        raise ConfigInvalid("frame does not match the search configuration")
    bound = best_bound(config.n, config.m, config.field)
    mu0 = coherence(frame)
    mu, v, iters, paths = _polish(frame.vectors.copy(), config, 0)
    if mu > mu0:
        mu, v = mu0, frame.vectors
    traces = [RestartTrace(restart=0, coherence=mu, objectives=paths)]
    return _assemble(config, bound, (mu, v), iters, 1, traces)
