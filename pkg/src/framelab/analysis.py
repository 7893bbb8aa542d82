"""Coherence, angle sets, tightness, and projective design moments.

All quantities are functions of the absolute Gram matrix.  Angle sets are
recovered by single-linkage clustering of the off-diagonal magnitudes; the
cluster representative is the maximum of its members, so the largest angle
coincides bit-for-bit with the coherence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AmbiguousClustering, FieldUnsupported, TooFewVectors
from .frames import COMPLEX, Frame, gram
from .tolerances import DEFAULT_CLUSTER_TOL, TOL_DESIGN, tightness_tol


@dataclass(frozen=True)
class GramSummary:
    """Clustered angle structure of a frame.

    angles are the K distinct cluster representatives in decreasing order;
    row j of multiplicity_table counts the partners of vector j at each angle,
    so every row sums to N - 1.  spreads records each cluster's max - min, a
    measure of how sharply the data determines that angle.
    """

    abs_gram: np.ndarray           # (N, N), nonnegative, unit diagonal
    angles: tuple[float, ...]      # c_1 > c_2 > ... > c_K
    multiplicity_table: np.ndarray  # (N, K) nonnegative ints
    cluster_tol: float
    spreads: tuple[float, ...] = ()  # per-angle, same order as angles

    def __post_init__(self):
        self.abs_gram.setflags(write=False)
        self.multiplicity_table.setflags(write=False)


@dataclass(frozen=True)
class TightnessReport:
    is_tight: bool
    tight_constant: float  # trace(Phi Phi*) / M; equals N/M for unit-norm input
    defect: float          # Frobenius norm of Phi Phi* - (N/M) I


@dataclass(frozen=True)
class DesignMoment:
    t: int
    moment: float    # (1/N^2) sum_{j,l} |<phi_j, phi_l>|^(2t)
    target: float    # 1 / binom(t + M - 1, t)
    is_design: bool


def coherence(frame: Frame) -> float:
    """Largest off-diagonal absolute inner product."""
    if frame.count_n < 2:
        raise TooFewVectors("coherence needs at least two vectors")
    a = np.abs(gram(frame))
    return float(np.max(a[~np.eye(frame.count_n, dtype=bool)]))


def angle_set(frame: Frame, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> GramSummary:
    """Cluster the off-diagonal Gram magnitudes into the frame's angle set.

    Single-linkage on the line: sorted values are split wherever the gap
    exceeds cluster_tol.  Zero is an ordinary angle (orthogonal pairs count).
    Raises AmbiguousClustering when two representatives land within
    10 * cluster_tol of each other while some cluster spreads wider than
    cluster_tol -- the tolerance then cannot separate the true angles.
    """
    n = frame.count_n
    if n < 2:
        raise TooFewVectors("angle set needs at least two vectors")
    if not cluster_tol > 0:
        raise ValueError("cluster_tol must be positive")
    a = np.abs(gram(frame))
    iu, il = np.triu_indices(n, 1)
    vals = a[iu, il]

    order = np.argsort(vals, kind="stable")
    svals = vals[order]
    # cluster label per sorted value; new cluster at every gap > cluster_tol
    steps = (np.diff(svals) > cluster_tol).astype(int)
    labels_sorted = np.concatenate([[0], np.cumsum(steps)])
    k = int(labels_sorted[-1]) + 1

    reps_asc = np.empty(k)
    spread = np.empty(k)
    for c in range(k):
        members = svals[labels_sorted == c]
        reps_asc[c] = members[-1]  # max member: keeps c_1 identical to coherence
        spread[c] = members[-1] - members[0]
    if k > 1:
        min_rep_gap = float(np.min(np.diff(reps_asc)))
        if min_rep_gap < 10 * cluster_tol and float(np.max(spread)) > cluster_tol:
            raise AmbiguousClustering(
                f"representatives {min_rep_gap:.3e} apart with intra-cluster spread "
                f"{float(np.max(spread)):.3e} at cluster_tol={cluster_tol:.3e}")

    # descending angle order: cluster c (ascending) becomes column k-1-c
    labels = np.empty(len(vals), dtype=int)
    labels[order] = k - 1 - labels_sorted
    table = np.zeros((n, k), dtype=int)
    for (j, l, lab) in zip(iu, il, labels):
        table[j, lab] += 1
        table[l, lab] += 1
    return GramSummary(a, tuple(float(r) for r in reps_asc[::-1]), table, cluster_tol,
                       spreads=tuple(float(s) for s in spread[::-1]))


def tightness(frame: Frame, tol: Optional[float] = None) -> TightnessReport:
    """Frobenius distance of Phi Phi* from (N/M) I, with a tight/not verdict."""
    v = frame.vectors
    m, n = v.shape
    s = v @ v.conj().T
    defect = float(np.linalg.norm(s - (n / m) * np.eye(m)))
    if tol is None:
        tol = tightness_tol(n)
    return TightnessReport(is_tight=defect <= tol,
                           tight_constant=float(np.trace(s).real) / m,
                           defect=defect)


def row_angle_identity_check(frame: Frame) -> np.ndarray:
    """Per-vector sums sum_l |<phi_j, phi_l>|^2 including l = j.

    Every entry equals N/M exactly when the frame is tight.
    """
    a2 = np.abs(gram(frame)) ** 2
    return a2.sum(axis=1)


def equidistribution(frame: Frame,
                     cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Optional[tuple[int, ...]]:
    """Common multiplicity vector (m_1, ..., m_K) if every vector sees each
    angle equally often, else None."""
    summary = angle_set(frame, cluster_tol)
    table = summary.multiplicity_table
    if np.all(table == table[0]):
        return tuple(int(x) for x in table[0])
    return None


def design_moment(frame: Frame, t: int) -> DesignMoment:
    """Equally-weighted projective t-design moment test over C.

    moment = (1/N^2) sum_{j,l} |<phi_j, phi_l>|^(2t) against the design
    target 1/binom(t+M-1, t); the moment can never fall below the target
    for unit vectors, so a violation beyond tolerance is a computation bug.
    """
    if frame.field != COMPLEX:
        raise FieldUnsupported("design moments are implemented for complex frames only")
    if t < 1:
        raise ValueError("design order t must be a positive integer")
    n, m = frame.count_n, frame.dim_m
    a = np.abs(gram(frame))
    moment = float(np.sum(a ** (2 * t))) / n ** 2
    target = 1.0 / math.comb(t + m - 1, t)
    if moment < target - TOL_DESIGN:
        raise RuntimeError(
            f"design moment {moment!r} fell below the lower bound {target!r}; "
            "this indicates a numerical bug, not a property of the frame")
    return DesignMoment(t=t, moment=moment, target=target,
                        is_design=abs(moment - target) <= TOL_DESIGN)
