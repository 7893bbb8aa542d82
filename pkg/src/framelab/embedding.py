"""Isometric embedding of a unit-norm frame onto a real unit sphere.

Each frame vector maps to the traceless part of its rank-one projector,
phi phi* - (1/M) I, which lives in the real space of traceless self-adjoint
(complex field) or traceless symmetric (real field) M x M matrices.  That
space has dimension D = M^2 - 1 resp. (M+2)(M-1)/2; expanding on a fixed
orthonormal matrix basis and rescaling by sqrt(M/(M-1)) yields N unit
vectors y_j in R^D satisfying

    |<phi_j, phi_l>|^2 = 1/M + ((M-1)/M) <y_j, y_l>.

The matrix basis is the generalized Gell-Mann family in a fixed order
(symmetric pairs, then antisymmetric pairs for the complex field, then the
diagonal ladder), so embeddings are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooSmall, ShapeMismatch
from .frames import COMPLEX, REAL, Frame, gram
from .tolerances import TOL_UNIT


def embedding_dimension(m: int, field: str) -> int:
    """Dimension of the traceless self-adjoint/symmetric matrix space."""
    return m * m - 1 if field == COMPLEX else (m + 2) * (m - 1) // 2


def traceless_basis(m: int, field: str) -> np.ndarray:
    """Orthonormal (Hilbert-Schmidt) basis of the traceless subspace, shape (D, M, M).

    Order: E_jk symmetric pairs for j < k, then (complex only) the
    antisymmetric pairs, then the M-1 diagonal ladder matrices.
    """
    dtype = np.complex128 if field == COMPLEX else np.float64
    mats = []
    for j in range(m):
        for k in range(j + 1, m):
            b = np.zeros((m, m), dtype=dtype)
            b[j, k] = b[k, j] = 1 / np.sqrt(2)
            mats.append(b)
    if field == COMPLEX:
        for j in range(m):
            for k in range(j + 1, m):
                b = np.zeros((m, m), dtype=dtype)
                b[j, k] = -1j / np.sqrt(2)
                b[k, j] = 1j / np.sqrt(2)
                mats.append(b)
    for l in range(1, m):
        b = np.zeros((m, m), dtype=dtype)
        b[np.arange(l), np.arange(l)] = 1
        b[l, l] = -l
        mats.append(b / np.sqrt(l * (l + 1)))
    basis = np.array(mats)
    assert basis.shape[0] == embedding_dimension(m, field)
    return basis


@dataclass(frozen=True)
class EmbeddedConfig:
    """N unit vectors in R^D produced by the traceless embedding."""

    dim_d: int
    points: np.ndarray  # (N, D)
    source_field: str
    source_m: int

    def __post_init__(self):
        if self.points.ndim != 2 or self.points.shape[1] != self.dim_d:
            raise ValueError(f"points must have shape (N, {self.dim_d})")
        norms = np.linalg.norm(self.points, axis=1)
        if not np.all(np.abs(norms - 1.0) <= TOL_UNIT):
            raise ValueError("embedded points must be unit vectors")
        self.points.setflags(write=False)


def embed(frame: Frame) -> EmbeddedConfig:
    """Map the frame vectors to unit vectors on the sphere in R^D."""
    m, n = frame.dim_m, frame.count_n
    if m < 2:
        raise DimensionTooSmall("embedding needs M >= 2 (for M = 1 the target space is empty)")
    basis = traceless_basis(m, frame.field)
    v = frame.vectors
    # T_j = phi_j phi_j* - I/M, coordinates y_j[a] = tr(T_j B_a), then rescale.
    proj = np.einsum("ij,kj->jik", v, v.conj())  # (N, M, M) rank-one projectors
    t = proj - np.eye(m) / m
    coords = np.einsum("nij,aji->na", t, basis).real
    points = coords * np.sqrt(m / (m - 1.0))
    return EmbeddedConfig(dim_d=basis.shape[0], points=points,
                          source_field=frame.field, source_m=m)


def embedding_residual(frame: Frame, config: EmbeddedConfig) -> float:
    """Worst violation of the embedding identity over all pairs (j, l)."""
    if (config.source_field != frame.field or config.source_m != frame.dim_m
            or config.points.shape[0] != frame.count_n):
        raise ShapeMismatch("embedded configuration does not match the frame")
    m = frame.dim_m
    lhs = np.abs(gram(frame)) ** 2
    rhs = 1.0 / m + ((m - 1.0) / m) * (config.points @ config.points.T)
    return float(np.max(np.abs(lhs - rhs)))


def zero_sum_defect(config: EmbeddedConfig) -> float:
    """Euclidean norm of the sum of the embedded points.

    Zero exactly when the source frame is tight; exposed as a number because
    near-tightness has no canonical threshold.
    """
    return float(np.linalg.norm(config.points.sum(axis=0)))
