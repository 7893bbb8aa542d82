"""Core domain type for finite unit-norm frames over R or C.

A frame is held as its M x N synthesis matrix: N unit-norm columns in F^M.
Frames are immutable after construction; every operation in the package is a
pure function over them, so instances are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import EmptyInput, NonUnitColumn, ZeroColumn
from .tolerances import TOL_UNIT

REAL = "R"
COMPLEX = "C"
FIELDS = (REAL, COMPLEX)


@dataclass(frozen=True, eq=False)
class Frame:
    """N unit-norm vectors in F^M, stored as columns of the synthesis matrix.

    Construct through :func:`frame_from_columns` or :func:`normalize_columns`;
    the raw constructor performs no validation.  Spanning (rank M) is not an
    invariant -- query it with :meth:`is_spanning`.
    """

    field: str
    vectors: np.ndarray  # shape (M, N), dtype float64 or complex128

    def __post_init__(self):
        self.vectors.setflags(write=False)

    @property
    def dim_m(self) -> int:
        return self.vectors.shape[0]

    @property
    def count_n(self) -> int:
        return self.vectors.shape[1]

    def is_spanning(self) -> bool:
        return int(np.linalg.matrix_rank(self.vectors)) == self.dim_m

    @cached_property
    def _gram(self) -> np.ndarray:
        g = self.vectors.conj().T @ self.vectors
        g.setflags(write=False)
        return g

    def column(self, j: int) -> np.ndarray:
        return self.vectors[:, j]


def _as_synthesis_matrix(field: str, columns) -> np.ndarray:
    """Validate/stack a sequence of M-vectors into an (M, N) matrix."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    arr = np.asarray(columns)
    if arr.dtype == object:
        raise ValueError("columns must all have the same length")
    if arr.size == 0:
        raise EmptyInput("expected a nonempty list of nonempty columns")
    if arr.ndim != 2:
        raise ValueError(f"expected a list of vectors, got array of ndim {arr.ndim}")
    if np.iscomplexobj(arr):
        if field == REAL:
            raise ValueError("real field cannot hold complex entries")
        mat = arr.astype(np.complex128)
    else:
        mat = arr.astype(np.complex128 if field == COMPLEX else np.float64)
    if not np.all(np.isfinite(mat)):  # complex: finite in both parts
        raise ValueError("columns contain non-finite entries")
    return np.ascontiguousarray(mat.T)  # columns of the result are the frame vectors


def frame_from_columns(field: str, columns: Sequence) -> Frame:
    """Build a Frame from unit-norm columns, verifying norms without rescaling.

    Raises NonUnitColumn if any norm deviates from 1 by more than TOL_UNIT,
    EmptyInput if no columns are given.
    """
    mat = _as_synthesis_matrix(field, columns)
    norms = np.linalg.norm(mat, axis=0)
    for j, nrm in enumerate(norms):
        if not abs(nrm - 1.0) <= TOL_UNIT:
            raise NonUnitColumn(f"column {j} has norm {nrm!r}, expected 1 within {TOL_UNIT}")
    return Frame(field, mat)


def normalize_columns(field: str, columns: Sequence) -> Frame:
    """Scale every column to unit norm and build a Frame.

    Raises ZeroColumn if any column is identically zero.
    """
    mat = _as_synthesis_matrix(field, columns)
    norms = np.linalg.norm(mat, axis=0)
    for j, nrm in enumerate(norms):
        if nrm == 0.0:
            raise ZeroColumn(f"column {j} is zero and cannot be normalized")
    return frame_from_columns(field, (mat / norms).T)


def gram(frame: Frame) -> np.ndarray:
    """Gram matrix of the frame: entry (j, l) is the inner product of vector l
    against vector j, conjugate-linear in the second slot.  Hermitian with
    unit diagonal; read-only."""
    return frame._gram


def frame_to_dict(frame: Frame) -> dict:
    """Interchange dict: {"field", "m", "n", "vectors"}.

    Complex components serialize as [re, im] pairs, real ones as bare numbers.
    """
    if frame.field == COMPLEX:
        vecs = [[[float(c.real), float(c.imag)] for c in frame.vectors[:, j]]
                for j in range(frame.count_n)]
    else:
        vecs = [[float(c) for c in frame.vectors[:, j]] for j in range(frame.count_n)]
    return {"field": frame.field, "m": frame.dim_m, "n": frame.count_n, "vectors": vecs}


def frame_from_dict(data: dict) -> Frame:
    """Parse the interchange dict, validating shape and unit norms."""
    try:
        field = data["field"]
        m = int(data["m"])
        n = int(data["n"])
        raw = data["vectors"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed frame data: {exc}") from exc
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    if len(raw) != n:
        raise ValueError(f"declared n={n} but found {len(raw)} vectors")
    cols = []
    for vec in raw:
        if len(vec) != m:
            raise ValueError(f"declared m={m} but found a vector of length {len(vec)}")
        if field == COMPLEX:
            cols.append([complex(c[0], c[1]) for c in vec])
        else:
            cols.append([float(c) for c in vec])
    return frame_from_columns(field, cols)
