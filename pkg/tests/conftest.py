"""Shared fixtures: catalog frames, reference constructions, random rotations."""

import math

import numpy as np
import pytest

import framelab as fl

ISQRT2 = math.sqrt(0.5)


@pytest.fixture(scope="session")
def tri52():
    return fl.tri_5_2()


@pytest.fixture(scope="session")
def bi52():
    return fl.bi_5_2()


@pytest.fixture(scope="session")
def icosa122():
    return fl.icosaplectic_12_2()


def onb(field, m):
    return fl.frame_from_columns(field, np.eye(m))


def mub_pair_4_2():
    """Two mutually unbiased bases of C^2: a 4-vector biangular tight frame."""
    cols = [(1, 0), (0, 1), (ISQRT2, ISQRT2), (ISQRT2, -ISQRT2)]
    return fl.frame_from_columns("C", cols)


def mub_triple_6_2():
    """Three mutually unbiased bases of C^2 (the octahedral frame)."""
    cols = [(1, 0), (0, 1),
            (ISQRT2, ISQRT2), (ISQRT2, -ISQRT2),
            (ISQRT2, 1j * ISQRT2), (ISQRT2, -1j * ISQRT2)]
    return fl.frame_from_columns("C", cols)


def mub_triple_9_3():
    """Three mutually unbiased flat bases of C^3: an odd-N biangular tight frame.

    Columns v^(k,m)_j = w^(k j^2 + m j)/sqrt3 with w a primitive cube root;
    distinct k give quadratic Gauss sums of magnitude 1/sqrt3.
    """
    w = np.exp(2j * np.pi / 3)
    cols = []
    for k in range(3):
        for m in range(3):
            cols.append([w ** ((k * j * j + m * j) % 3) / math.sqrt(3) for j in range(3)])
    return fl.frame_from_columns("C", cols)


def random_unitary(m, field, seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((m, m))
    if field == "C":
        z = z + 1j * rng.standard_normal((m, m))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def rotate(frame, seed):
    u = random_unitary(frame.dim_m, frame.field, seed)
    return fl.frame_from_columns(frame.field, (u @ frame.vectors).T)


def fd_gradient(frame, beta, h=1e-6):
    """Central finite differences of the smoothed objective, one real
    coordinate at a time (real and imaginary parts separately)."""
    from framelab.solver import _objective_grad_matrix

    v0 = frame.vectors
    grad = np.zeros(v0.shape, dtype=v0.dtype)
    parts = (1.0, 1j) if np.iscomplexobj(v0) else (1.0,)
    for idx in np.ndindex(*v0.shape):
        for mult in parts:
            vp = v0.copy()
            vp[idx] += h * mult
            vm = v0.copy()
            vm[idx] -= h * mult
            fp = _objective_grad_matrix(vp, beta)[0]
            fm = _objective_grad_matrix(vm, beta)[0]
            grad[idx] += mult * (fp - fm) / (2 * h)
    return grad


def frame_with_gram(offdiag, n=4):
    """Real 4-vector frame in R^4 realizing the given upper-triangle Gram values.

    Values must be small enough to keep I + X diagonally dominant (PSD).
    """
    g = np.eye(n)
    iu = np.triu_indices(n, 1)
    g[iu] = offdiag
    g = g + np.triu(g, 1).T
    chol = np.linalg.cholesky(g)
    return fl.frame_from_columns("R", chol)  # row j of chol is the j-th vector
