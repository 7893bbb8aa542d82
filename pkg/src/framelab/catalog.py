"""Exact reference frames and the seeded random generator.

Roots of unity are evaluated as cos/sin of exact rational multiples of 2*pi
rather than by repeated multiplication, so entries carry no accumulated error.
"""

from __future__ import annotations

import math

import numpy as np

from .frames import COMPLEX, Frame, frame_from_columns

# 1/sqrt2 as the correctly rounded sqrt(0.5), not 1/sqrt(2) (one ulp lower)
_ISQRT2 = math.sqrt(0.5)


def _unit_root(k: int, q: int) -> complex:
    """exp(2 pi i k / q) via cos/sin of the reduced rational angle."""
    theta = 2.0 * math.pi * (k % q) / q
    return complex(math.cos(theta), math.sin(theta))


def tri_5_2() -> Frame:
    """Tight triangular 5-vector frame in C^2 with angles {1/sqrt2, 1/2, 0}.

    An orthonormal pair plus three equatorial vectors whose second
    components run over the cube roots of unity.  Saturates the orthoplex
    bound for (5, 2), so it is a minimal-coherence frame; it is not
    equidistributed.
    """
    w = _unit_root(1, 3)
    cols = [(1.0, 0.0), (0.0, 1.0),
            (_ISQRT2, _ISQRT2),
            (_ISQRT2, w * _ISQRT2),
            (_ISQRT2, w * w * _ISQRT2)]
    return frame_from_columns(COMPLEX, cols)


def bi_5_2() -> Frame:
    """Biangular non-tight 5-vector frame in C^2 with angles {1/sqrt2, 0}.

    One basis vector plus the four vectors (1, s)/sqrt2 with s running over
    the fourth roots of unity (ordered -1, 1, i, -i).  Also saturates the
    orthoplex bound for (5, 2): same coherence as tri_5_2 but a different
    angle-set/tightness trade-off.
    """
    cols = [(1.0, 0.0),
            (_ISQRT2, -_ISQRT2),
            (_ISQRT2, _ISQRT2),
            (_ISQRT2, 1j * _ISQRT2),
            (_ISQRT2, -1j * _ISQRT2)]
    return frame_from_columns(COMPLEX, cols)


def icosaplectic_12_2() -> Frame:
    """Tight 12-vector frame in C^2 that embeds onto a regular icosahedron.

    With a = sqrt((5+sqrt5)/10) and b = sqrt(1-a^2): the two basis vectors
    (the poles) plus two five-vector rings.  One ring carries its phases on
    the odd tenth roots of unity and the other on the fifth roots, giving
    the half-step ring offset the icosahedron needs.  Triangular with angles
    {a, b, 0}, equidistributed with multiplicities (5, 5, 1), and its
    coherence a meets the cap-packing bound at N = 12.
    """
    a = math.sqrt((5 + math.sqrt(5)) / 10)
    b = math.sqrt(1 - a * a)
    cols = [(1.0, 0.0), (0.0, 1.0)]
    cols += [(-b, -a * _unit_root(2 * k + 1, 10)) for k in range(5)]
    cols += [(a * _unit_root(k, 5), b) for k in range(5)]
    return frame_from_columns(COMPLEX, cols)


def random_frame(n: int, m: int, field: str, seed) -> Frame:
    """n columns drawn i.i.d. from the rotation-invariant distribution on the
    unit sphere of F^m (normalized Gaussian components); deterministic per seed."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = np.random.default_rng(seed)
    cols = rng.standard_normal((n, m))
    if field == COMPLEX:
        cols = cols + 1j * rng.standard_normal((n, m))
    norms = np.linalg.norm(cols, axis=1)
    while np.any(norms < 1e-12):  # probability-zero guard, keeps determinism
        bad = norms < 1e-12
        redraw = rng.standard_normal((int(bad.sum()), m))
        if field == COMPLEX:
            redraw = redraw + 1j * rng.standard_normal((int(bad.sum()), m))
        cols[bad] = redraw
        norms = np.linalg.norm(cols, axis=1)
    return frame_from_columns(field, cols / norms[:, None])
