import math

import numpy as np

import framelab as fl

ISQRT2 = math.sqrt(0.5)


def test_tri_5_2_reproduces_claims(tri52):
    assert abs(fl.coherence(tri52) - ISQRT2) < 1e-12
    assert fl.tightness(tri52).is_tight
    s = fl.angle_set(tri52)
    assert np.allclose(s.angles, [ISQRT2, 0.5, 0.0], atol=1e-12)
    assert fl.equidistribution(tri52) is None


def test_bi_5_2_reproduces_claims(bi52):
    assert abs(fl.coherence(bi52) - ISQRT2) < 1e-12
    assert not fl.tightness(bi52).is_tight
    assert len(fl.angle_set(bi52).angles) == 2


def test_icosa_reproduces_claims(icosa122):
    a = math.sqrt((5 + math.sqrt(5)) / 10)
    b = math.sqrt((5 - math.sqrt(5)) / 10)
    assert fl.tightness(icosa122).is_tight
    s = fl.angle_set(icosa122)
    assert np.allclose(s.angles, [a, b, 0.0], atol=1e-12)
    assert fl.equidistribution(icosa122) == (5, 5, 1)
    assert abs(fl.design_moment(icosa122, 5).moment - 1 / 6) < 1e-12


def test_both_5_2_frames_saturate_orthoplex(tri52, bi52):
    ortho = fl.orthoplex_bound(5, 2, "C")
    assert abs(fl.coherence(tri52) - ortho) <= 1e-12
    assert abs(fl.coherence(bi52) - ortho) <= 1e-12


def test_icosa_achieves_toth_at_12(icosa122):
    assert abs(fl.coherence(icosa122) - fl.toth_bound(12)) <= 1e-12


def test_catalog_frames_pass_unit_validation(tri52, bi52, icosa122):
    for f in (tri52, bi52, icosa122):
        rebuilt = fl.frame_from_columns("C", f.vectors.T)  # re-validates norms
        assert np.array_equal(rebuilt.vectors, f.vectors)


def test_random_frame_unit_columns():
    for field in ("R", "C"):
        f = fl.random_frame(5, 2, field, 11)
        assert np.max(np.abs(np.linalg.norm(f.vectors, axis=0) - 1)) < 1e-12


def test_random_frame_deterministic():
    a = fl.random_frame(6, 3, "C", 42)
    b = fl.random_frame(6, 3, "C", 42)
    assert np.array_equal(a.vectors, b.vectors)
    c = fl.random_frame(6, 3, "C", 43)
    assert not np.array_equal(a.vectors, c.vectors)


def test_random_frame_coherence_below_one():
    for seed in range(100):
        f = fl.random_frame(2, 2, "C", seed)
        assert fl.coherence(f) < 1 - 1e-6
