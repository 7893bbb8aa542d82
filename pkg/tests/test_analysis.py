import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

import framelab as fl
from framelab.errors import AmbiguousClustering, FieldUnsupported, TooFewVectors

from conftest import frame_with_gram, mub_pair_4_2, mub_triple_6_2, onb, rotate

ISQRT2 = math.sqrt(0.5)
ICOSA_A = math.sqrt((5 + math.sqrt(5)) / 10)  # largest icosahedral frame angle


# ---------------------------------------------------------------- coherence

def test_coherence_orthonormal_basis():
    assert fl.coherence(onb("C", 2)) == 0.0


def test_coherence_tri_5_2(tri52):
    assert abs(fl.coherence(tri52) - ISQRT2) < 1e-15


def test_coherence_icosa(icosa122):
    assert abs(fl.coherence(icosa122) - ICOSA_A) < 1e-12


def test_coherence_needs_two_vectors():
    with pytest.raises(TooFewVectors):
        fl.coherence(fl.frame_from_columns("C", [(1, 0)]))


# ---------------------------------------------------------------- angle_set

def test_angle_set_tri_5_2(tri52):
    s = fl.angle_set(tri52)
    assert len(s.angles) == 3
    assert np.allclose(s.angles, [ISQRT2, 0.5, 0.0], atol=1e-12)


def test_angle_set_bi_5_2(bi52):
    s = fl.angle_set(bi52)
    assert len(s.angles) == 2
    assert np.allclose(s.angles, [ISQRT2, 0.0], atol=1e-12)


def test_angle_set_icosa(icosa122):
    s = fl.angle_set(icosa122)
    assert len(s.angles) == 3
    assert np.allclose(s.angles, [ICOSA_A, math.sqrt(1 - ICOSA_A ** 2), 0.0], atol=1e-12)


def test_angle_set_rows_sum_to_n_minus_1(tri52, bi52, icosa122):
    for f in (tri52, bi52, icosa122):
        s = fl.angle_set(f)
        assert np.all(s.multiplicity_table.sum(axis=1) == f.count_n - 1)


def test_angle_set_entries_near_exactly_one_representative(tri52, icosa122):
    for f in (tri52, icosa122):
        s = fl.angle_set(f)
        off = s.abs_gram[~np.eye(f.count_n, dtype=bool)]
        dists = np.abs(off[:, None] - np.asarray(s.angles)[None, :])
        assert np.all((dists <= s.cluster_tol).sum(axis=1) == 1)


def test_angle_set_largest_angle_is_coherence_exactly(tri52, bi52, icosa122):
    for f in (tri52, bi52, icosa122, fl.random_frame(7, 2, "C", 3)):
        assert fl.angle_set(f).angles[0] == fl.coherence(f)


def test_angle_set_ambiguous_clustering_guard():
    tol = 1e-3
    # one cluster chained wider than tol, another representative within 10*tol
    vals = [0.3, 0.3 + 0.9 * tol, 0.3 + 1.8 * tol, 0.3 + 6.8 * tol, 0.1, 0.1]
    f = frame_with_gram(vals)
    with pytest.raises(AmbiguousClustering):
        fl.angle_set(f, cluster_tol=tol)


def test_angle_set_same_values_fine_at_smaller_tol():
    tol = 1e-3
    vals = [0.3, 0.3 + 0.9 * tol, 0.3 + 1.8 * tol, 0.3 + 6.8 * tol, 0.1, 0.1]
    f = frame_with_gram(vals)
    s = fl.angle_set(f, cluster_tol=1e-5)  # every value becomes its own cluster
    assert len(s.angles) == 5


# ---------------------------------------------------------------- tightness

def test_tightness_tri_5_2(tri52):
    r = fl.tightness(tri52)
    assert r.is_tight and abs(r.tight_constant - 2.5) < 1e-12


def test_tightness_bi_5_2(bi52):
    r = fl.tightness(bi52)
    assert not r.is_tight
    assert r.defect > 0.1


def test_tightness_orthonormal_basis():
    r = fl.tightness(onb("C", 3))
    assert r.is_tight and abs(r.tight_constant - 1.0) < 1e-15


# ------------------------------------------------- row angle identity (tight)

def test_row_identity_tri_5_2(tri52):
    vals = fl.row_angle_identity_check(tri52)
    assert np.allclose(vals, 2.5, atol=1e-12)


def test_row_identity_orthonormal_basis():
    assert np.allclose(fl.row_angle_identity_check(onb("C", 2)), 1.0)


def test_row_identity_bi_5_2_not_constant(bi52):
    vals = fl.row_angle_identity_check(bi52)
    # first vector sees four partners at 1/sqrt2: 1 + 4/2 = 3, others 5/2
    assert abs(vals[0] - 3.0) < 1e-12
    assert np.allclose(vals[1:], 2.5, atol=1e-12)
    assert not np.allclose(vals, 2.5)


def test_row_identity_equals_n_over_m_for_tight_frames(icosa122):
    for f in (fl.tri_5_2(), icosa122, mub_pair_4_2(), mub_triple_6_2()):
        assert fl.tightness(f).is_tight
        assert np.allclose(fl.row_angle_identity_check(f),
                           f.count_n / f.dim_m, atol=1e-9)


# ---------------------------------------------------------- equidistribution

def test_equidistribution_icosa(icosa122):
    assert fl.equidistribution(icosa122) == (5, 5, 1)


def test_equidistribution_tri_absent(tri52):
    assert fl.equidistribution(tri52) is None


def test_equidistribution_orthonormal_basis():
    assert fl.equidistribution(onb("C", 2)) == (1,)


def test_equidistribution_of_rotated_btfs_always_present():
    # biangular tight frames stay equidistributed under 1000 seeded rotations
    base_frames = [mub_pair_4_2(), mub_triple_6_2()]
    for seed in range(500):
        for base in base_frames:
            f = rotate(base, seed)
            s = fl.angle_set(f)
            assert len(s.angles) == 2
            assert fl.tightness(f).is_tight
            assert fl.equidistribution(f) is not None


# ------------------------------------------------------------ design moments

def test_design_moment_icosa_t5(icosa122):
    dm = fl.design_moment(icosa122, 5)
    assert dm.is_design
    assert abs(dm.moment - 1 / 6) < 1e-12
    assert abs(dm.target - 1 / 6) < 1e-15


def test_design_moment_onb_t1():
    dm = fl.design_moment(onb("C", 2), 1)
    assert dm.moment == 0.5 and dm.target == 0.5 and dm.is_design


def test_design_moment_bi_5_2_fails_t1(bi52):
    dm = fl.design_moment(bi52, 1)
    assert abs(dm.moment - 13 / 25) < 1e-12  # direct evaluation of the matrix
    assert not dm.is_design


def test_design_moment_real_field_unsupported():
    with pytest.raises(FieldUnsupported):
        fl.design_moment(onb("R", 2), 1)


def test_design_moment_monotone_in_t(icosa122, bi52):
    for f in (icosa122, bi52, fl.random_frame(6, 2, "C", 5)):
        moments = [fl.design_moment(f, t).moment for t in range(1, 8)]
        assert all(m1 >= m2 - 1e-12 for m1, m2 in zip(moments, moments[1:]))


@given(st.integers(0, 500))
@settings(max_examples=60, deadline=None)
def test_design_t1_iff_tight(seed):
    # the t=1 moment identity is tightness in disguise for unit-norm frames
    rng = np.random.default_rng(seed)
    n, m = int(rng.integers(2, 9)), int(rng.integers(2, 4))
    f = fl.random_frame(n, m, "C", seed)
    tight = fl.tightness(f, tol=1e-8).is_tight
    design = abs(fl.design_moment(f, 1).moment - 1 / m) <= 1e-8
    if fl.tightness(f).defect < 1e-9 or fl.tightness(f).defect > 1e-6:
        assert tight == design


def test_design_t1_iff_tight_on_catalog(tri52, bi52, icosa122):
    for f in (tri52, bi52, icosa122, mub_pair_4_2(), mub_triple_6_2()):
        assert fl.tightness(f).is_tight == fl.design_moment(f, 1).is_design
