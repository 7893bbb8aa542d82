#!/usr/bin/env python3
"""Reproduce the three reference frames and print their full analysis.

For each catalog frame: coherence, angle set with multiplicities, tightness,
the per-vector squared-inner-product sums, the spherical embedding summary,
and how the coherence sits against the applicable lower bounds.
"""

import argparse
import math

import numpy as np

import framelab as fl


def describe(name, frame, design_t=None):
    print(f"== {name}  (N={frame.count_n}, M={frame.dim_m}, field {frame.field})")
    summary = fl.angle_set(frame)
    tight = fl.tightness(frame)
    mult = fl.equidistribution(frame)
    print(f"   coherence      {fl.coherence(frame):.15f}")
    print(f"   angles         {[round(a, 12) for a in summary.angles]}")
    print(f"   equidistributed {mult if mult is not None else 'no'}")
    print(f"   tight          {tight.is_tight}  (defect {tight.defect:.3e}, "
          f"constant {tight.tight_constant:.6f})")
    rows = fl.row_angle_identity_check(frame)
    print(f"   row sums       min {rows.min():.12f}  max {rows.max():.12f}  "
          f"(N/M = {frame.count_n / frame.dim_m})")
    cfg = fl.embed(frame)
    print(f"   embedding      D={cfg.dim_d}, residual {fl.embedding_residual(frame, cfg):.3e}, "
          f"zero-sum defect {fl.zero_sum_defect(cfg):.3e}")
    if design_t is not None:
        dm = fl.design_moment(frame, design_t)
        print(f"   design t={design_t}     moment {dm.moment:.15f}  "
              f"target {dm.target:.15f}  is_design {dm.is_design}")
    report = fl.best_bound(frame.count_n, frame.dim_m, frame.field)
    gap = fl.coherence(frame) - report.best
    print(f"   best bound     {report.best:.15f} ({report.best_name}); gap {gap:+.3e}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--embedded-points", action="store_true",
                        help="also print the embedded point coordinates")
    args = parser.parse_args()

    describe("tri_5_2: tight triangular (5, 2) frame", fl.tri_5_2())
    describe("bi_5_2: non-tight biangular (5, 2) frame", fl.bi_5_2())
    icosa = fl.icosaplectic_12_2()
    describe("icosaplectic_12_2: tight (12, 2) frame", icosa, design_t=5)

    pts = fl.embed(icosa).points
    ips = np.unique(np.round((pts @ pts.T)[~np.eye(12, dtype=bool)], 9))
    print(f"icosahedron check: distinct embedded inner products {ips.tolist()}")
    print(f"                   expected {{-1, -1/sqrt5, 1/sqrt5}} = "
          f"{[-1.0, round(-1 / math.sqrt(5), 9), round(1 / math.sqrt(5), 9)]}")
    if args.embedded_points:
        print()
        print(np.array_str(pts, precision=6, suppress_small=True))


if __name__ == "__main__":
    main()
