#!/usr/bin/env python3
"""Sweep N for frames in C^2: best known coherence vs. the lower bounds.

Runs the numerical search at each size and tabulates the winning bound, the
achieved coherence, and the gap.  Certified rows are numerically optimal
packings; positive-gap rows are best-known values only (either the search or
the available bounds are not sharp there).
"""

import argparse
import time

import framelab as fl


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmin", type=int, default=3)
    parser.add_argument("--nmax", type=int, default=12)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--field", choices=("R", "C"), default="C")
    parser.add_argument("--restarts", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--target-tol", type=float, default=1e-4)
    args = parser.parse_args()

    print(f"{'N':>3} {'welch':>10} {'orthoplex':>10} {'toth':>10} "
          f"{'best bound':>12} {'coherence':>12} {'gap':>10}  cert  time")
    for n in range(max(args.nmin, args.m + 1), args.nmax + 1):
        t0 = time.perf_counter()
        config = fl.SearchConfig(n=n, m=args.m, field=args.field,
                                 restarts=args.restarts, seed=args.seed,
                                 target_tol=args.target_tol)
        result = fl.minimize_coherence(config)
        b = result.bound
        fmt = lambda v: f"{v:10.7f}" if v is not None else " " * 10
        print(f"{n:>3} {fmt(b.welch)} {fmt(b.orthoplex)} {fmt(b.toth)} "
              f"{b.best:12.9f} {result.best_coherence:12.9f} "
              f"{result.gap:10.2e}  {'yes' if result.certified else ' no'}  "
              f"{time.perf_counter() - t0:5.1f}s")


if __name__ == "__main__":
    main()
