"""Command-line interface: JSON in, JSON out.

Subcommands: analyze, embed, bounds, catalog, search, verify.  Frames travel
as {"field","m","n","vectors"} JSON (see frames.frame_to_dict); reports go to
stdout.  Validation failures exit 2 with an error JSON on stderr, I/O
failures exit 3.  Output is deterministic for identical argv, and floats use
the shortest round-trip decimal form.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import catalog as catalog_mod
from .analysis import angle_set, coherence, design_moment, equidistribution, tightness
from .bounds import best_bound
from .embedding import embed, embedding_residual, zero_sum_defect
from .errors import FrameError
from .frames import COMPLEX, Frame, frame_from_dict, frame_to_dict
from .rigidity import STATEMENT_TIGHT_BIANGULAR_5_2, refute_tight_biangular_5_2
from .solver import SearchConfig, minimize_coherence
from .tolerances import DEFAULT_CLUSTER_TOL

_CATALOG_NAMES = ("tri_5_2", "bi_5_2", "icosa_12_2", "random")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _read_frame(path: Optional[str]) -> Frame:
    if path is None or path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    return frame_from_dict(json.loads(raw))


def analyze_report(frame: Frame, cluster_tol: float = DEFAULT_CLUSTER_TOL,
                   tight_tol: Optional[float] = None, t: int = 1) -> dict:
    """Analysis report as emitted by the analyze subcommand.

    The design block is null for real-field frames, where the projective
    design moment is not defined by this package.
    """
    summary = angle_set(frame, cluster_tol)
    report = tightness(frame, tight_tol)
    mult = equidistribution(frame, cluster_tol)
    if frame.field == COMPLEX:
        dm = design_moment(frame, t)
        design = {"t": dm.t, "moment": dm.moment, "target": dm.target,
                  "is_design": dm.is_design}
    else:
        design = None
    return {
        "coherence": coherence(frame),
        "angles": list(summary.angles),
        "multiplicities": list(mult) if mult is not None else None,
        "tight": report.is_tight,
        "defect": report.defect,
        "design": design,
    }


def embed_report(frame: Frame) -> dict:
    config = embed(frame)
    return {
        "d": config.dim_d,
        "points": [[float(x) for x in row] for row in config.points],
        "residual": embedding_residual(frame, config),
        "zero_sum_defect": zero_sum_defect(config),
    }


def _cmd_analyze(args) -> None:
    frame = _read_frame(args.infile)
    _emit(analyze_report(frame, args.cluster_tol, args.tight_tol, args.t))


def _cmd_embed(args) -> None:
    _emit(embed_report(_read_frame(args.infile)))


def _bound_dict(report) -> dict:
    return {
        "welch": report.welch,
        "orthoplex": report.orthoplex,
        "orthoplex_saturation_impossible": report.orthoplex_saturation_impossible,
        "toth": report.toth,
        "best": report.best,
        "best_name": report.best_name,
    }


def _cmd_bounds(args) -> None:
    _emit(_bound_dict(best_bound(args.n, args.m, args.field)))


def _cmd_catalog(args) -> None:
    if args.name == "tri_5_2":
        frame = catalog_mod.tri_5_2()
    elif args.name == "bi_5_2":
        frame = catalog_mod.bi_5_2()
    elif args.name == "icosa_12_2":
        frame = catalog_mod.icosaplectic_12_2()
    else:
        if args.n is None or args.m is None:
            raise FrameError("catalog --name random needs --n and --m")
        frame = catalog_mod.random_frame(args.n, args.m, args.field, args.seed)
    _emit(frame_to_dict(frame))


def _cmd_search(args) -> None:
    config = SearchConfig(n=args.n, m=args.m, field=args.field,
                          restarts=args.restarts, seed=args.seed,
                          target_tol=args.target_tol)
    result = minimize_coherence(config)
    frame_doc = frame_to_dict(result.best_frame)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(frame_doc, separators=(",", ":")) + "\n")
    _emit({
        "n": config.n, "m": config.m, "field": config.field,
        "best_coherence": result.best_coherence,
        "bound": _bound_dict(result.bound),
        "gap": result.gap,
        "certified": result.certified,
        "iterations_used": result.iterations_used,
        "restarts_used": result.restarts_used,
        "best_frame": frame_doc,
    })


def _cmd_verify(args) -> None:
    cert = refute_tight_biangular_5_2()
    _emit({
        "statement_id": cert.statement_id,
        "branches_explored": cert.branches_explored,
        "all_refuted": cert.all_refuted,
        "witness_log": [list(entry) for entry in cert.witness_log],
    })


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framelab",
        description="workbench for finite unit-norm frames and Grassmannian packings")
    parser.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL,
                        help="gap threshold for angle clustering")
    parser.add_argument("--tight-tol", type=float, default=None,
                        help="absolute tightness-defect tolerance (default 1e-9 * N)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="angle set, tightness, and design report")
    p.add_argument("--in", dest="infile", default=None,
                   help="frame JSON path (default: stdin)")
    p.add_argument("--t", type=int, default=1, help="design order to test")
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("embed", help="traceless spherical embedding")
    p.add_argument("--in", dest="infile", default=None,
                   help="frame JSON path (default: stdin)")
    p.set_defaults(run=_cmd_embed)

    p = sub.add_parser("bounds", help="coherence lower bounds for (N, M)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", choices=("R", "C"), default="C")
    p.set_defaults(run=_cmd_bounds)

    p = sub.add_parser("catalog", help="emit a reference frame")
    p.add_argument("--name", choices=_CATALOG_NAMES, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--field", choices=("R", "C"), default="C")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_catalog)

    p = sub.add_parser("search", help="minimize coherence numerically")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", choices=("R", "C"), default="C")
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target-tol", type=float, default=1e-3)
    p.add_argument("--out", default=None, help="also write the best frame JSON here")
    p.set_defaults(run=_cmd_search)

    p = sub.add_parser("verify", help="machine-checked case certificates")
    p.add_argument("--statement", choices=(STATEMENT_TIGHT_BIANGULAR_5_2,),
                   required=True)
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except FrameError as exc:
        _error(exc)
        return 2
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        _error(exc)
        return 2
    except OSError as exc:
        _error(exc)
        return 3
    return 0


def _error(exc: Exception) -> None:
    doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    sys.stderr.write(json.dumps(doc, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    sys.exit(main())
