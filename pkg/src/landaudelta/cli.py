"""Command-line front end.

Subcommands: laguerre, toeplitz, census, galerkin, verify.  All output is
deterministic (fixed quadrature, no randomized solvers) and floats are
printed with 17 significant digits so files round-trip losslessly.  Exit
codes: 0 success, 1 verification failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .census import (
    census as census_sweep,
    census_to_csv,
    eta_table_to_csv,
    explicit_D12,
)
from . import verify as verify_mod
from .basis import MagneticField
from .curves import load_curve, load_weight, make_circle, make_ellipse
from .galerkin import assemble_model, cluster_report, model_truncation, persistence_check
from .laguerre import LaguerreSpec, laguerre_eval, laguerre_zeros
from .toeplitz import (
    assemble,
    default_truncation,
    kernel_dim_estimate,
    matrix_from_json,
    matrix_to_json,
    spectrum,
    spectrum_to_csv,
)

G = "%.17g"


def _field(args) -> MagneticField:
    return MagneticField(args.b)


def _curve(args):
    if args.curve_file is not None:
        return load_curve(args.curve_file)
    if args.ellipse is not None:
        a, b = (float(v) for v in args.ellipse.split(","))
        return make_ellipse(a, b, n=args.N) if args.N else make_ellipse(a, b)
    r = args.r if args.r is not None else 1.0
    return make_circle(r, n=args.N) if args.N else make_circle(r)


def _weighted_curve(args):
    curve = _curve(args)
    source = args.weight_file if args.weight_file is not None else args.weight
    return load_weight(curve, source)


def _add_curve_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=float, default=None, help="circle radius (default curve, r=1)")
    p.add_argument("--ellipse", type=str, default=None, metavar="A,B", help="ellipse semi-axes")
    p.add_argument("--curve-file", type=str, default=None, help="sampled curve file (t x y dx dy)")
    p.add_argument("--weight", type=float, default=1.0, help="constant weight value")
    p.add_argument("--weight-file", type=str, default=None, help="weight file (t v)")
    p.add_argument("--N", type=int, default=None, help="quadrature nodes (default 1024 or LANDAU_QUAD_N)")


def _cmd_laguerre(args) -> int:
    spec = LaguerreSpec(args.q, args.alpha)
    if args.what == "eval":
        if args.t is None:
            print("laguerre eval requires --t", file=sys.stderr)
            return 2
        print(G % laguerre_eval(spec, args.t))
        return 0
    zeros = laguerre_zeros(spec)
    if args.format == "json":
        print(json.dumps([{"zero": z, "multiplicity": m} for z, m in zeros], indent=1))
    else:
        print("zero,multiplicity")
        for z, m in zeros:
            print(f"{G % z},{m}")
    return 0


def _cmd_census(args) -> int:
    field = _field(args)
    if args.eta:
        alphas = np.arange(args.alpha_min, args.alpha_max + 0.5 * args.alpha_step, args.alpha_step)
        sys.stdout.write(eta_table_to_csv(field, args.q, alphas))
        return 0
    if args.explicit is not None:
        sets = explicit_D12(field, args.explicit)
        if args.format == "json":
            print(json.dumps(sets, indent=1))
        else:
            print("set,index,r")
            for name in ("D1", "D2", "D22", "D21"):
                for i, r in enumerate(sets[name], start=1):
                    print(f"{name},{i},{G % r}")
        return 0
    entries = census_sweep(field, args.q, args.rmax)
    if args.format == "json":
        payload = [
            {
                "r": e.r,
                "t": e.t,
                "multiplicity": e.multiplicity,
                "witnesses": [{"k": k, "zero": z} for k, z in e.witnesses],
            }
            for e in entries
        ]
        print(json.dumps(payload, indent=1))
    else:
        sys.stdout.write(census_to_csv(entries))
    return 0


def _cmd_toeplitz(args) -> int:
    field = _field(args)
    if args.import_path is not None:
        with open(args.import_path) as fh:
            matrix = matrix_from_json(fh.read())
    else:
        wc = _weighted_curve(args)
        K = args.K if args.K is not None else default_truncation(field, args.q, wc.curve)
        matrix = assemble(field, args.q, wc, K=K, N=args.N, check_resolution=not args.no_resolution_check)
        if matrix.underresolved:
            print(
                f"warning: quadrature underresolved (doubling N moves entries by {matrix.refinement_delta:.3e})",
                file=sys.stderr,
            )
    if args.export is not None:
        with open(args.export, "w") as fh:
            fh.write(matrix_to_json(matrix))
    result = spectrum(matrix)
    if args.kernel:
        est = kernel_dim_estimate(matrix, rel_tol=args.kernel_tol)
        print(
            json.dumps(
                {
                    "count": est.count,
                    "threshold": est.threshold,
                    "census_multiplicity": est.census_multiplicity,
                    "note": est.note,
                },
                indent=1,
            )
        )
        return 0
    sys.stdout.write(spectrum_to_csv(result))
    return 0


def _cmd_galerkin(args) -> int:
    field = _field(args)
    if args.persistence:
        source = args.weight_file if args.weight_file is not None else args.weight
        result = persistence_check(field, args.q, args.r if args.r is not None else 1.0,
                                   K=args.K, Q=args.Q, weight=source, N=args.N)
        print(result.to_json())
        return 0
    wc = _weighted_curve(args)
    Q = args.Q if args.Q is not None else args.q + 2
    K = args.K if args.K is not None else model_truncation(field, Q, wc.curve)
    model = assemble_model(field, Q, K, wc, args.sign, N=args.N,
                           check_resolution=not args.no_resolution_check)
    if model.underresolved:
        print(
            f"warning: quadrature underresolved (doubling N moves entries by {model.refinement_delta:.3e})",
            file=sys.stderr,
        )
    print(cluster_report(model).to_json())
    return 0


def _cmd_verify(args) -> int:
    results = verify_mod.run_all()
    failures = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        print(f"{tag} {res.name}: {res.detail}")
        if not res.passed:
            failures += 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landaudelta",
        description="Spectral toolkit for Landau levels under delta interactions on curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("laguerre", help="evaluate Laguerre polynomials or list zeros")
    p.add_argument("what", choices=["zeros", "eval"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_laguerre)

    p = sub.add_parser("census", help="resonant radii of circles for a Landau level")
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rmax", type=float, default=3.0)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--explicit", type=int, default=None, metavar="NMAX",
                   help="print the closed-form level-1/2 sets instead of sweeping")
    p.add_argument("--eta", action="store_true", help="print the zero-curve table")
    p.add_argument("--alpha-min", type=float, default=0.0)
    p.add_argument("--alpha-max", type=float, default=10.0)
    p.add_argument("--alpha-step", type=float, default=0.5)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("toeplitz", help="assemble and diagonalize an interaction matrix")
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--K", type=int, default=None)
    _add_curve_options(p)
    p.add_argument("--export", type=str, default=None, help="write the matrix as JSON")
    p.add_argument("--import", dest="import_path", type=str, default=None,
                   help="reload an exported matrix instead of assembling")
    p.add_argument("--kernel", action="store_true", help="print the kernel-dimension estimate")
    p.add_argument("--kernel-tol", type=float, default=1e-10)
    p.add_argument("--no-resolution-check", action="store_true")
    p.set_defaults(func=_cmd_toeplitz)

    p = sub.add_parser("galerkin", help="cluster report or persistence check for the finite model")
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--q", type=int, default=1, help="level under study")
    p.add_argument("--Q", type=int, default=None, help="level cutoff (default q+2)")
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--sign", type=int, choices=[1, -1], default=1)
    _add_curve_options(p)
    p.add_argument("--persistence", action="store_true",
                   help="run the resonance persistence test at --r")
    p.add_argument("--no-resolution-check", action="store_true")
    p.set_defaults(func=_cmd_galerkin)

    p = sub.add_parser("verify", help="run the cross-module invariant suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
