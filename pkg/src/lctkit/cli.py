"""Command-line front door.

Subcommands: classify, compose, exp, random, apply, state, disp.  One JSON
document per file; signal data as `t,re,im` CSV.  Exit codes:

    0  success (classify: matrix is symplectic)
    1  unreadable or malformed input (ParseError)
    2  usage error, or validation failure (classify: not symplectic;
       elsewhere: NotSymplectic / MetricMismatch / InvalidGenerator /
       ConstraintViolated / DimensionMismatch / NotPseudoOrthogonal)
    3  degenerate 1-D kernel (c = 0)
    4  sampling grid too narrow
    5  dispersion failure (NotIsodispersion / InvalidDispersion)
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bogoliubov, dispersion, liealg, symplectic, transform1d
from .errors import (
    ConstraintViolated,
    DegenerateKernel,
    GridTooNarrow,
    InvalidDispersion,
    LctError,
    NotIsodispersion,
    ParseError,
)
from .metric import Signature
from .symplectic import DEFAULT_TOL

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_GRID = 4
EXIT_DISPERSION = 5

_EXIT_BY_ERROR = (
    (ParseError, EXIT_PARSE),
    (DegenerateKernel, EXIT_DEGENERATE),
    (GridTooNarrow, EXIT_GRID),
    ((NotIsodispersion, InvalidDispersion), EXIT_DISPERSION),
)


@dataclass(frozen=True)
class ClassificationReport:
    tol: float
    symplectic_residual: float
    symplectic: bool
    pseudo_unitary: bool
    v_residual: float
    unitarity_residual: float
    isodispersion: bool
    isodispersion_residual: float
    lorentz_embedded: bool
    fourier_like: bool

    def to_json_dict(self) -> dict:
        return {
            "tol": self.tol,
            "symplectic": self.symplectic,
            "symplectic_residual": self.symplectic_residual,
            "pseudo_unitary": {
                "flag": self.pseudo_unitary,
                "v_residual": self.v_residual,
                "unitarity_residual": self.unitarity_residual,
            },
            "isodispersion": {
                "flag": self.isodispersion,
                "residual": self.isodispersion_residual,
            },
            "lorentz_embedded": self.lorentz_embedded,
            "fourier_like": self.fourier_like,
        }


def classify_lct(L: symplectic.BlockLCT, tol: float = DEFAULT_TOL) -> ClassificationReport:
    """Run every residual test on one transform and bundle the flags."""
    metric = L.metric
    eta = metric.matrix
    s_res = symplectic.symplectic_residual(L.matrix, metric)
    pair = bogoliubov.to_bogoliubov(L)
    r_v, r_u = bogoliubov.pseudo_unitarity_residuals(pair)
    iso_res = liealg.isodispersion_residual(L.matrix, metric)
    is_sympl = s_res <= tol

    zero_b = float(np.max(np.abs(L.b))) <= tol
    zero_c = float(np.max(np.abs(L.c))) <= tol
    lorentz = (
        zero_b
        and zero_c
        and symplectic.pseudo_orthogonal_residual(L.a, metric) <= tol
        and abs(float(np.linalg.det(L.a)) - 1.0) <= tol
    )
    fourier = (
        float(np.max(np.abs(L.a))) <= tol
        and float(np.max(np.abs(L.d))) <= tol
        and float(np.max(np.abs(L.c + L.b))) <= tol
        and float(np.max(np.abs(L.b.T @ eta @ L.b - eta))) <= tol
    )
    return ClassificationReport(
        tol=tol,
        symplectic_residual=s_res,
        symplectic=is_sympl,
        pseudo_unitary=(r_v <= tol and r_u <= tol),
        v_residual=r_v,
        unitarity_residual=r_u,
        isodispersion=(iso_res <= tol and is_sympl),
        isodispersion_residual=iso_res,
        lorentz_embedded=lorentz,
        fourier_like=fourier,
    )


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _emit_json(obj, out_path):
    text = json.dumps(obj, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_grid(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be t0,dt,count")
    try:
        t0, dt, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if dt <= 0 or count < 2:
        raise argparse.ArgumentTypeError("grid needs dt > 0 and count >= 2")
    return (t0, dt, count)


def _parse_signature(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("signature must be n_plus,n_minus")
    try:
        return Signature(int(parts[0]), int(parts[1]))
    except Exception as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _homogeneous(L):
    return L.lct if isinstance(L, symplectic.InhomogeneousLCT) else L


def _cmd_classify(args) -> int:
    L = symplectic.lct_from_json_dict(_load_json(args.matrix), tol=None)
    report = classify_lct(_homogeneous(L), tol=args.tol)
    _emit_json(report.to_json_dict(), args.out)
    return EXIT_OK if report.symplectic else EXIT_INVALID


def _cmd_compose(args) -> int:
    second = symplectic.lct_from_json_dict(_load_json(args.second), tol=args.tol)
    first = symplectic.lct_from_json_dict(_load_json(args.first), tol=args.tol)
    out = symplectic.compose(_homogeneous(second), _homogeneous(first))
    _emit_json(symplectic.lct_to_json_dict(out), args.out)
    return EXIT_OK


def _cmd_exp(args) -> int:
    G = liealg.generator_from_json_dict(_load_json(args.generator))
    M = liealg.exp_generator(G, tol=args.tol)
    a, b, c, d = symplectic.blocks_from_matrix(M, G.metric)
    L = symplectic.make_lct(a, b, c, d, G.metric, tol=args.tol)
    _emit_json(symplectic.lct_to_json_dict(L), args.out)
    return EXIT_OK


def _cmd_random(args) -> int:
    L = liealg.random_lct(args.signature, args.seed, args.scale)
    _emit_json(symplectic.lct_to_json_dict(L), args.out)
    return EXIT_OK


def _cmd_apply(args) -> int:
    L = symplectic.lct_from_json_dict(_load_json(args.matrix), tol=args.tol)
    if isinstance(L, symplectic.InhomogeneousLCT):
        raise ConstraintViolated("the 1-D integral engine takes homogeneous transforms (no K/Y)")
    params = transform1d.lct1d_from_block(L)
    signal = transform1d.read_signal_csv(args.signal)
    result = transform1d.apply_lct(params, signal, out_grid=args.grid)
    transform1d.write_signal_csv(result, args.out)
    return EXIT_OK


def _cmd_state(args) -> int:
    state = transform1d.HermiteState(args.n, args.T, args.Omega, math.sqrt(args.B))
    signal = transform1d.hermite_state(state, args.grid)
    if args.out:
        transform1d.write_signal_csv(signal, args.out)
    moments = transform1d.signal_moments(signal)
    print(json.dumps({"T": moments.T, "Omega": moments.Omega, "A": moments.A, "B": moments.B},
                     indent=2))
    return EXIT_OK


def _cmd_disp(args) -> int:
    L = symplectic.lct_from_json_dict(_load_json(args.matrix), tol=args.tol)
    raw = _load_json(args.dispersion)
    metric = None if "signature" in raw else _homogeneous(L).metric
    din = dispersion.dispersion_from_json_dict(raw, metric=metric, tol=args.tol)
    dout = dispersion.ilct_transform_dispersion(L, din, tol=args.tol)
    _emit_json(dispersion.dispersion_to_json_dict(dout), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lctkit", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="residual tolerance")

    def add_out(p, help_text="write result here instead of stdout"):
        p.add_argument("--out", default=None, help=help_text)

    p = sub.add_parser("classify", help="residuals and group-membership flags for a matrix file")
    p.add_argument("matrix")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("compose", help="matrix product second @ first")
    p.add_argument("second")
    p.add_argument("first")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("exp", help="exponentiate a generator file into an LCT")
    p.add_argument("generator")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=_cmd_exp)

    p = sub.add_parser("random", help="seeded random group element")
    p.add_argument("--signature", type=_parse_signature, required=True,
                   help="n_plus,n_minus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=0.5)
    add_out(p)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("apply", help="apply a 1-D matrix file to a signal CSV")
    p.add_argument("matrix")
    p.add_argument("signal")
    p.add_argument("--grid", type=_parse_grid, default=None, help="output grid t0,dt,count")
    p.add_argument("--out", required=True, help="output CSV path")
    add_tol(p)
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("state", help="sample a Hermite-Gaussian state and print its moments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=float, default=0.0)
    p.add_argument("--Omega", type=float, default=0.0)
    p.add_argument("--B", type=float, required=True, help="frequency variance, > 0")
    p.add_argument("--grid", type=_parse_grid, required=True)
    add_out(p, "also write the sampled state to this CSV")
    p.set_defaults(func=_cmd_state)

    p = sub.add_parser("disp", help="transport a dispersion spec through an isodispersion LCT")
    p.add_argument("matrix")
    p.add_argument("dispersion")
    add_tol(p)
    add_out(p)
    p.set_defaults(func=_cmd_disp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "state":
        if args.B <= 0:
            parser.error("--B must be positive")
        if args.n < 0:
            parser.error("--n must be nonnegative")
    try:
        return args.func(args)
    except LctError as exc:
        print(f"lctkit: {exc}", file=sys.stderr)
        for errs, code in _EXIT_BY_ERROR:
            if isinstance(exc, errs):
                return code
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
