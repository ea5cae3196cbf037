"""
Command line interface.

Every subcommand writes machine-readable CSV or JSON to stdout (or ``--out``).
Errors are reported as a one-line JSON object on stderr with exit status 1.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io as hio
from .errors import HoneycombError
from .honeycomb import build_family, eval_family
from .interp import (
    GrapheneParams,
    ModelParams,
    cartesian_grid,
    graphene_frequencies,
    interpolation_report,
    model_function,
)
from .lattice import PointSetKind, Weight, WeightSetKind, generate_points, generate_weights
from .orbitfn import KernelKind, eval_kernel
from .transform import build_matrix, forward, gram_matrix, inverse, basis_norms

__all__ = ["main", "build_parser", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _triple(text: str) -> tuple[int, int, int]:
    parts = [int(v) for v in text.replace(" ", "").split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return tuple(parts)


def _pair(text: str) -> tuple[float, float]:
    parts = [float(v) for v in text.replace(" ", "").split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    return tuple(parts)


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v]


def _add_output(p, digits_default=None):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--digits", type=int, default=digits_default, help="decimals in CSV output (default: full precision)")


def _add_family(p):
    p.add_argument("--M", type=int, help="resolution (may be implied by --coeffs or --weight)")
    p.add_argument("--kind", choices=("C", "S"), default="C")
    p.add_argument("--kernel", choices=("fourier", "hartley"), default="hartley")
    p.add_argument("--type", dest="ctype", choices=("1", "2", "3", "file"), default="1")
    p.add_argument("--coeffs", help="JSON coefficient map (with --type file)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="honeycomb-dct", description="Discrete honeycomb Fourier-Weyl and Hartley-Weyl transforms")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("points", help="list a point set")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--set", dest="set_kind", choices=[k.value for k in PointSetKind], default="HM")
    _add_output(p)

    p = sub.add_parser("weights", help="list a weight set")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--set", dest="set_kind", choices=[k.value for k in WeightSetKind], default="LM")
    _add_output(p)

    p = sub.add_parser("eval", help="evaluate a honeycomb function or a base kernel")
    _add_family(p)
    p.add_argument("--weight", type=_triple, required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--x", type=_pair, required=True, help="point x1,x2 in omega-coordinates")
    p.add_argument("--base", action="store_true", help="evaluate the plain orbit function instead")
    _add_output(p)

    p = sub.add_parser("matrix", help="emit the unitary transform matrix")
    _add_family(p)
    _add_output(p, digits_default=3)

    p = sub.add_parser("transform", help="forward (or --inverse) transform of a CSV file")
    _add_family(p)
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true")
    _add_output(p)

    p = sub.add_parser("ortho-check", help="Gram and unitarity residuals")
    _add_family(p)
    p.add_argument("--tolerance", type=float, default=1e-9)
    _add_output(p)

    p = sub.add_parser("interp-test", help="interpolation error table for the Gaussian model")
    p.add_argument("--Ms", type=_int_list, default=[7, 9, 11, 13, 15])
    p.add_argument("--kinds", default="C,S")
    p.add_argument("--types", default="1,2")
    p.add_argument("--kernel", choices=("fourier", "hartley"), default="hartley")
    p.add_argument("--resolution", type=int, default=200)
    p.add_argument("--sigma", type=float, default=0.065)
    _add_output(p)

    p = sub.add_parser("contour", help="sample a function on a barycentric grid over the triangle")
    _add_family(p)
    p.add_argument("--function", choices=("model", "basis", "kernel"), default="model")
    p.add_argument("--weight", type=_triple)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--resolution", type=int, default=50, help="grid subdivisions per edge")
    p.add_argument("--sigma", type=float, default=0.065)
    _add_output(p)

    p = sub.add_parser("freq", help="transversal eigenfrequencies of the mechanical graphene model")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--kind", choices=("C", "S"), default="C")
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--eta", type=float, default=0.5)
    _add_output(p)
    return parser


_TYPE_TAG = {"1": "I", "2": "II", "3": "III"}


def _family(args):
    if args.ctype == "file":
        if not args.coeffs:
            raise UsageError("--type file requires --coeffs")
        with open(args.coeffs) as fh:
            M_file, table = hio.coeffs_from_json(fh.read())
        M = args.M if args.M is not None else M_file
        if M is None:
            raise UsageError("resolution unknown: pass --M or store M in the coefficient file")
        if M_file is not None and M_file != M:
            raise UsageError(f"--M {M} disagrees with coefficient file M={M_file}")
        return build_family(args.kind, args.kernel, M, table)
    if args.coeffs:
        raise UsageError("--coeffs is only valid with --type file")
    if args.M is None:
        raise UsageError("--M is required")
    return build_family(args.kind, args.kernel, args.M, _TYPE_TAG[args.ctype])


def _kernel_kind(args) -> KernelKind:
    return KernelKind(("Hartley" if args.kernel == "hartley" else "Fourier") + args.kind)


def _complex_json(z):
    z = complex(z)
    return [z.real, z.imag]


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_points(args):
    pts = generate_points(PointSetKind(args.set_kind), args.M)
    return hio.triples_to_json(pts, args.M) if args.format == "json" else hio.triples_to_csv(pts)


def _cmd_weights(args):
    ws = generate_weights(WeightSetKind(args.set_kind), args.M)
    return hio.triples_to_json(ws, args.M) if args.format == "json" else hio.triples_to_csv(ws)


def _cmd_eval(args):
    w = Weight(*args.weight, sum(args.weight))
    if args.M is not None and w.M != args.M:
        raise UsageError(f"weight {args.weight} does not sum to M={args.M}")
    if args.base:
        value = complex(eval_kernel(_kernel_kind(args), w, args.x))
    else:
        if args.M is None:
            args.M = w.M
        value = complex(eval_family(_family(args), args.sign, w, args.x))
    if args.format == "json":
        return hio.dumps({"weight": list(w.triple), "sign": args.sign, "x": list(args.x), "value": _complex_json(value)})
    return hio.rows_to_csv(
        [{"l0": w.l0, "l1": w.l1, "l2": w.l2, "sign": args.sign, "x1": args.x[0], "x2": args.x[1], "re": value.real, "im": value.imag}],
        args.digits,
    )


def _cmd_matrix(args):
    mat = build_matrix(_family(args))
    return hio.matrix_to_json(mat) if args.format == "json" else hio.matrix_to_csv(mat, args.digits)


def _cmd_transform(args):
    fam = _family(args)
    with open(args.input) as fh:
        text = fh.read()
    if args.inverse:
        spec = hio.spectrum_from_csv(text, fam)
        sv = inverse(fam, spec)
        if args.format == "json":
            return hio.dumps(
                {"M": sv.M, "domain": sv.domain.value, "points": [list(p.triple) for p in sv.points], "values": [_complex_json(v) for v in sv.values]}
            )
        return hio.samples_to_csv(sv, args.digits)
    sv = hio.samples_from_csv(text, fam.point_kind)
    spec = forward(fam, sv)
    back = inverse(fam, spec).values
    err = float(np.max(np.abs(back - sv.values))) if len(back) else 0.0
    sys.stderr.write(hio.dumps({"roundtrip_max_error": err}))
    if args.format == "json":
        return hio.dumps(
            {
                "M": fam.M,
                "kind": fam.kind,
                "weights": [list(w.triple) for w in fam.weights],
                "plus": [_complex_json(v) for v in spec.plus],
                "minus": [_complex_json(v) for v in spec.minus],
            }
        )
    return hio.spectrum_to_csv(fam, spec, args.digits)


def ortho_residuals(fam) -> dict:
    gram = gram_matrix(fam)
    nplus, nminus = basis_norms(fam)
    expected = np.diag(np.concatenate([nplus, nminus]))
    gram_res = float(np.max(np.abs(gram - expected)) / np.max(np.abs(expected)))
    A = build_matrix(fam).data
    unit_res = float(np.max(np.abs(A @ np.conj(A).T - np.eye(len(A)))))
    return {"M": fam.M, "kind": fam.kind, "kernel": fam.kernel, "type": fam.label, "gram_residual": gram_res, "unitarity_residual": unit_res}


def _cmd_ortho(args):
    row = ortho_residuals(_family(args))
    row["tolerance"] = args.tolerance
    row["pass"] = row["gram_residual"] <= args.tolerance and row["unitarity_residual"] <= args.tolerance
    text = hio.dumps(row) if args.format == "json" else hio.rows_to_csv([row], args.digits)
    return text, 0 if row["pass"] else 1


def _cmd_interp(args):
    kinds = tuple(k.strip().upper() for k in args.kinds.split(","))
    types = tuple(_TYPE_TAG[t.strip()] for t in args.types.split(","))
    rows = interpolation_report(args.Ms, kinds, types, args.kernel, args.sigma, args.resolution)
    return hio.dumps(rows) if args.format == "json" else hio.rows_to_csv(rows, args.digits)


def _cmd_contour(args):
    x1, x2, X, Y = cartesian_grid(args.resolution)
    if args.function == "model":
        values = np.asarray(model_function(ModelParams(args.sigma), (x1, x2)), dtype=complex)
    else:
        if args.weight is None:
            raise UsageError(f"--function {args.function} requires --weight")
        w = Weight(*args.weight, sum(args.weight))
        if args.function == "kernel":
            values = np.asarray(eval_kernel(_kernel_kind(args), w, (x1, x2)), dtype=complex)
        else:
            if args.M is None:
                args.M = w.M
            values = np.asarray(eval_family(_family(args), args.sign, w, (x1, x2)), dtype=complex)
    rows = [
        {"x1": float(a), "x2": float(b), "X": float(c), "Y": float(d), "re": float(v.real), "im": float(v.imag)}
        for a, b, c, d, v in zip(x1, x2, X, Y, values)
    ]
    return hio.dumps(rows) if args.format == "json" else hio.rows_to_csv(rows, args.digits)


def _cmd_freq(args):
    g = GrapheneParams(args.kappa, args.mass, args.eta)
    kind = WeightSetKind.LM if args.kind == "C" else WeightSetKind.LM_interior
    rows = []
    for w in generate_weights(kind, args.M):
        plus, minus = graphene_frequencies(g, args.M, w)
        rows.append({"l0": w.l0, "l1": w.l1, "l2": w.l2, "omega_plus": plus, "omega_minus": minus})
    return hio.dumps(rows) if args.format == "json" else hio.rows_to_csv(rows, args.digits)


_COMMANDS = {
    "points": _cmd_points,
    "weights": _cmd_weights,
    "eval": _cmd_eval,
    "matrix": _cmd_matrix,
    "transform": _cmd_transform,
    "ortho-check": _cmd_ortho,
    "interp-test": _cmd_interp,
    "contour": _cmd_contour,
    "freq": _cmd_freq,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = _COMMANDS[args.command](args)
        text, status = result if isinstance(result, tuple) else (result, 0)
        _emit(args, text)
        return status
    except (UsageError, HoneycombError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(hio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
