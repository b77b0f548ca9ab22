"""Command-line front end.

Machine-readable results go to stdout as compact JSON; diagnostics go to
stderr.  Exit status: 0 success, 1 verification failure (a counterexample),
2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

import numpy as np

from . import verify as _verify
from .bounds import BoundQuery, sharp_bound_root
from .briot_bouquet import DominantSpec, dominant, ode_residual
from .cardioid import hc
from .errors import MLCardioidError
from .powerseries import PowerSeries
from .series import apply_operator, bernardi
from .special import MLParams, mittag_leffler
from .svg import PlotSpec, emit_svg

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}") from None
    return complex(re, im)


def _pair(z: complex) -> list:
    return [z.real, z.imag]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _schwarz_arg(text: str):
    kind, _, rest = text.partition(":")
    if kind == "monomial":
        fields = rest.split(":") if rest else []
        k = int(fields[0]) if fields else 1
        theta = float(fields[1]) if len(fields) > 1 else 0.0
        return _verify.make_schwarz("monomial", k=k, theta=theta)
    if kind == "blaschke":
        return _verify.make_schwarz("blaschke", a=_complex_arg(rest or "0"))
    raise argparse.ArgumentTypeError(f"expected monomial:K[:THETA] or blaschke:RE[,IM], got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlcardioid",
        description="Mittag-Leffler operator, cardioid domain and Briot-Bouquet dominants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ml-eval", help="evaluate E^gamma_{alpha,beta}(z)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--z", type=_complex_arg, required=True, metavar="RE[,IM]")
    p.add_argument("--tol", type=float, default=1e-14)

    p = sub.add_parser("op-apply", help="apply the Mittag-Leffler operator to a series file")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--series", required=True, metavar="FILE.json")
    p.add_argument("--bernardi", type=float, metavar="SIGMA", help="apply the Bernardi operator first")

    p = sub.add_parser("dominant", help="evaluate the best dominant q with exponent a")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--eta", type=float, default=1.0)
    p.add_argument("--z", type=_complex_arg, required=True, metavar="RE[,IM]")
    p.add_argument("--order", type=int, default=64)
    p.add_argument("--residual", action="store_true", help="also report the ODE residual")

    p = sub.add_parser("bound", help="sharp real-part bound of a theorem")
    p.add_argument("--theorem", choices=("thm21", "thm22", "thm23"), required=True)
    _add_theorem_params(p)
    p.add_argument("--zeta", type=float, default=1.0)

    p = sub.add_parser("verify", help="numerically verify a theorem or run a randomized sweep")
    p.add_argument("--theorem", choices=_verify.RE_PART_THEOREMS + _verify.DOMINANT_THEOREMS)
    _add_theorem_params(p)
    p.add_argument("--zeta", type=float, default=1.0)
    p.add_argument("--schwarz", type=_schwarz_arg, metavar="monomial:K[:THETA]|blaschke:RE[,IM]")
    p.add_argument("--conclusion-radius", type=float, default=_verify.CONCLUSION_RADIUS)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("plot-svg", help="SVG of the cardioid or a dominant's image")
    p.add_argument("target", choices=("cardioid", "dominant"))
    p.add_argument("--a", type=float)
    p.add_argument("--out", metavar="FILE.svg")
    p.add_argument("--samples", type=int, default=2048)
    return parser


def _add_theorem_params(p):
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--lambda", dest="lam", type=float)


def _theorem_kwargs(args) -> dict:
    keys = {
        "thm21": ("gamma", "lam"),
        "thm22": ("alpha", "beta", "lam"),
        "thm23": ("sigma", "lam"),
        "thm31": ("gamma",),
        "thm32": ("alpha", "beta"),
        "thm33": ("sigma",),
    }[args.theorem]
    missing = ["--lambda" if k == "lam" else f"--{k}" for k in keys if getattr(args, k) is None]
    if missing:
        raise UsageError(f"{args.theorem} requires {' '.join(missing)}")
    return {k: getattr(args, k) for k in keys}


class UsageError(Exception):
    pass


def _cmd_ml_eval(args, out):
    value = mittag_leffler(MLParams(args.alpha, args.beta, args.gamma), args.z, args.tol)
    out.write(_dumps({"value": _pair(value)}) + "\n")
    return EXIT_OK


def _cmd_op_apply(args, out):
    with open(args.series, encoding="utf-8") as fh:
        f = PowerSeries.from_json(fh.read())
    if args.bernardi is not None:
        f = bernardi(args.bernardi, f)
    g = apply_operator(MLParams(args.alpha, args.beta, args.gamma), f)
    out.write(_dumps({"coeffs": [_pair(c) for c in g.coeffs.tolist()]}) + "\n")
    return EXIT_OK


def _cmd_dominant(args, out):
    spec = DominantSpec.from_exponent(args.a, eta=args.eta)
    result = {"value": _pair(dominant(spec, args.z, args.order))}
    if args.residual:
        result["residual"] = _pair(ode_residual(spec, args.z, args.order))
    out.write(_dumps(result) + "\n")
    return EXIT_OK


def _cmd_bound(args, out):
    query = BoundQuery.for_theorem(args.theorem, args.zeta, **_theorem_kwargs(args))
    out.write(_dumps({"c": query.c, "bound": sharp_bound_root(query)}) + "\n")
    return EXIT_OK


def _cmd_verify(args, out, err):
    if args.sweep:
        theorems = [args.theorem] if args.theorem else None
        reports = _verify.randomized_sweep(args.seed, args.trials, theorems)
        out.write(_dumps([r.to_dict() for r in reports]) + "\n")
    elif args.theorem:
        params = _theorem_kwargs(args)
        if args.theorem in _verify.RE_PART_THEOREMS:
            sf = args.schwarz or _verify.make_schwarz("monomial", k=1)
            reports = [
                _verify.verify_re_part_theorem(
                    args.theorem, {**params, "zeta": args.zeta}, sf, conclusion_radius=args.conclusion_radius
                )
            ]
        else:
            reports = [_verify.verify_dominant_theorem(args.theorem, params)]
        out.write(_dumps(reports[0].to_dict()) + "\n")
    else:
        raise UsageError("verify needs --theorem TAG or --sweep")
    bad = [i for i, r in enumerate(reports) if r.counterexample]
    if bad:
        err.write(f"verification failed: {len(bad)} counterexample(s), first at index {bad[0]}\n")
        return EXIT_FAILED
    err.write(f"verified {len(reports)} report(s), no counterexamples\n")
    return EXIT_OK


def _cmd_plot(args, out):
    if args.samples < 3:
        raise UsageError("--samples must be at least 3")
    t = 2 * np.pi * np.arange(args.samples + 1) / args.samples
    circle = np.exp(1j * t)
    curves = [("h_c(D) boundary", hc(circle))]
    if args.target == "dominant":
        if args.a is None:
            raise UsageError("plot-svg dominant requires --a")
        spec = DominantSpec.from_exponent(args.a)
        curves.append((f"q(0.99 e^it), a={args.a:g}", dominant(spec, 0.99 * circle)))
    svg = emit_svg(PlotSpec.fit(curves))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    else:
        out.write(svg)
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "ml-eval":
            return _cmd_ml_eval(args, out)
        if args.command == "op-apply":
            return _cmd_op_apply(args, out)
        if args.command == "dominant":
            return _cmd_dominant(args, out)
        if args.command == "bound":
            return _cmd_bound(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_plot(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (MLCardioidError, OSError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
