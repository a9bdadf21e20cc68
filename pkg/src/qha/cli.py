"""``qha`` command-line interface.

Exit codes: 0 success, 1 invariant failure, 2 parse error, 3 validation
error, 4 cap exceeded, 5 oracle bound exceeded, 6 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .cache import default_cache_dir
from .dsl import format_presentation, parse_presentation
from .errors import OracleMismatch, QHAError, ValidationError
from .estimator import HochschildEstimator
from .families import (build_gamma_eta2, build_gamma_star, build_lambda_eta, build_lambda_family,
                       dim_report)
from .field import FieldSpec
from .hochschild import DEFAULT_ORACLE_BOUND, HHReport, bar_hh_dims
from .quiver import Presentation


class InputError(QHAError):
    """Unreadable input file; reported like a parse error."""

    exit_code = 2


def _add_common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("global options")
    g.add_argument("--json", action="store_true", help="print a JSON report")
    g.add_argument("--field", help="Q or F<p>; overrides the input's field")
    g.add_argument("--cap", type=int, help="path-length cap for Groebner completion")
    g.add_argument("--cache-dir", help="cache directory (default: $QHA_CACHE_DIR)")
    g.add_argument("--order", help="comma-separated arrow order")
    g.add_argument("--degree", choices=["0", "1", "2", "all"], default="all",
                   help="which HH degrees to print (text output)")
    g.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND,
                   help="largest dim Lambda for the bar-complex oracle")


def _add_lambda_params(p: argparse.ArgumentParser, t: bool = False) -> None:
    for name in ("p", "q", "k", "s"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--lam", default="1", help="nonzero scalar lambda (default 1)")
    if t:
        p.add_argument("--t", default="1", help="deformation parameter (default 1)")


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="presentation file")
    p.add_argument("--family", choices=["lambda", "gamma-star"], help="use a family instead of a file")
    for name in ("p", "q", "k", "s", "n"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--lam", default="1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qha", description=(
        "Hochschild cohomology HH^0..HH^2 of quiver algebras KQ/I via the minimal "
        "projective bimodule resolution."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="run the pipeline on a presentation file")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("family", help="build a family member and run the pipeline")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("lambda", help="Lambda(p, q, k, s, lam)")
    _add_lambda_params(q)
    q.add_argument("--emit-dsl", action="store_true", help="print the presentation and stop")
    q.add_argument("--minimal", action="store_true", help="omit redundant relations")
    _add_common(q)
    q = fam.add_parser("gamma-star", help="Gamma*(n)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--emit-dsl", action="store_true", help="print the presentation and stop")
    q.add_argument("--minimal", action="store_true", help="omit redundant relations")
    _add_common(q)

    p = sub.add_parser("deform", help="compare a deformation with the undeformed algebra")
    dfm = p.add_subparsers(dest="family", required=True)
    q = dfm.add_parser("lambda-eta", help="deformation of Lambda(p, q, k, s, lam)")
    _add_lambda_params(q, t=True)
    q.add_argument("--emit-dsl", action="store_true")
    _add_common(q)
    q = dfm.add_parser("gamma-eta2", help="deformation of Gamma*(n)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--t", default="1")
    q.add_argument("--emit-dsl", action="store_true")
    _add_common(q)

    p = sub.add_parser("oracle", help="compare with the bar-complex oracle")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("dims", help="per-vertex dimensions dim e_v Lambda")
    _add_source(p)
    _add_common(p)
    return parser


def _field(args) -> Optional[FieldSpec]:
    return FieldSpec.parse(args.field) if args.field else None


def _read(path: str, field: Optional[FieldSpec]) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_presentation(text, field)


def _finish(pres: Presentation, args) -> Presentation:
    if args.order:
        pres = pres.with_arrow_order([a.strip() for a in args.order.split(",") if a.strip()])
    return pres


def _family(args, field: FieldSpec) -> Presentation:
    if args.family == "lambda":
        missing = [n for n in ("p", "q", "k", "s") if getattr(args, n) is None]
        if missing:
            raise ValidationError("missing --" + ", --".join(missing))
        return build_lambda_family(args.p, args.q, args.k, args.s, field.parse_scalar(args.lam), field,
                                   minimal=getattr(args, "minimal", False))
    if args.family == "gamma-star":
        if args.n is None:
            raise ValidationError("missing --n")
        return build_gamma_star(args.n, field, minimal=getattr(args, "minimal", False))
    raise ValidationError(f"unknown family {args.family!r}")


def _source(args) -> Presentation:
    field = _field(args)
    if args.family and args.file:
        raise ValidationError("give either a file or --family, not both")
    if args.family:
        return _finish(_family(args, field or FieldSpec(0)), args)
    if not args.file:
        raise ValidationError("no input: give a file or --family")
    return _finish(_read(args.file, field), args)


def _estimator(args) -> HochschildEstimator:
    if args.cap is not None and args.cap < 2:
        raise ValidationError("--cap must be at least 2")
    return HochschildEstimator(cap=args.cap, cache_dir=args.cache_dir or default_cache_dir())


def format_report(rep: HHReport, degree: str = "all") -> str:
    lines = [f"field: {rep.field.name}"]
    if rep.field.p == 2:
        lines.append("warning: characteristic 2; dimensions may depend on the characteristic")
    lines += [
        f"dim Lambda: {rep.dim_algebra}",
        f"|f2| = {rep.f2_count}, |f3| = {rep.f3_count}",
        "dim Hom(Q^n, Lambda): " + " ".join(f"q{i}={d}" for i, d in enumerate(rep.hom_dims)),
        f"rank d1 = {rep.rank_d1}, dim Im d2 = {rep.rank_d2}, dim Ker d3 = {rep.dim_ker_d3}",
    ]
    wanted = [0, 1, 2] if degree == "all" else [int(degree)]
    for n in wanted:
        lines.append(f"HH^{n} = {rep.hh[n]}")
    if 2 in wanted and rep.hh2_basis:
        lines.append("HH^2 basis:")
        for i, rep_map in enumerate(rep.hh2_basis, 1):
            parts = "; ".join(f"{k} -> {v}" for k, v in rep_map.items())
            lines.append(f"  [{i}] {parts}")
    return "\n".join(lines)


def _emit(obj, args, text: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(text)


def run_compute(pres: Presentation, args) -> int:
    est = _estimator(args).fit(pres)
    _emit(est.report_.to_json(), args, format_report(est.report_, args.degree))
    return 0


def run_oracle(args) -> int:
    pres = _source(args)
    est = _estimator(args).fit(pres)
    oracle = bar_hh_dims(est.algebra_, 2, args.oracle_bound)
    pipeline = est.report_.hh
    match = tuple(oracle) == tuple(pipeline)
    obj = {"dim_algebra": est.algebra_.dim, "pipeline": list(pipeline), "oracle": list(oracle),
           "match": match}
    text = "\n".join([f"dim Lambda: {est.algebra_.dim}",
                      "pipeline (hh0, hh1, hh2): " + str(tuple(pipeline)),
                      "bar oracle (hh0, hh1, hh2): " + str(tuple(oracle)),
                      "match" if match else "MISMATCH"])
    _emit(obj, args, text)
    if not match:
        raise OracleMismatch(f"pipeline {pipeline} != oracle {tuple(oracle)}")
    return 0


def _dims_text(title: str, rep) -> List[str]:
    lines = [f"{title}: total {rep.total}"]
    lines += [f"  e_{v}: {d}" for v, d in rep.per_vertex.items()]
    return lines


def run_dims(args) -> int:
    pres = _source(args)
    rep = dim_report(pres, args.cap)
    _emit(rep.to_json(), args, "\n".join(_dims_text("dim Lambda", rep)))
    return 0


def run_deform(args) -> int:
    field = _field(args) or FieldSpec(0)
    t = field.parse_scalar(args.t)
    if args.family == "lambda-eta":
        lam = field.parse_scalar(args.lam)
        base = build_lambda_family(args.p, args.q, args.k, args.s, lam, field)
        deformed = build_lambda_eta(args.p, args.q, args.k, args.s, lam, t, field)
    else:
        base = build_gamma_star(args.n, field)
        deformed = build_gamma_eta2(args.n, t, field)
    base, deformed = _finish(base, args), _finish(deformed, args)
    if args.emit_dsl:
        print(format_presentation(deformed), end="")
        return 0
    r0, r1 = dim_report(base, args.cap), dim_report(deformed, args.cap)
    equal = r0.per_vertex == r1.per_vertex
    obj = {"undeformed": r0.to_json(), "deformed": r1.to_json(), "equal": equal,
           "t": field.format_scalar(t)}
    text = _dims_text("undeformed", r0) + _dims_text("deformed", r1)
    text.append("dimensions equal" if equal else "dimensions differ")
    _emit(obj, args, "\n".join(text))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return run_compute(_finish(_read(args.file, _field(args)), args), args)
        if args.command == "family":
            pres = _finish(_family(args, _field(args) or FieldSpec(0)), args)
            if args.emit_dsl:
                print(format_presentation(pres), end="")
                return 0
            return run_compute(pres, args)
        if args.command == "deform":
            return run_deform(args)
        if args.command == "oracle":
            return run_oracle(args)
        if args.command == "dims":
            return run_dims(args)
    except QHAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ValidationError.exit_code
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
