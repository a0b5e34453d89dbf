"""Command line interface.

Exit codes: 0 success, 1 I/O or parse error, 2 domain precondition violation,
3 verification failure.  Output is deterministic for fixed seed and flags
(pretty mode adds a version header line); NO_COLOR disables ANSI color.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .errors import (
    DegenerateInputError,
    FormatError,
    InvalidInputError,
    InvalidParameterError,
    OutsideUnitBallError,
    VerificationError,
)
from .forms import (
    attaining_decomposition,
    counterexample_sequence,
    greedy_decomposition,
    lambda_dispatch,
    lambda_trace_class,
    min_rank_one_distance,
)
from .interchange import load_matrix, matrix_to_dict, save_matrix
from .linalg import schatten_norm
from .oracle import (
    FUZZ_KINDS,
    amenability_check,
    fuzz_campaign,
    markus_slack,
    mirsky_slack,
    wielandt_match,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _color_ok(flag: bool) -> str:
    text = "ok" if flag else "FAIL"
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\x1b[32m{text}\x1b[0m" if flag else f"\x1b[31m{text}\x1b[0m"


def _flatten_scalars(payload: dict, prefix: str = "") -> dict:
    row = {}
    for key, val in payload.items():
        if isinstance(val, (int, float, str, bool)) or val is None:
            row[prefix + key] = val
        elif isinstance(val, dict):
            row.update(_flatten_scalars(val, prefix + key + "."))
    return row


def _emit(args, payload: dict, rows: list | None = None,
          pretty: list[str] | None = None) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.output == "csv":
        rows = rows if rows else [_flatten_scalars(payload)]
        fields: list[str] = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        writer = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        print(f"# schatten-lambda {__version__}")
        for line in pretty or [json.dumps(payload, sort_keys=True)]:
            print(line)


def cmd_lambda(args) -> int:
    a = load_matrix(args.matrix)
    if args.p is not None:
        p = args.p
    else:
        p = math.inf if args.norm == "operator" else 1.0
    result = lambda_dispatch(a, p, witness=(p == 1.0))
    payload = result.as_dict()
    pretty = [
        f"lambda = {result.value!r}   [{result.branch}]",
        f"trace norm = {result.norm1!r}, operator norm = {result.norm_inf!r}",
    ]
    if result.witness is not None:
        pretty.append(f"witness weight t = {result.witness.t!r}")
    _emit(args, payload, None, pretty)
    return 0


def cmd_decompose(args) -> int:
    a = load_matrix(args.matrix)
    trip = greedy_decomposition(a) if args.mode == "greedy" else attaining_decomposition(a)
    rep = amenability_check(a, trip, "trace", tol=max(args.tol, 1e-9))
    payload = {
        "mode": args.mode,
        **trip.as_dict(),
        "residual": rep.residual,
        "ball_excess": rep.ball_excess,
        "ok": rep.ok,
    }
    pretty = [
        f"mode = {args.mode}, weight t = {trip.t!r}",
        f"residual = {rep.residual:.3e}, ball excess = {rep.ball_excess:.3e} "
        f"[{_color_ok(rep.ok)}]",
    ]
    _emit(args, payload, None, pretty)
    return 0 if rep.ok else 3


def cmd_minimize_rank_one(args) -> int:
    a = load_matrix(args.matrix)
    res = min_rank_one_distance(a, args.t, args.p)
    f_at = schatten_norm(a - args.t * res.argmin, args.p) ** args.p
    payload = {
        "t": args.t,
        "p": args.p,
        "value": res.value,
        "f_at_argmin": f_at,
        "argmin": matrix_to_dict(res.argmin),
    }
    pretty = [
        f"min ||a - t e||_p^p over rank-one partial isometries = {res.value!r}",
        f"attained value at reported argmin = {f_at!r}",
    ]
    _emit(args, payload, None, pretty)
    return 0


def _verify_payload(summary) -> dict:
    return summary.as_dict()


def cmd_verify(args) -> int:
    kind = args.kind
    tol = args.tol

    if kind == "wielandt":
        if args.random:
            rng_trials = args.trials
            worst = 0.0
            rows = []
            for i in range(rng_trials):
                rng = np.random.default_rng([args.seed, i])
                n = args.dim
                g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
                diff, _, _ = wielandt_match(g)
                worst = max(worst, diff)
                rows.append({"trial": i, "max_abs_diff": diff})
            passed = worst <= max(tol, 1e-8)
            payload = {"kind": "wielandt", "trials": rng_trials, "dim": args.dim,
                       "seed": args.seed, "max_abs_diff": worst, "passed": passed}
            _emit(args, payload, rows,
                  [f"dilation spectrum vs +-singular values: max diff {worst:.3e} "
                   f"[{_color_ok(passed)}]"])
            return 0 if passed else 3
        if len(args.paths) != 1:
            raise _UsageError("verify wielandt needs exactly one matrix file")
        a = load_matrix(args.paths[0])
        diff, eigs, signed = wielandt_match(a)
        passed = diff <= max(tol, 1e-8)
        payload = {
            "kind": "wielandt",
            "max_abs_diff": diff,
            "eigenvalues": [float(x) for x in eigs],
            "signed_singular_values": [float(x) for x in signed],
            "passed": passed,
        }
        _emit(args, payload, None,
              [f"dilation spectrum vs +-singular values: max diff {diff:.3e} "
               f"[{_color_ok(passed)}]"])
        return 0 if passed else 3

    if kind in ("mirsky", "markus"):
        if args.random:
            summary = fuzz_campaign(kind, args.dim, args.trials, args.seed)
            pretty = [
                f"{kind} campaign: {summary.trials} trials, dim {summary.n}, "
                f"min slack {summary.min_slack!r} [{_color_ok(summary.passed)}]"
            ]
            _emit(args, _verify_payload(summary), summary.rows, pretty)
            return 0 if summary.passed else 3
        if len(args.paths) != 2:
            raise _UsageError(f"verify {kind} needs two matrix files")
        a = load_matrix(args.paths[0])
        b = load_matrix(args.paths[1])
        p = args.p if args.p is not None else 1.0
        rep = mirsky_slack(a, b, p) if kind == "mirsky" else markus_slack(a, b, p)
        passed = rep.slack >= -tol
        payload = {"kind": kind, "p": "inf" if math.isinf(rep.p) else rep.p,
                   "lhs": rep.lhs, "rhs": rep.rhs, "slack": rep.slack,
                   "passed": passed}
        _emit(args, payload, None,
              [f"{kind}: lhs {rep.lhs!r} <= rhs {rep.rhs!r}, slack {rep.slack:.3e} "
               f"[{_color_ok(passed)}]"])
        return 0 if passed else 3

    if kind == "lambda-oracle":
        campaign = "lambda-operator" if args.norm == "operator" else "lambda-trace"
        summary = fuzz_campaign(campaign, args.dim, args.trials, args.seed)
        pretty = [
            f"{campaign} vs closed form: {summary.trials} trials, dim {summary.n}, "
            f"max |formula - bracket midpoint| {summary.max_dev!r} "
            f"[{_color_ok(summary.passed)}]"
        ]
        _emit(args, _verify_payload(summary), summary.rows, pretty)
        return 0 if summary.passed else 3

    if kind == "min-rank-one":
        if args.random:
            summary = fuzz_campaign("min-rank-one", args.dim, args.trials, args.seed)
            pretty = [
                f"min-rank-one campaign: {summary.trials} trials, dim {summary.n}, "
                f"min sample margin {summary.min_slack!r} [{_color_ok(summary.passed)}]"
            ]
            _emit(args, _verify_payload(summary), summary.rows, pretty)
            return 0 if summary.passed else 3
        if len(args.paths) != 1 or args.t is None or args.p is None:
            raise _UsageError("verify min-rank-one needs one matrix file plus --t and --p")
        a = load_matrix(args.paths[0])
        closed = min_rank_one_distance(a, args.t, args.p)
        rng = np.random.default_rng([args.seed, 0])
        rows_n, cols_n = a.shape
        samples = 2000
        us = rng.standard_normal((samples, rows_n)) + 1j * rng.standard_normal((samples, rows_n))
        vs = rng.standard_normal((samples, cols_n)) + 1j * rng.standard_normal((samples, cols_n))
        us /= np.linalg.norm(us, axis=1, keepdims=True)
        vs /= np.linalg.norm(vs, axis=1, keepdims=True)
        diffs = a[None, :, :] - args.t * (us[:, :, None] * vs.conj()[:, None, :])
        svals = np.linalg.svd(diffs, compute_uv=False)
        fmin = float(np.min(np.sum(svals**args.p, axis=1)))
        passed = closed.value <= fmin + tol
        payload = {"kind": "min-rank-one", "t": args.t, "p": args.p,
                   "value": closed.value, "best_sampled": fmin, "samples": samples,
                   "passed": passed}
        _emit(args, payload, None,
              [f"closed form {closed.value!r} <= best of {samples} samples {fmin!r} "
               f"[{_color_ok(passed)}]"])
        return 0 if passed else 3

    raise _UsageError(f"unknown verify kind {kind!r}")


def cmd_fuzz(args) -> int:
    summary = fuzz_campaign(args.kind, args.dim, args.trials, args.seed, tol=args.tol)
    metric = (f"min slack {summary.min_slack!r}" if summary.min_slack is not None
              else f"max deviation {summary.max_dev!r}")
    pretty = [
        f"{summary.kind}: {summary.trials} trials, dim {summary.n}, seed {summary.seed}",
        f"{metric}, failures {len(summary.failures)} [{_color_ok(summary.passed)}]",
    ]
    _emit(args, summary.as_dict(), summary.rows, pretty)
    return 0 if summary.passed else 3


def cmd_counterexample(args) -> int:
    dim = args.dim if args.dim is not None else args.n
    if dim > 64:
        raise InvalidInputError("dim must be at most 64")
    a = counterexample_sequence(args.n, dim)
    out = args.out or f"counterexample-n{args.n}-d{dim}.json"
    save_matrix(out, a)
    res = lambda_trace_class(a)
    table = []
    k = 1
    while k <= 64:
        table.append({"n": k, "lambda": lambda_trace_class(
            counterexample_sequence(k, k)).value})
        k *= 2
    payload = {
        "n": args.n,
        "dim": dim,
        "lambda": res.value,
        "norm1": res.norm1,
        "norm_inf": res.norm_inf,
        "path": out,
        "table": table,
    }
    pretty = [
        f"wrote diag(1/{args.n} x {args.n}, 0 x {dim - args.n}) to {out}",
        f"lambda = {res.value!r} (trace norm 1, operator norm {res.norm_inf!r})",
        "lambda along the sequence (no uniform lower bound):",
    ]
    for entry in table:
        pretty.append(f"  n = {entry['n']:>2}: lambda = {entry['lambda']!r}")
    _emit(args, payload, [{"n": e["n"], "lambda": e["lambda"]} for e in table], pretty)
    return 0


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (u64)")
    common.add_argument("--tol", type=float, default=1e-9, help="tolerance")
    common.add_argument("--output", choices=("json", "csv", "pretty"),
                        default="json", help="output format")

    parser = _Parser(prog="schatten-lambda",
                     description="lambda function and extreme-point "
                                 "decompositions on Schatten unit balls")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_lambda = sub.add_parser("lambda", parents=[common],
                              help="evaluate the lambda function")
    p_lambda.add_argument("matrix", help="matrix file (interchange JSON)")
    p_lambda.add_argument("--norm", choices=("trace", "operator"), default="trace")
    p_lambda.add_argument("--p", type=float, default=None,
                          help="Schatten exponent (1 = trace ball, inf = operator ball)")
    p_lambda.set_defaults(func=cmd_lambda)

    p_dec = sub.add_parser("decompose", parents=[common],
                           help="construct an amenable triplet on the trace ball")
    p_dec.add_argument("matrix")
    p_dec.add_argument("--mode", choices=("attaining", "greedy"), default="attaining")
    p_dec.set_defaults(func=cmd_decompose)

    p_min = sub.add_parser("minimize-rank-one", parents=[common],
                           help="closed-form min of ||a - t e||_p^p over rank-one e")
    p_min.add_argument("matrix")
    p_min.add_argument("--t", type=float, required=True)
    p_min.add_argument("--p", type=float, required=True)
    p_min.set_defaults(func=cmd_minimize_rank_one)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="verify an identity or inequality")
    p_ver.add_argument("kind", choices=("mirsky", "markus", "wielandt",
                                        "lambda-oracle", "min-rank-one"))
    p_ver.add_argument("paths", nargs="*", help="matrix files (file mode)")
    p_ver.add_argument("--random", action="store_true",
                       help="run a seeded random campaign instead of files")
    p_ver.add_argument("--dim", type=int, default=3)
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument("--p", type=float, default=None)
    p_ver.add_argument("--t", type=float, default=None)
    p_ver.add_argument("--norm", choices=("trace", "operator"), default="trace")
    p_ver.set_defaults(func=cmd_verify)

    p_fuzz = sub.add_parser("fuzz", parents=[common],
                            help="randomized campaign over one check kind")
    p_fuzz.add_argument("kind", choices=FUZZ_KINDS)
    p_fuzz.add_argument("--dim", type=int, required=True)
    p_fuzz.add_argument("--trials", type=int, required=True)
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_ctr = sub.add_parser("counterexample", parents=[common],
                           help="write diag(1/n, ..., 1/n, 0, ...) and tabulate lambda")
    p_ctr.add_argument("--n", type=int, required=True)
    p_ctr.add_argument("--dim", type=int, default=None)
    p_ctr.add_argument("--out", default=None)
    p_ctr.set_defaults(func=cmd_counterexample)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidInputError, InvalidParameterError, OutsideUnitBallError,
            DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
