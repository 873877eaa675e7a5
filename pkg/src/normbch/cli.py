"""Command line entry point.

Subcommands: gencode, verify-distance, check-lines, bounds, reduce.
Exit codes: 0 success or certified, 1 mathematical counterexample or
violation, 2 usage, parameter or budget error.  Every file written gets
a JSON manifest next to it recording parameters, input/output hashes,
seed and timing; re-running with the manifest's parameters reproduces
byte-identical primary outputs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .bounds import best_known, bounds_table, empirical_rho, format_bound
from .construct import (
    augmented_matrix,
    bch_matrix,
    read_matrix_file,
    validate_params,
    write_matrix_file,
)
from .errors import BudgetExceededError
from .reduce import read_codeword_list, reduce_alphabet, write_codeword_list
from .verify import (
    DEFAULT_SUBSET_BUDGET,
    min_distance_at_least,
    verify_lines_theorem,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2


def _default_budget() -> int:
    raw = os.environ.get("NORMBCH_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            print(f"ignoring malformed NORMBCH_BUDGET={raw!r}", file=sys.stderr)
    return DEFAULT_SUBSET_BUDGET


def _sha256_file(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _write_manifest(out_path: str, subcommand: str, parameters: dict, inputs: dict,
                    outputs: dict, elapsed: float, seed=None) -> None:
    manifest = {
        "tool": "normbch",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": parameters,
        "seed": seed,
        "inputs": {p: _sha256_file(p) for p in inputs},
        "outputs": {p: _sha256_file(p) for p in outputs},
        "elapsed_s": round(elapsed, 6),
    }
    with open(out_path + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _emit(lines_or_obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(lines_or_obj[1], indent=2, sort_keys=True, default=str))
    else:
        for line in lines_or_obj[0]:
            print(line)


def _cert_payload(cert):
    lines = [
        f"verdict={cert.verdict}",
        f"distance_bound={cert.distance_bound}",
        f"matrix_sha256={cert.matrix_sha256}",
        f"subset_count={cert.subset_count}",
        f"subsets_examined={cert.subsets_examined}",
        f"threads={cert.threads}",
        f"elapsed_s={cert.elapsed_s:.3f}",
    ]
    obj = {
        "verdict": cert.verdict,
        "distance_bound": cert.distance_bound,
        "matrix_sha256": cert.matrix_sha256,
        "subset_count": cert.subset_count,
        "subsets_examined": cert.subsets_examined,
        "threads": cert.threads,
        "elapsed_s": round(cert.elapsed_s, 6),
    }
    if cert.counterexample is not None:
        cw = cert.counterexample
        lines.append("counterexample_positions=" + ",".join(str(j) for j in cw.support))
        lines.append("counterexample_coeffs=" + ",".join(str(c) for c in cw.coeffs))
        lines.append(f"counterexample_weight={cw.weight}")
        obj["counterexample"] = {"positions": list(cw.support), "coeffs": list(cw.coeffs)}
    return lines, obj


def cmd_gencode(args) -> int:
    started = time.perf_counter()
    params = validate_params(args.q, args.m, args.d, relaxed=args.relaxed)
    if not params.valid:
        print("invalid parameters:", file=sys.stderr)
        for v in params.violations:
            print(f"  - {v}", file=sys.stderr)
        return EXIT_ERROR
    matrix = bch_matrix(params) if args.bch_only else augmented_matrix(params)
    write_matrix_file(matrix, args.out)
    parameters = {"q": args.q, "m": args.m, "d": args.d, "relaxed": args.relaxed,
                  "bch_only": args.bch_only, "out": args.out}
    _write_manifest(args.out, "gencode", parameters, {}, {args.out: None},
                    time.perf_counter() - started)
    lines = [
        f"wrote {args.out}",
        f"n={matrix.n} rows={matrix.row_count} rank={matrix.rank()} dimension={matrix.dimension()}",
        "blocks=" + ",".join(f"{name}:{c}" for name, c in matrix.blocks),
        f"matrix_sha256={matrix.sha256()}",
    ]
    obj = {
        "out": args.out,
        "n": matrix.n,
        "rows": matrix.row_count,
        "rank": matrix.rank(),
        "dimension": matrix.dimension(),
        "blocks": dict(matrix.blocks),
        "matrix_sha256": matrix.sha256(),
    }
    _emit((lines, obj), args.json)
    return EXIT_OK


def cmd_verify_distance(args) -> int:
    started = time.perf_counter()
    matrix = read_matrix_file(args.matrix)
    try:
        cert = min_distance_at_least(matrix, args.d, budget=args.budget, threads=args.threads)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    payload = _cert_payload(cert)
    _emit(payload, args.json)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(payload[0]) + "\n")
        parameters = {"matrix": args.matrix, "d": args.d, "budget": args.budget,
                      "threads": args.threads, "out": args.out}
        _write_manifest(args.out, "verify-distance", parameters, {args.matrix: None},
                        {args.out: None}, time.perf_counter() - started)
    return EXIT_OK if cert.certified else EXIT_COUNTEREXAMPLE


def cmd_check_lines(args) -> int:
    started = time.perf_counter()
    params = validate_params(args.q, args.m, args.d, relaxed=args.relaxed)
    try:
        report = verify_lines_theorem(params, budget=args.budget, experimental=args.experimental)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    lines = [
        f"q={args.q} m={args.m} d={args.d}",
        f"weight={report.weight}",
        f"subset_count={report.subset_count}",
        f"words_found={report.words_found}",
        f"on_line={report.on_line}",
        f"violations={report.violation_count}",
        f"theorem_applies={str(report.theorem_applies).lower()}",
    ]
    obj = {
        "q": args.q,
        "m": args.m,
        "d": args.d,
        "weight": report.weight,
        "subset_count": report.subset_count,
        "words_found": report.words_found,
        "on_line": report.on_line,
        "violations": report.violation_count,
        "theorem_applies": report.theorem_applies,
    }
    _emit((lines, obj), args.json)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        parameters = {"q": args.q, "m": args.m, "d": args.d, "relaxed": args.relaxed,
                      "experimental": args.experimental, "budget": args.budget, "out": args.out}
        _write_manifest(args.out, "check-lines", parameters, {}, {args.out: None},
                        time.perf_counter() - started)
    return EXIT_OK if report.violation_count == 0 else EXIT_COUNTEREXAMPLE


def _bound_obj(report):
    return {
        "q": report.q,
        "d": report.d,
        "hamming_lower": report.hamming_lower,
        "varshamov_upper": report.varshamov_upper,
        "gilbert_upper": report.gilbert_upper,
        "bch_upper": report.bch_upper,
        "new_upper": format_bound(report.new_upper),
        "special": [[format_bound(v), label] for v, label in report.special],
        "best_upper": format_bound(report.best_upper),
        "best_source": report.best_source,
        "exact": report.exact,
        "consistent": report.consistent,
    }


def cmd_bounds(args) -> int:
    if args.table:
        try:
            q_lo, q_hi = (int(t) for t in args.table[0].split(".."))
            d_lo, d_hi = (int(t) for t in args.table[1].split(".."))
        except ValueError:
            print("table ranges look like qmin..qmax dmin..dmax", file=sys.stderr)
            return EXIT_ERROR
        if args.json:
            reports = [
                _bound_obj(best_known(q, d))
                for q in range(q_lo, q_hi + 1)
                for d in range(d_lo, d_hi + 1)
            ]
            print(json.dumps(reports, indent=2, sort_keys=True))
        else:
            print(bounds_table(range(q_lo, q_hi + 1), range(d_lo, d_hi + 1)))
        return EXIT_OK
    if args.q is None or args.d is None:
        print("either --q and --d, or --table, is required", file=sys.stderr)
        return EXIT_ERROR
    try:
        report = best_known(args.q, args.d)
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    lines = [
        f"q={report.q} d={report.d}",
        f"hamming_lower={report.hamming_lower}",
        f"varshamov_upper={report.varshamov_upper}",
        f"gilbert_upper={report.gilbert_upper}",
        f"bch_upper={report.bch_upper}",
        f"new_upper={format_bound(report.new_upper)}",
    ]
    for value, label in report.special:
        lines.append(f"special_{label}={format_bound(value)}")
    lines.append(f"best_upper={format_bound(report.best_upper)} [{report.best_source}]")
    lines.append(f"exact={str(report.exact).lower()}")
    _emit((lines, _bound_obj(report)), args.json)
    return EXIT_OK


def cmd_reduce(args) -> int:
    started = time.perf_counter()
    try:
        subset = [int(t) for t in args.subset.split(",")]
        code = read_codeword_list(args.input, args.q2)
        mode = "sampled" if args.trials else "exhaustive"
        result = reduce_alphabet(code, subset, mode=mode, trials=args.trials or 0, seed=args.seed)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}; pass --trials to sample instead", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    lines = [
        f"mode={result.mode}",
        "shift=" + ",".join(str(v) for v in result.shift),
        f"achieved={result.achieved}",
        f"average={result.average:.4f}",
        f"floor={result.floor}",
        f"guaranteed={str(result.guaranteed).lower()}",
        f"subcode_size={len(result.subcode.words)}",
    ]
    obj = {
        "mode": result.mode,
        "shift": list(result.shift),
        "achieved": result.achieved,
        "average": result.average,
        "floor": result.floor,
        "guaranteed": result.guaranteed,
        "subcode_size": len(result.subcode.words),
    }
    _emit((lines, obj), args.json)
    if args.out:
        write_codeword_list(result.subcode, args.out)
        parameters = {"input": args.input, "q2": args.q2, "subset": args.subset,
                      "trials": args.trials, "seed": args.seed, "out": args.out}
        _write_manifest(args.out, "reduce", parameters, {args.input: None},
                        {args.out: None}, time.perf_counter() - started, seed=args.seed)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normbch", description=__doc__)
    parser.add_argument("--version", action="version", version=f"normbch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gencode", help="build a parity check matrix file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--relaxed", action="store_true", help="use the divisor rule for m")
    p.add_argument("--bch-only", action="store_true", help="skip the norm rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gencode)

    p = sub.add_parser("verify-distance", help="certify distance >= d by exhaustive scan")
    p.add_argument("--matrix", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=_default_budget())
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="also write the certificate to a file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_distance)

    p = sub.add_parser("check-lines", help="validate the affine-line structure of minimum words")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=_default_budget())
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--experimental", action="store_true",
                   help="run even when the hypotheses fail; results are reported, not asserted")
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_lines)

    p = sub.add_parser("bounds", help="redundancy-coefficient bounds for (q, d)")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--table", nargs=2, metavar=("QMIN..QMAX", "DMIN..DMAX"), default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("reduce", help="shift a code into a sub-alphabet")
    p.add_argument("--input", required=True, help="codeword list, one vector per line")
    p.add_argument("--q2", type=int, required=True)
    p.add_argument("--subset", required=True, help="comma separated symbols, e.g. 0,1,2")
    p.add_argument("--trials", type=int, default=None, help="sample this many shifts instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the reduced codeword list here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, matching our convention
        return int(exc.code) if exc.code else EXIT_OK
    return args.func(args)


def cli_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli_entry()
