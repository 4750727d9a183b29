"""Command-line front end: ``hypercodim {bound,sweep,oracle,table}``.

Exit codes: 0 pass or report-only, 1 gating failure, 2 usage error,
3 generic-position sampling exhausted.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from fractions import Fraction
from typing import Any

from . import oracle, sweeps
from .formulas import Params
from .strata import alphas, composition_consistency, dstar, theorem01_bound, theorem31_bound

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SAMPLING = 0, 1, 2, 3

ALPHA_COLUMNS = ["N", "d", "a1", "a2a", "a2b", "a3", "a4", "a4prime", "a5", "a6", "a7", "a8"]
BOUND_COLUMNS = ["N", "d", "regime", "theorem01", "theorem31", "argmin", "min_a7_a8", "a1"]
DSTAR_COLUMNS = ["N", "m", "e", "dstar"]


class UsageError(Exception):
    pass


def plain(obj: Any) -> Any:
    """Convert results to JSON-safe values; every number becomes an exact string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if dataclasses.is_dataclass(obj):
        return plain({f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)})
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command: str, parameters: dict, results: Any, status: str, seed: int | None = None) -> dict:
    env = {"command": command, "parameters": plain(parameters), "results": plain(results)}
    if seed is not None:
        env["seed"] = str(seed)
    env["status"] = status
    return env


# --- rendering ---------------------------------------------------------------

def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out.extend(_flatten(v, f"{prefix}.{k}" if prefix else k))
        return out
    if isinstance(obj, list):
        out = []
        for i, v in enumerate(obj):
            out.extend(_flatten(v, f"{prefix}[{i}]"))
        return out
    return [(prefix, "" if obj is None else str(obj).lower() if isinstance(obj, bool) else obj)]


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                sub = _text(v, indent + 1)
                lines.append(f"{pad}- " + sub[0].lstrip())
                lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    if v == [] or v == {}:
        return "none"
    return str(v)


def _table_text(header: list[str], rows: list[list[Any]]) -> list[str]:
    cells = [header] + [[_scalar(c) for c in r] for r in rows]
    widths = [max(len(str(r[j])) for r in cells) for j in range(len(header))]
    return ["  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in cells]


def render(env: dict, fmt: str, table: tuple[list[str], list[list[Any]]] | None = None) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    if fmt == "csv":
        if table is not None:
            header, rows = table
            return _csv(header, [plain(r) for r in rows])
        return _csv(["key", "value"], [list(kv) for kv in _flatten(env)])
    if table is not None:
        head = {k: v for k, v in env.items() if k != "results"}
        return "\n".join(_text(head) + [""] + _table_text(*table)) + "\n"
    return "\n".join(_text(env)) + "\n"


# --- commands ----------------------------------------------------------------

def cmd_bound(args) -> tuple[dict, int, None]:
    p = Params(args.d, args.N)
    ab = alphas(p)
    t01 = theorem01_bound(p)
    cons = composition_consistency(p)
    results = {
        "alphas": ab.alpha,
        "d6_mode": ab.d6_mode,
        "min": ab.min_value,
        "argmin": ab.argmin,
        "theorem31": theorem31_bound(p),
        "theorem01": {"value": t01.value, "regime": t01.regime, "source": t01.source},
        "consistency": {k: {"printed": r.printed, "composed": r.composed, "difference": r.difference,
                            "source": r.source} for k, r in cons.records.items()},
    }
    return envelope("bound", {"d": args.d, "N": args.N}, results, "report-only"), EXIT_OK, None


def _n_range(args, lo_default: int, hi_default: int) -> tuple[int, int]:
    if args.N is not None:
        return args.N, args.N
    lo = lo_default if args.N_min is None else args.N_min
    hi = hi_default if args.N_max is None else args.N_max
    if lo > hi:
        raise UsageError(f"--N-min {lo} exceeds --N-max {hi}")
    return lo, hi


def _or(value, default):
    return default if value is None else value


def _sweep_payload(rep: sweeps.SweepReport) -> dict:
    return {"claim_id": rep.claim_id, "range": rep.range, "total": rep.total, "passes": rep.passes,
            "failures": [dataclasses.asdict(f) for f in rep.failures], "records": rep.records}


def cmd_sweep(args) -> tuple[dict, int, None]:
    claim, jobs = args.claim_id, args.jobs
    if claim == "identity-32" and args.N is not None and args.a is not None:
        r = sweeps.check_identity_32(args.N, args.a)
        ok = r.equal and r.checks["bracket_positive"]
        status = "pass" if ok else "fail"
        return envelope("sweep", {"claim_id": claim, "N": args.N, "a": args.a}, r, status), \
            EXIT_OK if ok else EXIT_FAIL, None
    if claim == "identity-33" and args.N is not None and args.d is not None:
        r = sweeps.check_identity_33(args.N, args.d)
        ok = r.checks["lhs_positive"]
        status = "report-only" if ok else "fail"
        return envelope("sweep", {"claim_id": claim, "N": args.N, "d": args.d}, r, status), \
            EXIT_OK if ok else EXIT_FAIL, None

    if claim == "lemma11":
        rep = sweeps.sweep_lemma11(_or(args.d_max, 60), _or(args.i_max, 12), jobs=jobs)
    elif claim == "prop12iii-endpoints":
        rep = sweeps.sweep_prop12iii_endpoints(_or(args.d_max, 30), _or(args.N_max, 12), jobs=jobs)
    elif claim == "tau-simplification":
        rep = sweeps.sweep_tau_simplification(_or(args.d_max, 30), _or(args.N_max, 14), jobs=jobs)
    elif claim == "fano-dominance":
        lo, hi = _n_range(args, 7, 16)
        rep = sweeps.sweep_fano_dominance(hi, N_min=lo, jobs=jobs)
    elif claim == "gt-dominance":
        lo, hi = _n_range(args, 7, 12)
        rep = sweeps.sweep_gt_dominance(hi, _or(args.a_max, 20), N_min=lo, jobs=jobs)
    elif claim == "dstar":
        lo, hi = _n_range(args, 7, 30)
        rep = sweeps.sweep_dstar(hi, N_min=lo, jobs=jobs)
    elif claim == "remark31":
        lo, hi = _n_range(args, 7, 16)
        rep = sweeps.sweep_remark31(hi, N_min=lo, jobs=jobs)
    elif claim == "identity-32":
        lo, hi = _n_range(args, 7, 12)
        rep = sweeps.sweep_identity_32(hi, _or(args.a_max, 0), N_min=lo, jobs=jobs)
    else:
        lo, hi = _n_range(args, 7, 16)
        rep = sweeps.sweep_identity_33(hi, N_min=lo, d_min=_or(args.d_min, 4), d_max=args.d_max, jobs=jobs)
    code = EXIT_FAIL if rep.status == "fail" else EXIT_OK
    params = {"claim_id": claim, **rep.range}
    return envelope("sweep", params, _sweep_payload(rep), rep.status), code, None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + n for n in missing))


def cmd_oracle(args) -> tuple[dict, int, None]:
    check = args.check_id
    if check == "prop11":
        _need(args, "d", "N", "i")
        res = oracle.verify_prop11(args.d, args.N, args.i)
        seed = None
    elif check == "lemma21":
        _need(args, "d", "N", "m")
        res = oracle.verify_lemma21(args.d, args.N, args.m, args.seed)
        seed = args.seed
    elif check == "prop22":
        _need(args, "d", "N", "r", "m")
        res = oracle.verify_prop22(args.d, args.N, args.r, args.m, args.seed)
        seed = args.seed
    else:
        _need(args, "d", "k", "l")
        rep = oracle.investigate_prop21(args.d, args.k, args.l, args.seed)
        params = {"check_id": check, "d": args.d, "k": args.k, "l": args.l}
        return envelope("oracle", params, rep, "report-only", seed=args.seed), EXIT_OK, None
    results = {"expected": res.expected, "computed": res.rank, "ranks": res.ranks,
               "primes_agree": res.primes_agree, "match": res.match, "attempts": res.attempts,
               "details": res.details}
    status = "pass" if res.match else "fail"
    params = {"check_id": check, **res.params}
    return envelope("oracle", params, results, status, seed=seed), EXIT_OK if res.match else EXIT_FAIL, None


def cmd_table(args) -> tuple[dict, int, tuple]:
    kind = args.kind
    if kind == "dstar":
        lo, hi = _n_range(args, 7, 30)
        rows = [[N, N // 3, N % 3, dstar(N)] for N in range(lo, hi + 1)]
        header = DSTAR_COLUMNS
        params = {"kind": kind, "N_min": lo, "N_max": hi}
    else:
        lo, hi = _n_range(args, 7, 7)
        d_lo, d_hi = _or(args.d_min, 4), _or(args.d_max, 14)
        if d_lo > d_hi:
            raise UsageError(f"--d-min {d_lo} exceeds --d-max {d_hi}")
        rows = []
        for N in range(lo, hi + 1):
            for d in range(d_lo, d_hi + 1):
                ab = alphas(Params(d, N))
                if kind == "alphas":
                    rows.append([N, d] + [ab.alpha[c] for c in ALPHA_COLUMNS[2:]])
                else:
                    t01 = theorem01_bound(Params(d, N))
                    rows.append([N, d, t01.regime, t01.value, ab.min_value, ab.argmin,
                                 min(ab.alpha["a7"], ab.alpha["a8"]), ab.alpha["a1"]])
        header = ALPHA_COLUMNS if kind == "alphas" else BOUND_COLUMNS
        params = {"kind": kind, "N_min": lo, "N_max": hi, "d_min": d_lo, "d_max": d_hi}
    results = {"columns": header, "rows": rows}
    return envelope("table", params, results, "report-only"), EXIT_OK, (header, rows)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercodim",
                                     description="Codimension bounds for non-factorial hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--jobs", type=int, default=1)
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bound", help="alpha breakdown and theorem bounds at one (d, N)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="run one exhaustive claim check")
    p.add_argument("claim_id", choices=sorted(sweeps.CLAIMS))
    for flag in ("--d", "--N", "--a", "--d-min", "--d-max", "--N-min", "--N-max", "--a-max", "--i-max"):
        p.add_argument(flag, type=int, dest=flag[2:].replace("-", "_"))
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="rank oracle for a linear-condition count")
    p.add_argument("check_id", choices=["lemma21", "prop11", "prop22", "prop21-investigate"])
    for flag in ("--d", "--N", "--i", "--k", "--l", "--m", "--r"):
        p.add_argument(flag, type=int, dest=flag[2:])
    common(p, seed=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="plot-ready export of alphas, bounds or dstar")
    p.add_argument("kind", choices=["alphas", "bounds", "dstar"])
    for flag in ("--N", "--N-min", "--N-max", "--d-min", "--d-max"):
        p.add_argument(flag, type=int, dest=flag[2:].replace("-", "_"))
    common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        env, code, table = args.func(args)
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.SamplingExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SAMPLING
    sys.stdout.write(render(env, args.format, table))
    return code


if __name__ == "__main__":
    sys.exit(main())
