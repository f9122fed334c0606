"""Command-line front end.

    python3 -m kbody_qfi qfi optimal --n 4 --k 2
    python3 -m kbody_qfi dichotomy --k-max 6 --n-max 30 --x 1 --format csv

Exit status is 0 on success and 2 on a usage or validation error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .case_two import case2_optimal, dichotomy_map
from .fit import FitConfig, loglog_fit, scaling_points
from .highdim import LocalExtremes, optimal_probe_highdim
from .oracle import brute_case2_spectrum, brute_spectrum
from .probes import TieRule
from .qfi_optimal import optimal_qfi
from .qfi_product import sp_qfi_at, sp_qfi_max
from .serialize import dumps_csv, dumps_json, encode, to_record

# fixed CSV header per command
HEADERS = {
    "qfi-optimal": ["N", "k", "qfi", "lambda_max", "lambda_min", "argmax_sectors", "argmin_sectors", "s_top", "s_bottom", "classification"],
    "qfi-product": ["N", "k", "z", "qfi", "z_star"],
    "case2": ["N", "k", "x", "qfi", "lambda_max", "lambda_min", "argmax_sectors", "argmin_sectors"],
    "dichotomy": ["k", "N", "x", "argmin_sectors", "argmax_sectors", "zero_in_argmin"],
    "probe": ["N", "k", "s_top", "s_bottom", "classification", "symmetric", "qfi"],
    "highdim": ["P", "k", "delta_M", "delta_m", "scenario", "lambda_max", "lambda_min", "argmax_m", "argmin_m", "s_top", "s_bottom", "classification", "qfi", "branch_condition"],
    "oracle": ["N", "k", "x", "value", "multiplicity"],
    "fit": ["alpha_hat", "beta_hat", "S_alpha", "S_beta", "R", "chi2", "ci_alpha", "ci_beta", "n_points", "confidence", "prefactor"],
}

EPILOG = "CSV headers (one fixed header per command):\n" + "\n".join(
    f"  {name:12s} {','.join(cols)}" for name, cols in HEADERS.items()
)


class UsageError(Exception):
    pass


def int_range(text: str) -> list[int]:
    """"7" or "2:10" (inclusive)."""
    try:
        if ":" in text:
            lo, hi = (int(t) for t in text.split(":"))
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo:hi, got {text!r}")


def exact_real(text: str):
    """Decimal or p/q text to an exact Fraction."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")


def _encoded(d: dict) -> dict:
    return {k: (v if k == "type" else encode(v)) for k, v in d.items()}


def _grid(ns: list[int], ks: list[int]) -> list[tuple[int, int]]:
    cells = [(N, k) for k in ks for N in ns if N >= k]
    if not cells:
        raise UsageError("empty grid: need N >= k for at least one pair")
    if any(k < 1 for _, k in cells):
        raise UsageError("k must be >= 1")
    return cells


def _pmap(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(*it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so output does not depend on scheduling
        return list(pool.map(fn, *zip(*items)))


def _flat_probe(rec: dict) -> dict:
    p = rec["probe"]
    return {**rec, "s_top": p["s_top"], "s_bottom": p["s_bottom"], "classification": p["classification"]}


def cmd_qfi_optimal(args):
    tie = TieRule.parse(args.tie)
    cells = _grid(args.n, args.k)
    reports = _pmap(optimal_qfi, [(N, k, tie) for N, k in cells], args.jobs)
    records = [to_record(r) for r in reports]
    return records, [_flat_probe(r) for r in records]


def _product_cell(N: int, k: int, z):
    if z is None:
        rec = to_record(sp_qfi_max(N, k))
    else:
        rec = {"type": "SpQfi", "z": float(z), "qfi": sp_qfi_at(N, k, z)}
    return {**rec, "N": N, "k": k}


def cmd_qfi_product(args):
    cells = _grid(args.n, args.k)
    records = [_encoded(r) for r in _pmap(_product_cell, [(N, k, args.z) for N, k in cells], args.jobs)]
    return records, records


def cmd_case2(args):
    if args.k_max is not None or args.n_max is not None:
        return cmd_dichotomy(args)
    if args.n is None or args.k is None:
        raise UsageError("case2 needs --n and --k, or --k-max and --n-max for a grid")
    cells = _grid(args.n, args.k)
    reports = _pmap(case2_optimal, [(N, k, args.x) for N, k in cells], args.jobs)
    records = [to_record(r) for r in reports]
    return records, records


def cmd_dichotomy(args):
    if args.k_max is None or args.n_max is None:
        raise UsageError("dichotomy needs --k-max and --n-max")
    cells = dichotomy_map(args.k_max, args.n_max, args.x)
    records = [to_record(c) for c in cells]
    return records, records


def cmd_probe(args):
    tie = TieRule.parse(args.tie)
    cells = _grid(args.n, args.k)
    records = []
    for N, k in cells:
        rep = optimal_qfi(N, k, tie)
        rec = to_record(rep.probe)
        rec.update(_encoded({"N": N, "k": k, "qfi": rep.qfi, "tie": tie.value}))
        records.append(rec)
    return records, records


def cmd_highdim(args):
    e = LocalExtremes(args.delta_max, args.delta_min)
    rep = optimal_probe_highdim(args.parties, args.k, e, TieRule.parse(args.tie))
    rec = to_record(rep)
    row = _flat_probe(rec)
    row.update(delta_M=rec["extremes"]["delta_M"], delta_m=rec["extremes"]["delta_m"])
    return [rec], [row]


def cmd_oracle(args):
    cells = _grid(args.n, args.k)
    records, rows = [], []
    for N, k in cells:
        spec = brute_spectrum(N, k) if args.x is None else brute_case2_spectrum(N, k, args.x)
        rec = to_record(spec)
        extra = {"N": N, "k": k, "lambda_max": spec.lambda_max, "lambda_min": spec.lambda_min,
                 "qfi": (spec.lambda_max - spec.lambda_min) ** 2}
        if args.x is not None:
            extra["x"] = args.x
        rec.update(_encoded(extra))
        records.append(rec)
        for value, mult in rec["entries"]:
            rows.append({"N": N, "k": k, "x": rec.get("x"), "value": value, "multiplicity": mult})
    return records, rows


def _read_points(path: str) -> list[tuple[float, float]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or not {"N", "F"} <= set(reader.fieldnames):
            raise UsageError(f"{path}: CSV needs columns N and F")
        return [(float(row["N"]), _number(row["F"])) for row in reader]


def _number(text: str):
    # exact ints keep their size; math.log handles them past the double range
    try:
        return int(text)
    except ValueError:
        return float(text)


def cmd_fit(args):
    if args.csv:
        points = _read_points(args.csv)
    else:
        if args.k is None:
            raise UsageError("fit needs --k (or --csv)")
        cfg = FitConfig(args.n_min, args.n_max, args.step, args.confidence)
        points = scaling_points(args.k, args.mode, cfg)
    rec = to_record(loglog_fit(points, args.confidence))
    if not args.csv:
        rec.update(_encoded({"k": args.k, "mode": args.mode, "n_min": args.n_min, "n_max": args.n_max, "step": args.step}))
    return [rec], [rec]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbody-qfi",
        description="Maximal QFI of k-body diagonal generators.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for grid scans")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fn, **kw):
        p = sub.add_parser(name, parents=[common], help=help_text, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter, **kw)
        p.set_defaults(fn=fn)
        return p

    qfi = sub.add_parser("qfi", help="maximal QFI over all probes or over symmetric product probes")
    qsub = qfi.add_subparsers(dest="qfi_mode", required=True)
    for name, help_text, fn in (
        ("optimal", "optimal-probe QFI with exact integers", cmd_qfi_optimal),
        ("product", "symmetric product probe QFI", cmd_qfi_product),
    ):
        p = qsub.add_parser(name, parents=[common], help=help_text, epilog=EPILOG,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(fn=fn)
        p.add_argument("--n", type=int_range, required=True, help="N or lo:hi")
        p.add_argument("--k", type=int_range, required=True, help="k or lo:hi")
        if name == "optimal":
            p.add_argument("--tie", default="prefer-product")
        else:
            p.add_argument("--z", type=exact_real, help="evaluate at this cos^2(theta) instead of maximising")

    p = add("case2", "all orders up to k, estimating x", cmd_case2)
    p.add_argument("--n", type=int_range)
    p.add_argument("--k", type=int_range)
    p.add_argument("--x", type=exact_real, required=True)
    p.add_argument("--k-max", type=int)
    p.add_argument("--n-max", type=int)

    p = add("dichotomy", "argmin sectors of K_x over a (k, N) grid", cmd_dichotomy)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--x", type=exact_real, default=Fraction(1))

    p = add("probe", "optimal two-branch probe and its classification", cmd_probe)
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--k", type=int_range, required=True)
    p.add_argument("--tie", default="prefer-product")

    p = add("highdim", "local operators of arbitrary dimension", cmd_highdim)
    p.add_argument("--parties", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--tie", default="prefer-product")

    p = add("oracle", "brute-force spectrum multiset (N <= 12)", cmd_oracle)
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--k", type=int_range, required=True)
    p.add_argument("--x", type=exact_real, help="spectrum of K_x instead of h_k")

    d = FitConfig()
    p = add("fit", "log-log scaling fit with Student-t intervals", cmd_fit)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=["optimal", "product"], default="optimal")
    p.add_argument("--n-min", type=int, default=d.n_min)
    p.add_argument("--n-max", type=int, default=d.n_max)
    p.add_argument("--step", type=int, default=d.step)
    p.add_argument("--confidence", type=float, default=d.confidence)
    p.add_argument("--csv", help="fit (N, F) pairs from a CSV with columns N,F")
    return parser


def _header_key(args) -> str:
    return f"qfi-{args.qfi_mode}" if args.command == "qfi" else args.command


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        records, rows = args.fn(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    key = _header_key(args)
    if key == "case2" and (args.k_max is not None or args.n_max is not None):
        key = "dichotomy"
    text = dumps_json(records) if args.format == "json" else dumps_csv(rows, HEADERS[key])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
