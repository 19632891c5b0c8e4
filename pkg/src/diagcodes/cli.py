"""Command-line interface: construction, search, analysis, lifting, simulation.

Every command is a pure function of (inputs, flags, seed); commands that
write files also write a manifest with parameters, seeds and SHA-256 digests
sufficient to regenerate the outputs bit-identically. Exit codes: 0 success,
1 verification failure, 2 validation error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import secrets
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .board import DiagonalVector, build_parity_check, code_rates
from .catalog import KNOWN_CODES, printed_rate_matches
from .errors import BudgetExceeded
from .extend import build_extension, extension_rate
from .gf2 import AlistError, dumps_alist, rank_gf2, read_alist, weight_profile
from .girth import girth, girth_structured
from .qc import QcExponentMatrix, expand, search_exponents
from .search import gallager_min_length, girth12_condition_holds, search_min_m
from .simulate import ber_sweep, records_to_csv, records_to_json

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(prefix: Path, command: str, params: dict,
                    inputs: list[Path], outputs: list[Path]) -> Path:
    manifest = {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "inputs": {str(p): _sha256(p) for p in inputs},
        "outputs": {str(p): _sha256(p) for p in outputs},
    }
    path = prefix.with_suffix(prefix.suffix + ".manifest.json")
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def _parse_v(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse v list {text!r}; expected e.g. 1,5,13")


def _resolve_seed(seed: int | None) -> int:
    return secrets.randbits(32) if seed is None else seed


def cmd_construct(args) -> int:
    vec = DiagonalVector(args.m, _parse_v(args.v))
    if vec.t < 3:
        raise ValueError("t must be at least 3 (need t >= 3 for positive rates)")
    if args.extension:
        M = build_extension(vec)
    else:
        M = build_parity_check(vec)
    rank = rank_gf2(M)
    report = girth(M)
    rates = code_rates(vec, rank_gf2(build_parity_check(vec)))
    prof = weight_profile(M)
    out = Path(args.out) if args.out else Path(
        f"{'M' if args.extension else 'H'}_m{vec.m}_t{vec.t}")
    alist_path = out.with_suffix(".alist")
    alist_path.write_text(dumps_alist(M))
    info = {
        "m": vec.m,
        "v": list(vec.offsets),
        "extension": bool(args.extension),
        "rows": M.rows,
        "cols": M.cols,
        "rank": rank,
        "girth": report.girth,
        "witness": list(report.witness) if report.witness else None,
        "design_rate": float(rates.design_rate),
        "actual_rate": float(rates.actual_rate),
        "sum_condition_holds": girth12_condition_holds(vec),
        "row_weight_range": [min(prof.row_weights), max(prof.row_weights)],
        "col_weight_range": [min(prof.col_weights), max(prof.col_weights)],
    }
    if args.extension:
        info["extension_rate"] = float(extension_rate(vec))
    report_path = out.with_suffix(".report.json")
    report_path.write_text(json.dumps(info, indent=2, sort_keys=True) + "\n")
    _write_manifest(out, "construct",
                    {"m": args.m, "v": args.v, "extension": bool(args.extension)},
                    [], [alist_path, report_path])
    print(f"{alist_path}: {M.rows}x{M.cols}, girth {report.girth}, "
          f"rate {float(rates.actual_rate):.3f}")
    return EXIT_OK


def _table_row(vec: DiagonalVector) -> dict:
    H = build_parity_check(vec)
    rank = rank_gf2(H)
    rates = code_rates(vec, rank)
    bound = gallager_min_length(vec.t)
    return {
        "m": vec.m,
        "t": vec.t,
        "r": float(rates.actual_rate),
        "r_prime": float(extension_rate(vec)),
        "n": rates.block_length,
        "bound": bound,
        "bound_met": rates.block_length == bound,
        "v": list(vec.offsets),
        "girth": girth_structured(vec).girth,
    }


def cmd_search(args) -> int:
    seed = args.seed
    result = search_min_m(args.t, m_start=args.m_start, seed=seed,
                          node_budget=args.budget)
    row = _table_row(result.vector)
    star = "*" if row["bound_met"] else ""
    print(f"m={row['m']} t={row['t']} r={row['r']:.2f} r'={row['r_prime']:.2f} "
          f"n={row['n']}{star} bound={row['bound']} girth={row['girth']} "
          f"v={','.join(map(str, row['v']))}")
    if args.json:
        path = Path(args.json)
        payload = {**row, "nodes_expanded": result.nodes_expanded,
                   "elapsed_s": result.elapsed_s, "seed": seed}
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        _write_manifest(path, "search",
                        {"t": args.t, "m_start": args.m_start, "seed": seed,
                         "budget": args.budget},
                        [], [path])
    return EXIT_OK


def cmd_girth(args) -> int:
    M = read_alist(args.matrix)
    report = girth(M, count_upto=args.count_upto)
    print(f"girth {report.girth if report.girth is not None else 'inf'}")
    if report.witness:
        print(f"witness {' '.join(map(str, report.witness))}")
    for length, count in sorted(report.short_cycle_counts.items()):
        print(f"cycles[{length}] {count}")
    if args.out:
        path = Path(args.out)
        path.write_text(json.dumps(report.to_json_dict(), indent=2,
                                   sort_keys=True) + "\n")
        _write_manifest(path, "girth",
                        {"matrix": args.matrix, "count_upto": args.count_upto},
                        [Path(args.matrix)], [path])
    return EXIT_OK


def cmd_rank(args) -> int:
    M = read_alist(args.matrix)
    print(rank_gf2(M))
    return EXIT_OK


def cmd_lift(args) -> int:
    M = read_alist(args.matrix)
    base_girth = girth(M).girth
    if base_girth is None:
        raise ValueError("base matrix is acyclic; nothing to optimize")
    target = args.target_girth if args.target_girth else base_girth + 2
    seed = _resolve_seed(args.seed)
    result = search_exponents(M, args.lift_size, target,
                              budget=args.budget, seed=seed)
    out = Path(args.out) if args.out else Path(f"lift_N{args.lift_size}")
    qc_path = out.with_suffix(".qc.json")
    qc_path.write_text(json.dumps(result.qc.to_json_dict(), indent=2,
                                  sort_keys=True) + "\n")
    outputs = [qc_path]
    if args.expand:
        expanded_path = out.with_suffix(".expanded.alist")
        expanded_path.write_text(dumps_alist(expand(result.qc)))
        outputs.append(expanded_path)
    _write_manifest(out, "lift",
                    {"matrix": args.matrix, "lift_size": args.lift_size,
                     "target_girth": target, "seed": seed, "budget": args.budget},
                    [Path(args.matrix)], outputs)
    status = "success" if result.success else "budget exhausted"
    print(f"{status}: lifted girth >= {result.report.lower_bound} "
          f"(target {target}, N={args.lift_size}, seed {seed}, "
          f"{result.steps} steps, {result.restarts} restarts)")
    return EXIT_OK if result.success else EXIT_BUDGET


def cmd_simulate(args) -> int:
    M = read_alist(args.matrix)
    ebn0 = [float(x) for x in args.ebn0.split(",")]
    if args.rate is not None:
        rate = args.rate
    else:
        rate = float(1 - Fraction(rank_gf2(M), M.cols))
    seed = _resolve_seed(args.seed)
    records = ber_sweep(M, rate, ebn0, min_frame_errors=args.min_frame_errors,
                        max_frames=args.max_frames, decoder=args.decoder,
                        seed=seed, max_iter=args.max_iter)
    csv_text = records_to_csv(records)
    print(csv_text, end="")
    if args.out:
        path = Path(args.out)
        path.write_text(csv_text)
        json_path = path.with_suffix(".json")
        json_path.write_text(records_to_json(records) + "\n")
        _write_manifest(path, "simulate",
                        {"matrix": args.matrix, "ebn0": ebn0, "rate": rate,
                         "decoder": args.decoder, "seed": seed,
                         "min_frame_errors": args.min_frame_errors,
                         "max_frames": args.max_frames,
                         "max_iter": args.max_iter},
                        [Path(args.matrix)], [path, json_path])
    return EXIT_OK


def cmd_verify_catalog(args) -> int:
    wanted = {int(x) for x in args.rows.split(",")} if args.rows else None
    failures = 0
    for row in KNOWN_CODES:
        if wanted is not None and row.t not in wanted:
            continue
        vec = row.vector()
        problems = []
        if not girth12_condition_holds(vec):
            problems.append("sum condition fails")
        if vec.block_length != row.n:
            problems.append(f"n={vec.block_length} != {row.n}")
        g = girth_structured(vec).girth
        if g != 12:
            problems.append(f"girth={g}")
        H = build_parity_check(vec)
        rank = rank_gf2(H)
        if rank != row.m - 1:
            problems.append(f"rank={rank} != m-1")
        rates = code_rates(vec, rank)
        if not printed_rate_matches(row.r_printed, float(rates.actual_rate)):
            problems.append(f"r={float(rates.actual_rate):.4f} vs {row.r_printed}")
        if not printed_rate_matches(row.r_prime_printed, float(extension_rate(vec))):
            problems.append(
                f"r'={float(extension_rate(vec)):.4f} vs {row.r_prime_printed}")
        bound = gallager_min_length(row.t)
        if bound != row.min_length_bound:
            problems.append(f"bound={bound} != {row.min_length_bound}")
        if row.starred != (row.n == bound):
            problems.append("star flag inconsistent")
        if problems:
            failures += 1
            print(f"FAIL t={row.t}: {'; '.join(problems)}")
        else:
            star = "*" if row.starred else ""
            print(f"PASS t={row.t} m={row.m} n={row.n}{star} bound={bound}")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagcodes",
        description="Girth-12 cycle codes from broken-diagonal colorings: "
                    "construct, search, lift, and simulate.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a parity-check matrix")
    p.add_argument("-m", type=int, required=True, help="board size")
    p.add_argument("-v", required=True, help="comma-separated odd offsets")
    p.add_argument("--extension", action="store_true",
                   help="build the column-weight-3 extension")
    p.add_argument("--out", help="output prefix (default derived from m, t)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="smallest board size for a given row weight")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--m-start", type=int, default=14)
    p.add_argument("--seed", type=int, default=None,
                   help="randomize choice order (minimal m unaffected)")
    p.add_argument("--budget", type=int, default=None, help="DFS node budget")
    p.add_argument("--json", help="also write the row as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("girth", help="exact Tanner girth of an alist matrix")
    p.add_argument("matrix")
    p.add_argument("--count-upto", type=int, default=None,
                   help="also census cycles up to this length")
    p.add_argument("--out", help="write a JSON report")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("rank", help="GF(2) rank of an alist matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("lift", help="search circulant exponents for a QC lift")
    p.add_argument("matrix")
    p.add_argument("-N", "--lift-size", type=int, required=True)
    p.add_argument("--target-girth", type=int, default=None,
                   help="default: base girth + 2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=20_000)
    p.add_argument("--expand", action="store_true",
                   help="also write the expanded matrix")
    p.add_argument("--out", help="output prefix")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("simulate", help="BER sweep over an AWGN channel")
    p.add_argument("matrix")
    p.add_argument("--ebn0", required=True, help="comma-separated Eb/N0 in dB")
    p.add_argument("--decoder", choices=["sum-product", "min-sum"],
                   default="sum-product")
    p.add_argument("--rate", type=float, default=None,
                   help="override the rank-based rate used for noise scaling")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--min-frame-errors", type=int, default=100)
    p.add_argument("--max-frames", type=int, default=100_000)
    p.add_argument("--max-iter", type=int, default=50)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify-catalog",
                       help="re-derive and check every published row")
    p.add_argument("--rows", help="comma-separated t values (default: all)")
    p.set_defaults(func=cmd_verify_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AlistError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
