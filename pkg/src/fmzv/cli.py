"""Command-line interface.

Subcommands:
  harmonic   dump mod-p harmonic sums for every composition of a weight
  solve      one bounded additive relation problem over Z/NZ
  pipeline   full relation discovery from a config file
  verify     recompute a relation table mod fresh primes
  bench      time the tree-DP kernels (compiled vs pure)

Exit codes: 0 success, 1 verification failure, 2 configuration or parse
error, 3 strict-guard failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from . import __version__, _kernels
from .bench import format_report, run_bench
from .harmonic import mhs_horizontal, mhs_naive, mhs_vertical, multi_prime_mhs
from .indices import compositions
from .mitm import ZmodN, solve_bounded_relation
from .modarith import Prime
from .pipeline import (
    ConfigError,
    expected_dimension,
    parse_config_text,
    run_pipeline,
    vanishing_guard,
    verify_records,
)
from .tableio import (
    BUILTIN_TABLES,
    DISCOVERY_PRIMES_W10,
    RelationTable,
    TableFormatError,
    dumps_csv,
    dumps_json,
    resolve_table,
)

ENGINES = ("auto", "naive", "horizontal", "vertical", "tree")


def _env_workers() -> int:
    try:
        return max(1, int(os.environ.get("FMZV_WORKERS", "1")))
    except ValueError:
        return 1


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ConfigError(f"malformed integer list {text!r}") from None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_harmonic(args) -> int:
    primes = [Prime(p) for p in _parse_int_list(args.primes)]
    weight = args.weight
    engine = args.engine
    if engine == "auto":
        engine = "tree"  # whole-weight dumps always favour the tree sweep
    if engine == "tree":
        table = multi_prime_mhs(primes, weight, workers=args.workers)
        values = {k: dict(zip(primes, rv.entries)) for k, rv in table.items()}
    else:
        values = {}
        for k in compositions(weight):
            per = {}
            for p in primes:
                if p <= weight:
                    raise ConfigError(f"prime {p} must exceed the weight {weight}")
                if engine == "naive":
                    per[p] = mhs_naive(p, k, int(p) - 1)
                elif engine == "horizontal":
                    per[p] = mhs_horizontal(p, k)[-1]
                else:
                    per[p] = mhs_vertical(p, k)
            values[k] = per
    rows = [(k, p, values[k][p]) for k in compositions(weight) for p in primes]
    if args.format == "json":
        doc = {
            "weight": weight,
            "primes": [int(p) for p in primes],
            "engine": engine,
            "values": [
                {"index": str(k), "prime": int(p), "value": v} for k, p, v in rows
            ],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = ["index,prime,value"]
        for k, p, v in rows:
            index_text = f'"{k}"' if "," in str(k) else str(k)
            lines.append(f"{index_text},{int(p)},{v}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


def cmd_solve(args) -> int:
    elements = _parse_int_list(args.elements)
    if not elements:
        raise ConfigError("need at least one element")
    group = ZmodN(args.modulus)
    hit = solve_bounded_relation(
        group, [group.element(x) for x in elements], args.bound
    )
    if hit is None:
        print("none")
    else:
        print("coefficients: (" + ",".join(str(c) for c in hit.coefficients) + ")")
    return 0


def cmd_pipeline(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        config = parse_config_text(fh.read(), default_workers=_env_workers())
    if args.workers is not None:
        config = replace(config, workers=args.workers)
    if args.keys_only:
        config = replace(config, keys_only=True)

    guard = vanishing_guard(config)
    d_expected = expected_dimension(config.weight)
    print(f"weight {config.weight}, bound {config.bound}, {len(config.primes)} primes")
    print(f"N = {guard.n}")
    print(
        f"guard: {'PASS' if guard.passed else 'WARNING'}"
        f" (threshold {guard.threshold}, weak threshold {guard.weak_threshold})"
    )
    if not guard.passed and args.strict_guard:
        print("aborting: guard failed and --strict-guard is set", file=sys.stderr)
        return 3

    result = run_pipeline(config)
    print(f"expected dimension d_{config.weight} = {d_expected}")
    print(f"basis ({len(result.basis)}): " + " ".join(str(k) for k in result.basis))
    print(
        f"classified {len(compositions(config.weight))} compositions: "
        f"{len(result.basis)} basis, {len(result.zero_rows)} zero rows, "
        f"{len(result.related_rows)} related"
    )
    table = RelationTable.from_result(result)
    residues = verify_records(table.records(), config.primes, config.workers)
    bad = sum(1 for r in residues if any(v != 0 for v in r.values()))
    print(f"re-verified {len(residues) - bad}/{len(residues)} relations mod all primes")
    prefix = args.output or f"relations_w{config.weight}"
    _write_output(dumps_csv(table), prefix + ".csv")
    _write_output(dumps_json(table, config, residues), prefix + ".json")
    print(f"wrote {prefix}.csv and {prefix}.json")
    return 1 if bad else 0


def cmd_verify(args) -> int:
    table = resolve_table(args.table)
    primes = (
        [Prime(p) for p in _parse_int_list(args.primes)]
        if args.primes
        else [Prime(p) for p in DISCOVERY_PRIMES_W10]
    )
    records = table.records()
    residues = verify_records(records, primes, workers=args.workers)
    failures = 0
    report_rows = []
    for rec, res in zip(records, residues):
        ok = all(v == 0 for v in res.values())
        failures += 0 if ok else 1
        report_rows.append((rec, res, ok))
        if args.format == "text":
            coeff = "(" + ",".join(str(c) for c in rec.coefficients) + ")"
            line = f"{'PASS' if ok else 'FAIL'} {rec.target} {coeff}"
            if not ok:
                line += "  residues " + str(res)
            print(line)
    summary = f"{len(records) - failures}/{len(records)} relations vanish mod all primes"
    if args.format == "json":
        doc = {
            "table_weight": table.weight,
            "primes": [int(p) for p in primes],
            "passed": len(records) - failures,
            "failed": failures,
            "rows": [
                {
                    "target": str(rec.target),
                    "coefficients": list(rec.coefficients),
                    "residues": {str(p): v for p, v in res.items()},
                    "ok": ok,
                }
                for rec, res, ok in report_rows
            ],
        }
        _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        print(summary)
        if args.output:
            _write_output(summary + "\n", args.output)
    return 1 if failures else 0


def cmd_bench(args) -> int:
    primes = _parse_int_list(args.primes)
    backends = args.backends.split(",") if args.backends else None
    report = run_bench(args.weight, primes, repeat=args.repeat, backends=backends)
    print(f"active backend: {_kernels.backend_name()}")
    print(format_report(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmzv",
        description="Finite multiple zeta values: harmonic sums, bounded "
        "relation search, and relation-table verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("harmonic", help="dump mod-p harmonic sums for one weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--primes", required=True, help="comma-separated primes")
    p.add_argument(
        "--engine",
        choices=ENGINES,
        default="auto",
        help="computation engine; naive/horizontal/vertical are per-index "
        "cross-check paths, tree computes the whole weight in one sweep",
    )
    p.add_argument("--workers", type=int, default=_env_workers())
    p.add_argument("--output", help="write to file instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("solve", help="bounded additive relation over Z/NZ")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--elements", required=True, help="comma-separated integers")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pipeline", help="full relation discovery from a config file")
    p.add_argument("config", help="key = value config file")
    p.add_argument("--output", help="output prefix (default relations_w<weight>)")
    p.add_argument("--workers", type=int, help="override the config worker count")
    p.add_argument("--keys-only", action="store_true", help="store dictionary keys only")
    p.add_argument(
        "--strict-guard",
        action="store_true",
        help="abort (exit 3) when the accidental-vanishing guard warns",
    )
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("verify", help="re-verify a relation table mod given primes")
    p.add_argument("table", help="table file (csv/json) or " + ", ".join(BUILTIN_TABLES))
    p.add_argument("--primes", help="comma-separated primes (default: the discovery primes)")
    p.add_argument("--workers", type=int, default=_env_workers())
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write the report to a file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the tree-DP kernels")
    p.add_argument("--weight", type=int, default=10)
    p.add_argument("--primes", default="10007,20011")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--backends", help="comma list among: compiled, pure (default: all)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, TableFormatError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
