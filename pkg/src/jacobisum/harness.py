"""Command-line front end, JSON file formats, and run configuration.

All files are self-describing JSON with a "schema" field.  Exact table
entries travel as lists of "p/q" strings (lowest terms, little-endian in
the power basis), which is bit-exact; complex tables carry [re, im]
pairs.  Output is deterministic: sorted keys, compact separators, one
trailing newline.

Exit codes: 0 all checks passed, 1 a check or comparison failed,
2 malformed input or arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .abelian import GroupSpec
from .cyclotomic import Cyclotomic
from .enumerator import enumerate_jacobi
from .ffield import DEFAULT_Q_MAX, FiniteField, build_field
from .jacobi import (
    ApproxTable,
    JacobiTable,
    compute_jacobi,
    twist_automorphism,
    twist_galois,
)
from .reconstructor import ReconstructionReport, reconstruct
from .verifier import (
    DEFAULT_CONVOLUTION_MAX,
    DEFAULT_EXHAUSTIVE_MAX,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    CheckResult,
    VerificationReport,
    verify_all,
)

FIELD_SCHEMA = "field/1"
TABLE_SCHEMA = "jacobi-table/1"
APPROX_TABLE_SCHEMA = "jacobi-table-approx/1"
VERIFICATION_SCHEMA = "verification-report/1"
RECONSTRUCTION_SCHEMA = "reconstruction-report/1"

TABLE_DUMP_MAX = 64  # field files include full op tables up to this size


@dataclass
class RunConfig:
    """Knobs shared by the CLI commands; defaults match the library."""

    exhaustive_max: int = DEFAULT_EXHAUSTIVE_MAX
    convolution_max: int = DEFAULT_CONVOLUTION_MAX
    sample_count: int = DEFAULT_SAMPLE_COUNT
    seed: int = DEFAULT_SEED
    tolerance: float = DEFAULT_TOLERANCE
    field_q_max: int = DEFAULT_Q_MAX
    enum_m_max: int = 7
    threads: int = 1

    def __post_init__(self):
        if not 0 < self.exhaustive_max <= self.convolution_max:
            raise ValueError("mode thresholds must be ordered and positive")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


def resolve_threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("JACOBI_THREADS")
    return max(1, int(env)) if env else 1


# -- JSON helpers -------------------------------------------------------------


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_json(path: str | Path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


# -- field files --------------------------------------------------------------


def field_to_json(field: FiniteField) -> dict:
    doc = {
        "schema": FIELD_SCHEMA,
        "p": field.p,
        "n": field.n,
        "q": field.q,
        "modulus": list(field.modulus),
        "generator": list(field.generator),
    }
    if field.q <= TABLE_DUMP_MAX:
        els = field.elements
        index = {e: i for i, e in enumerate(els)}
        doc["addition"] = [
            [index[field.add(a, b)] for b in els] for a in els
        ]
        doc["multiplication"] = [
            [index[field.mul(a, b)] for b in els] for a in els
        ]
    return doc


def field_from_json(doc: dict) -> FiniteField:
    if doc.get("schema") != FIELD_SCHEMA:
        raise ValueError(f"not a field file (schema {doc.get('schema')!r})")
    return FiniteField(
        int(doc["p"]),
        int(doc["n"]),
        tuple(int(c) for c in doc["modulus"]),
        tuple(int(c) for c in doc["generator"]),
    )


# -- table files --------------------------------------------------------------


def table_to_json(table: JacobiTable) -> dict:
    return {
        "schema": TABLE_SCHEMA,
        "factors": list(table.group.factors),
        "conductor": table.group.m,
        "entries": [[e.to_strings() for e in row] for row in table.values],
    }


def approx_table_to_json(table: ApproxTable) -> dict:
    return {
        "schema": APPROX_TABLE_SCHEMA,
        "factors": list(table.group.factors),
        "conductor": table.group.m,
        "entries": [
            [[z.real, z.imag] for z in row] for row in table.entries
        ],
    }


def table_from_json(doc: dict) -> JacobiTable | ApproxTable:
    schema = doc.get("schema")
    if schema not in (TABLE_SCHEMA, APPROX_TABLE_SCHEMA):
        raise ValueError(f"not a table file (schema {schema!r})")
    group = GroupSpec(tuple(int(n) for n in doc["factors"]))
    if int(doc["conductor"]) != group.m:
        raise ValueError("conductor does not match the factor list")
    entries = doc["entries"]
    m = group.m
    if len(entries) != m or any(len(row) != m for row in entries):
        raise ValueError(f"entries must form an {m} x {m} array")
    if schema == TABLE_SCHEMA:
        rows = [
            [Cyclotomic.from_strings(m, cell) for cell in row] for row in entries
        ]
        return JacobiTable(group, rows)
    rows_c = tuple(
        tuple(complex(cell[0], cell[1]) for cell in row) for row in entries
    )
    return ApproxTable(group, rows_c)


# -- reports ------------------------------------------------------------------


def _value_json(value):
    if value is None:
        return None
    if isinstance(value, Cyclotomic):
        return {"kind": "exact", "coefficients": value.to_strings()}
    if isinstance(value, complex):
        return {"kind": "complex", "re": value.real, "im": value.imag}
    if isinstance(value, (int, float)):
        return value
    return str(value)


def _check_json(result: CheckResult) -> dict:
    doc = {"passed": result.passed}
    if not result.passed:
        doc["witness"] = [list(w) if isinstance(w, tuple) else w for w in result.witness]
        doc["lhs"] = _value_json(result.lhs)
        doc["rhs"] = _value_json(result.rhs)
    return doc


def verification_to_json(report: VerificationReport) -> dict:
    doc = {
        "schema": VERIFICATION_SCHEMA,
        "passed": report.passed,
        "symmetry": _check_json(report.symmetry),
        "cocycle_star": _check_json(report.cocycle_star),
        "cocycle_direct": _check_json(report.cocycle_direct),
        "convolution_sum": _check_json(report.convolution),
        "convolution_mode": report.convolution_mode,
        "approximate": report.approximate,
    }
    if report.convolution_mode == "sampled":
        doc["sample_count"] = report.sample_count
        doc["seed"] = report.seed
    if report.approximate:
        doc["tolerance"] = report.tolerance
    return doc


def reconstruction_to_json(report: ReconstructionReport) -> dict:
    g = report.group
    doc = {
        "schema": RECONSTRUCTION_SCHEMA,
        "factors": list(g.factors),
        "case": report.case,
        "ok": report.ok,
        "approximate": report.approximate,
    }
    if report.verification is not None:
        doc["verification"] = verification_to_json(report.verification)
    if report.support is not None:
        doc["support"] = [list(x) for x in report.support]
    if report.support_map is not None:
        doc["support_map"] = [
            [list(x), list(y)] for x, y in sorted(report.support_map.items())
        ]
    if report.image is not None:
        doc["image"] = [list(x) for x in report.image]
    if report.involution is not None:
        doc["involution"] = list(report.involution)
    if report.baseline is not None:
        doc["baseline"] = report.baseline.to_strings()
    if report.baseline_ok is not None:
        doc["baseline_ok"] = report.baseline_ok
    if report.addition is not None:
        doc["addition"] = [list(row) for row in report.addition.table]
    if report.field_checks is not None:
        fc = report.field_checks
        doc["field_checks"] = {
            "passed": fc.passed,
            "commutative": _check_json(fc.commutative),
            "associative": _check_json(fc.associative),
            "distributive": _check_json(fc.distributive),
            "identity": _check_json(fc.identity),
            "inverses": _check_json(fc.inverses),
            "characteristic": fc.characteristic,
            "prime_power_ok": fc.prime_power_ok,
        }
    if report.roundtrip_ok is not None:
        doc["roundtrip_ok"] = report.roundtrip_ok
    if report.inconsistency is not None:
        doc["inconsistency"] = {
            "stage": report.inconsistency.get("stage"),
            "detail": report.inconsistency.get("detail", ""),
            "witness": repr(report.inconsistency.get("witness")),
        }
    return doc


# -- expected addition of a known field, for round trips ----------------------


def field_addition_rows(field: FiniteField) -> tuple[tuple[int, ...], ...]:
    """The field's addition in reconstruction-carrier layout: symbol 0 is
    zero, symbol k >= 1 is the element with discrete log k - 1."""
    q = field.q
    carrier = [field.zero] + [field.power(t) for t in range(q - 1)]
    sym = {e: i for i, e in enumerate(carrier)}
    return tuple(
        tuple(sym[field.add(carrier[i], carrier[j])] for j in range(q))
        for i in range(q)
    )


# -- CLI ----------------------------------------------------------------------


def _add_verify_flags(sub):
    sub.add_argument("--mode", choices=["exhaustive", "convolution", "sampled"])
    sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_COUNT)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi",
        description="Exact Jacobi-sum tables, axiom verification, and field reconstruction.",
    )
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: JACOBI_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="construct GF(p^n) and write its description")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("jacobi", help="compute the Jacobi-sum table of a field file")
    p.add_argument("--field", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="check the three axioms on a table file")
    p.add_argument("--table", required=True)
    p.add_argument("--out")
    _add_verify_flags(p)

    p = sub.add_parser("reconstruct", help="recover the field structure from a table file")
    p.add_argument("--table", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--strict", action="store_true")
    _add_verify_flags(p)

    p = sub.add_parser("roundtrip", help="field -> table -> verify -> reconstruct -> compare")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="enumerate all Jacobi functions on a small group")
    p.add_argument("--group", required=True, help="comma-separated cyclic factors, e.g. 2,4")
    p.add_argument("--list", action="store_true", help="write the tables as JSON files")
    p.add_argument("--out-dir", default=".")

    p = sub.add_parser("twist", help="twist a table by a power automorphism")
    p.add_argument("--table", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--galois", action="store_true",
                   help="act on values (zeta -> zeta^r) instead of re-indexing")
    p.add_argument("--out", required=True)
    return parser


def _load_exact_table(path: str) -> JacobiTable:
    table = table_from_json(read_json(path))
    if not isinstance(table, JacobiTable):
        raise ValueError("an exact table file is required here")
    return table


def _print_verification(report: VerificationReport) -> None:
    for result in report.checks:
        line = f"{result.check}: {'pass' if result.passed else 'FAIL'}"
        if result.check == "convolution-sum":
            line += f" [{report.convolution_mode}]"
        if not result.passed:
            line += f" witness={result.witness}"
        print(line)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code else 0
    try:
        return _dispatch(args)
    except (ValueError, OSError, KeyError, TypeError, ZeroDivisionError,
            json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    threads = resolve_threads(args.threads)

    if args.command == "field":
        field = build_field(args.p, args.n)
        write_json(args.out, field_to_json(field))
        print(f"wrote GF({field.q}) to {args.out}")
        return 0

    if args.command == "jacobi":
        field = field_from_json(read_json(args.field))
        table = compute_jacobi(field, threads=threads)
        write_json(args.out, table_to_json(table))
        print(f"wrote {table.group.m} x {table.group.m} table to {args.out}")
        return 0

    if args.command == "verify":
        cfg = _config_from(args)
        table = table_from_json(read_json(args.table))
        report = verify_all(
            table,
            c_mode=args.mode,
            sample_count=cfg.sample_count,
            seed=cfg.seed,
            tolerance=cfg.tolerance,
        )
        _print_verification(report)
        if args.out:
            write_json(args.out, verification_to_json(report))
        return 0 if report.passed else 1

    if args.command == "reconstruct":
        cfg = _config_from(args)
        table = table_from_json(read_json(args.table))
        report = reconstruct(
            table,
            force=args.force,
            strict=args.strict,
            c_mode=args.mode,
            sample_count=cfg.sample_count,
            seed=cfg.seed,
            tolerance=cfg.tolerance,
        )
        write_json(args.out, reconstruction_to_json(report))
        print(f"case: {report.case}; ok: {report.ok}")
        return 0 if report.ok else 1

    if args.command == "roundtrip":
        return _roundtrip(args, threads)

    if args.command == "enumerate":
        factors = tuple(int(part) for part in args.group.split(","))
        result = enumerate_jacobi(GroupSpec(factors))
        print(f"tables: {result.count}")
        print(f"oracle: {result.oracle_count}")
        print(f"agreement: {str(result.agreement).lower()}")
        if args.list:
            out_dir = Path(args.out_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            tag = "x".join(str(n) for n in factors)
            for i, table in enumerate(result.tables):
                path = out_dir / f"jacobi_{tag}_{i}.json"
                write_json(path, table_to_json(table))
                print(f"wrote {path}")
        return 0 if result.agreement else 1

    if args.command == "twist":
        table = _load_exact_table(args.table)
        twisted = twist_galois(table, args.r) if args.galois else twist_automorphism(
            table, args.r
        )
        write_json(args.out, table_to_json(twisted))
        print(f"wrote twist r={args.r} to {args.out}")
        return 0

    raise ValueError(f"unknown command {args.command!r}")


def _config_from(args) -> RunConfig:
    return RunConfig(sample_count=args.samples, seed=args.seed, tolerance=args.tolerance)


def _roundtrip(args, threads: int) -> int:
    field = build_field(args.p, args.n)
    table = compute_jacobi(field, threads=threads)
    report = reconstruct(table)
    if args.out:
        write_json(args.out, reconstruction_to_json(report))
    if not report.ok or report.case != "field":
        print(f"roundtrip FAILED: case={report.case}, ok={report.ok}")
        return 1
    expected = field_addition_rows(field)
    got = report.addition.table
    if got != expected:
        print("roundtrip FAILED: reconstructed addition differs from the field")
        return 1
    print(f"roundtrip ok: GF({field.q}) addition recovered exactly")
    return 0


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
