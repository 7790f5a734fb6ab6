"""Relation-table I/O and the bundled weight-10 table.

Two on-disk forms:

CSV (round-trips bit-exactly):
    # weight=10
    # basis=(8,1,1);(7,2,1);(6,3,1)
    target,coefficients
    (10),"(0,0,0,1)"
    ...

JSON carries the same rows plus the originating configuration and
per-prime verification residues when available.

The bundled table (name "builtin-w10") lists one relation for each of the
509 weight-10 compositions outside the basis (8,1,1), (7,2,1), (6,3,1),
as discovered with the eleven five-digit primes in DISCOVERY_PRIMES_W10.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .indices import parse_index
from .pipeline import PipelineConfig, PipelineResult, RelationRecord

BUILTIN_TABLES = {"builtin-w10": "weight10_relations.csv"}

DISCOVERY_PRIMES_W10 = (
    10007, 10009, 10037, 10039, 10061, 10067,
    10069, 10079, 10091, 10093, 10099,
)


class TableFormatError(ValueError):
    """Malformed relation-table file."""


@dataclass(frozen=True)
class RelationTable:
    """An ordered relation table: shared basis plus (target, coefficients) rows."""

    weight: int
    basis: tuple
    rows: tuple  # of (Index, tuple[int, ...])

    def __post_init__(self):
        for target, coeffs in self.rows:
            if len(coeffs) != len(self.basis) + 1:
                raise TableFormatError(
                    f"row {target}: expected {len(self.basis) + 1} coefficients"
                )
            if coeffs[-1] < 1:
                raise TableFormatError(f"row {target}: target coefficient must be positive")
            if target.weight != self.weight:
                raise TableFormatError(f"row {target}: weight is not {self.weight}")

    def records(self) -> list:
        return [RelationRecord(self.basis, t, c) for t, c in self.rows]

    @classmethod
    def from_result(cls, result: PipelineResult) -> "RelationTable":
        return cls(
            result.config.weight,
            result.basis,
            tuple((r.target, r.coefficients) for r in result.relations),
        )


def _coeff_text(coeffs) -> str:
    return "(" + ",".join(str(c) for c in coeffs) + ")"


def _parse_coeffs(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")) or not s[1:-1]:
        raise TableFormatError(f"malformed coefficient tuple {text!r}")
    try:
        return tuple(int(t) for t in s[1:-1].split(","))
    except ValueError:
        raise TableFormatError(f"malformed coefficient tuple {text!r}") from None


def dumps_csv(table: RelationTable) -> str:
    out = io.StringIO()
    out.write(f"# weight={table.weight}\n")
    out.write("# basis=" + ";".join(str(k) for k in table.basis) + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["target", "coefficients"])
    for target, coeffs in table.rows:
        writer.writerow([str(target), _coeff_text(coeffs)])
    return out.getvalue()


def loads_csv(text: str) -> RelationTable:
    weight = None
    basis = None
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if not sep:
                raise TableFormatError(f"malformed header comment {line!r}")
            key = key.strip()
            if key == "weight":
                weight = int(value.strip())
            elif key == "basis":
                parts = [t for t in value.strip().split(";") if t]
                basis = tuple(parse_index(t) for t in parts)
            else:
                raise TableFormatError(f"unknown header key {key!r}")
        elif line.strip():
            body.append(line)
    if weight is None or basis is None:
        raise TableFormatError("missing '# weight=' or '# basis=' header")
    reader = csv.reader(body)
    header = next(reader, None)
    if header != ["target", "coefficients"]:
        raise TableFormatError(f"expected 'target,coefficients' header, got {header}")
    rows = []
    for row in reader:
        if len(row) != 2:
            raise TableFormatError(f"expected 2 columns, got {row}")
        try:
            target = parse_index(row[0])
        except ValueError as exc:
            raise TableFormatError(str(exc)) from None
        rows.append((target, _parse_coeffs(row[1])))
    return RelationTable(weight, basis, tuple(rows))


def dumps_json(table: RelationTable, config: PipelineConfig | None = None,
               residues: list | None = None) -> str:
    """JSON form; residues, when given, is one {prime: residue} dict per row."""
    doc = {
        "weight": table.weight,
        "basis": [str(k) for k in table.basis],
        "config": None,
        "rows": [],
    }
    if config is not None:
        doc["config"] = {
            "weight": config.weight,
            "primes": [int(p) for p in config.primes],
            "bound": config.bound,
            "safety_factor": config.safety_factor,
            "workers": config.workers,
            "keys_only": config.keys_only,
        }
    for i, (target, coeffs) in enumerate(table.rows):
        row = {"target": str(target), "coefficients": list(coeffs)}
        if residues is not None:
            row["residues"] = {str(p): r for p, r in residues[i].items()}
        doc["rows"].append(row)
    return json.dumps(doc, indent=2) + "\n"


def loads_json(text: str) -> RelationTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"invalid JSON: {exc}") from None
    try:
        basis = tuple(parse_index(t) for t in doc["basis"])
        rows = tuple(
            (parse_index(r["target"]), tuple(int(c) for c in r["coefficients"]))
            for r in doc["rows"]
        )
        return RelationTable(int(doc["weight"]), basis, rows)
    except (KeyError, TypeError, ValueError) as exc:
        raise TableFormatError(f"malformed table JSON: {exc}") from None


def read_table(path: str) -> RelationTable:
    """Load a table file, CSV or JSON by extension (JSON when '.json')."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return loads_json(text)
    return loads_csv(text)


def load_builtin(name: str = "builtin-w10") -> RelationTable:
    """The bundled relation table shipped with the package."""
    if name not in BUILTIN_TABLES:
        raise KeyError(f"unknown builtin table {name!r}")
    text = (
        resources.files("fmzv")
        .joinpath("data", BUILTIN_TABLES[name])
        .read_text(encoding="utf-8")
    )
    return loads_csv(text)


def resolve_table(spec: str) -> RelationTable:
    """A builtin table name, else a path to a table file."""
    if spec in BUILTIN_TABLES:
        return load_builtin(spec)
    return read_table(spec)
