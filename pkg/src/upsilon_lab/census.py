"""Batch processing of knot lists: read CSV / JSON-lines files of Alexander
polynomials, compute reports, render the non-integrality table."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .algebraic import coprime_pairs, torus_alexander
from .errors import InputError, ParseError
from .exactmath import LaurentPoly, parse_laurent
from .family import kn_alexander_closed
from .upsilon import report

THREADS_ENV = "UPSILON_LAB_THREADS"


@dataclass(frozen=True)
class CensusRecord:
    name: str
    delta: LaurentPoly


@dataclass
class CensusReport:
    rows: list = field(default_factory=list)
    rejects: list = field(default_factory=list)  # (name, reason) pairs

    @property
    def non_integral(self) -> list:
        return [r for r in self.rows if not r.is_integral]

    @property
    def non_integral_count(self) -> int:
        return len(self.non_integral)

    @property
    def denominators(self) -> list:
        return sorted({r.minus_three_integral.denominator for r in self.non_integral})

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "rejects": [{"name": n, "reason": why} for n, why in self.rejects],
            "count": len(self.rows),
            "non_integral_count": self.non_integral_count,
            "denominators": self.denominators,
        }


def _data_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield lineno, line


def parse_census_csv(text: str) -> list:
    records = []
    for lineno, line in _data_lines(text):
        row = next(csv.reader([line]))
        if len(row) != 2:
            raise ParseError(f"expected 2 columns (name,polynomial), got {len(row)}", lineno)
        name, poly = (c.strip() for c in row)
        if (name.lower(), poly.lower()) == ("name", "polynomial"):
            continue
        try:
            records.append(CensusRecord(name, parse_laurent(poly)))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return records


def parse_census_jsonl(text: str) -> list:
    records = []
    for lineno, line in _data_lines(text):
        try:
            obj = json.loads(line)
            name = str(obj["name"])
            if "coeffs" in obj:
                delta = LaurentPoly(int(obj.get("minDegree", 0)), [int(c) for c in obj["coeffs"]])
            else:
                delta = parse_laurent(obj["polynomial"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad record: {exc}", lineno) from None
        records.append(CensusRecord(name, delta))
    return records


def read_census(path, fmt: str | None = None) -> list:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"census file not found: {path}")
    if fmt is None:
        fmt = "jsonl" if path.suffix in (".jsonl", ".json", ".ndjson") else "csv"
    text = path.read_text(encoding="utf-8")
    if fmt == "csv":
        return parse_census_csv(text)
    if fmt == "jsonl":
        return parse_census_jsonl(text)
    raise InputError(f"unknown census format {fmt!r}")


def _thread_count(threads):
    if threads is None:
        threads = os.environ.get(THREADS_ENV)
    try:
        return max(1, int(threads)) if threads else 1
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be an integer, got {threads!r}") from None


def _one(rec: CensusRecord):
    try:
        return report(rec.delta, rec.name), None
    except InputError as exc:
        return None, (rec.name, str(exc))


def census_from_records(records, threads=None) -> CensusReport:
    n = _thread_count(threads)
    if n == 1:
        results = [_one(r) for r in records]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_one, records))
    out = CensusReport()
    for row, reject in results:
        if row is not None:
            out.rows.append(row)
        else:
            out.rejects.append(reject)
    return out


def run_census(path, fmt: str | None = None, threads=None) -> CensusReport:
    return census_from_records(read_census(path, fmt), threads)


def summary_line(r: CensusReport) -> str:
    dens = "{" + ", ".join(str(d) for d in r.denominators) + "}"
    return f"non-integral: {r.non_integral_count} of {len(r.rows)} knots; denominators: {dens}"


def emit_table(r: CensusReport, style: str = "markdown", per_row: int = 4) -> str:
    """Table of the knots whose -3*int(Upsilon) is not an integer, plus a summary line."""
    rows = r.non_integral
    if style == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "minus3I"])
        for row in rows:
            w.writerow([row.name, str(row.minus_three_integral)])
        buf.write("# " + summary_line(r) + "\n")
        return buf.getvalue()
    if style == "markdown":
        header = "|" + " knot | -3∫Υ |" * per_row
        sep = "|" + "---|---|" * per_row
        lines = [header, sep]
        for i in range(0, len(rows), per_row):
            chunk = rows[i:i + per_row]
            cells = [f" {x.name} | {x.minus_three_integral} |" for x in chunk]
            cells += ["  |  |"] * (per_row - len(chunk))
            lines.append("|" + "".join(cells))
        lines.append("")
        lines.append(summary_line(r))
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown table style {style!r}")


def read_table_csv(text: str) -> dict:
    """Inverse of emit_table(style='csv'): name -> Fraction."""
    out = {}
    for lineno, line in _data_lines(text):
        row = next(csv.reader([line]))
        if row == ["name", "minus3I"]:
            continue
        if len(row) != 2:
            raise ParseError("expected name,minus3I", lineno)
        out[row[0]] = Fraction(row[1])
    return out


def rows_by_name(r: CensusReport) -> dict:
    return {row.name: row for row in r.rows}



def synthetic_records(n_max: int = 50, pq_limit: int = 12) -> list:
    """K_1 .. K_{n_max} followed by T(p, q) for coprime 2 <= p < q <= pq_limit."""
    recs = [CensusRecord(f"K_{n}", kn_alexander_closed(n)) for n in range(1, n_max + 1)]
    recs += [CensusRecord(f"T({p},{q})", torus_alexander(p, q)) for p, q in coprime_pairs(pq_limit)]
    return recs


def write_census_csv(records, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "polynomial"])
        for rec in records:
            w.writerow([rec.name, str(rec.delta)])
