import json
from fractions import Fraction

import pytest

from upsilon_lab.census import (
    THREADS_ENV,
    CensusRecord,
    census_from_records,
    emit_table,
    parse_census_csv,
    parse_census_jsonl,
    read_table_csv,
    rows_by_name,
    run_census,
    synthetic_records,
    write_census_csv,
)
from upsilon_lab.errors import ParseError
from upsilon_lab.family import kn_alexander_closed

K1 = "t^18 - t^17 + t^14 - t^13 + t^12 - t^11 + t^9 - t^7 + t^6 - t^5 + t^4 - t + 1"


@pytest.fixture
def small_csv(tmp_path):
    path = tmp_path / "knots.csv"
    path.write_text(
        "name,polynomial\n"
        "# comment lines and blanks are skipped\n"
        "\n"
        f"m211,{K1}\n"
        "3_1,1 - t + t^2\n"
        "4_1,-1 + 3t - t^2\n",
        encoding="utf-8",
    )
    return path


def test_run_census_csv(small_csv):
    r = run_census(small_csv)
    rows = rows_by_name(r)
    assert list(rows) == ["m211", "3_1"]
    assert rows["m211"].minus_three_integral == Fraction(117, 5) and not rows["m211"].is_integral
    assert rows["3_1"].minus_three_integral == 3 and rows["3_1"].is_integral
    assert r.non_integral_count == 1 and r.denominators == [5]
    assert [name for name, _ in r.rejects] == ["4_1"]


def test_run_census_jsonl(tmp_path, k1_delta):
    path = tmp_path / "knots.jsonl"
    lines = [
        json.dumps({"name": "m211", **k1_delta.to_json()}),
        json.dumps({"name": "t09284", "coeffs": list(kn_alexander_closed(2).coeffs)}),
        json.dumps({"name": "3_1", "polynomial": "t^2 - t + 1"}),
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    r = run_census(path)
    assert [str(x.minus_three_integral) for x in r.rows] == ["117/5", "132/5", "3"]


def test_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    r = run_census(path)
    assert r.rows == [] and r.rejects == [] and r.non_integral_count == 0 and r.denominators == []


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        run_census(tmp_path / "nope.csv")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_census_csv("name,polynomial\na,1 - t + t^2\nb,1 - t +\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_census_csv("a,1\nonly-one-column\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_census_jsonl('{"name": "a", "coeffs": [1]}\n{"name": "b"}\n')


def test_thread_count_does_not_change_output(monkeypatch):
    recs = synthetic_records(12, 7)
    serial = census_from_records(recs, threads=1).to_json()
    assert census_from_records(recs, threads=4).to_json() == serial
    monkeypatch.setenv(THREADS_ENV, "3")
    assert census_from_records(recs).to_json() == serial


def test_emit_table_markdown():
    recs = [CensusRecord("m211", kn_alexander_closed(1)), CensusRecord("t09284", kn_alexander_closed(2))]
    text = emit_table(census_from_records(recs), "markdown")
    assert "| m211 | 117/5 |" in text and "| t09284 | 132/5 |" in text
    assert text.rstrip().endswith("non-integral: 2 of 2 knots; denominators: {5}")


def test_emit_table_single_row():
    text = emit_table(census_from_records([CensusRecord("m211", kn_alexander_closed(1))]), "csv")
    data = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert data == ["name,minus3I", "m211,117/5"]


def test_emit_table_integral_only():
    r = census_from_records(synthetic_records(0, 6))
    text = emit_table(r, "csv")
    assert text.splitlines()[0] == "name,minus3I" and len(text.splitlines()) == 2
    assert "non-integral: 0 of" in text


def test_table_roundtrip():
    r = census_from_records(synthetic_records(20, 12))
    back = read_table_csv(emit_table(r, "csv"))
    assert back == {row.name: row.minus_three_integral for row in r.non_integral}


def test_synthetic_census(tmp_path):
    recs = synthetic_records()
    assert len(recs) == 50 + 34
    path = tmp_path / "synthetic.csv"
    write_census_csv(recs, path)
    r = run_census(path)
    assert len(r.rows) == 84 and not r.rejects
    assert r.non_integral_count == 50 and r.denominators == [5]
    assert {x.name for x in r.non_integral} == {f"K_{n}" for n in range(1, 51)}
