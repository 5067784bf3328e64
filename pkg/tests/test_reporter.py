import json
import math

import pytest

from circlespace.renderer import flatten, format_csv, format_value, print_records, print_report, print_spectrum
from circlespace.reporter import CaseResult, VerificationReport, generate_report, merge_reports
from circlespace.spectrum import QuantumNumbers, spectrum_line


def test_case_result():
    assert CaseResult("a", 1e-13, 1e-12).passed
    assert CaseResult("exact", 0.0, 0.0).passed
    assert not CaseResult("b", 2e-12, 1e-12).passed
    assert not CaseResult("nan", math.nan, 1.0).passed
    assert CaseResult("a", 0.5, 1.0).to_record() == {"id": "a", "max_error": 0.5, "tolerance": 1.0, "pass": True}


def test_generate_report_accepts_every_shape():
    report = generate_report(
        "demo",
        [CaseResult("a", 0.0, 0.0), {"id": "b", "max_error": 1, "tolerance": 2}, ("c", 3.0, 2.0)],
    )
    assert [c.id for c in report.cases] == ["a", "b", "c"]
    assert not report.overall
    assert [c.id for c in report.failures] == ["c"]
    with pytest.raises(TypeError):
        generate_report("demo", ["nonsense"])


def test_non_finite_errors_stay_serializable():
    report = generate_report("demo", [("inf", math.inf, 1.0), ("nan", math.nan, 1.0)])
    assert all(c.max_error == 1.7976931348623157e308 for c in report.cases)
    assert not report.overall
    json.dumps(report.to_record(), allow_nan=False)


def test_merge_reports_prefixes_ids():
    merged = merge_reports(
        "all",
        [
            VerificationReport("x", (CaseResult("one", 0.0, 0.0),)),
            VerificationReport("y", (CaseResult("two", 1.0, 0.0),)),
        ],
    )
    assert [c.id for c in merged.cases] == ["x/one", "y/two"]
    assert merged.suite == "all"
    assert not merged.overall


def test_format_value():
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(1.0) == "1"
    assert format_value(True) == "true"
    assert format_value(3) == "3"


def test_format_csv_bytes():
    text = format_csv(("id", "max_error", "pass"), [{"id": "a", "max_error": 0.25, "pass": False}])
    assert text == "id,max_error,pass\na,0.25,false\n"


def test_flatten():
    assert flatten({"chart": "M", "coords": [1.0, 2.0], "R1": 3.0}) == {
        "chart": "M",
        "coords_0": 1.0,
        "coords_1": 2.0,
        "R1": 3.0,
    }


def test_print_report_json(capsys):
    print_report(generate_report("demo", [("a", 0.0, 0.0)]), "json")
    data = json.loads(capsys.readouterr().out)
    assert data["suite"] == "demo" and data["overall"] is True
    assert data["cases"] == [{"id": "a", "max_error": 0.0, "tolerance": 0.0, "pass": True}]


def test_print_report_table(capsys):
    print_report(generate_report("demo", [("good", 0.0, 1.0), ("bad", 2.0, 1.0)]), "table")
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" in out
    assert "1 case(s) failed" in out


def test_print_report_csv(capsys):
    print_report(generate_report("demo", [("a", 0.5, 1.0)]), "csv")
    assert capsys.readouterr().out == "id,max_error,tolerance,pass\na,0.5,1,true\n"


def test_print_spectrum_csv(capsys):
    line = spectrum_line(1 / 137, QuantumNumbers(1), 510998.95)
    print_spectrum([line], "csv")
    header, row = capsys.readouterr().out.splitlines()
    assert header == "n_theta,n_r,n,energy_natural,energy_ev,binding_ev,reference_ev,abs_diff"
    assert row.startswith("1,0,1,")
    assert float(row.split(",")[4]) == line.energy_ev


def test_print_records(capsys):
    records = [{"chart": "T", "coords": [0.0, 1.0, 2.0, 3.0], "R0": 2.0}]
    print_records(records, "json")
    assert json.loads(capsys.readouterr().out) == records[0]
    print_records(records, "csv")
    assert capsys.readouterr().out == "chart,coords_0,coords_1,coords_2,coords_3,R0\nT,0,1,2,3,2\n"
