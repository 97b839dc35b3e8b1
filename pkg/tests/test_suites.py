from __future__ import annotations

import json
import time

import pytest
import sympy

from lefschetzlib.config import lefschetz_config
from lefschetzlib.suite.graph_suites import HeckeSuite
from lefschetzlib.suite.graph_suites import LefschetzSuite
from lefschetzlib.suite.local_suites import EulerSuite
from lefschetzlib.suite.local_suites import NewtonSuite
from lefschetzlib.suite.local_suites import RegionSuite
from lefschetzlib.suite.report_writer import ReportWriter
from lefschetzlib.suite.report_writer import to_serializable


def suite_config(name, **overrides):
    config = dict(lefschetz_config.suites[name])
    config.update(overrides)
    return config


def test_newton_suite_random_cases():
    report = NewtonSuite(suite_config("newton"), seed=1, cases=25).run()
    assert report["passed"]
    assert len(report["rows"]) == 25
    assert all(row["valuations"] == row["expected"] for row in report["rows"])


def test_newton_suite_from_yaml(tmp_path):
    path = tmp_path / "matrices.yml"
    path.write_text(
        "cases:\n"
        "  - {q: 3, matrix: [[0, 1], [3, 0]], expected: [1/2, 1/2]}\n"
        "  - {q: 2, matrix: [[4, 0], [0, 1]], expected: [0, 2]}\n"
        "  - {q: 5, matrix: [[0, -1], [1, 0]]}\n"
    )
    report = NewtonSuite(suite_config("newton"), input_path=str(path)).run()
    assert report["passed"]
    assert len(report["rows"]) == 3


def test_newton_suite_reports_wrong_expectation(tmp_path):
    path = tmp_path / "wrong.yml"
    path.write_text("cases:\n  - {q: 3, matrix: [[3, 0], [0, 1]], expected: [0, 0]}\n")
    report = NewtonSuite(suite_config("newton"), input_path=str(path)).run()
    assert not report["passed"]
    assert report["summary"]["failed_rows"] == 1


def test_malformed_yaml_input(tmp_path):
    path = tmp_path / "bad.yml"
    path.write_text("matrices: []\n")
    with pytest.raises(ValueError):
        NewtonSuite(suite_config("newton"), input_path=str(path)).run()


def test_region_suite():
    suite = RegionSuite(suite_config("region", min_violations=6), seed=2, cases=12)
    report = suite.run()
    assert report["passed"]
    kinds = [row["kind"] for row in report["rows"]]
    assert kinds.count("chamber") == 12
    assert kinds.count("outside_chamber") == 6
    assert all(row["det_lhs"] == row["det_rhs"] for row in report["rows"] if row["kind"] == "chamber")
    assert report["checks"]
    assert all(report["checks"].values())


def test_region_suite_default_run_is_fast():
    start = time.perf_counter()
    report = RegionSuite(suite_config("region"), seed=0).run()
    elapsed = time.perf_counter() - start
    assert report["passed"]
    assert len(report["rows"]) == 550
    assert elapsed < 10


def test_euler_suite():
    report = EulerSuite(suite_config("euler"), seed=7, cases=200).run()
    assert report["passed"]
    assert len(report["rows"]) == 200
    assert len(report["checks"]) == 7


def test_euler_suite_from_yaml(tmp_path):
    path = tmp_path / "betti.yml"
    path.write_text("cases:\n  - {betti: [1, 4, 1], r: 1}\n  - {betti: [1], r: 3}\n")
    report = EulerSuite(suite_config("euler"), input_path=str(path)).run()
    assert report["passed"]
    assert report["rows"][0]["chi"] == -2
    assert report["rows"][0]["chi_r_extension"] == -2


def test_lefschetz_suite_on_k4():
    suite = LefschetzSuite(suite_config("lefschetz"), input_path="k4", m_max=6, cases=3)
    report = suite.run()
    assert report["passed"]
    assert list(report) == [
        "suite", "seed", "graph", "q", "parameters", "rows",
        "dictionary", "checks", "summary", "passed", "elapsed_ms",
    ]
    trivial_rows = [row for row in report["rows"] if row["sample"] == "trivial"]
    row = trivial_rows[2]
    assert (row["m"], row["geometric"], row["transfer_trace"], row["spectral_from_adjacency"]) == (3, 24, 24, 24)
    twisted_rows = [row for row in report["rows"] if row["sample"] != "trivial"]
    assert len(twisted_rows) == 3 * 6
    assert report["checks"] == {"k4 covolume": True}
    assert report["elapsed_ms"] is None


def test_lefschetz_suite_with_twist_file(tmp_path):
    path = tmp_path / "sign.twist"
    path.write_text("twist 0 1/2\n")
    suite = LefschetzSuite(suite_config("lefschetz"), input_path="k4", m_max=5, cases=0, twist_path=str(path))
    report = suite.run()
    assert report["passed"]
    assert {row["character"] for row in report["rows"]} == {"sign"}


def test_lefschetz_suite_on_bundled_graphs():
    suite = LefschetzSuite(
        suite_config("lefschetz"),
        m_max=6,
        cases=1,
        bundled_graphs=["k4", "k33", "cube"],
    )
    report = suite.run()
    assert report["passed"]
    assert [summary["name"] for summary in report["graph"]] == ["k4", "k33", "cube"]
    assert report["q"] == [2, 2, 2]
    assert [summary["q"] for summary in report["graph"]] == report["q"]
    assert list(report)[:5] == ["suite", "seed", "graph", "q", "parameters"]


def test_hecke_suite_on_k4():
    report = HeckeSuite(suite_config("hecke"), input_path="k4", m_max=6).run()
    assert report["passed"]
    assert [row["m"] for row in report["rows"]] == list(range(1, 7))
    assert report["checks"] == {"k4 ihara": True}


def test_suites_are_deterministic():
    writer = ReportWriter("json")
    first = writer.render(EulerSuite(suite_config("euler"), seed=3, cases=30).run())
    second = writer.render(EulerSuite(suite_config("euler"), seed=3, cases=30).run())
    assert first == second
    third = writer.render(EulerSuite(suite_config("euler"), seed=4, cases=30).run())
    assert first != third


def test_timing_is_opt_in():
    report = EulerSuite(suite_config("euler"), cases=5, include_timing=True).run()
    assert report["elapsed_ms"] >= 0


def test_serialization():
    assert to_serializable(sympy.Rational(-3, 2)) == "-3/2"
    assert to_serializable(sympy.Integer(4)) == 4
    assert to_serializable(1 + 2j) == {"re": 1.0, "im": 2.0}
    assert to_serializable((1, sympy.oo)) == [1, "oo"]


def test_report_formats():
    report = HeckeSuite(suite_config("hecke"), input_path="k4", m_max=3).run()
    parsed = json.loads(ReportWriter("json").render(report))
    assert parsed["rows"][0]["trace_direct"] == 0
    csv_text = ReportWriter("csv").render(report)
    assert csv_text.splitlines()[0] == "graph,m,recurrence,spectral_image,trace_direct,trace_spectral,trace_geometric,pass"
    assert len(csv_text.splitlines()) == 4
    text = ReportWriter("text").render(report)
    assert "PASSED" in text
    assert "k4 ihara" in text
    with pytest.raises(ValueError):
        ReportWriter("xml")
