from __future__ import annotations

from addict import Dict

from lefschetzlib.logger import log
from lefschetzlib.suite.graph_suites import HeckeSuite
from lefschetzlib.suite.graph_suites import LefschetzSuite
from lefschetzlib.suite.local_suites import EulerSuite
from lefschetzlib.suite.local_suites import NewtonSuite
from lefschetzlib.suite.local_suites import RegionSuite
from lefschetzlib.suite.report_writer import ReportWriter

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from lefschetzlib.suite.suite import Suite


SUITES_BY_COMMAND: dict[str, type[Suite]] = {
    suite_class.name: suite_class
    for suite_class in (NewtonSuite, RegionSuite, EulerSuite, LefschetzSuite, HeckeSuite)
}


def suite_from_config(config: Dict) -> Suite:
    run_config = config.run
    command = run_config.command
    if command not in SUITES_BY_COMMAND:
        raise ValueError(f"No suite named {command}")
    if run_config.twist_path and command != "lefschetz":
        log.warning(f"--twist is only used by the lefschetz suite, ignoring it for {command}")
    return SUITES_BY_COMMAND[command](
        suite_config=config.suites[command],
        seed=run_config.seed,
        show_progress=config.suites.show_progress,
        input_path=run_config.input_path,
        cases=run_config.random,
        m_max=run_config.m_max,
        twist_path=run_config.twist_path,
        include_timing=config.report.include_timing,
        bundled_graphs=list(config.bundled_graphs),
    )


def report_writer_from_config(config: Dict) -> ReportWriter:
    return ReportWriter(
        output_format=config.run.output_format,
        out_path=config.run.out_path,
        json_indent=config.report.json_indent,
    )


def main(config: Dict) -> dict:
    suite = suite_from_config(config)
    log.info(f"Running {suite}")
    report = suite.run()
    report_writer_from_config(config).write(report)
    return report
