from __future__ import annotations

import random
import time

from addict import Dict
import numpy as np
import yaml

from lefschetzlib.graph.geodesic_graph import load_graph
from lefschetzlib.logger import log
from lefschetzlib.utils.file_ops import find_file

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any
    from lefschetzlib.graph.geodesic_graph import GeodesicGraph


class Suite(object):
    """
    A verification run. Subclasses fill in construct(), adding one row per
    checked case and named suite level checks; run() returns the report
    as an ordered dict ready for the ReportWriter.
    """
    name: str = "suite"

    def __init__(
        self,
        suite_config: dict | None = None,
        seed: int = 0,
        show_progress: bool = False,
        input_path: str | None = None,
        cases: int | None = None,
        m_max: int | None = None,
        twist_path: str | None = None,
        include_timing: bool = False,
        bundled_graphs: list[str] | None = None,
    ):
        self.suite_config = Dict(suite_config or dict())
        self.seed = seed
        self.show_progress = show_progress
        self.input_path = input_path
        self.cases = cases
        self.m_max = m_max
        self.twist_path = twist_path
        self.include_timing = include_timing
        self.bundled_graphs = list(bundled_graphs or [])

        # Report contents
        self.header: dict[str, Any] = dict()
        self.parameters: dict[str, Any] = dict()
        self.rows: list[dict[str, Any]] = []
        self.footer: dict[str, Any] = dict()
        self.checks: dict[str, bool] = dict()
        self.elapsed_ms: float | None = None

    def __str__(self) -> str:
        return self.__class__.__name__

    def run(self) -> dict:
        start_time = time.perf_counter()
        self.setup()
        self.construct()
        self.tear_down()
        if self.include_timing:
            self.elapsed_ms = round(1000 * (time.perf_counter() - start_time), 3)
        return self.get_report()

    def setup(self) -> None:
        """
        Every source of randomness a suite uses is derived from its seed
        here, so the same configuration always produces the same report.
        """
        self.random = random.Random(self.seed)
        self.rng = np.random.default_rng(self.seed)

    def construct(self) -> None:
        # To be implemented in subclasses
        pass

    def tear_down(self) -> None:
        failed_rows = sum(not row["pass"] for row in self.rows)
        failed_checks = [name for name, ok in self.checks.items() if not ok]
        if failed_rows or failed_checks:
            log.error(f"{self}: {failed_rows} of {len(self.rows)} rows failed, failed checks: {failed_checks}")
        else:
            log.info(f"{self}: all {len(self.rows)} rows and {len(self.checks)} checks pass")

    def add_row(self, **row: Any) -> dict:
        if "pass" not in row:
            raise ValueError("Every row must record whether it passed")
        row["pass"] = bool(row["pass"])
        self.rows.append(row)
        return row

    def get_case_count(self, default: int) -> int:
        return default if self.cases is None else self.cases

    @property
    def passed(self) -> bool:
        return all(row["pass"] for row in self.rows) and all(self.checks.values())

    def get_report(self) -> dict:
        report = dict(suite=self.name, seed=self.seed)
        report.update(self.header)
        report["parameters"] = self.parameters
        report["rows"] = self.rows
        report.update(self.footer)
        report["checks"] = self.checks
        report["summary"] = dict(
            rows=len(self.rows),
            failed_rows=sum(not row["pass"] for row in self.rows),
            checks=len(self.checks),
            failed_checks=sum(not ok for ok in self.checks.values()),
        )
        report["passed"] = self.passed
        report["elapsed_ms"] = self.elapsed_ms
        return report

    # Input helpers
    def load_input_cases(self) -> list[dict]:
        """
        YAML input files hold a mapping with a `cases` list, e.g.
        `cases: [{q: 3, matrix: [[0, 1], [3, 0]]}]`.
        """
        path = find_file(self.input_path, extensions=["", ".yml", ".yaml"])
        with open(path, "r") as file:
            data = yaml.safe_load(file)
        if not isinstance(data, dict) or not isinstance(data.get("cases"), list):
            raise ValueError(f"{path} must hold a mapping with a `cases` list")
        return data["cases"]

    def load_graphs(self) -> list[GeodesicGraph]:
        names = [self.input_path] if self.input_path else self.bundled_graphs
        if not names:
            raise ValueError(f"{self} needs an input graph")
        return [load_graph(name) for name in names]
