from __future__ import annotations

import csv
import io
import json
import numbers
import os

import numpy as np
from rich.console import Console
from rich.table import Table
import sympy

from lefschetzlib.logger import log
from lefschetzlib.utils.file_ops import guarantee_existence
from lefschetzlib.utils.simple_functions import rational_to_str

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any
    from lefschetzlib.typing import OutputFormat


def to_serializable(value: Any) -> Any:
    """
    Exact values stay exact: integers as integers, other rationals as
    strings like "-3/2". Complex numbers become {"re": .., "im": ..}.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, sympy.Basic):
        if value.is_Integer:
            return int(value)
        if value.is_Rational:
            return rational_to_str(value)
        # oo and symbolic values
        return str(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, numbers.Complex):
        return dict(re=float(value.real), im=float(value.imag))
    if isinstance(value, dict):
        return {str(key): to_serializable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_serializable(item) for item in value]
    return str(value)


def to_cell(value: Any) -> str:
    """Flat rendering for csv and text tables"""
    value = to_serializable(value)
    if value is None:
        return ""
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return repr(complex(value["re"], value["im"]))
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    return str(value)


class ReportWriter(object):
    def __init__(
        self,
        output_format: OutputFormat = "json",
        out_path: str | None = None,
        json_indent: int | None = 2,
    ):
        if output_format not in ("json", "csv", "text"):
            raise ValueError(f"Unknown report format {output_format}")
        self.output_format = output_format
        self.out_path = out_path
        self.json_indent = json_indent

    def render(self, report: dict) -> str:
        if self.output_format == "json":
            return self.render_json(report)
        if self.output_format == "csv":
            return self.render_csv(report)
        return self.render_text(report)

    def render_json(self, report: dict) -> str:
        # Key order is part of the format, so keys are never sorted
        return json.dumps(to_serializable(report), indent=self.json_indent) + "\n"

    def render_csv(self, report: dict) -> str:
        rows = report["rows"]
        buffer = io.StringIO()
        fieldnames = self.get_columns(rows)
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: to_cell(row.get(key)) for key in fieldnames})
        return buffer.getvalue()

    def render_text(self, report: dict) -> str:
        console = Console(file=io.StringIO(), color_system=None, width=120)
        rows = report["rows"]
        table = Table(title=f"{report['suite']} suite, seed {report['seed']}")
        columns = self.get_columns(rows)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(to_cell(row.get(column)) for column in columns))
        console.print(table)
        for name, ok in report["checks"].items():
            console.print(f"{'pass' if ok else 'FAIL'}  {name}")
        summary = report["summary"]
        console.print(
            f"{summary['rows'] - summary['failed_rows']}/{summary['rows']} rows, "
            f"{summary['checks'] - summary['failed_checks']}/{summary['checks']} checks pass: "
            f"{'PASSED' if report['passed'] else 'FAILED'}"
        )
        return console.file.getvalue()

    @staticmethod
    def get_columns(rows: list[dict]) -> list[str]:
        columns: list[str] = []
        for row in rows:
            columns.extend(key for key in row if key not in columns)
        return columns

    def write(self, report: dict) -> str:
        text = self.render(report)
        if self.out_path is None:
            print(text, end="")
            return text
        directory = os.path.dirname(self.out_path)
        if directory:
            guarantee_existence(directory)
        with open(self.out_path, "w") as file:
            file.write(text)
        log.info(f"Report written to {self.out_path}")
        return text
