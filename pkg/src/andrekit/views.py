from __future__ import annotations

import json
from typing import Sequence

import colorama
from colorama import Fore

from .enums import OutputFormat, SeriesType
from .phi import PhiTrace
from .poly import MultiPoly
from .reports import CaseResult, SuiteReport
from .tables import Table

colorama.init()

SERIES_LABELS = {
    SeriesType.DN: ("D", ""),
    SeriesType.MASTER: ("A", ""),
    SeriesType.NEG1: ("D", "(1,-1,t)"),
    SeriesType.EULER: ("E", ""),
}


def _unsupported(fmt: OutputFormat, what: str) -> ValueError:
    return ValueError(f"{fmt.value} output is not available for {what}.")


class ReportPrinter:
    def build_string(self, report: SuiteReport, fmt: OutputFormat = OutputFormat.JSON) -> str:
        if fmt is OutputFormat.JSON:
            return report.to_json()
        if fmt is OutputFormat.CSV:
            raise _unsupported(fmt, "suite reports")

        rows = [self.case_row(case) for case in report.cases]
        rows.append(self.summary(report))
        return "\n".join(rows)

    @staticmethod
    def case_row(case: CaseResult) -> str:
        colour = Fore.GREEN if case.passed else Fore.RED
        status = f"{colour}{case.status.value.upper():<4}{Fore.RESET}"
        return f"{status}  {case.id}  {case.detail}".rstrip()

    @staticmethod
    def summary(report: SuiteReport) -> str:
        failed = len(report.failures())
        colour = Fore.GREEN if report.passed else Fore.RED
        outcome = f"{colour}{'passed' if report.passed else 'failed'}{Fore.RESET}"
        counts = f"{len(report.cases)} cases, {failed} failed, {report.elapsed_ms} ms"
        return f"\n{report.suite}: {counts} ({outcome})"


class SuiteReporter:
    """Prints a suite report once every case has run."""

    def __init__(self, fmt: OutputFormat = OutputFormat.JSON) -> None:
        self.fmt = fmt
        self.printer = ReportPrinter()

    def display(self, report: SuiteReport) -> None:
        print(self.printer.build_string(report, self.fmt))


class NullSuiteReporter(SuiteReporter):
    """Null implementation of a SuiteReporter"""

    def display(self, _: SuiteReport) -> None:
        """Does nothing"""
        pass


class SeriesPrinter:
    def build_string(
        self,
        series_type: SeriesType,
        moments: Sequence[MultiPoly],
        fmt: OutputFormat = OutputFormat.TEXT,
    ) -> str:
        """Formats mu_0 .. mu_N, one line each in text form.

        Args:
            series_type (SeriesType): Decides the label, e.g. D_4 for mu_3 of the dn series.
            moments (Sequence[MultiPoly]): The moments in order.
            fmt (OutputFormat, optional): Text or JSON. Defaults to OutputFormat.TEXT.

        Raises:
            ValueError: For CSV output.

        Returns:
            str: The formatted series.
        """
        letter, suffix = SERIES_LABELS[series_type]
        if fmt is OutputFormat.JSON:
            coefficients = [
                {"index": i, "label": f"{letter}_{i + 1}{suffix}", "terms": moment.to_json_obj()}
                for i, moment in enumerate(moments)
            ]
            payload = {"series": series_type.value, "coefficients": coefficients}
            return json.dumps(payload, sort_keys=True, indent=2)
        if fmt is OutputFormat.CSV:
            raise _unsupported(fmt, "series")

        lines = [
            f"{letter}_{i + 1}{suffix} = {moment.to_text_in('t')}" for i, moment in enumerate(moments)
        ]
        return "\n".join(lines)


class TablePrinter:
    def build_string(self, table: Table, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt is OutputFormat.CSV:
            return table.to_csv()
        if fmt is OutputFormat.JSON:
            return table.to_json()
        return self.grid(table)

    @staticmethod
    def grid(table: Table) -> str:
        """Right-aligned rows, one per n, with a header of k values."""
        if not table.has_k:
            cells = [["n", "E_n"]] + [[str(row.n), str(row.values[0])] for row in table.rows]
        else:
            width = max((len(row.values) for row in table.rows), default=0)
            cells = [["n\\k"] + [str(k) for k in range(width)]]
            cells += [[str(row.n)] + [str(value) for value in row.values] for row in table.rows]

        columns = max(len(line) for line in cells)
        widths = [max(len(line[c]) for line in cells if c < len(line)) for c in range(columns)]
        lines: list[str] = []
        for line in cells:
            lines.append("  ".join(cell.rjust(widths[c]) for c, cell in enumerate(line)).rstrip())
        return "\n".join(lines)


class TracePrinter:
    def build_string(self, trace: PhiTrace, inverse: bool = False) -> str:
        lines = [
            f"step: x={step.x} case={step.case.value} before={step.before} after={step.after}"
            for step in trace.steps
        ]
        if inverse:
            lines.append(f"sigma: {trace.result} S: {trace.subset}")
        else:
            lines.append(f"result: {trace.result}")
        return "\n".join(lines)
