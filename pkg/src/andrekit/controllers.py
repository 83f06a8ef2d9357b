from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cfrac import series_of
from .enums import OutputFormat, SeriesType, SuiteType, TableType
from .perm import Permutation
from .phi import phi_inverse_trace, phi_set_trace
from .suites import DEFAULT_CAP, SuiteRunner
from .tables import build_table
from .views import SeriesPrinter, TablePrinter, TracePrinter


@dataclass
class ExpandController:
    """Controller for the expand entry point"""

    printer: SeriesPrinter

    def expand(self, series_type: SeriesType, n: int, fmt: OutputFormat) -> int:
        """Prints mu_0 .. mu_n of a continued-fraction series.

        Returns:
          int: The exit code.
        """
        moments = series_of(series_type, n)
        print(self.printer.build_string(series_type, moments, fmt))
        return 0


@dataclass
class TablesController:
    """Controller for the tables entry point"""

    printer: TablePrinter
    cap: int | None = DEFAULT_CAP

    def tables(self, which: TableType, n_max: int, fmt: OutputFormat) -> int:
        table = build_table(which, n_max, cap=self.cap)
        print(self.printer.build_string(table, fmt))
        return 0


@dataclass
class VerifyController:
    """Controller for the verify entry point"""

    runner: SuiteRunner

    def verify(self, suite: SuiteType, n_max: int) -> int:
        """Runs a suite. The runner's reporter prints the report.

        Returns:
          int: 0 if every case passed, 1 otherwise.
        """
        report = self.runner.run_suite(suite, n_max)
        return 0 if report.passed else 1


@dataclass
class TraceController:
    """Controller for the bij-trace entry point"""

    printer: TracePrinter

    def trace(self, sigma: Permutation, letters: Sequence[int]) -> int:
        trace = phi_set_trace(sigma, letters)
        print(self.printer.build_string(trace))
        return 0

    def trace_inverse(self, tau: Permutation) -> int:
        trace = phi_inverse_trace(tau)
        print(self.printer.build_string(trace, inverse=True))
        return 0
