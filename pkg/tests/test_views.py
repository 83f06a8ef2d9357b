import json
from unittest.mock import MagicMock, patch

import pytest
from colorama import Fore

from andrekit.cfrac import dn_series
from andrekit.enums import CaseStatus, OutputFormat, SeriesType, TableType
from andrekit.perm import Permutation
from andrekit.phi import phi_inverse_trace, phi_set_trace
from andrekit.reports import CaseResult, SuiteReport
from andrekit.tables import Table, TableRow
from andrekit.views import (
    NullSuiteReporter,
    ReportPrinter,
    SeriesPrinter,
    SuiteReporter,
    TablePrinter,
    TracePrinter,
)


def make_report() -> SuiteReport:
    cases = [
        CaseResult("neg1/n=1", CaseStatus.PASS, "neg1 n=1 (4 checks): 1"),
        CaseResult("neg1/n=2", CaseStatus.FAIL, "TheoremViolationError: boom"),
    ]
    return SuiteReport("neg1", cases, elapsed_ms=7)


class TestReportPrinter:
    def test_text(self) -> None:
        # Arrange
        sut = ReportPrinter()

        # Act
        lines = sut.build_string(make_report(), OutputFormat.TEXT).split("\n")

        # Assert
        assert lines[0] == f"{Fore.GREEN}PASS{Fore.RESET}  neg1/n=1  neg1 n=1 (4 checks): 1"
        assert lines[1] == f"{Fore.RED}FAIL{Fore.RESET}  neg1/n=2  TheoremViolationError: boom"
        assert lines[-1] == f"neg1: 2 cases, 1 failed, 7 ms ({Fore.RED}failed{Fore.RESET})"

    def test_json(self) -> None:
        # Act
        obj = json.loads(ReportPrinter().build_string(make_report()))

        # Assert
        assert obj["suite"] == "neg1"
        assert [case["status"] for case in obj["cases"]] == ["pass", "fail"]

    def test_csv_is_rejected(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            ReportPrinter().build_string(make_report(), OutputFormat.CSV)


class TestSuiteReporter:
    @patch("builtins.print")
    def test_display_prints(self, patch_print: MagicMock) -> None:
        # Arrange
        report = make_report()
        sut = SuiteReporter(OutputFormat.JSON)

        # Act
        sut.display(report)

        # Assert
        patch_print.assert_called_once_with(report.to_json())

    @patch("builtins.print")
    def test_null_reporter_is_silent(self, patch_print: MagicMock) -> None:
        # Act
        NullSuiteReporter().display(make_report())

        # Assert
        patch_print.assert_not_called()


class TestSeriesPrinter:
    def test_text(self) -> None:
        # Arrange
        sut = SeriesPrinter()

        # Act
        text = sut.build_string(SeriesType.DN, dn_series(3))

        # Assert
        assert text.split("\n") == ["D_1 = 1", "D_2 = 1", "D_3 = 1 + t", "D_4 = 1 + (p+q+2)*t"]

    def test_neg1_label(self) -> None:
        # Act
        text = SeriesPrinter().build_string(SeriesType.NEG1, dn_series(0))

        # Assert
        assert text == "D_1(1,-1,t) = 1"

    def test_json(self) -> None:
        # Act
        obj = json.loads(SeriesPrinter().build_string(SeriesType.DN, dn_series(1), OutputFormat.JSON))

        # Assert
        assert obj["series"] == "dn"
        assert [c["label"] for c in obj["coefficients"]] == ["D_1", "D_2"]
        assert obj["coefficients"][0]["terms"] == [{"coeff": "1", "exponents": [0] * 7}]

    def test_csv_is_rejected(self) -> None:
        # Act + Assert
        with pytest.raises(ValueError):
            SeriesPrinter().build_string(SeriesType.DN, dn_series(1), OutputFormat.CSV)


class TestTablePrinter:
    def test_grid(self) -> None:
        # Arrange
        table = Table(TableType.D, [TableRow(1, (1,)), TableRow(2, (1,)), TableRow(3, (1, 1))])

        # Act
        text = TablePrinter().build_string(table)

        # Assert
        assert text.split("\n") == ["n\\k  0  1", "  1  1", "  2  1", "  3  1  1"]

    def test_grid_without_k(self) -> None:
        # Arrange
        table = Table(TableType.EN, [TableRow(6, (61,)), TableRow(7, (272,))])

        # Act
        text = TablePrinter().build_string(table)

        # Assert
        assert text.split("\n") == ["n  E_n", "6   61", "7  272"]

    def test_csv_delegates_to_table(self) -> None:
        # Arrange
        table = Table(TableType.EN, [TableRow(1, (1,))])

        # Act
        text = TablePrinter().build_string(table, OutputFormat.CSV)

        # Assert
        assert text == "n,value\n1,1"


class TestTracePrinter:
    def test_forward(self) -> None:
        # Arrange
        trace = phi_set_trace(Permutation("31524"), [1, 2])

        # Act
        text = TracePrinter().build_string(trace)

        # Assert
        assert text.split("\n") == [
            "step: x=2 case=i before=31524 after=31425",
            "step: x=1 case=iii before=31425 after=32415",
            "result: 32415",
        ]

    def test_inverse(self) -> None:
        # Arrange
        trace = phi_inverse_trace(Permutation("32415"))

        # Act
        text = TracePrinter().build_string(trace, inverse=True)

        # Assert
        assert text.split("\n") == [
            "step: x=1 case=iii before=32415 after=31425",
            "step: x=2 case=i before=31425 after=31524",
            "sigma: 31524 S: {1,2}",
        ]
