import json

import pytest

from andrekit.enums import CaseStatus
from andrekit.exceptions import TheoremViolationError
from andrekit.reports import CaseResult, SuiteReport, TheoremReport, check_identity


class TestTheoremReport:
    def test_str_with_detail(self) -> None:
        # Arrange
        report = TheoremReport("neg1", 4, 2, "1 + 2*t")

        # Act
        text = str(report)

        # Assert
        assert text == "neg1 n=4 (2 checks): 1 + 2*t"

    def test_str_without_detail(self) -> None:
        assert str(TheoremReport("orbit", 3, 5)) == "orbit n=3 (5 checks)"


class TestSuiteReport:
    def test_json(self) -> None:
        # Arrange
        report = SuiteReport(
            "main1",
            [
                CaseResult("main1/n=1", CaseStatus.PASS, "ok"),
                CaseResult("main1/n=2", CaseStatus.FAIL, "bad"),
            ],
            elapsed_ms=12,
        )

        # Act
        obj = json.loads(report.to_json())

        # Assert
        assert set(obj) == {"suite", "cases", "elapsed"}
        assert obj["elapsed"] == 12
        assert obj["cases"][1] == {"id": "main1/n=2", "status": "fail", "detail": "bad"}

    def test_failures(self) -> None:
        # Arrange
        good = CaseResult("a", CaseStatus.PASS, "")
        bad = CaseResult("b", CaseStatus.FAIL, "")

        # Act
        report = SuiteReport("x", [good, bad])

        # Assert
        assert not report.passed
        assert report.failures() == [bad]
        assert repr(report) == "SuiteReport (suite=x, cases=2, failed=1)"

    def test_empty_suite_passes(self) -> None:
        assert SuiteReport("x").passed


class TestCheckIdentity:
    def test_equal_sides(self) -> None:
        check_identity("trivial", 3, 1, 1)

    def test_unequal_sides(self) -> None:
        # Act
        with pytest.raises(TheoremViolationError) as info:
            check_identity("gamma", 5, 2, 3, k=1)

        # Assert
        assert info.value.theorem == "gamma"
        assert (info.value.n, info.value.k) == (5, 1)
        assert str(info.value) == "gamma fails at n=5, k=1: 2 != 3"
