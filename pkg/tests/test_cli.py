import json
from unittest.mock import MagicMock, patch

import pytest

from andrekit import cli
from andrekit.enums import OutputFormat, SeriesType, SuiteType, TableType
from andrekit.exceptions import TheoremViolationError
from andrekit.perm import Permutation


class TestParseLetters:
    @pytest.mark.parametrize(
        "text, expected", [("1,2", (1, 2)), ("{1,3}", (1, 3)), ("", ()), ("{}", ())]
    )
    def test_parse(self, text: str, expected: tuple[int, ...]) -> None:
        assert cli.parse_letters(text) == expected


class TestExpand:
    def test_dn(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["expand", "--series", "dn", "--n", "3"])

        # Assert
        assert code == 0
        assert capsys.readouterr().out.splitlines()[-1] == "D_4 = 1 + (p+q+2)*t"

    def test_order_zero(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["expand", "--n", "0"])

        # Assert
        assert code == 0
        assert capsys.readouterr().out.strip() == "D_1 = 1"

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["expand", "--series", "neg1", "--n", "4", "--format", "json"])

        # Assert
        assert code == 0
        assert json.loads(capsys.readouterr().out)["series"] == "neg1"

    @patch.object(cli, "create_expand_controller")
    def test_arguments_reach_the_controller(self, patch_create: MagicMock) -> None:
        # Arrange
        patch_create.return_value.expand.return_value = 0

        # Act
        cli.parse_args(["expand", "--series", "master", "--n", "2"])

        # Assert
        patch_create.return_value.expand.assert_called_once_with(SeriesType.MASTER, 2, OutputFormat.TEXT)

    def test_negative_order_is_a_usage_error(self) -> None:
        assert cli.parse_args(["expand", "--n", "-1"]) == cli.EXIT_USAGE

    def test_malformed_order(self) -> None:
        with pytest.raises(SystemExit) as info:
            cli.parse_args(["expand", "--n", "abc"])
        assert info.value.code == 2


class TestTables:
    def test_gamma(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["tables", "--which", "gamma", "--n-max", "7"])

        # Assert
        assert code == 0
        assert capsys.readouterr().out.splitlines()[-1].split() == ["7", "1", "114", "720", "272"]

    def test_cap_exceeded(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["tables", "--which", "gamma", "--n-max", "10"])

        # Assert
        assert code == cli.EXIT_CAP
        assert "--unsafe-n" in capsys.readouterr().err

    @patch.object(cli, "create_tables_controller")
    def test_unsafe_n(self, patch_create: MagicMock) -> None:
        # Arrange
        patch_create.return_value.tables.return_value = 0

        # Act
        with pytest.warns(ResourceWarning):
            code = cli.parse_args(["tables", "--which", "dq", "--n-max", "10", "--unsafe-n"])

        # Assert
        assert code == 0
        patch_create.assert_called_once_with(cap=None)
        patch_create.return_value.tables.assert_called_once_with(TableType.DQ, 10, OutputFormat.TEXT)


class TestVerify:
    @patch.object(cli, "create_verify_controller")
    def test_defaults(self, patch_create: MagicMock) -> None:
        # Arrange
        patch_create.return_value.verify.return_value = 0

        # Act
        code = cli.parse_args(["verify"])

        # Assert
        assert code == 0
        patch_create.assert_called_once_with(fmt=OutputFormat.JSON, cap=9, seed=13)
        patch_create.return_value.verify.assert_called_once_with(SuiteType.ALL, 6)

    @patch.object(cli, "create_verify_controller")
    def test_failed_case(self, patch_create: MagicMock) -> None:
        # Arrange
        patch_create.return_value.verify.return_value = 1

        # Act
        code = cli.parse_args(["verify", "--suite", "orbit", "--n-max", "3"])

        # Assert
        assert code == cli.EXIT_THEOREM_FAILURE

    @patch.object(cli, "create_verify_controller")
    def test_theorem_violation(
        self, patch_create: MagicMock, capsys: pytest.CaptureFixture[str]
    ) -> None:
        # Arrange
        patch_create.return_value.verify.side_effect = TheoremViolationError("gamma", 4, 1, 2)

        # Act
        code = cli.parse_args(["verify", "--suite", "main1"])

        # Assert
        assert code == cli.EXIT_THEOREM_FAILURE
        assert capsys.readouterr().err.strip() == "andrekit: gamma fails at n=4: 1 != 2"

    def test_csv_is_a_usage_error(self) -> None:
        assert cli.parse_args(["verify", "--format", "csv"]) == cli.EXIT_USAGE

    def test_cap_exceeded(self) -> None:
        assert cli.parse_args(["verify", "--suite", "orbit", "--n-max", "10"]) == cli.EXIT_CAP

    def test_runs_a_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["verify", "--suite", "neg1", "--n-max", "4"])

        # Assert
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert [case["status"] for case in report["cases"]] == ["pass"] * 4

    def test_unknown_suite(self) -> None:
        with pytest.raises(SystemExit):
            cli.parse_args(["verify", "--suite", "main3"])


class TestBijTrace:
    def test_forward(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["bij-trace", "--sigma", "31524", "--s", "1,2"])

        # Assert
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].endswith("after=31425")
        assert lines[-1] == "result: 32415"

    def test_inverse(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = cli.parse_args(["bij-trace", "--inverse", "--tau", "11,2,12,13,1,6,4,5,3,8,9,7,10"])

        # Assert
        assert code == 0
        last = capsys.readouterr().out.splitlines()[-1]
        assert last == "sigma: 11,1,12,13,2,6,3,9,7,8,10,4,5 S: {1,3,4,7}"

    @patch.object(cli, "create_trace_controller")
    def test_letters_reach_the_controller(self, patch_create: MagicMock) -> None:
        # Arrange
        patch_create.return_value.trace.return_value = 0

        # Act
        cli.parse_args(["bij-trace", "--sigma", "53412", "--s", "{1,3}"])

        # Assert
        patch_create.return_value.trace.assert_called_once_with(Permutation("53412"), (1, 3))

    @pytest.mark.parametrize(
        "args",
        [
            ["bij-trace", "--sigma", "2134"],
            ["bij-trace", "--sigma", "31524", "--s", "3"],
            ["bij-trace", "--inverse", "--tau", "1243"],
            ["bij-trace", "--inverse"],
            ["bij-trace"],
        ],
    )
    def test_precondition_errors(self, args: list[str]) -> None:
        assert cli.parse_args(args) == cli.EXIT_USAGE

    def test_malformed_permutation(self) -> None:
        with pytest.raises(SystemExit):
            cli.parse_args(["bij-trace", "--sigma", "1135"])


class TestMain:
    def test_no_command(self) -> None:
        assert cli.parse_args([]) == cli.EXIT_USAGE

    @patch.object(cli, "parse_args")
    def test_main_exits_with_the_code(self, patch_parse_args: MagicMock) -> None:
        # Arrange
        patch_parse_args.return_value = 3

        # Act
        with patch.object(cli.sys, "argv", ["andrekit", "tables"]):
            with pytest.raises(SystemExit) as info:
                cli.main()

        # Assert
        assert info.value.code == 3
        patch_parse_args.assert_called_once_with(["tables"])
