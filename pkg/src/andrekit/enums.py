from __future__ import annotations

from enum import Enum, IntEnum
from typing import Type, TypeVar

TEnum = TypeVar("TEnum", bound=Enum)


def _parse(enum_type: Type[TEnum], value: str, label: str) -> TEnum:
    """Converts a string to a member of an enum whose values are strings.

    Matching is case-insensitive and accepts either the member name or its value.

    Args:
        enum_type (Type[TEnum]): The enum to parse into.
        value (str): The string.
        label (str): Human readable name of the enum used in the error message.

    Raises:
        ValueError: If the string is not recognised.

    Returns:
        TEnum: The enum member.
    """
    token = value.strip().lower()
    for member in enum_type:
        if token in (member.name.lower(), str(member.value).lower()):
            return member
    supported_types = ", ".join(str(e.value) for e in enum_type)
    message = f"{value} not a supported {label}. Supported types are {supported_types}."
    raise ValueError(message)


class SeriesType(Enum):
    """The continued-fraction series the expand command can produce."""

    DN = "dn"
    MASTER = "master"
    NEG1 = "neg1"
    EULER = "euler"

    @staticmethod
    def from_str(value: str) -> SeriesType:
        return _parse(SeriesType, value, "series")


class TableType(Enum):
    GAMMA = "gamma"
    D = "d"
    DQ = "dq"
    EN = "en"

    @staticmethod
    def from_str(value: str) -> TableType:
        return _parse(TableType, value, "table")


class SuiteType(Enum):
    """Named verification suites."""

    MAIN1 = "main1"
    MAIN2 = "main2"
    COROLLARY = "corollary"
    ORBIT = "orbit"
    BIJECTION = "bijection"
    XFACT = "xfact"
    MASTER = "master"
    NEG1 = "neg1"
    FORMULA_P1 = "formula-p1"
    EULER = "euler"
    FLAJOLET = "flajolet"
    ALL = "all"

    @staticmethod
    def from_str(value: str) -> SuiteType:
        return _parse(SuiteType, value, "suite")


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"

    @staticmethod
    def from_str(value: str) -> OutputFormat:
        return _parse(OutputFormat, value, "format")


class CFKind(Enum):
    """Jacobi (J) fractions weigh levels and falls; Stieltjes (S) fractions only falls."""

    J = "J"
    S = "S"


class LetterClass(IntEnum):
    """Classification of a letter under the boundary convention sigma_0 = sigma_{n+1} = 0.

    The integer values are the codes written by the numba kernels.
    """

    PEAK = 0
    VALLEY = 1
    DOUBLE_ASCENT = 2
    DOUBLE_DESCENT = 3


class Stat(IntEnum):
    """Columns of the statistics matrix computed for a batch of permutations."""

    DES = 0
    ASC = 1
    EXC = 2
    INV = 3
    RES = 4
    LES = 5
    THIRTEEN_TWO = 6
    PEAK = 7
    VALLEY = 8
    DOUBLE_ASCENT = 9
    DOUBLE_DESCENT = 10
    ANDRE = 11


class VincularPattern(Enum):
    """Vincular patterns: the dash separates letters that need not be adjacent."""

    TWO_THIRTEEN = "2-13"
    THIRTYONE_TWO = "31-2"
    THIRTEEN_TWO = "13-2"

    @staticmethod
    def from_str(value: str) -> VincularPattern:
        return _parse(VincularPattern, value, "pattern")


class Step(Enum):
    UP = "U"
    LEVEL = "L"
    DOWN = "D"


class ValleyQuality(Enum):
    GOOD = "good"
    BAD = "bad"


class ValleyType(Enum):
    """Type I when y is a peak or a double ascent, type II when y is a valley."""

    I = "I"  # noqa: E741
    II = "II"


class PhiCase(Enum):
    """Which rewriting rule the valley transform applied, named after the class of y."""

    PEAK = "i"
    DOUBLE_ASCENT = "ii"
    VALLEY = "iii"


class BinomialReading(Enum):
    """How the power of v attaches to the bracket in the Motzkin triple sum."""

    FACTORED = "factored"
    SPLIT = "split"


class CaseStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
