from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Union

from .andre import d_poly, d_recurrence_table, enumerate_D, g_series
from .cfrac import euler_series
from .enums import TableType
from .exceptions import EnumerationCapExceededError
from .reports import check_identity
from .suites import DEFAULT_CAP

Cell = Union[int, str]

# Tables read off from enumerating S_n.
ENUMERATING_TABLES = frozenset({TableType.GAMMA, TableType.DQ})


@dataclass(frozen=True)
class TableRow:
    n: int
    values: tuple[Cell, ...]


@dataclass
class Table:
    """A triangular table indexed by n (rows) and k (columns), or a single column for E_n."""

    which: TableType
    rows: list[TableRow] = field(default_factory=list)

    @property
    def has_k(self) -> bool:
        return self.which is not TableType.EN

    def row(self, n: int) -> tuple[Cell, ...]:
        for row in self.rows:
            if row.n == n:
                return row.values
        raise KeyError(n)

    def records(self) -> list[dict[str, Any]]:
        if not self.has_k:
            return [{"n": row.n, "value": row.values[0]} for row in self.rows]
        return [
            {"n": row.n, "k": k, "value": value}
            for row in self.rows
            for k, value in enumerate(row.values)
        ]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.has_k:
            writer.writerow(["n", "k", "value"])
            writer.writerows([record["n"], record["k"], record["value"]] for record in self.records())
        else:
            writer.writerow(["n", "value"])
            writer.writerows([record["n"], record["value"]] for record in self.records())
        return buffer.getvalue().rstrip("\n")

    def to_json(self) -> str:
        return json.dumps(self.records(), sort_keys=True, indent=2)


def build_table(which: TableType, n_max: int, *, cap: int | None = DEFAULT_CAP) -> Table:
    """Builds one of the tables for n = 1..n_max.

    gamma counts G_{n,k} by enumeration, d uses the recurrence (checked against |D_{n,k}| up to
    the cap), dq lists d_{n,k}(p,q) and en reads E_n off the Euler-number fraction.

    Raises:
        EnumerationCapExceededError: If the table needs enumeration beyond the cap.
        TheoremViolationError: If the recurrence disagrees with enumeration.
    """
    if which in ENUMERATING_TABLES and cap is not None and n_max > cap:
        raise EnumerationCapExceededError(
            f"n_max={n_max} exceeds the enumeration cap of {cap} for the {which.value} table. "
            "Pass --unsafe-n to lift it."
        )

    table = Table(which)
    if which is TableType.EN:
        moments = euler_series(max(n_max - 1, 0))
        for n in range(1, n_max + 1):
            table.rows.append(TableRow(n, (moments[n - 1].constant_term(),)))
        return table

    if which is TableType.D:
        recurrence = d_recurrence_table(n_max) if n_max >= 1 else {}
        for n in range(1, n_max + 1):
            values = recurrence[n]
            if cap is None or n <= cap:
                for k, value in enumerate(values):
                    check_identity("d recurrence", n, value, len(enumerate_D(n, k)), k)
            table.rows.append(TableRow(n, tuple(values)))
        return table

    for n in range(1, n_max + 1):
        ks = range((n - 1) // 2 + 1)
        if which is TableType.GAMMA:
            values_: tuple[Cell, ...] = tuple(len(g_series(n, k)) for k in ks)
        else:
            values_ = tuple(d_poly(n, k).to_text() for k in ks)
        table.rows.append(TableRow(n, values_))
    return table
