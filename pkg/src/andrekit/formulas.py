from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, sqrt
from typing import Sequence

from .cfrac import dn_series
from .enums import BinomialReading
from .exceptions import DomainError, TheoremViolationError
from .reports import TheoremReport

DEFAULT_QS: tuple[float, ...] = (-0.5, 0.1, 0.3, 0.6)
DEFAULT_TS: tuple[float, ...] = (0.05, 0.1, 0.2)
RELATIVE_TOLERANCE = 1e-7


@dataclass(frozen=True)
class AlgebraicParams:
    """The algebraic functions u(q,t) and v(q,t) of the Motzkin triple-sum formula.

    v solves t v^2 - ((1+q) - 2t) v + t = 0 and u solves A u^2 + B u + A = 0 with
    A = (1+q)(t(1+q) - q) and B = (1+q)(1+q^2) - 2t(1+q)^2.
    """

    q: float
    t: float
    u: float
    v: float
    discriminant: float

    def v_residual(self) -> float:
        q, t, v = self.q, self.t, self.v
        return t * v * v - ((1 + q) - 2 * t) * v + t

    def u_residual(self) -> float:
        q, t, u = self.q, self.t, self.u
        a = (1 + q) * (t * (1 + q) - q)
        b = (1 + q) * (1 + q * q) - 2 * t * (1 + q) ** 2
        return a * u * u + b * u + a


def algebraic_params(q: float, t: float) -> AlgebraicParams:
    """Evaluates u and v on the branch that gives D_n(1,q,t) as a power series in t.

    Args:
        q (float): Must not be 1 or -1.
        t (float): Must be non-zero with (1+q)^2 >= 4t(1+q).

    Raises:
        DomainError: If the formula is undefined at (q, t).

    Returns:
        AlgebraicParams: u, v and the discriminant.
    """
    if t == 0:
        raise DomainError("t must be non-zero.")
    if q in (1.0, -1.0):
        raise DomainError(f"q = {q} makes the prefactor singular.")

    a = 1 + q
    discriminant = a * a - 4 * t * a
    if discriminant < 0:
        raise DomainError(f"Negative discriminant at q={q}, t={t}.")
    if q - t * a == 0:
        raise DomainError(f"u has a pole at q={q}, t={t}.")

    root = sqrt(discriminant)
    v = (a - 2 * t - root) / (2 * t)
    u = (1 + q * q - 2 * a * t - (1 - q) * root) / (2 * (q - t * a))
    if v == 0 or 1 + u * v == 0:
        raise DomainError(f"Degenerate u, v at q={q}, t={t}.")
    return AlgebraicParams(q, t, u, v, discriminant)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def dn_1q_triple_sum(
    n: int, q: float, t: float, reading: BinomialReading = BinomialReading.FACTORED
) -> float:
    """D_n(1,q,t) from the triple sum over k, i and j.

    Args:
        n (int): The order, n >= 1.
        q (float): The q parameter.
        t (float): The t parameter.
        reading (BinomialReading, optional): Whether v^j multiplies the whole bracket or only
            its first product. Defaults to BinomialReading.FACTORED.

    Returns:
        float: The value of the formula.
    """
    params = algebraic_params(q, t)
    u, v = params.u, params.v

    total = 0.0
    for k in range(n + 1):
        inner_i = 0.0
        for i in range(k + 1):
            inner_i += v**i * q ** (i * (k + 1 - i))
        inner_j = 0.0
        for j in range(n - k + 1):
            first = _binom(n, j) * _binom(n, j + k)
            second = _binom(n, j - 1) * _binom(n, j + k + 1)
            if reading is BinomialReading.FACTORED:
                inner_j += v**j * (first - second)
            else:
                inner_j += v**j * first - second
        total += (-1) ** k * inner_j * inner_i

    prefactor = 1 / (v * (1 - q)) * ((1 + u) / ((1 + u * v) * (1 - q * q))) ** (n - 1)
    return prefactor * total


@dataclass
class FormulaReport:
    """Which binomial readings of the triple sum match the continued fraction on a grid."""

    n_max: int
    points: int = 0
    failures: dict[BinomialReading, list[str]] = field(default_factory=dict)

    def passes(self, reading: BinomialReading) -> bool:
        return not self.failures.get(reading)

    @property
    def selected(self) -> BinomialReading | None:
        for reading in BinomialReading:
            if self.passes(reading):
                return reading
        return None


def check_formula_grid(
    n_max: int, qs: Sequence[float] = DEFAULT_QS, ts: Sequence[float] = DEFAULT_TS
) -> FormulaReport:
    """Compares both readings with D_n(1,q,t) from the continued fraction, for n <= n_max.

    Grid points outside the domain t <= (1+q)/4 are skipped.
    """
    exact = [poly.substitute({"p": 1}) for poly in dn_series(n_max - 1)]
    report = FormulaReport(n_max, failures={reading: [] for reading in BinomialReading})
    for q in qs:
        for t in ts:
            if t > (1 + q) / 4:
                continue
            report.points += 1
            for n in range(1, n_max + 1):
                expected = exact[n - 1].eval_float({"q": q, "t": t})
                for reading in BinomialReading:
                    value = dn_1q_triple_sum(n, q, t, reading)
                    if abs(value - expected) > RELATIVE_TOLERANCE * max(1.0, abs(expected)):
                        report.failures[reading].append(f"n={n} q={q} t={t}: {value} != {expected}")
    return report


def verify_formula_p1(n: int) -> TheoremReport:
    """At least one reading of the triple sum must match on the default grid."""
    report = check_formula_grid(n)
    reading = report.selected
    if reading is None:
        first = report.failures[BinomialReading.FACTORED][0]
        raise TheoremViolationError("Motzkin triple sum", n, first, "continued fraction")
    detail = ", ".join(f"{r.value}={'pass' if report.passes(r) else 'fail'}" for r in BinomialReading)
    return TheoremReport("formula-p1", n, report.points * n * 2, detail)
