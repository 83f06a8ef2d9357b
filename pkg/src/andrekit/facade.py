from __future__ import annotations

from typing import Iterable, Sequence, Union

from .andre import GammaExpansion, eulerian_poly, gamma_expand
from .cfrac import series_of
from .enums import SeriesType, SuiteType, TableType
from .exceptions import EnumerationCapExceededError
from .factory import create_runner
from .perm import Permutation
from .phi import PhiTrace, ValleySubset, phi_inverse_trace, phi_set_trace
from .poly import MultiPoly
from .reports import SuiteReport
from .suites import DEFAULT_CAP, DEFAULT_SEED
from .tables import Table, build_table
from .views import NullSuiteReporter

PermutationType = Union[str, Permutation, Sequence[int]]


class AndreKit:
    """
    A simple, facade class for computing and cross-checking (p,q)-Eulerian and André
    polynomials without going through the command line.

    Attributes:
      cap (int | None, optional):
        Largest n for which S_n may be enumerated. None lifts the cap. Defaults to 9.

      seed (int, optional):
        Seed for the randomised verification cases. Defaults to 13.

      workers (int | None, optional):
        Processes used to run verification cases. Defaults to the ANDREKIT_THREADS
        environment variable, or 1.

    Methods
    -------
    expand(series, n)
      The moments mu_0 .. mu_n of a continued fraction, e.g.
        kit = AndreKit()
        kit.expand("dn", 4)[3]  # 1 + (p+q+2)*t
    """

    def __init__(
        self, cap: int | None = DEFAULT_CAP, seed: int = DEFAULT_SEED, workers: int | None = None
    ) -> None:
        self.cap = cap
        self.seed = seed
        self.runner = create_runner(workers=workers, cap=cap, seed=seed, reporter=NullSuiteReporter())

    def expand(self, series: SeriesType | str, n: int) -> list[MultiPoly]:
        series_type = SeriesType.from_str(series) if isinstance(series, str) else series
        return series_of(series_type, n)

    def table(self, which: TableType | str, n_max: int) -> Table:
        table_type = TableType.from_str(which) if isinstance(which, str) else which
        return build_table(table_type, n_max, cap=self.cap)

    def verify(self, suite: SuiteType | str, n_max: int) -> SuiteReport:
        """Runs a verification suite silently and returns its report.

        Raises:
          EnumerationCapExceededError: If the suite enumerates S_n past the cap.
        """
        suite_type = SuiteType.from_str(suite) if isinstance(suite, str) else suite
        return self.runner.run_suite(suite_type, n_max)

    def gamma(self, n: int) -> GammaExpansion:
        """The gamma coefficients of A_n(p,q,t), read off from enumeration."""
        if self.cap is not None and n > self.cap:
            raise EnumerationCapExceededError(f"n={n} exceeds the enumeration cap of {self.cap}.")
        return gamma_expand(eulerian_poly(n), n)

    def phi(self, sigma: PermutationType, letters: Iterable[int] = ()) -> Permutation:
        return self.trace(sigma, letters).result

    def trace(self, sigma: PermutationType, letters: Iterable[int] = ()) -> PhiTrace:
        """Applies the valley transforms for a set of valleys of an André permutation.

        Args:
          sigma (PermutationType): An André permutation.
          letters (Iterable[int], optional): Valleys of sigma, as letters. Defaults to ().

        Raises:
          NotAndreError: If sigma is not André.
          NotASubsetError: If a letter is not a valley of sigma.

        Returns:
          PhiTrace: Every elementary step and the image.
        """
        return phi_set_trace(Permutation(sigma), letters)

    def phi_inverse(self, tau: PermutationType) -> tuple[Permutation, ValleySubset]:
        trace = phi_inverse_trace(Permutation(tau))
        return trace.result, trace.subset
