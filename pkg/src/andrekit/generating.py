from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping

import numpy as np

from .enums import Stat
from .kernels import statistics_matrix
from .perm import Permutation
from .poly import NUM_VARIABLES, MultiPoly, variable_index

ExponentSpec = Mapping[str, Mapping[Stat, int]]

RES_LES_DES: ExponentSpec = {"p": {Stat.RES: 1}, "q": {Stat.LES: 1}, "t": {Stat.DES: 1}}


class PermutationSeries:
    """A batch of permutations of equal length stored as rows of an int8 matrix.

    Statistics are computed once, on first access, by the parallel kernel.
    """

    def __init__(self, matrix: np.ndarray, stats: np.ndarray | None = None) -> None:
        self.matrix = matrix
        self._stats = stats

    @staticmethod
    def symmetric_group(n: int) -> PermutationSeries:
        """All of S_n in lexicographic order. Cached per n."""
        return _symmetric_group(n)

    @classmethod
    def from_permutations(cls, perms: list[Permutation], n: int) -> PermutationSeries:
        if not perms:
            return cls(np.zeros((0, n), dtype=np.int8))
        return cls(np.stack([sigma.vector for sigma in perms]))

    @property
    def n(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def stats(self) -> np.ndarray:
        if self._stats is None:
            self._stats = statistics_matrix(self.matrix)
        return self._stats

    def column(self, stat: Stat) -> np.ndarray:
        return self.stats[:, int(stat)]

    def __len__(self) -> int:
        return int(self.matrix.shape[0])

    def __iter__(self) -> Iterator[Permutation]:
        for row in self.matrix:
            yield Permutation(int(letter) for letter in row)

    def __getitem__(self, mask: np.ndarray) -> PermutationSeries:
        return PermutationSeries(self.matrix[mask], self.stats[mask])

    def andre(self) -> PermutationSeries:
        return self[self.column(Stat.ANDRE) == 1]

    def without_double_descents(self) -> PermutationSeries:
        return self[self.column(Stat.DOUBLE_DESCENT) == 0]

    def with_valleys(self, k: int) -> PermutationSeries:
        return self[self.column(Stat.VALLEY) == k]


@lru_cache(maxsize=4)
def _symmetric_group(n: int) -> PermutationSeries:
    rows = list(permutations(range(1, n + 1)))
    matrix = np.array(rows, dtype=np.int8).reshape(len(rows), n)
    return PermutationSeries(matrix)


class GeneratingFunctionBuilder:
    """Sums monomials over a series of permutations.

    Each variable's exponent is an integer combination of statistics. Exponent vectors are
    histogrammed with numpy.unique and the counts become the coefficients.
    """

    def build(self, series: PermutationSeries, exponents: ExponentSpec) -> MultiPoly:
        """Builds the generating polynomial.

        Args:
            series (PermutationSeries): The permutations to sum over.
            exponents (ExponentSpec): Variable name to {statistic: multiplier}.

        Raises:
            ValueError: If an exponent is negative for some permutation.

        Returns:
            MultiPoly: The generating polynomial.
        """
        if len(series) == 0:
            return MultiPoly.zero()

        columns = np.zeros((len(series), NUM_VARIABLES), dtype=np.int64)
        stats = series.stats
        for name, combination in exponents.items():
            idx = variable_index(name)
            for stat, multiplier in combination.items():
                columns[:, idx] += multiplier * stats[:, int(stat)].astype(np.int64)

        if (columns < 0).any():
            raise ValueError(f"Negative exponent produced by {dict(exponents)}.")

        unique_rows, counts = np.unique(columns, axis=0, return_counts=True)
        terms = ((tuple(int(e) for e in row), int(count)) for row, count in zip(unique_rows, counts))
        return MultiPoly(terms)
