from __future__ import annotations

import numpy as np
from numba import njit, prange  # type: ignore

from .enums import LetterClass, Stat

PEAK = int(LetterClass.PEAK)
VALLEY = int(LetterClass.VALLEY)
DOUBLE_ASCENT = int(LetterClass.DOUBLE_ASCENT)
DOUBLE_DESCENT = int(LetterClass.DOUBLE_DESCENT)

NUM_STATS = len(Stat)
_DES = int(Stat.DES)
_ASC = int(Stat.ASC)
_EXC = int(Stat.EXC)
_INV = int(Stat.INV)
_RES = int(Stat.RES)
_LES = int(Stat.LES)
_THIRTEEN_TWO = int(Stat.THIRTEEN_TWO)
_PEAK = int(Stat.PEAK)
_VALLEY = int(Stat.VALLEY)
_DOUBLE_ASCENT = int(Stat.DOUBLE_ASCENT)
_DOUBLE_DESCENT = int(Stat.DOUBLE_DESCENT)
_ANDRE = int(Stat.ANDRE)


@njit(cache=True)
def descents(vector: np.ndarray) -> int:
    count = 0
    for i in range(vector.shape[0] - 1):
        if vector[i] > vector[i + 1]:
            count += 1
    return count


@njit(cache=True)
def ascents(vector: np.ndarray) -> int:
    count = 0
    for i in range(vector.shape[0] - 1):
        if vector[i] < vector[i + 1]:
            count += 1
    return count


@njit(cache=True)
def excedances(vector: np.ndarray) -> int:
    count = 0
    for i in range(vector.shape[0]):
        if vector[i] > i + 1:
            count += 1
    return count


@njit(cache=True)
def inversions(vector: np.ndarray) -> int:
    count = 0
    n = vector.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if vector[i] > vector[j]:
                count += 1
    return count


@njit(cache=True)
def right_embracing(vector: np.ndarray) -> int:
    """Pattern 2-13: pairs i < j <= n-1 with sigma_j < sigma_i < sigma_{j+1}."""
    count = 0
    n = vector.shape[0]
    for i in range(n):
        for j in range(i + 1, n - 1):
            if vector[j] < vector[i] and vector[i] < vector[j + 1]:
                count += 1
    return count


@njit(cache=True)
def left_embracing(vector: np.ndarray) -> int:
    """Pattern 31-2: pairs 2 <= i < j with sigma_{i-1} > sigma_j > sigma_i."""
    count = 0
    n = vector.shape[0]
    for i in range(1, n):
        for j in range(i + 1, n):
            if vector[i - 1] > vector[j] and vector[j] > vector[i]:
                count += 1
    return count


@njit(cache=True)
def thirteen_two(vector: np.ndarray) -> int:
    """Pattern 13-2: an adjacent pair sigma_i sigma_{i+1} and a later sigma_j strictly between them."""
    count = 0
    n = vector.shape[0]
    for i in range(n - 1):
        for j in range(i + 2, n):
            if vector[i] < vector[j] and vector[j] < vector[i + 1]:
                count += 1
    return count


@njit(cache=True)
def letter_classes(vector: np.ndarray, out: np.ndarray) -> None:
    """Writes the class code of the letter at each position, padding with zeros at both ends."""
    n = vector.shape[0]
    for i in range(n):
        here = vector[i]
        left = vector[i - 1] if i > 0 else 0
        right = vector[i + 1] if i < n - 1 else 0
        if left < here:
            out[i] = PEAK if here > right else DOUBLE_ASCENT
        else:
            out[i] = VALLEY if here < right else DOUBLE_DESCENT


@njit(cache=True)
def _class_counts(vector: np.ndarray) -> tuple[int, int, int, int]:
    peaks = valleys = double_ascents = double_descents = 0
    n = vector.shape[0]
    for i in range(n):
        here = vector[i]
        left = vector[i - 1] if i > 0 else 0
        right = vector[i + 1] if i < n - 1 else 0
        if left < here:
            if here > right:
                peaks += 1
            else:
                double_ascents += 1
        elif here < right:
            valleys += 1
        else:
            double_descents += 1
    return peaks, valleys, double_ascents, double_descents


@njit(cache=True)
def is_andre(vector: np.ndarray) -> bool:
    """True when no restriction sigma_[k] has a double descent under the zero boundary convention."""
    n = vector.shape[0]
    sub = np.empty(n, dtype=np.int64)
    for k in range(2, n + 1):
        m = 0
        for i in range(n):
            if vector[i] <= k:
                sub[m] = vector[i]
                m += 1
        for i in range(m):
            left = sub[i - 1] if i > 0 else 0
            right = sub[i + 1] if i < m - 1 else 0
            if left > sub[i] and sub[i] > right:
                return False
    return True


@njit(parallel=True, cache=True)
def statistics_matrix(perms: np.ndarray) -> np.ndarray:
    """Computes every column of Stat for each row of a matrix of permutations.

    Rows are independent, so the parallel loop writes each result into its own slot and the
    output does not depend on the thread count.
    """
    rows = perms.shape[0]
    out = np.zeros((rows, NUM_STATS), dtype=np.int32)
    for r in prange(rows):
        vector = perms[r]
        out[r, _DES] = descents(vector)
        out[r, _ASC] = ascents(vector)
        out[r, _EXC] = excedances(vector)
        out[r, _INV] = inversions(vector)
        out[r, _RES] = right_embracing(vector)
        out[r, _LES] = left_embracing(vector)
        out[r, _THIRTEEN_TWO] = thirteen_two(vector)
        peaks, valleys, double_ascents, double_descents = _class_counts(vector)
        out[r, _PEAK] = peaks
        out[r, _VALLEY] = valleys
        out[r, _DOUBLE_ASCENT] = double_ascents
        out[r, _DOUBLE_DESCENT] = double_descents
        out[r, _ANDRE] = 1 if is_andre(vector) else 0
    return out


def count_pattern_slow(letters: tuple[int, ...], pattern: str) -> int:
    """
    Readable reference for the vincular counts above, kept for cross-checking the kernels.

    The pattern is written with three digits and one dash, e.g. "2-13". Letters joined without
    a dash must be adjacent in the permutation.
    """
    digits = pattern.replace("-", "")
    dash = pattern.index("-")
    n = len(letters)
    count = 0
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                positions = (a, b, c)
                if dash == 1 and c != b + 1:
                    continue
                if dash == 2 and b != a + 1:
                    continue
                values = [letters[i] for i in positions]
                ranks = [sorted(values).index(value) + 1 for value in values]
                if ranks == [int(d) for d in digits]:
                    count += 1
    return count
