from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .enums import LetterClass, VincularPattern

Letters = tuple[int, ...]
MAX_LENGTH = int(np.iinfo(np.int8).max)


class Permutation:
    """A permutation of {1..n} written in one-line notation.

    Keeps the letters as a tuple and as an int8 vector for the numba kernels. The text form
    is the plain digit string for n <= 9 and comma separated otherwise.
    """

    __slots__ = ["letters", "vector"]

    def __init__(self, letters: Iterable[int] | str | Permutation) -> None:
        """Initialises a new instance of a Permutation

        Args:
            letters (Iterable[int] | str | Permutation): The one-line notation.

        Raises:
            ValueError: If the letters are not a permutation of {1..n}, or n exceeds MAX_LENGTH.
        """
        if isinstance(letters, Permutation):
            values: Letters = letters.letters
        elif isinstance(letters, str):
            values = Permutation.parse(letters)
        else:
            values = tuple(int(letter) for letter in letters)

        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}.")
        if len(values) > MAX_LENGTH:
            raise ValueError(f"Permutations longer than {MAX_LENGTH} do not fit the int8 vector.")

        self.letters = values
        self.vector = np.array(values, dtype=np.int8)

    @staticmethod
    def parse(text: str) -> Letters:
        """Parses "31524" or "11,2,12,13" into letters."""
        text = text.strip()
        if not text:
            return ()
        if "," in text:
            return tuple(int(token) for token in text.split(","))
        if not text.isdigit():
            raise ValueError(f"{text} is not a permutation.")
        return tuple(int(c) for c in text)

    def __str__(self) -> str:
        if len(self.letters) <= 9:
            return "".join(str(letter) for letter in self.letters)
        return ",".join(str(letter) for letter in self.letters)

    def __repr__(self) -> str:
        return str(self)

    def __eq__(self, obj: object) -> bool:
        return isinstance(obj, type(self)) and self.letters == obj.letters

    def __lt__(self, other: Permutation) -> bool:
        return self.letters < other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def position(self, letter: int) -> int:
        """The 0-based position of a letter."""
        return self.letters.index(letter)

    def restriction(self, k: int) -> Permutation:
        """The subword of letters <= k, itself a permutation of {1..k}."""
        return Permutation(letter for letter in self.letters if letter <= k)

    def complement(self) -> Permutation:
        n = len(self.letters)
        return Permutation(n + 1 - letter for letter in self.letters)


def des(sigma: Permutation) -> int:
    return int(kernels.descents(sigma.vector))


def asc(sigma: Permutation) -> int:
    return int(kernels.ascents(sigma.vector))


def exc(sigma: Permutation) -> int:
    return int(kernels.excedances(sigma.vector))


def inv(sigma: Permutation) -> int:
    return int(kernels.inversions(sigma.vector))


def res(sigma: Permutation) -> int:
    """Occurrences of 2-13."""
    return int(kernels.right_embracing(sigma.vector))


def les(sigma: Permutation) -> int:
    """Occurrences of 31-2."""
    return int(kernels.left_embracing(sigma.vector))


def count_vincular(sigma: Permutation, pattern: VincularPattern | str) -> int:
    if isinstance(pattern, str):
        pattern = VincularPattern.from_str(pattern)
    if pattern is VincularPattern.TWO_THIRTEEN:
        return res(sigma)
    if pattern is VincularPattern.THIRTYONE_TWO:
        return les(sigma)
    return int(kernels.thirteen_two(sigma.vector))


def classify_letters(sigma: Permutation) -> dict[int, LetterClass]:
    """Classifies every letter as peak, valley, double ascent or double descent.

    Uses the convention sigma_0 = sigma_{n+1} = 0.

    Args:
        sigma (Permutation): The permutation.

    Returns:
        dict[int, LetterClass]: The class of each letter, keyed by letter.
    """
    codes = np.empty(len(sigma), dtype=np.int8)
    kernels.letter_classes(sigma.vector, codes)
    return {letter: LetterClass(int(code)) for letter, code in zip(sigma.letters, codes)}


def letter_class(sigma: Permutation, letter: int) -> LetterClass:
    return classify_letters(sigma)[letter]


def letters_of_class(sigma: Permutation, letter_type: LetterClass) -> frozenset[int]:
    return frozenset(letter for letter, cls in classify_letters(sigma).items() if cls is letter_type)


def peaks(sigma: Permutation) -> frozenset[int]:
    return letters_of_class(sigma, LetterClass.PEAK)


def valleys(sigma: Permutation) -> frozenset[int]:
    return letters_of_class(sigma, LetterClass.VALLEY)


def double_ascents(sigma: Permutation) -> frozenset[int]:
    return letters_of_class(sigma, LetterClass.DOUBLE_ASCENT)


def double_descents(sigma: Permutation) -> frozenset[int]:
    return letters_of_class(sigma, LetterClass.DOUBLE_DESCENT)


def _word_text(word: Letters) -> str:
    if not word:
        return "ε"
    separator = "" if max(word) <= 9 else ","
    return separator.join(str(letter) for letter in word)


@dataclass(frozen=True)
class Factorization:
    """sigma = w1 w2 x w4 w5, where w2 and w4 are the maximal runs of letters greater than x
    immediately to the left and right of x."""

    w1: Letters
    w2: Letters
    x: int
    w4: Letters
    w5: Letters

    @property
    def word(self) -> Letters:
        return self.w1 + self.w2 + (self.x,) + self.w4 + self.w5

    @property
    def letter_class(self) -> LetterClass:
        """The class of x read off the factorization: which of w2, w4 are empty."""
        if not self.w2 and not self.w4:
            return LetterClass.PEAK
        if self.w2 and self.w4:
            return LetterClass.VALLEY
        if self.w4:
            return LetterClass.DOUBLE_ASCENT
        return LetterClass.DOUBLE_DESCENT

    def __str__(self) -> str:
        parts = (self.w1, self.w2, (self.x,), self.w4, self.w5)
        return "(" + ", ".join(_word_text(part) for part in parts) + ")"


def x_factorization(sigma: Permutation | Sequence[int], x: int) -> Factorization:
    """Splits sigma around the letter x.

    Args:
        sigma (Permutation | Sequence[int]): The permutation.
        x (int): A letter of sigma.

    Raises:
        ValueError: If x is not a letter of sigma.

    Returns:
        Factorization: The x-factorization.
    """
    letters = tuple(sigma)
    if x not in letters:
        raise ValueError(f"{x} is not a letter of {_word_text(letters)}.")
    i = letters.index(x)

    start = i
    while start > 0 and letters[start - 1] > x:
        start -= 1
    end = i + 1
    while end < len(letters) and letters[end] > x:
        end += 1

    return Factorization(letters[:start], letters[start:i], x, letters[i + 1 : end], letters[end:])


def mfs_phi(sigma: Permutation, x: int) -> Permutation:
    """The modified Foata-Strehl action of x: toggles a double ascent x into a double descent
    (and back) by moving x across the block of larger letters next to it. Peaks and valleys
    are fixed."""
    fact = x_factorization(sigma, x)
    if fact.letter_class in (LetterClass.PEAK, LetterClass.VALLEY):
        return sigma
    return Permutation(fact.w1 + fact.w4 + (x,) + fact.w2 + fact.w5)


def mfs_phi_set(sigma: Permutation, letters: Iterable[int]) -> Permutation:
    """Applies mfs_phi for each letter in turn. The actions commute, so the order is irrelevant."""
    result = sigma
    for letter in letters:
        result = mfs_phi(result, letter)
    return result


@dataclass(frozen=True)
class Orbit:
    """An orbit under the modified Foata-Strehl group action.

    The representative is the unique member without double descents.
    """

    representative: Permutation
    free_letters: frozenset[int]
    members: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, sigma: object) -> bool:
        return sigma in self.members


def mfs_orbit(sigma: Permutation) -> Orbit:
    representative = mfs_phi_set(sigma, sorted(double_descents(sigma)))
    free = double_ascents(representative)
    members = [
        mfs_phi_set(representative, subset)
        for size in range(len(free) + 1)
        for subset in combinations(sorted(free), size)
    ]
    return Orbit(representative, free, tuple(sorted(members)))
