from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .andre import enumerate_D, enumerate_G, is_andre
from .enums import LetterClass, PhiCase, ValleyQuality, ValleyType
from .exceptions import NotAndreError, NotASubsetError, NotAValleyError, NotInGError
from .perm import (
    Factorization,
    Permutation,
    classify_letters,
    double_descents,
    les,
    res,
    valleys,
    x_factorization,
)
from .reports import TheoremReport, check_identity


@dataclass(frozen=True)
class ValleyInfo:
    """How a valley x sits between its neighbouring blocks w2 and w4.

    y1 = min(w2), y2 = min(w4) and y = min(y1, y2). The valley is good when y1 > y2.
    Its type is I when y is a peak or a double ascent and II when y is a valley.
    """

    x: int
    y1: int
    y2: int
    quality: ValleyQuality
    vtype: ValleyType
    y_class: LetterClass
    factorization: Factorization

    @property
    def y(self) -> int:
        return min(self.y1, self.y2)


def valley_info(sigma: Permutation, x: int) -> ValleyInfo:
    fact = x_factorization(sigma, x)
    if fact.letter_class is not LetterClass.VALLEY:
        raise NotAValleyError(f"{x} is not a valley of {sigma}.")

    y1, y2 = min(fact.w2), min(fact.w4)
    y_class = classify_letters(sigma)[min(y1, y2)]
    quality = ValleyQuality.GOOD if y1 > y2 else ValleyQuality.BAD
    vtype = ValleyType.II if y_class is LetterClass.VALLEY else ValleyType.I
    return ValleyInfo(x, y1, y2, quality, vtype, y_class, fact)


@dataclass(frozen=True)
class ValleySubset:
    """A set of valleys, by letter and by 1-based rank among the valleys in increasing order."""

    letters: tuple[int, ...]
    indices: tuple[int, ...]

    @classmethod
    def of(cls, sigma: Permutation, letters: Iterable[int]) -> ValleySubset:
        chosen = sorted(set(letters))
        ordered = sorted(valleys(sigma))
        missing = [letter for letter in chosen if letter not in ordered]
        if missing:
            raise NotASubsetError(f"{missing} are not valleys of {sigma}.")
        return cls(tuple(chosen), tuple(ordered.index(letter) + 1 for letter in chosen))

    @classmethod
    def from_indices(cls, sigma: Permutation, indices: Iterable[int]) -> ValleySubset:
        ordered = sorted(valleys(sigma))
        chosen = sorted(set(indices))
        if any(i < 1 or i > len(ordered) for i in chosen):
            raise NotASubsetError(f"{chosen} is not a subset of [{len(ordered)}].")
        return cls(tuple(ordered[i - 1] for i in chosen), tuple(chosen))

    def __str__(self) -> str:
        return "{" + ",".join(str(letter) for letter in self.letters) + "}"


@dataclass(frozen=True)
class PhiStep:
    x: int
    case: PhiCase
    quality: ValleyQuality
    before: Permutation
    after: Permutation


@dataclass(frozen=True)
class PhiTrace:
    """A sequence of single-valley transforms, with the permutation and valley set at the other end."""

    steps: tuple[PhiStep, ...]
    result: Permutation
    subset: ValleySubset = field(default_factory=lambda: ValleySubset((), ()))


def phi_step(sigma: Permutation, x: int) -> PhiStep:
    """Applies the valley transform at x and records which rule fired.

    Args:
        sigma (Permutation): A permutation without double descents.
        x (int): A valley of sigma.

    Raises:
        NotInGError: If sigma has a double descent.
        NotAValleyError: If x is not a valley.

    Returns:
        PhiStep: The step, including the transformed permutation.
    """
    if double_descents(sigma):
        raise NotInGError(f"{sigma} has double descents.")

    info = valley_info(sigma, x)
    fact = info.factorization
    w1, w2, w4, w5 = fact.w1, fact.w2, fact.w4, fact.w5
    y = info.y
    good = info.quality is ValleyQuality.GOOD

    if info.y_class is LetterClass.PEAK:
        case = PhiCase.PEAK
        if good:
            assert w4 == (y,)
            word = w1 + (y, x) + w2 + w5
        else:
            assert w2 == (y,)
            word = w1 + w4 + (x, y) + w5
    elif info.y_class is LetterClass.DOUBLE_ASCENT:
        case = PhiCase.DOUBLE_ASCENT
        if good:
            assert w4[0] == y and len(w4) > 1
            word = w1 + (y,) + w2 + (x,) + w4[1:] + w5
        else:
            assert w2[0] == y and len(w2) > 1
            word = w1 + w2[1:] + (x, y) + w4 + w5
    else:
        case = PhiCase.VALLEY
        if good:
            cut = w4.index(y)
            assert 0 < cut < len(w4) - 1
            word = w1 + w2 + (y,) + w4[:cut] + (x,) + w4[cut + 1 :] + w5
        else:
            cut = w2.index(y)
            assert 0 < cut < len(w2) - 1
            word = w1 + w2[:cut] + (x,) + w2[cut + 1 :] + (y,) + w4 + w5

    return PhiStep(x, case, info.quality, sigma, Permutation(word))


def phi_x(sigma: Permutation, x: int) -> Permutation:
    return phi_step(sigma, x).after


def _types(sigma: Permutation) -> dict[int, ValleyInfo]:
    return {x: valley_info(sigma, x) for x in sorted(valleys(sigma))}


def phi_set_trace(sigma: Permutation, letters: Iterable[int]) -> PhiTrace:
    """Applies the valley transforms for a set of valleys of an André permutation.

    Valley types are read from sigma. Type I valleys go first in increasing order, then type
    II valleys in decreasing order.
    """
    if not is_andre(sigma):
        raise NotAndreError(f"{sigma} is not an André permutation.")
    subset = ValleySubset.of(sigma, letters)
    infos = _types(sigma)
    type_one = [x for x in subset.letters if infos[x].vtype is ValleyType.I]
    type_two = [x for x in subset.letters if infos[x].vtype is ValleyType.II]

    steps: list[PhiStep] = []
    current = sigma
    for x in type_one + sorted(type_two, reverse=True):
        step = phi_step(current, x)
        steps.append(step)
        current = step.after
    return PhiTrace(tuple(steps), current, subset)


def phi_set(sigma: Permutation, letters: Iterable[int]) -> Permutation:
    return phi_set_trace(sigma, letters).result


def phi_inverse_trace(tau: Permutation) -> PhiTrace:
    """Recovers (sigma, S) from tau.

    Repeatedly undoes the smallest bad type II valley, then undoes the bad type I valleys of
    what is left. The recovered permutation is André and S is the set of undone valleys.

    Raises:
        NotInGError: If tau has a double descent.
    """
    if double_descents(tau):
        raise NotInGError(f"{tau} has double descents.")

    steps: list[PhiStep] = []
    undone: list[int] = []
    current = tau
    last = 0
    while True:
        bad_type_two = [
            x
            for x, info in _types(current).items()
            if info.quality is ValleyQuality.BAD and info.vtype is ValleyType.II
        ]
        if not bad_type_two:
            break
        z = bad_type_two[0]
        assert z > last
        step = phi_step(current, z)
        steps.append(step)
        undone.append(z)
        current = step.after
        last = z

    bad_type_one = [x for x, info in _types(current).items() if info.quality is ValleyQuality.BAD]
    for x in sorted(bad_type_one):
        step = phi_step(current, x)
        steps.append(step)
        undone.append(x)
        current = step.after

    return PhiTrace(tuple(steps), current, ValleySubset.of(current, undone))


def phi_inverse(tau: Permutation) -> tuple[Permutation, ValleySubset]:
    trace = phi_inverse_trace(tau)
    return trace.result, trace.subset


def verify_bijection(n: int, seed: int = 13) -> TheoremReport:
    """Checks that (sigma, S) -> phi_S(sigma) is a bijection from pairs over D_{n,k} onto G_{n,k}.

    Every image must lie in G_{n,k}, shift res up and les down by |S|, and invert back to
    (sigma, S). Also applies type I valleys in a shuffled order to check that it does not
    matter.
    """
    rng = random.Random(seed)
    checks = 0
    for k in range((n - 1) // 2 + 1):
        sources = enumerate_D(n, k)
        images: set[Permutation] = set()
        for sigma in sources:
            infos = _types(sigma)
            letters = sorted(infos)
            for size in range(len(letters) + 1):
                for chosen in combinations(letters, size):
                    tau = phi_set(sigma, chosen)
                    dd = double_descents(tau)
                    check_identity("image has no double descents", n, dd, frozenset(), k)
                    check_identity("image has k valleys", n, len(valleys(tau)), k, k)
                    check_identity("res shift", n, res(tau), res(sigma) + size, k)
                    check_identity("les shift", n, les(tau), les(sigma) - size, k)
                    back, subset = phi_inverse(tau)
                    check_identity("inverse", n, (back, subset.letters), (sigma, chosen), k)
                    images.add(tau)
                    checks += 5

            type_one = [x for x in letters if infos[x].vtype is ValleyType.I]
            shuffled = list(type_one)
            rng.shuffle(shuffled)
            in_order = sigma
            for x in type_one:
                in_order = phi_x(in_order, x)
            any_order = sigma
            for x in shuffled:
                any_order = phi_x(any_order, x)
            check_identity("type I order independence", n, any_order, in_order, k)

        check_identity("|image| = 2^k |D_{n,k}|", n, len(images), 2**k * len(sources), k)
        check_identity("image = G_{n,k}", n, images, set(enumerate_G(n, k)), k)
        checks += 2
    return TheoremReport("bijection", n, checks)
