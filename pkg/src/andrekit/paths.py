from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .cfrac import (
    CFSpec,
    dn_series,
    dn_spec,
    euler_number_spec,
    factorial_spec,
    jfraction_series,
    master_spec,
    neg1_series,
    neg1_spec,
)
from .enums import CFKind, Step
from .exceptions import MalformedDecompositionError, MalformedPathError
from .poly import MultiPoly
from .reports import TheoremReport, check_identity


@dataclass(frozen=True)
class LatticePath:
    """A Motzkin path: up, level and down steps from height 0 back to height 0, never below it."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        height = 0
        for step in self.steps:
            height += _delta(step)
            if height < 0:
                raise MalformedPathError(f"{self} drops below height zero.")
        if height != 0:
            raise MalformedPathError(f"{self} ends at height {height}.")

    @classmethod
    def from_str(cls, text: str) -> LatticePath:
        try:
            return cls(tuple(Step(c) for c in text.strip().upper()))
        except ValueError:
            raise MalformedPathError(f"{text} is not a word in U, L, D.")

    @classmethod
    def andre(cls, text: str) -> LatticePath:
        """Parses an André path, rejecting level steps at odd heights."""
        path = cls.from_str(text)
        if not path.is_andre:
            raise MalformedPathError(f"{text} has a level step at odd height.")
        return path

    def heights(self) -> list[int]:
        """The starting height of each step."""
        result: list[int] = []
        height = 0
        for step in self.steps:
            result.append(height)
            height += _delta(step)
        return result

    @property
    def is_dyck(self) -> bool:
        return Step.LEVEL not in self.steps

    @property
    def is_andre(self) -> bool:
        return all(h % 2 == 0 for step, h in zip(self.steps, self.heights()) if step is Step.LEVEL)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


def _delta(step: Step) -> int:
    if step is Step.UP:
        return 1
    if step is Step.DOWN:
        return -1
    return 0


def _generate(length: int, allow_level: bool, even_levels_only: bool) -> Iterator[LatticePath]:
    def extend(prefix: list[Step], height: int) -> Iterator[tuple[Step, ...]]:
        remaining = length - len(prefix)
        if remaining == 0:
            yield tuple(prefix)
            return
        if height + 1 <= remaining - 1:
            yield from extend(prefix + [Step.UP], height + 1)
        if allow_level and height <= remaining - 1 and (not even_levels_only or height % 2 == 0):
            yield from extend(prefix + [Step.LEVEL], height)
        if height >= 1:
            yield from extend(prefix + [Step.DOWN], height - 1)

    for steps in extend([], 0):
        yield LatticePath(steps)


def enumerate_motzkin(n: int) -> list[LatticePath]:
    return list(_generate(n, allow_level=True, even_levels_only=False))


def enumerate_dyck(semilength: int) -> list[LatticePath]:
    return list(_generate(2 * semilength, allow_level=False, even_levels_only=False))


def enumerate_andre_paths(n: int) -> list[LatticePath]:
    """Motzkin paths of length n whose level steps all sit at even heights."""
    return list(_generate(n, allow_level=True, even_levels_only=True))


def weight(path: LatticePath, spec: CFSpec) -> MultiPoly:
    """Product of step weights: U weighs 1, L at height h weighs b_h, D from height h weighs lambda_h."""
    total = MultiPoly.one()
    for step, height in zip(path.steps, path.heights()):
        if step is Step.LEVEL:
            total = total * spec.b(height)
        elif step is Step.DOWN:
            total = total * spec.lam(height)
    return total


@dataclass(frozen=True)
class AndrePathDecomposition:
    """u = L^{y1} w1 L^{y2} w2 ... wk L^{y_{k+1}}, with w1..wk the two-step blocks of a Dyck path."""

    composition: tuple[int, ...]
    dyck: LatticePath

    def __str__(self) -> str:
        return f"({','.join(str(y) for y in self.composition)}; {self.dyck})"


def psi(path: LatticePath) -> AndrePathDecomposition:
    """Splits an André path into its level-step composition and the Dyck path left behind.

    Raises:
        MalformedPathError: If the path has a level step at odd height.
    """
    if not path.is_andre:
        raise MalformedPathError(f"{path} is not an André path.")

    composition: list[int] = []
    blocks: list[Step] = []
    pending: list[Step] = []
    run = 0
    for step in path.steps:
        if step is Step.LEVEL:
            assert not pending
            run += 1
            continue
        pending.append(step)
        if len(pending) == 2:
            composition.append(run)
            blocks.extend(pending)
            pending = []
            run = 0
    assert not pending
    composition.append(run)
    return AndrePathDecomposition(tuple(composition), LatticePath(tuple(blocks)))


def psi_inverse(decomposition: AndrePathDecomposition) -> LatticePath:
    """Rebuilds the André path from a composition and a Dyck path.

    Raises:
        MalformedDecompositionError: If the pieces do not fit together.
    """
    dyck = decomposition.dyck
    composition = decomposition.composition
    if not dyck.is_dyck:
        raise MalformedDecompositionError(f"{dyck} is not a Dyck path.")
    k = len(dyck) // 2
    if len(composition) != k + 1 or any(y < 0 for y in composition):
        raise MalformedDecompositionError(f"{composition} is not a composition into {k + 1} parts.")

    steps: list[Step] = []
    for i, run in enumerate(composition):
        steps.extend([Step.LEVEL] * run)
        if i < k:
            steps.extend(dyck.steps[2 * i : 2 * i + 2])

    try:
        path = LatticePath(tuple(steps))
    except MalformedPathError as error:
        raise MalformedDecompositionError(str(error))
    if not path.is_andre:
        raise MalformedDecompositionError(f"{path} is not an André path.")
    return path


def compositions(n: int, k: int) -> list[tuple[int, ...]]:
    """Y_{n,k}: weak compositions of n-2k into k+1 parts. There are C(n-k, k) of them."""
    total = n - 2 * k
    if total < 0 or k < 0:
        return []
    result: list[tuple[int, ...]] = []
    for bars in combinations(range(total + k), k):
        parts: list[int] = []
        previous = -1
        for bar in bars:
            parts.append(bar - previous - 1)
            previous = bar
        parts.append(total + k - previous - 1)
        result.append(tuple(parts))
    return result


def closed_formula_neg1(n: int) -> MultiPoly:
    """D_n(1,-1,t) = sum_k C(n-1-k, k) k! t^k."""
    t = MultiPoly.var("t")
    total = MultiPoly.zero()
    for k in range(n):
        total = total + comb(n - 1 - k, k) * factorial(k) * t**k
    return total


def verify_flajolet(n: int) -> TheoremReport:
    """Continued-fraction moments equal weighted path sums for every built-in fraction."""
    motzkin = enumerate_motzkin(n)
    dyck = enumerate_dyck(n)
    checks = 0
    for spec in (dn_spec(), master_spec(), neg1_spec(), euler_number_spec(), factorial_spec()):
        paths = dyck if spec.kind is CFKind.S else motzkin
        by_paths = MultiPoly.zero()
        for path in paths:
            by_paths = by_paths + weight(path, spec)
        check_identity(f"path sum for {spec.name}", n, by_paths, jfraction_series(spec, n)[n])
        checks += 1
    return TheoremReport("flajolet", n, checks, f"{len(motzkin)} Motzkin and {len(dyck)} Dyck paths")


def verify_psi(n: int) -> TheoremReport:
    """psi is a weight-preserving bijection onto compositions times Dyck paths."""
    spec = neg1_spec()
    counts: dict[int, int] = {}
    seen: set[tuple[tuple[int, ...], str]] = set()
    for path in enumerate_andre_paths(n):
        decomposition = psi(path)
        check_identity("psi round trip", n, str(psi_inverse(decomposition)), str(path))
        check_identity("psi keeps weight", n, weight(path, spec), weight(decomposition.dyck, spec))
        seen.add((decomposition.composition, str(decomposition.dyck)))
        k = len(decomposition.dyck) // 2
        counts[k] = counts.get(k, 0) + 1

    for k in range(n // 2 + 1):
        check_identity("|Y_{n,k}| = C(n-k,k)", n, len(compositions(n, k)), comb(n - k, k), k)
        catalan = comb(2 * k, k) // (k + 1)
        check_identity("psi is onto", n, counts.get(k, 0), len(compositions(n, k)) * catalan, k)
    check_identity("psi is injective", n, len(seen), sum(counts.values()))
    return TheoremReport("psi", n, 2 * sum(counts.values()) + n + 1)


def verify_neg1(n: int, full_limit: int = 10) -> TheoremReport:
    """The closed formula, the specialised fraction and the (p,q) fraction agree at q = -1."""
    closed = closed_formula_neg1(n)
    check_identity("neg1 fraction", n, neg1_series(n - 1)[n - 1], closed)
    specialised = jfraction_series(dn_spec().specialize({"p": 1, "q": -1}), n - 1)[n - 1]
    check_identity("dn fraction specialised first", n, specialised, closed)
    checks = 2
    if n <= full_limit:
        full = dn_series(n - 1)[n - 1].substitute({"p": 1, "q": -1})
        check_identity("dn fraction specialised last", n, full, closed)
        by_paths = MultiPoly.zero()
        for path in enumerate_andre_paths(n - 1):
            by_paths = by_paths + weight(path, neg1_spec())
        check_identity("André path sum", n, by_paths, closed)
        checks += 2
    return TheoremReport("neg1", n, checks, closed.to_text_in("t"))
