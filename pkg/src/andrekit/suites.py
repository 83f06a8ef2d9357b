from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING, Callable

from tqdm import tqdm  # type: ignore

from .andre import (
    verify_corollary_q,
    verify_en_q,
    verify_euler,
    verify_gamma_roundtrip,
    verify_letter_identities,
    verify_main1,
    verify_main2,
    verify_master,
    verify_orbits,
    verify_recognizers,
)
from .enums import CaseStatus, SuiteType
from .exceptions import (
    DomainError,
    EnumerationCapExceededError,
    NotDivisibleError,
    NotGammaExpressibleError,
    TheoremViolationError,
)
from .formulas import verify_formula_p1
from .paths import verify_flajolet, verify_neg1, verify_psi
from .phi import verify_bijection
from .reports import CaseResult, SuiteReport, TheoremReport

if TYPE_CHECKING:
    from .views import SuiteReporter  # pragma: no cover

DEFAULT_CAP = 9
DEFAULT_SEED = 13

Verifier = Callable[[int], TheoremReport]

# Suites that enumerate S_n (or all Motzkin paths) and therefore respect the cap.
ENUMERATING_SUITES = frozenset(
    {
        SuiteType.MAIN1,
        SuiteType.MAIN2,
        SuiteType.COROLLARY,
        SuiteType.ORBIT,
        SuiteType.BIJECTION,
        SuiteType.XFACT,
        SuiteType.MASTER,
        SuiteType.EULER,
        SuiteType.FLAJOLET,
    }
)

_FAILURES = (
    TheoremViolationError,
    AssertionError,
    DomainError,
    NotDivisibleError,
    NotGammaExpressibleError,
)


@dataclass(frozen=True)
class SuiteCase:
    """One verifier applied at one n. Module-level verifiers keep cases picklable."""

    id: str
    verifier: Verifier
    n: int

    def run(self) -> CaseResult:
        try:
            report = self.verifier(self.n)
        except _FAILURES as error:
            return CaseResult(self.id, CaseStatus.FAIL, f"{type(error).__name__}: {error}")
        return CaseResult(self.id, CaseStatus.PASS, str(report))


def run_case(case: SuiteCase) -> CaseResult:
    return case.run()


def _verifiers(suite: SuiteType, seed: int) -> list[tuple[str, Verifier]]:
    if suite is SuiteType.MAIN1:
        return [("main1", verify_main1), ("gamma-roundtrip", partial(verify_gamma_roundtrip, seed=seed))]
    if suite is SuiteType.MAIN2:
        return [("main2", verify_main2)]
    if suite is SuiteType.COROLLARY:
        return [("corollary", verify_corollary_q), ("en-q", verify_en_q)]
    if suite is SuiteType.ORBIT:
        return [("orbit", verify_orbits)]
    if suite is SuiteType.BIJECTION:
        return [("bijection", partial(verify_bijection, seed=seed))]
    if suite is SuiteType.XFACT:
        return [("xfact", verify_recognizers), ("letters", verify_letter_identities)]
    if suite is SuiteType.MASTER:
        return [("master", verify_master)]
    if suite is SuiteType.NEG1:
        return [("neg1", verify_neg1)]
    if suite is SuiteType.EULER:
        return [("euler", verify_euler)]
    if suite is SuiteType.FLAJOLET:
        return [("flajolet", verify_flajolet), ("psi", verify_psi)]
    raise ValueError(f"{suite} has no verifiers of its own.")


def build_cases(suite: SuiteType, n_max: int, *, seed: int = DEFAULT_SEED) -> list[SuiteCase]:
    """Lists the cases of a suite in the order they are reported.

    Args:
        suite (SuiteType): The suite, or SuiteType.ALL for every suite in declaration order.
        n_max (int): Cases run for n = 1..n_max.
        seed (int, optional): Seed for the randomised cases. Defaults to 13.

    Returns:
        list[SuiteCase]: The cases. Under SuiteType.ALL each id is prefixed with its suite.
    """
    if suite is SuiteType.ALL:
        cases: list[SuiteCase] = []
        for member in SuiteType:
            if member is SuiteType.ALL:
                continue
            for case in build_cases(member, n_max, seed=seed):
                cases.append(SuiteCase(f"{member.value}/{case.id}", case.verifier, case.n))
        return cases

    if suite is SuiteType.FORMULA_P1:
        return [SuiteCase(f"formula-p1/n<={n_max}", verify_formula_p1, n_max)] if n_max >= 1 else []

    return [
        SuiteCase(f"{name}/n={n}", verifier, n)
        for name, verifier in _verifiers(suite, seed)
        for n in range(1, n_max + 1)
    ]


def check_cap(suite: SuiteType, n_max: int, cap: int | None) -> None:
    """Raises EnumerationCapExceededError if an enumerating suite would go past the cap."""
    if cap is None or n_max <= cap:
        return
    suites = [suite]
    if suite is SuiteType.ALL:
        suites = [member for member in SuiteType if member is not SuiteType.ALL]
    capped = [member.value for member in suites if member in ENUMERATING_SUITES]
    if capped:
        raise EnumerationCapExceededError(
            f"n_max={n_max} exceeds the enumeration cap of {cap} for {', '.join(capped)}. "
            "Pass --unsafe-n to lift it."
        )


@dataclass
class SuiteRunner:
    """Runs verification cases and collects them into a SuiteReport."""

    reporter: SuiteReporter
    workers: int = 1
    cap: int | None = DEFAULT_CAP
    seed: int = DEFAULT_SEED

    def run_suite(self, suite: SuiteType, n_max: int) -> SuiteReport:
        """Runs a named suite for n = 1..n_max.

        Args:
            suite (SuiteType): The suite to run.
            n_max (int): The largest n to check.

        Raises:
            EnumerationCapExceededError: If an enumerating suite would pass the cap.

        Returns:
            SuiteReport: One case per verifier and n, in deterministic order.
        """
        check_cap(suite, n_max, self.cap)
        cases = build_cases(suite, n_max, seed=self.seed)
        return self.run_cases(suite.value, cases)

    def run_cases(self, name: str, cases: list[SuiteCase]) -> SuiteReport:
        start = time.perf_counter()
        results: list[CaseResult] = []
        if self.workers > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                outcomes = executor.map(run_case, cases, chunksize=1)
                for result in tqdm(outcomes, total=len(cases), disable=None):
                    results.append(result)
        else:
            for case in tqdm(cases, total=len(cases), disable=None):
                results.append(run_case(case))

        elapsed_ms = int(round((time.perf_counter() - start) * 1000))
        report = SuiteReport(name, results, elapsed_ms)
        self.reporter.display(report)
        return report
