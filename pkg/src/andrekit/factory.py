from __future__ import annotations

import os
import warnings

import numba

from .controllers import ExpandController, TablesController, TraceController, VerifyController
from .enums import OutputFormat
from .suites import DEFAULT_CAP, DEFAULT_SEED, SuiteRunner
from .views import SeriesPrinter, SuiteReporter, TablePrinter, TracePrinter

THREADS_ENV = "ANDREKIT_THREADS"


def resolve_workers(workers: int | None = None) -> int:
    """The worker count: an explicit value, else ANDREKIT_THREADS, else 1.

    Raises:
        ValueError: If the count is not a positive integer.
    """
    if workers is None:
        raw = os.environ.get(THREADS_ENV, "1")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV}={raw} is not an integer.")
    if workers < 1:
        raise ValueError(f"The worker count must be positive, got {workers}.")
    return workers


def configure_threads(workers: int) -> None:
    numba.set_num_threads(min(workers, numba.config.NUMBA_NUM_THREADS))


def resolve_cap(*, unsafe_n: bool = False, cap: int = DEFAULT_CAP) -> int | None:
    """The enumeration cap, or None when it has been lifted."""
    if not unsafe_n:
        return cap
    warnings.warn(
        f"The enumeration cap of n={cap} is lifted. S_n is held in memory as an n! x n matrix.",
        ResourceWarning,
        stacklevel=2,
    )
    return None


def create_runner(
    *,
    fmt: OutputFormat = OutputFormat.JSON,
    workers: int | None = None,
    cap: int | None = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
    reporter: SuiteReporter | None = None,
) -> SuiteRunner:
    num_workers = resolve_workers(workers)
    configure_threads(num_workers)
    reporter = reporter or SuiteReporter(fmt)
    return SuiteRunner(reporter, workers=num_workers, cap=cap, seed=seed)


def create_verify_controller(
    *,
    fmt: OutputFormat = OutputFormat.JSON,
    workers: int | None = None,
    cap: int | None = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
) -> VerifyController:
    runner = create_runner(fmt=fmt, workers=workers, cap=cap, seed=seed)
    return VerifyController(runner)


def create_expand_controller() -> ExpandController:
    return ExpandController(SeriesPrinter())


def create_tables_controller(*, cap: int | None = DEFAULT_CAP) -> TablesController:
    configure_threads(resolve_workers())
    return TablesController(TablePrinter(), cap)


def create_trace_controller() -> TraceController:
    return TraceController(TracePrinter())
