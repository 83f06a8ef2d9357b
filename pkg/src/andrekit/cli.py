import sys
import warnings
from argparse import ArgumentParser, Namespace
from typing import Sequence

from .enums import OutputFormat, SeriesType, SuiteType, TableType
from .exceptions import (
    DomainError,
    EnumerationCapExceededError,
    NotAndreError,
    NotASubsetError,
    NotAValleyError,
    NotInGError,
    TheoremViolationError,
)
from .factory import (
    create_expand_controller,
    create_tables_controller,
    create_trace_controller,
    create_verify_controller,
    resolve_cap,
)
from .perm import Permutation
from .suites import DEFAULT_SEED

EXIT_THEOREM_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_PRECONDITION_ERRORS = (
    NotAndreError,
    NotASubsetError,
    NotAValleyError,
    NotInGError,
    DomainError,
    ValueError,
)


def parse_letters(text: str) -> tuple[int, ...]:
    """Parses "1,2" into (1, 2). An empty string is the empty set."""
    text = text.strip().strip("{}")
    if not text:
        return ()
    return tuple(int(token) for token in text.split(","))


def expand(args: Namespace) -> int:

    series: SeriesType = args.series
    n: int = args.n
    fmt: OutputFormat = args.format

    controller = create_expand_controller()
    return controller.expand(series, n, fmt)


def tables(args: Namespace) -> int:

    which: TableType = args.which
    n_max: int = args.n_max
    fmt: OutputFormat = args.format

    cap = resolve_cap(unsafe_n=args.unsafe_n)
    controller = create_tables_controller(cap=cap)
    return controller.tables(which, n_max, fmt)


def verify(args: Namespace) -> int:

    suite: SuiteType = args.suite
    n_max: int = args.n_max
    fmt: OutputFormat = args.format
    seed: int = args.seed

    if fmt is OutputFormat.CSV:
        raise ValueError("csv output is only available for tables.")

    cap = resolve_cap(unsafe_n=args.unsafe_n)
    controller = create_verify_controller(fmt=fmt, cap=cap, seed=seed)
    return controller.verify(suite, n_max)


def bij_trace(args: Namespace) -> int:

    controller = create_trace_controller()
    if args.inverse:
        if args.tau is None:
            raise ValueError("--inverse needs --tau.")
        return controller.trace_inverse(args.tau)

    if args.sigma is None:
        raise ValueError("bij-trace needs --sigma, or --inverse with --tau.")
    return controller.trace(args.sigma, args.s)


def main() -> None:
    warnings.simplefilter("default", ResourceWarning)
    sys.exit(parse_args(sys.argv[1:]))


def parse_args(args: Sequence[str]) -> int:
    """Parses the arguments, runs the command and returns the exit code.

    0 means success, 1 a failed theorem check, 2 a usage or precondition error and 3 an
    exceeded enumeration cap. argparse exits with 2 itself on malformed arguments.
    """

    parser = ArgumentParser(prog="andrekit")
    subparsers = parser.add_subparsers()

    expand_parser = subparsers.add_parser("expand")
    expand_parser.add_argument("--series", type=SeriesType.from_str, default=SeriesType.DN)
    expand_parser.add_argument("--n", required=True, type=int)
    expand_parser.add_argument("--format", type=OutputFormat.from_str, default=OutputFormat.TEXT)
    expand_parser.set_defaults(func=expand)

    tables_parser = subparsers.add_parser("tables")
    tables_parser.add_argument("--which", required=True, type=TableType.from_str)
    tables_parser.add_argument("--n-max", required=False, default=7, type=int)
    tables_parser.add_argument("--format", type=OutputFormat.from_str, default=OutputFormat.TEXT)
    tables_parser.add_argument("--unsafe-n", action="store_true")
    tables_parser.set_defaults(func=tables)

    verify_parser = subparsers.add_parser("verify")
    verify_parser.add_argument("--suite", type=SuiteType.from_str, default=SuiteType.ALL)
    verify_parser.add_argument("--n-max", required=False, default=6, type=int)
    verify_parser.add_argument("--format", type=OutputFormat.from_str, default=OutputFormat.JSON)
    verify_parser.add_argument("--seed", required=False, default=DEFAULT_SEED, type=int)
    verify_parser.add_argument("--unsafe-n", action="store_true")
    verify_parser.set_defaults(func=verify)

    trace_parser = subparsers.add_parser("bij-trace")
    trace_parser.add_argument("--sigma", type=Permutation)
    trace_parser.add_argument("--s", type=parse_letters, default=())
    trace_parser.add_argument("--inverse", action="store_true")
    trace_parser.add_argument("--tau", type=Permutation)
    trace_parser.set_defaults(func=bij_trace)

    namespace = parser.parse_args(args)
    if not hasattr(namespace, "func"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return namespace.func(namespace)
    except EnumerationCapExceededError as error:
        print(f"andrekit: {error}", file=sys.stderr)
        return EXIT_CAP
    except TheoremViolationError as error:
        print(f"andrekit: {error}", file=sys.stderr)
        return EXIT_THEOREM_FAILURE
    except _PRECONDITION_ERRORS as error:
        print(f"andrekit: {error}", file=sys.stderr)
        return EXIT_USAGE
