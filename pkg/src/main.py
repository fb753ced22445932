"""recurrence-divisors - command-line entry point.

Subcommands:
    classify   torsion classification with the exact quotients q and r
    check      per-prime decision for --prime, cross-checked by the period walk
    sieve      counts of prime divisors up to --limit
    density    closed-form densities with certified decimals
    compare    sieve and density side by side
    artin      primitive-root density of --base from the additive formula

Exit codes: 0 on success, 1 on usage errors, 2 when a computation's
preconditions fail (for example a degenerate recurrence).
"""

import argparse
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .algebra.recurrence import LAGARIAS, Recurrence, RecurrenceError, classify
from .config import (
    DEFAULT_ARTIN_J_MAX,
    DEFAULT_ARTIN_PRIME_BOUND,
    DEFAULT_BLOCK_SIZE,
    DEFAULT_EULER_BOUND,
    DEFAULT_I_MAX,
    DEFAULT_J_MAX,
    DEFAULT_JOBS,
    DEFAULT_LIMIT,
    DEFAULT_RECURRENCE,
    OUTPUT_FORMATS,
    CliConfig,
    DensitySettings,
    SieveSettings,
    UsageError,
    setup_logging,
)
from .density import (
    DensityError,
    artin_additive,
    artin_product,
    delta_total,
    euler_constant,
    predictions_for,
    truncated_split_sum,
)
from .reports import (
    Report,
    artin_report,
    check_report,
    classification_report,
    comparison_report,
    density_report,
    render,
    sieve_report,
    write_output,
)
from .residues import ResidueError, engine_for, period_length, rank_of_apparition
from .sieve import compare, run_sieve

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRACT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Routes argparse failures through UsageError instead of exiting with 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(self.prog, message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--recurrence",
        nargs=4,
        type=int,
        metavar=("A1", "A0", "X0", "X1"),
        default=list(DEFAULT_RECURRENCE),
        help="x_{n+2} = A1*x_{n+1} + A0*x_n with x_0 = X0, x_1 = X1 (default: 1 1 3 1)",
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    common.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")
    common.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="sieve worker processes")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = _ArgumentParser(
        prog="recurrence-divisors",
        description="Prime divisors of second-order linear recurrences and their densities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("classify", parents=[common], help="classify the recurrence")

    check = sub.add_parser("check", parents=[common], help="decide a single prime")
    check.add_argument("--prime", type=int, required=True)

    sieve = sub.add_parser("sieve", parents=[common], help="count prime divisors up to --limit")
    _add_sieve_flags(sieve)
    sieve.add_argument("--records", action="store_true", help="emit one record per prime")

    density = sub.add_parser("density", parents=[common], help="evaluate the density formulas")
    _add_density_flags(density)

    comparison = sub.add_parser("compare", parents=[common], help="sieve versus prediction")
    _add_sieve_flags(comparison)
    _add_density_flags(comparison)

    artin = sub.add_parser("artin", parents=[common], help="primitive-root density of --base")
    artin.add_argument("--base", type=int, required=True)
    artin.add_argument("--artin-j-max", type=int, default=DEFAULT_ARTIN_J_MAX)
    artin.add_argument("--artin-prime-bound", type=int, default=DEFAULT_ARTIN_PRIME_BOUND)
    return parser


def _add_sieve_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    parser.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)


def _add_density_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--euler-bound", type=int, default=DEFAULT_EULER_BOUND)
    parser.add_argument("--i-max", type=int, default=DEFAULT_I_MAX)
    parser.add_argument("--j-max", type=int, default=DEFAULT_J_MAX)


def _present(args: dict, names: tuple[str, ...]) -> dict:
    return {name: args[name] for name in names if name in args}


def parse_args(argv: Optional[Sequence[str]] = None) -> CliConfig:
    """Parse and validate the command line.

    Raises:
        UsageError: On any malformed or out-of-range argument
    """
    args = vars(build_parser().parse_args(argv))
    sieve = SieveSettings(
        jobs=args["jobs"],
        **_present(args, ("limit", "block_size")),
        emit_records=args.get("records", False),
    )
    density = DensitySettings(
        **_present(args, ("euler_bound", "i_max", "j_max", "artin_j_max", "artin_prime_bound"))
    )
    config = CliConfig(
        subcommand=args["subcommand"],
        recurrence=tuple(args["recurrence"]),
        sieve=sieve,
        density=density,
        prime=args.get("prime"),
        base=args.get("base"),
        format=args["format"],
        out=args["out"],
        verbose=args["verbose"],
    )
    return config.validate()


def run(config: CliConfig) -> Report:
    """Execute one subcommand and return its report."""
    logger.info(f"Running {config.subcommand} on {config.recurrence}")
    if config.subcommand == "classify":
        # raw coefficients, so a0 = 0 is reported rather than rejected
        classification = classify(config.recurrence)
        return classification_report(config.recurrence, classification)

    rec = Recurrence(*config.recurrence)
    if config.subcommand == "check":
        p = config.prime
        verdict = engine_for(rec).decide(p)
        rank = rank_of_apparition(rec, p)
        period = period_length(rec, p) if rec.a0 % p else None
        return check_report(verdict, rank is not None, rank, period)

    if config.subcommand == "sieve":
        s = config.sieve
        summary, records = run_sieve(rec, s.limit, s.jobs, s.block_size, s.emit_records)
        return sieve_report(summary, records)

    d = config.density
    if config.subcommand == "density":
        if rec == LAGARIAS:
            total = delta_total(d.euler_bound)
            densities = {
                "euler_S": euler_constant(d.euler_bound),
                **total.components,
                "delta_total": total,
            }
            extras = {"truncated_split_sum": truncated_split_sum(d.i_max, d.j_max)}
            return density_report(densities, extras)
        predictions = predictions_for(rec, d.euler_bound)
        return density_report({r.formula_id: r for r in predictions.values()}, {})

    if config.subcommand == "compare":
        predictions = predictions_for(rec, d.euler_bound)
        s = config.sieve
        summary, _ = run_sieve(rec, s.limit, s.jobs, s.block_size)
        return comparison_report(compare(summary, predictions))

    additive = artin_additive(config.base, d.artin_j_max, d.artin_prime_bound)
    constant = artin_product(1, d.artin_prime_bound)
    return artin_report(config.base, d.artin_j_max, additive, constant)


def _meta(config: CliConfig) -> dict:
    return {
        "program": "recurrence-divisors",
        "version": __version__,
        "subcommand": config.subcommand,
        "recurrence": list(config.recurrence),
        "sieve": asdict(config.sieve),
        "density": asdict(config.density),
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point.

    Returns:
        Process exit code
    """
    try:
        config = parse_args(argv)
    except UsageError as e:
        print(f"recurrence-divisors: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(debug=config.verbose)
    try:
        report = run(config)
    except (RecurrenceError, ResidueError, DensityError) as e:
        logger.error(f"{config.subcommand} failed: {e}")
        print(f"recurrence-divisors: {e}", file=sys.stderr)
        return EXIT_CONTRACT

    write_output(render(report, config.format, _meta(config)), config.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
