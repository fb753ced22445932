"""Run the per-prime decision over every prime up to a limit.

Primes are cut into fixed-size blocks in ascending order. Blocks are decided
independently (in worker processes when jobs > 1) and merged in block order,
so the summary and the record list do not depend on the number of workers.

Usage:
    summary = run_sieve(LAGARIAS, 10**6, jobs=8)
    report = compare(summary, predictions_for(LAGARIAS))
"""

from __future__ import annotations

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import islice
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional, Union

from ..algebra.recurrence import DegenerateRecurrenceError, Recurrence, classify
from ..arith.primes import enumerate_primes
from ..config import DEFAULT_BLOCK_SIZE, DEFAULT_SEGMENT_SIZE
from ..density.approx import DensityResult, format_fraction
from ..residues.engine import Method, PrimeVerdict, engine_for
from ..residues.field import PrimeCase

logger = logging.getLogger(__name__)

__all__ = [
    "CSV_HEADER",
    "ComparisonReport",
    "ComparisonRow",
    "SieveRecord",
    "SieveSummary",
    "compare",
    "iter_blocks",
    "run_sieve",
    "write_records_csv",
]

CSV_HEADER = ("p", "case", "divides", "ord_r", "ord_q", "method")
CASES = tuple(case.value for case in PrimeCase)


@dataclass(frozen=True)
class SieveRecord:
    """One prime's verdict, as written to the per-prime CSV."""

    p: int
    case: PrimeCase
    divides: bool
    ord_r: Optional[int]
    ord_q: Optional[int]
    method: Method

    @classmethod
    def from_verdict(cls, verdict: PrimeVerdict) -> SieveRecord:
        return cls(
            verdict.p, verdict.case, verdict.divides, verdict.ord_r, verdict.ord_q, verdict.method
        )

    def to_row(self) -> tuple[str, ...]:
        return (
            str(self.p),
            self.case.value,
            "true" if self.divides else "false",
            "" if self.ord_r is None else str(self.ord_r),
            "" if self.ord_q is None else str(self.ord_q),
            self.method.value,
        )


@dataclass
class _BlockResult:
    primes: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CASES, 0))
    divisors: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CASES, 0))
    records: list[SieveRecord] = field(default_factory=list)


@dataclass
class SieveSummary:
    """Counts of primes <= limit, split by prime case and by divisibility."""

    limit: int
    prime_count: int = 0
    divisor_count: int = 0
    split_divisors: int = 0
    inert_divisors: int = 0
    ramified_divisors: int = 0
    bad_divisors: int = 0
    split_primes: int = 0
    inert_primes: int = 0
    ramified_primes: int = 0
    bad_primes: int = 0
    block_size: int = DEFAULT_BLOCK_SIZE
    predicted: dict[str, DensityResult] = field(default_factory=dict, compare=False)

    def _absorb(self, block: _BlockResult) -> None:
        for case in CASES:
            primes, divisors = block.primes[case], block.divisors[case]
            self.prime_count += primes
            self.divisor_count += divisors
            setattr(self, f"{case}_primes", getattr(self, f"{case}_primes") + primes)
            setattr(self, f"{case}_divisors", getattr(self, f"{case}_divisors") + divisors)

    @property
    def empirical_fractions(self) -> dict[str, Fraction]:
        """Divisors per case over all primes <= limit, plus the total."""
        if self.prime_count == 0:
            return {}
        out = {
            case: Fraction(getattr(self, f"{case}_divisors"), self.prime_count) for case in CASES
        }
        out["total"] = Fraction(self.divisor_count, self.prime_count)
        return out

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "prime_count": self.prime_count,
            "divisor_count": self.divisor_count,
            "divisors": {case: getattr(self, f"{case}_divisors") for case in CASES},
            "primes": {case: getattr(self, f"{case}_primes") for case in CASES},
            "empirical_fractions": {
                case: {"fraction": format_fraction(x), "decimal": float(x)}
                for case, x in self.empirical_fractions.items()
            },
            "block_size": self.block_size,
            "predicted": {case: result.to_dict() for case, result in self.predicted.items()},
        }


def iter_blocks(
    limit: int, block_size: int = DEFAULT_BLOCK_SIZE, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> Iterator[list[int]]:
    """Ascending primes <= limit in lists of block_size (the last one shorter)."""
    primes = enumerate_primes(limit, segment_size)
    while block := list(islice(primes, block_size)):
        yield block


def _decide_block(
    coefficients: tuple[int, int, int, int], emit_records: bool, block: list[int]
) -> _BlockResult:
    engine = engine_for(Recurrence(*coefficients))
    result = _BlockResult()
    for p in block:
        verdict = engine.decide(p)
        result.primes[verdict.case.value] += 1
        if verdict.divides:
            result.divisors[verdict.case.value] += 1
        if emit_records:
            result.records.append(SieveRecord.from_verdict(verdict))
    return result


def run_sieve(
    rec: Recurrence,
    limit: int,
    jobs: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
    emit_records: bool = False,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> tuple[SieveSummary, list[SieveRecord]]:
    """Decide every prime <= limit and aggregate the verdicts.

    Args:
        rec: A non-degenerate recurrence
        limit: Inclusive prime bound (>= 2)
        jobs: Worker processes; 1 runs in-process
        block_size: Primes per work unit
        emit_records: Also return one SieveRecord per prime

    Returns:
        (summary, records); records is empty unless emit_records

    Raises:
        DegenerateRecurrenceError: If rec is degenerate
        ValueError: If limit < 2 or jobs/block_size < 1
    """
    if jobs < 1 or block_size < 1:
        raise ValueError(f"jobs and block_size must be positive, got {jobs}, {block_size}")
    classification = classify(rec)
    if classification.is_degenerate:
        raise DegenerateRecurrenceError(classification)

    logger.info(f"Sieving {rec} to {limit} with {jobs} job(s), blocks of {block_size}")
    started = time.monotonic()
    summary = SieveSummary(limit=limit, block_size=block_size)
    records: list[SieveRecord] = []
    worker = partial(_decide_block, rec.as_tuple(), emit_records)
    blocks = iter_blocks(limit, block_size, segment_size)

    def absorb(results: Iterable[_BlockResult]) -> None:
        for index, block in enumerate(results):
            summary._absorb(block)
            records.extend(block.records)
            logger.debug(f"block {index}: {summary.prime_count} primes so far")

    if jobs == 1:
        absorb(map(worker, blocks))
    else:
        # Executor.map yields in submission order
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            absorb(executor.map(worker, blocks))

    logger.info(
        f"Sieve finished in {time.monotonic() - started:.1f}s: "
        f"{summary.divisor_count}/{summary.prime_count} primes divide some term"
    )
    return summary, records


@dataclass(frozen=True)
class ComparisonRow:
    case: str
    empirical: Fraction
    predicted: float
    abs_error: float
    gap: float

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "empirical": float(self.empirical),
            "empirical_fraction": format_fraction(self.empirical),
            "predicted": self.predicted,
            "abs_error": self.abs_error,
            "gap": self.gap,
        }


@dataclass
class ComparisonReport:
    """Empirical fractions next to predicted densities."""

    summary: SieveSummary
    rows: list[ComparisonRow]

    def to_dict(self) -> dict:
        return {
            "limit": self.summary.limit,
            "prime_count": self.summary.prime_count,
            "rows": [row.to_dict() for row in self.rows],
        }


def compare(summary: SieveSummary, predictions: dict[str, DensityResult]) -> ComparisonReport:
    """One row per predicted case, in split, inert, total order."""
    summary.predicted = dict(predictions)
    empirical = summary.empirical_fractions
    rows = []
    for case in ("split", "inert", "ramified", "bad", "total"):
        if case not in predictions or case not in empirical:
            continue
        predicted = predictions[case].decimal
        value = float(predicted)
        rows.append(
            ComparisonRow(
                case,
                empirical[case],
                value,
                predicted.to_dict()["abs_error"],
                abs(float(empirical[case]) - value),
            )
        )
    return ComparisonReport(summary, rows)


def write_records_csv(records: Iterable[SieveRecord], out: Union[Path, IO[str]]) -> None:
    """Write per-prime records with the header p,case,divides,ord_r,ord_q,method."""
    if isinstance(out, Path):
        with open(out, "w", newline="") as f:
            write_records_csv(records, f)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.to_row())
