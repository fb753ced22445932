"""Empirical prime-divisor counts and their comparison with predictions."""

from .harness import (
    CSV_HEADER,
    ComparisonReport,
    ComparisonRow,
    SieveRecord,
    SieveSummary,
    compare,
    iter_blocks,
    run_sieve,
    write_records_csv,
)

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
