"""Text, JSON and CSV rendering of command results."""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .algebra.recurrence import Classification
from .density.approx import ApproxReal, DensityResult, format_fraction
from .residues.engine import PrimeVerdict
from .sieve.harness import CSV_HEADER, ComparisonReport, SieveRecord, SieveSummary

logger = logging.getLogger(__name__)

__all__ = [
    "Report",
    "artin_report",
    "check_report",
    "classification_report",
    "comparison_report",
    "density_report",
    "render",
    "sieve_report",
    "write_output",
]


@dataclass
class Report:
    """One command's results in every output shape."""

    results: dict[str, Any]
    text: str
    csv_header: tuple[str, ...] = ("key", "value")
    csv_rows: list[tuple] = field(default_factory=list)


def _table(header: tuple[str, ...], rows: list[tuple]) -> str:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _key_values(results: dict[str, Any]) -> list[tuple]:
    return [(k, v) for k, v in results.items() if not isinstance(v, (dict, list))]


def classification_report(
    coefficients: tuple[int, int, int, int], classification: Classification
) -> Report:
    results = {"recurrence": list(coefficients), **classification.to_dict()}
    lines = [
        f"recurrence      {tuple(coefficients)}",
        f"classification  {classification.kind.value}",
        f"quotient field  {classification.quotient_kind.value}",
    ]
    if classification.q is not None:
        lines.append(f"q               {classification.q}")
    if classification.r is not None:
        lines.append(f"r               {classification.r}")
    return Report(results, "\n".join(lines), csv_rows=_key_values(results))


def check_report(
    verdict: PrimeVerdict, oracle: bool, rank: Optional[int], period: Optional[int]
) -> Report:
    results = {
        "p": verdict.p,
        "case": verdict.case.value,
        "divides": verdict.divides,
        "method": verdict.method.value,
        "ord_r": verdict.ord_r,
        "ord_q": verdict.ord_q,
        "oracle": oracle,
        "agrees": oracle == verdict.divides,
        "rank_of_apparition": rank,
        "period": period,
    }
    lines = [f"{k:<20}{'' if v is None else v}" for k, v in results.items()]
    return Report(results, "\n".join(lines), csv_rows=_key_values(results))


def sieve_report(summary: SieveSummary, records: list[SieveRecord]) -> Report:
    """Summary table; the CSV shape is the per-prime records when there are any."""
    results = summary.to_dict()
    rows = []
    for case in ("split", "inert", "ramified", "bad"):
        primes = getattr(summary, f"{case}_primes")
        divisors = getattr(summary, f"{case}_divisors")
        rows.append((case, primes, divisors))
    rows.append(("total", summary.prime_count, summary.divisor_count))
    text = f"primes <= {summary.limit}\n" + _table(("case", "primes", "divisors"), rows)
    if records:
        return Report(
            results, text, csv_header=CSV_HEADER, csv_rows=[r.to_row() for r in records]
        )
    return Report(results, text, csv_rows=_key_values(results) + _count_pairs(rows))


def _count_pairs(rows: list[tuple]) -> list[tuple]:
    out = []
    for case, primes, divisors in rows:
        out.append((f"{case}_primes", primes))
        out.append((f"{case}_divisors", divisors))
    return out


def density_report(densities: dict[str, DensityResult], extras: dict[str, ApproxReal]) -> Report:
    """Exact coefficients with decimals; extras are bare approximations (truncated sums)."""
    results: dict[str, Any] = {name: d.to_dict() for name, d in densities.items()}
    results.update({name: x.to_dict() for name, x in extras.items()})

    rows: list[tuple] = []
    for name, d in densities.items():
        rows.append(_density_row(name, d))
        for part, c in d.components.items():
            if part not in densities:
                rows.append(_density_row(f"  {part}", c))
    for name, x in extras.items():
        rows.append((name, "", f"{float(x):.12f}", f"{x.to_dict()['abs_error']:.2e}"))
    text = _table(("formula", "fraction", "decimal", "abs_error"), rows)
    csv_rows = [(r[0].strip(), *r[1:]) for r in rows]
    return Report(results, text, ("formula", "fraction", "decimal", "abs_error"), csv_rows)


def _density_row(name: str, d: DensityResult) -> tuple:
    fraction = ""
    if d.coefficient is not None:
        fraction = format_fraction(d.coefficient)
        if d.times != "1":
            fraction += f" * {d.times}"
    return (name, fraction, f"{float(d.decimal):.12f}", f"{d.decimal.to_dict()['abs_error']:.2e}")


def comparison_report(report: ComparisonReport) -> Report:
    header = ("case", "empirical", "predicted", "gap")
    rows = [
        (row.case, f"{float(row.empirical):.6f}", f"{row.predicted:.6f}", f"{row.gap:.6f}")
        for row in report.rows
    ]
    summary = report.summary
    text = (
        f"{summary.divisor_count} of {summary.prime_count} primes <= {summary.limit} "
        f"divide some term\n" + _table(header, rows)
    )
    csv_rows = [(r.case, float(r.empirical), r.predicted, r.gap) for r in report.rows]
    return Report(report.to_dict(), text, header, csv_rows)


def artin_report(base: int, j_max: int, additive: ApproxReal, constant: ApproxReal) -> Report:
    ratio = float(additive) / float(constant)
    results = {
        "base": base,
        "j_max": j_max,
        "density": additive.to_dict(),
        "artin_constant": constant.to_dict(),
        "ratio": ratio,
    }
    text = "\n".join(
        [
            f"primitive-root density of {base}: {additive}",
            f"Artin's constant:              {constant}",
            f"ratio:                         {ratio:.8f}",
        ]
    )
    csv_rows = [
        ("density", float(additive)),
        ("density_abs_error", additive.to_dict()["abs_error"]),
        ("artin_constant", float(constant)),
        ("ratio", ratio),
    ]
    return Report(results, text, csv_rows=csv_rows)


def render(report: Report, fmt: str, meta: dict[str, Any]) -> str:
    """The report as text, JSON ({meta, results}) or CSV."""
    if fmt == "json":
        return json.dumps({"meta": meta, "results": report.results}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.csv_header)
        writer.writerows(report.csv_rows)
        return buf.getvalue().rstrip("\n")
    return report.text


def write_output(text: str, out: Optional[Path]) -> None:
    if out is None:
        print(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text + "\n")
    logger.info(f"Wrote {out}")
