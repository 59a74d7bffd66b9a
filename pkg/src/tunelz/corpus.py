"""Corpus ingestion, per-tune analysis and aggregate statistics.

Tunes arrive either as ABC files or as a JSON dump (an array of objects
in the style of the public tune-database exports: identifier, name,
type, mode, meter and a bare ABC body per entry).  Every ingested entry
becomes exactly one TuneRecord; tunes the normalizer rejects are kept
with their error rather than dropped, so accepted + rejected always
equals the number of entries ingested.

Statistics of record use the LZ77 ratio.  Aggregation folds reports in
id order, so results do not depend on how the per-tune work was
scheduled.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

from .baseline import BaselineCurve, normalize_ratio
from .lz import compress_lz77, compress_lz78, compression_ratio
from .notation import (
    AbcTune,
    Category,
    NormalizationError,
    QuaverSequence,
    normalize,
    parse_abc,
)

DEFAULT_BINS = 20


class IngestError(ValueError):
    """A corpus input file that cannot be read or has the wrong shape."""


class EmptyCategoryError(ValueError):
    """Aggregation requested for a category with no reports."""


@dataclass
class TuneRecord:
    id: str
    name: str
    category: Category
    key: str
    abc: str
    outcome: QuaverSequence | NormalizationError

    @property
    def accepted(self) -> bool:
        return isinstance(self.outcome, QuaverSequence)


@dataclass(frozen=True)
class ComplexityReport:
    id: str
    name: str
    category: Category
    length: int
    lz77_tokens: int
    lz78_tokens: int
    ratio_lz77: Fraction
    ratio_lz78: Fraction
    normalized_ratio: float | None = None


@dataclass(frozen=True)
class HistogramSpec:
    bin_count: int
    lower: float
    upper: float
    counts: tuple[int, ...]


@dataclass(frozen=True)
class CorpusStats:
    category: Category
    count: int
    mean_ratio: float
    std_dev: float
    min: tuple[str, Fraction]
    max: tuple[str, Fraction]
    histogram: HistogramSpec
    degenerate: bool = False


class Order(Enum):
    EASIEST_FIRST = "easiest"
    HARDEST_FIRST = "hardest"


def category_from_type(type_name: str) -> Category:
    lowered = type_name.strip().lower()
    if lowered == "reel":
        return Category.REEL
    if lowered == "jig":
        return Category.JIG
    return Category.OTHER


# ------------------------------------------------------------------ ingest


def ingest_json_dump(
    path: str | Path,
    *,
    id_keys: tuple[str, ...] = ("setting_id", "tune_id"),
    name_key: str = "name",
    type_key: str = "type",
    abc_key: str = "abc",
) -> list[TuneRecord]:
    """Load a JSON dump and run the normalizer on every entry.

    Each entry must carry an identifier (first hit among ``id_keys``),
    a name, a type and an ABC body; ``meter`` and ``mode`` are used when
    present (meter otherwise defaults by type).  Unknown fields are
    ignored.  A file that is not a JSON array of such objects raises
    IngestError; problems with an individual tune land in that record's
    outcome.
    """
    path = Path(path)
    try:
        entries = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IngestError(f"cannot read dump {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IngestError(f"dump {path} is not valid JSON: {exc}") from exc
    if not isinstance(entries, list):
        raise IngestError(f"dump {path} is not a JSON array")

    records = []
    for n, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise IngestError(f"dump {path} entry {n} is not an object")
        tune_id = next(
            (str(entry[k]) for k in id_keys if entry.get(k) not in (None, "")), None
        )
        if tune_id is None or name_key not in entry or type_key not in entry \
                or abc_key not in entry:
            raise IngestError(
                f"dump {path} entry {n} lacks one of id/{name_key}/{type_key}/{abc_key}"
            )
        category = category_from_type(str(entry[type_key]))
        meter = str(entry.get("meter") or _default_meter(category))
        mode = str(entry.get("mode") or "C")
        body = str(entry[abc_key])
        block = (
            f"X: 1\n"
            f"T: {entry[name_key]}\n"
            f"R: {entry[type_key]}\n"
            f"M: {meter}\n"
            f"L: 1/8\n"
            f"K: {mode}\n"
            f"{body}\n"
        )
        outcome: QuaverSequence | NormalizationError
        try:
            outcome = normalize(parse_abc(block)[0])
        except NormalizationError as err:
            outcome = err
        records.append(
            TuneRecord(
                id=tune_id,
                name=str(entry[name_key]),
                category=category,
                key=mode,
                abc=body,
                outcome=outcome,
            )
        )
    return records


def _default_meter(category: Category) -> str:
    return "6/8" if category is Category.JIG else "4/4"


def records_from_abc(source: str, origin: str = "-") -> list[TuneRecord]:
    """One record per tune block in ABC text; ids are ``<origin>:<X number>``.

    Category comes from the R: header when present, otherwise from the
    normalized meter and length (OTHER for rejected tunes).
    """
    return [
        _record_from_tune(tune, f"{origin}:{tune.reference_number}")
        for tune in parse_abc(source)
    ]


def ingest_abc_files(paths: list[str | Path]) -> list[TuneRecord]:
    """Parse one or more ABC files into records, one per tune block."""
    records = []
    for path in paths:
        path = Path(path)
        try:
            source = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise IngestError(f"cannot read ABC file {path}: {exc}") from exc
        try:
            records.extend(records_from_abc(source, path.stem))
        except NormalizationError as exc:
            raise IngestError(f"ABC file {path}: {exc}") from exc
    return records


def _record_from_tune(tune: AbcTune, record_id: str) -> TuneRecord:
    outcome: QuaverSequence | NormalizationError
    try:
        outcome = normalize(tune)
    except NormalizationError as err:
        outcome = err
    if tune.rhythm:
        category = category_from_type(tune.rhythm)
    elif isinstance(outcome, QuaverSequence):
        category = outcome.category
    else:
        category = Category.OTHER
    return TuneRecord(
        id=record_id,
        name=tune.title,
        category=category,
        key=tune.key,
        abc=tune.body,
        outcome=outcome,
    )


# ----------------------------------------------------------------- analysis


def analyze(
    records: list[TuneRecord],
    curve: BaselineCurve | None = None,
    reference_length: int | None = None,
) -> list[ComplexityReport]:
    """Compress every accepted record with both coders.

    When ``curve`` and ``reference_length`` are given, each report also
    carries its ratio rescaled to the reference length.  Rejected
    records yield no report (their errors stay on the records).
    """
    if (curve is None) != (reference_length is None):
        raise ValueError("length normalization needs both a curve and a reference length")
    reports = []
    for record in records:
        if not record.accepted:
            continue
        symbols = record.outcome.symbols
        stream_77 = compress_lz77(symbols)
        stream_78 = compress_lz78(symbols)
        ratio_77 = compression_ratio(stream_77)
        normalized = None
        if curve is not None:
            normalized = normalize_ratio(
                float(ratio_77), len(symbols), reference_length, curve
            )
        reports.append(
            ComplexityReport(
                id=record.id,
                name=record.name,
                category=record.category,
                length=len(symbols),
                lz77_tokens=len(stream_77.tokens),
                lz78_tokens=len(stream_78.tokens),
                ratio_lz77=ratio_77,
                ratio_lz78=compression_ratio(stream_78),
                normalized_ratio=normalized,
            )
        )
    return reports


def rejection_summary(records: list[TuneRecord]) -> dict[str, int]:
    """Count rejected records per error kind."""
    counts: dict[str, int] = {}
    for record in records:
        if not record.accepted:
            kind = record.outcome.kind.value
            counts[kind] = counts.get(kind, 0) + 1
    return counts


def build_histogram(values: list[float], bin_count: int = DEFAULT_BINS) -> HistogramSpec:
    """Equal-width bins over [min, max]; the maximum lands in the last bin.

    Constant data gets a unit-width range starting at the single value,
    so every count sits in the first bin.
    """
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    if not values:
        raise ValueError("histogram needs at least one value")
    lower = min(values)
    upper = max(values)
    if upper == lower:
        upper = lower + 1.0
    width = (upper - lower) / bin_count
    counts = [0] * bin_count
    for value in values:
        index = min(int((value - lower) / width), bin_count - 1)
        counts[index] += 1
    return HistogramSpec(bin_count, lower, upper, tuple(counts))


def aggregate(
    reports: list[ComplexityReport],
    category: Category,
    bin_count: int = DEFAULT_BINS,
) -> CorpusStats:
    """Mean, spread, extremes and histogram of a category's LZ77 ratios.

    Standard deviation uses the sample (n-1) convention; a single-report
    category gets std 0 and the ``degenerate`` flag.  Extremes are tied
    broken by name then id, matching the ranking order.
    """
    selected = sorted(
        (r for r in reports if r.category is category),
        key=lambda r: r.id,
    )
    if not selected:
        raise EmptyCategoryError(f"no reports in category {category.value!r}")
    ratios = [float(r.ratio_lz77) for r in selected]
    mean = statistics.fmean(ratios)
    degenerate = len(selected) == 1
    std = 0.0 if degenerate else statistics.stdev(ratios)
    low = min(selected, key=lambda r: (r.ratio_lz77, r.name, r.id))
    high_ratio = max(r.ratio_lz77 for r in selected)
    high = min(
        (r for r in selected if r.ratio_lz77 == high_ratio),
        key=lambda r: (r.name, r.id),
    )
    return CorpusStats(
        category=category,
        count=len(selected),
        mean_ratio=mean,
        std_dev=std,
        min=(low.id, low.ratio_lz77),
        max=(high.id, high.ratio_lz77),
        histogram=build_histogram(ratios, bin_count),
        degenerate=degenerate,
    )


def rank(reports: list[ComplexityReport], order: Order = Order.EASIEST_FIRST) -> list[ComplexityReport]:
    """Sort by repetitiveness: easiest first means highest ratio first.

    Ties break by ascending name then id, in both orders.
    """
    if order is Order.EASIEST_FIRST:
        return sorted(reports, key=lambda r: (-r.ratio_lz77, r.name, r.id))
    return sorted(reports, key=lambda r: (r.ratio_lz77, r.name, r.id))


# ------------------------------------------------------------------ exports


def reports_to_csv(reports: list[ComplexityReport]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["id", "name", "category", "length", "lz77_tokens", "lz78_tokens",
         "ratio_lz77", "ratio_lz78", "normalized_ratio"]
    )
    for r in reports:
        writer.writerow(
            [
                r.id,
                r.name,
                r.category.value,
                r.length,
                r.lz77_tokens,
                r.lz78_tokens,
                f"{float(r.ratio_lz77):.6f}",
                f"{float(r.ratio_lz78):.6f}",
                "" if r.normalized_ratio is None else f"{r.normalized_ratio:.6f}",
            ]
        )
    return out.getvalue()


def report_to_dict(report: ComplexityReport) -> dict:
    return {
        "id": report.id,
        "name": report.name,
        "category": report.category.value,
        "length": report.length,
        "lz77_tokens": report.lz77_tokens,
        "lz78_tokens": report.lz78_tokens,
        "ratio_lz77": float(report.ratio_lz77),
        "ratio_lz78": float(report.ratio_lz78),
        "normalized_ratio": report.normalized_ratio,
    }


def stats_to_dict(stats: CorpusStats) -> dict:
    return {
        "category": stats.category.value,
        "count": stats.count,
        "mean_ratio": stats.mean_ratio,
        "std_dev": stats.std_dev,
        "min": {"id": stats.min[0], "ratio": float(stats.min[1])},
        "max": {"id": stats.max[0], "ratio": float(stats.max[1])},
        "degenerate": stats.degenerate,
        "histogram": {
            "bin_count": stats.histogram.bin_count,
            "lower": stats.histogram.lower,
            "upper": stats.histogram.upper,
            "counts": list(stats.histogram.counts),
        },
    }


def histogram_to_csv(hist: HistogramSpec) -> str:
    width = (hist.upper - hist.lower) / hist.bin_count
    lines = ["bin_lower,bin_upper,count"]
    for i, count in enumerate(hist.counts):
        lines.append(
            f"{hist.lower + i * width:.6f},{hist.lower + (i + 1) * width:.6f},{count}"
        )
    return "\n".join(lines) + "\n"


def histogram_to_text(hist: HistogramSpec, width: int = 40) -> str:
    """Terminal bar rendering, one line per bin."""
    peak = max(hist.counts) or 1
    bin_width = (hist.upper - hist.lower) / hist.bin_count
    lines = []
    for i, count in enumerate(hist.counts):
        lo = hist.lower + i * bin_width
        hi = hist.lower + (i + 1) * bin_width
        bar = "#" * round(count / peak * width)
        lines.append(f"{lo:8.4f}-{hi:8.4f} |{bar} {count}")
    return "\n".join(lines) + "\n"
