"""Complexity estimation for monophonic dance tunes via Lempel-Ziv parsing."""

from .baseline import (
    BaselineCurve,
    BaselinePoint,
    CurveRangeError,
    baseline_at,
    curve_from_json,
    curve_to_csv,
    curve_to_json,
    estimate_baseline,
    normalize_ratio,
)
from .corpus import (
    ComplexityReport,
    CorpusStats,
    EmptyCategoryError,
    HistogramSpec,
    IngestError,
    Order,
    TuneRecord,
    aggregate,
    analyze,
    build_histogram,
    ingest_abc_files,
    ingest_json_dump,
    rank,
    records_from_abc,
)
from .lz import (
    Algorithm,
    BackRef,
    CorruptStream,
    Literal,
    Lz78Token,
    TokenStream,
    compress_lz77,
    compress_lz78,
    compression_ratio,
    decompress,
    stream_from_json,
    stream_from_text,
    stream_to_json,
    stream_to_text,
)
from .notation import (
    AbcTune,
    Category,
    ErrorKind,
    NormalizationError,
    QuaverSequence,
    expand_body,
    normalize,
    parse_abc,
)

__version__ = "0.1.0"

__all__ = [
    "AbcTune",
    "Algorithm",
    "BackRef",
    "BaselineCurve",
    "BaselinePoint",
    "Category",
    "ComplexityReport",
    "CorpusStats",
    "CorruptStream",
    "CurveRangeError",
    "EmptyCategoryError",
    "ErrorKind",
    "HistogramSpec",
    "IngestError",
    "Literal",
    "Lz78Token",
    "NormalizationError",
    "Order",
    "QuaverSequence",
    "TokenStream",
    "TuneRecord",
    "aggregate",
    "analyze",
    "baseline_at",
    "build_histogram",
    "compress_lz77",
    "compress_lz78",
    "compression_ratio",
    "curve_from_json",
    "curve_to_csv",
    "curve_to_json",
    "decompress",
    "estimate_baseline",
    "expand_body",
    "ingest_abc_files",
    "ingest_json_dump",
    "normalize",
    "normalize_ratio",
    "parse_abc",
    "rank",
    "records_from_abc",
    "stream_from_json",
    "stream_from_text",
    "stream_to_json",
    "stream_to_text",
]
