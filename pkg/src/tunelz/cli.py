"""Command-line front end: tunelz <subcommand> [flags] [paths...].

Machine-readable output goes to stdout, diagnostics to stderr.  Exit
codes: 0 all good, 1 some tunes were rejected, 2 fatal input or usage
error.  Every subcommand is a pure function of its arguments, input
files and seed, so repeated runs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import baseline as bl
from . import corpus as cp
from . import lz
from .notation import NormalizationError

PROG = "tunelz"


def _common_flags(parser: argparse.ArgumentParser, formats: tuple[str, ...],
                  default_format: str) -> None:
    parser.add_argument("--format", choices=formats, default=default_format)
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed (only the baseline command draws samples)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Estimate the complexity of monophonic dance tunes "
                    "with Lempel-Ziv token coders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="flatten ABC tunes onto the quaver grid")
    _common_flags(p, ("text", "json"), "text")
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("compress", help="tokenize a tune or raw symbol sequence")
    _common_flags(p, ("text", "json"), "text")
    p.add_argument("--algo", choices=("lz77", "lz78"), default="lz77")
    p.add_argument("--index-base", type=int, choices=(0, 1), default=0,
                   help="display base for back-reference positions")
    p.add_argument("path", help="ABC file, raw symbol file, or - for stdin")

    p = sub.add_parser("decompress", help="rebuild the symbol sequence of a token stream")
    _common_flags(p, ("text",), "text")
    p.add_argument("--algo", choices=("lz77", "lz78"), default=None)
    p.add_argument("--index-base", type=int, choices=(0, 1), default=0)
    p.add_argument("path", help="token stream file (text or JSON), or - for stdin")

    p = sub.add_parser("analyze", help="per-tune token counts and ratios")
    _common_flags(p, ("text", "json", "csv"), "text")
    p.add_argument("--dump", help="JSON dump instead of ABC paths")
    p.add_argument("--baseline", dest="baseline_path", help="baseline curve JSON")
    p.add_argument("--normalize-to", type=int, dest="normalize_to",
                   help="reference length for normalized ratios")
    p.add_argument("paths", nargs="*")

    p = sub.add_parser("corpus", help="aggregate statistics over a tune collection")
    _common_flags(p, ("text", "json", "csv"), "text")
    p.add_argument("--dump")
    p.add_argument("--category", choices=("reel", "jig", "all"), default="all")
    p.add_argument("--bins", type=int, default=cp.DEFAULT_BINS)
    p.add_argument("--baseline", dest="baseline_path")
    p.add_argument("--normalize-to", type=int, dest="normalize_to")
    p.add_argument("--hist-out", dest="hist_out", help="write histogram CSV to a file")
    p.add_argument("paths", nargs="*")

    p = sub.add_parser("baseline", help="sample random-string compression ratios")
    _common_flags(p, ("csv", "json", "text"), "csv")
    p.add_argument("--lengths", required=True,
                   help="comma-separated string lengths, e.g. 96,128")
    p.add_argument("--alphabet", type=int, default=bl.DEFAULT_ALPHABET_SIZE)
    p.add_argument("--samples", type=int, default=bl.DEFAULT_SAMPLES)
    p.add_argument("--algo", choices=("lz77", "lz78"), default="lz77")
    p.add_argument("--out", help="write the full curve as JSON to a file")

    p = sub.add_parser("rank", help="order tunes from most to least repetitive")
    _common_flags(p, ("text", "json", "csv"), "text")
    p.add_argument("--dump")
    p.add_argument("--order", choices=("easiest", "hardest"), default="easiest")
    p.add_argument("paths", nargs="*")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (cp.IngestError, lz.CorruptStream, bl.CurveRangeError,
            NormalizationError, OSError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


# ----------------------------------------------------------------- commands


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_records(args) -> list[cp.TuneRecord]:
    if getattr(args, "dump", None):
        if args.paths:
            raise cp.IngestError("give either --dump or ABC paths, not both")
        return cp.ingest_json_dump(args.dump)
    if not args.paths:
        raise cp.IngestError("no input: give ABC paths or --dump")
    return cp.ingest_abc_files(args.paths)


def _report_rejections(records: list[cp.TuneRecord]) -> int:
    rejected = [r for r in records if not r.accepted]
    for record in rejected:
        print(f"{PROG}: rejected {record.id} ({record.name}): {record.outcome}",
              file=sys.stderr)
    return len(rejected)


def _load_curve(args) -> tuple[bl.BaselineCurve | None, int | None]:
    path = getattr(args, "baseline_path", None)
    reference = getattr(args, "normalize_to", None)
    if (path is None) != (reference is None):
        raise cp.IngestError("--baseline and --normalize-to go together")
    if path is None:
        return None, None
    return bl.curve_from_json(Path(path).read_text(encoding="utf-8")), reference


def cmd_normalize(args) -> int:
    records = cp.ingest_abc_files(args.paths)
    accepted = [r for r in records if r.accepted]
    if args.format == "json":
        payload = [
            {
                "id": r.id,
                "name": r.name,
                "category": r.outcome.category.value,
                "length": len(r.outcome.symbols),
                "symbols": r.outcome.symbols,
            }
            for r in accepted
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in accepted:
            print(f"{r.id}\t{r.outcome.category.value}\t"
                  f"{len(r.outcome.symbols)}\t{r.outcome.symbols}")
    return 1 if _report_rejections(records) else 0


def _sequences_for_compression(args) -> tuple[list[tuple[str, str]], int]:
    """Yield (label, symbols) pairs from an ABC file or raw sequence text."""
    text = _read_input(args.path)
    if any(line.lstrip().startswith("X:") for line in text.splitlines()):
        origin = "-" if args.path == "-" else Path(args.path).stem
        records = cp.records_from_abc(text, origin)
        rejected = _report_rejections(records)
        return (
            [(r.id, r.outcome.symbols) for r in records if r.accepted],
            rejected,
        )
    return [("-", "".join(text.split()))], 0


def cmd_compress(args) -> int:
    pairs, rejected = _sequences_for_compression(args)
    compress = lz.compress_lz77 if args.algo == "lz77" else lz.compress_lz78
    outputs = []
    for _, symbols in pairs:
        stream = compress(symbols)
        if args.format == "json":
            outputs.append(lz.stream_to_json(stream))
        else:
            block = lz.stream_to_text(stream, index_base=args.index_base)
            if stream.tokens:
                ratio = lz.compression_ratio(stream)
                block += (f"\nratio {stream.source_length}/{len(stream.tokens)}"
                          f" ≈ {float(ratio):.2f}")
            outputs.append(block)
    print("\n\n".join(outputs))
    return 1 if rejected else 0


def cmd_decompress(args) -> int:
    text = _read_input(args.path)
    if text.lstrip().startswith("{"):
        stream = lz.stream_from_json(text)
    else:
        algo = None if args.algo is None else lz.Algorithm(args.algo)
        stream = lz.stream_from_text(text, algorithm=algo, index_base=args.index_base)
    print(lz.decompress(stream))
    return 0


def cmd_analyze(args) -> int:
    records = _load_records(args)
    curve, reference = _load_curve(args)
    reports = cp.analyze(records, curve, reference)
    if args.format == "json":
        print(json.dumps([cp.report_to_dict(r) for r in reports],
                         indent=2, sort_keys=True))
    elif args.format == "csv":
        print(cp.reports_to_csv(reports), end="")
    else:
        for r in reports:
            extra = "" if r.normalized_ratio is None else f"\tnorm {r.normalized_ratio:.4f}"
            print(f"{r.id}\t{r.name}\t{r.category.value}\t{r.length}\t"
                  f"lz77 {r.lz77_tokens}\tlz78 {r.lz78_tokens}\t"
                  f"ratio {float(r.ratio_lz77):.4f}{extra}")
    return 1 if _report_rejections(records) else 0


def _selected_categories(args, reports) -> list[cp.Category]:
    if args.category != "all":
        return [cp.Category(args.category)]
    present = {r.category for r in reports}
    return [c for c in (cp.Category.REEL, cp.Category.JIG, cp.Category.OTHER)
            if c in present]


def cmd_corpus(args) -> int:
    records = _load_records(args)
    curve, reference = _load_curve(args)
    reports = cp.analyze(records, curve, reference)
    stats_list = [cp.aggregate(reports, c, args.bins)
                  for c in _selected_categories(args, reports)]
    if args.format == "json":
        print(json.dumps([cp.stats_to_dict(s) for s in stats_list],
                         indent=2, sort_keys=True))
    elif args.format == "csv":
        print(cp.reports_to_csv(reports), end="")
    else:
        for stats in stats_list:
            flag = "  (single tune: spread not meaningful)" if stats.degenerate else ""
            print(f"{stats.category.value}: {stats.count} tunes{flag}")
            print(f"  mean ratio {stats.mean_ratio:.4f}  std dev {stats.std_dev:.4f}")
            print(f"  min {float(stats.min[1]):.4f}  {stats.min[0]}")
            print(f"  max {float(stats.max[1]):.4f}  {stats.max[0]}")
            print(cp.histogram_to_text(stats.histogram), end="")
    if args.hist_out:
        if len(stats_list) != 1:
            raise cp.IngestError("--hist-out needs exactly one category")
        Path(args.hist_out).write_text(
            cp.histogram_to_csv(stats_list[0].histogram), encoding="utf-8"
        )
    return 1 if _report_rejections(records) else 0


def cmd_baseline(args) -> int:
    try:
        lengths = [int(part) for part in args.lengths.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"--lengths wants comma-separated integers, got {args.lengths!r}")
    curve = bl.estimate_baseline(
        lengths,
        alphabet_size=args.alphabet,
        samples=args.samples,
        seed=args.seed,
        algorithm=lz.Algorithm(args.algo),
    )
    if args.out:
        Path(args.out).write_text(bl.curve_to_json(curve), encoding="utf-8")
    if args.format == "json":
        print(bl.curve_to_json(curve))
    elif args.format == "text":
        for p in curve.points:
            print(f"length {p.length}: mean {p.mean_ratio:.4f}  std {p.std_dev:.4f}")
    else:
        print(bl.curve_to_csv(curve), end="")
    return 0


def cmd_rank(args) -> int:
    records = _load_records(args)
    reports = cp.analyze(records)
    order = cp.Order.EASIEST_FIRST if args.order == "easiest" else cp.Order.HARDEST_FIRST
    ranked = cp.rank(reports, order)
    if args.format == "json":
        print(json.dumps([cp.report_to_dict(r) for r in ranked],
                         indent=2, sort_keys=True))
    elif args.format == "csv":
        print(cp.reports_to_csv(ranked), end="")
    else:
        for place, r in enumerate(ranked, start=1):
            print(f"{place}\t{r.id}\t{r.name}\t{float(r.ratio_lz77):.4f}")
    return 1 if _report_rejections(records) else 0


_COMMANDS = {
    "normalize": cmd_normalize,
    "compress": cmd_compress,
    "decompress": cmd_decompress,
    "analyze": cmd_analyze,
    "corpus": cmd_corpus,
    "baseline": cmd_baseline,
    "rank": cmd_rank,
}


if __name__ == "__main__":
    raise SystemExit(main())
