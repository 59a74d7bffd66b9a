"""Run the full complexity pipeline over a tune collection.

Ingests a JSON dump or ABC files, compresses every accepted tune with
both coders, and writes per-tune CSV, per-category stats JSON and
histogram CSVs next to the chosen output prefix.  When a baseline curve
is supplied, per-tune ratios are also normalized to reel length (128)
so jigs and reels can be compared directly.

Usage:
    python scripts/corpus_report.py --dump tunes.json --out-prefix results/run1
    python scripts/corpus_report.py tunes/*.abc --baseline curve.json
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tunelz.baseline import curve_from_json  # noqa: E402
from tunelz.corpus import (  # noqa: E402
    Category,
    aggregate,
    analyze,
    histogram_to_csv,
    histogram_to_text,
    ingest_abc_files,
    ingest_json_dump,
    rejection_summary,
    reports_to_csv,
    stats_to_dict,
)

REEL_LENGTH = 128


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("paths", nargs="*", help="ABC files")
    parser.add_argument("--dump", help="JSON dump instead of ABC files")
    parser.add_argument("--baseline", help="baseline curve JSON for normalization")
    parser.add_argument("--bins", type=int, default=20)
    parser.add_argument("--out-prefix", default="corpus_report")
    args = parser.parse_args()

    if args.dump:
        records = ingest_json_dump(args.dump)
    elif args.paths:
        records = ingest_abc_files(args.paths)
    else:
        parser.error("give ABC paths or --dump")

    curve = reference = None
    if args.baseline:
        curve = curve_from_json(Path(args.baseline).read_text(encoding="utf-8"))
        reference = REEL_LENGTH
    reports = analyze(records, curve, reference)

    skipped = rejection_summary(records)
    print(f"{len(records)} tunes ingested, {len(reports)} accepted, "
          f"{len(records) - len(reports)} rejected {skipped if skipped else ''}")

    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    (prefix.parent / f"{prefix.name}_tunes.csv").write_text(
        reports_to_csv(reports), encoding="utf-8"
    )

    all_stats = []
    for category in (Category.REEL, Category.JIG, Category.OTHER):
        if not any(r.category is category for r in reports):
            continue
        stats = aggregate(reports, category, args.bins)
        all_stats.append(stats_to_dict(stats))
        (prefix.parent / f"{prefix.name}_hist_{category.value}.csv").write_text(
            histogram_to_csv(stats.histogram), encoding="utf-8"
        )
        print(f"\n{category.value}: n={stats.count} "
              f"mean={stats.mean_ratio:.4f} std={stats.std_dev:.4f} "
              f"min={float(stats.min[1]):.4f} ({stats.min[0]}) "
              f"max={float(stats.max[1]):.4f} ({stats.max[0]})")
        print(histogram_to_text(stats.histogram), end="")

    (prefix.parent / f"{prefix.name}_stats.json").write_text(
        json.dumps(all_stats, indent=2, sort_keys=True), encoding="utf-8"
    )
    print(f"\nreports written with prefix {prefix}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
