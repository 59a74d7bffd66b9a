"""Reproduce the random-string compression baseline.

Samples uniform random strings over a 13-letter alphabet at a grid of
lengths, prints the mean LZ77 compression ratio per length, and
optionally saves the curve for use with ``tunelz corpus --baseline``.

Usage:
    python scripts/baseline_experiment.py [--samples 1000] [--seed 7] \
        [--out baseline_curve.json]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tunelz.baseline import curve_to_json, estimate_baseline  # noqa: E402

LENGTHS = [50, 96, 100, 128, 150, 200]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--alphabet", type=int, default=13)
    parser.add_argument("--out", help="write the curve as JSON")
    args = parser.parse_args()

    curve = estimate_baseline(
        LENGTHS, alphabet_size=args.alphabet, samples=args.samples, seed=args.seed
    )
    print(f"alphabet {args.alphabet}, {args.samples} samples per length, "
          f"seed {args.seed}")
    print(f"{'length':>8} {'mean ratio':>12} {'std dev':>10}")
    for point in curve.points:
        print(f"{point.length:>8} {point.mean_ratio:>12.4f} {point.std_dev:>10.4f}")

    if args.out:
        Path(args.out).write_text(curve_to_json(curve), encoding="utf-8")
        print(f"curve written to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
