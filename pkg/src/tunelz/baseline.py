"""Random-string compression baseline and length normalization.

Compression ratios grow with string length even for structureless
input, so tunes of different lengths (96-quaver jigs vs 128-quaver
reels) are not directly comparable.  This module estimates the expected
ratio of uniformly random strings as a function of length and uses it
to rescale a tune's ratio to what it would be at a reference length.

Sampling is deterministic: every (length, sample index) pair derives
its own generator from the master seed, so results do not depend on
evaluation order and are reproducible bit for bit.
"""

from __future__ import annotations

import json
import random
import statistics
from dataclasses import dataclass
from string import ascii_lowercase

from .lz import Algorithm, compress_lz77, compress_lz78

DEFAULT_ALPHABET_SIZE = 13
DEFAULT_SAMPLES = 1000


class CurveRangeError(ValueError):
    """A query length outside the sampled span; no extrapolation."""


@dataclass(frozen=True)
class BaselinePoint:
    length: int
    mean_ratio: float
    std_dev: float


@dataclass(frozen=True)
class BaselineCurve:
    alphabet_size: int
    samples_per_length: int
    points: tuple[BaselinePoint, ...]
    rng_seed: int

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(p.length for p in self.points)


def _random_string(letters: str, length: int, seed: int, index: int) -> str:
    rng = random.Random(f"{seed}:{length}:{index}")
    return "".join(rng.choices(letters, k=length))


def estimate_baseline(
    lengths: list[int],
    alphabet_size: int = DEFAULT_ALPHABET_SIZE,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    algorithm: Algorithm = Algorithm.LZ77,
) -> BaselineCurve:
    """Sample mean compression ratios of uniform random strings.

    For each requested length, ``samples`` independent strings over the
    first ``alphabet_size`` lowercase letters are compressed and the
    mean and sample standard deviation of their ratios recorded.
    """
    if not lengths:
        raise ValueError("at least one length is required")
    if any(length < 1 for length in lengths):
        raise ValueError("lengths must be >= 1")
    if not 1 <= alphabet_size <= 26:
        raise ValueError("alphabet_size must be in 1..26")
    if samples < 1:
        raise ValueError("samples must be >= 1")

    letters = ascii_lowercase[:alphabet_size]
    compress = compress_lz77 if algorithm is Algorithm.LZ77 else compress_lz78
    points = []
    for length in sorted(set(lengths)):
        ratios = []
        for index in range(samples):
            text = _random_string(letters, length, seed, index)
            ratios.append(length / len(compress(text).tokens))
        mean = statistics.fmean(ratios)
        std = statistics.stdev(ratios) if samples > 1 else 0.0
        points.append(BaselinePoint(length, mean, std))
    return BaselineCurve(alphabet_size, samples, tuple(points), seed)


def baseline_at(curve: BaselineCurve, length: int) -> float:
    """Mean ratio at ``length``: sampled value, or linear interpolation
    between the two bracketing sample points."""
    points = curve.points
    if not points:
        raise CurveRangeError("baseline curve has no points")
    if not points[0].length <= length <= points[-1].length:
        raise CurveRangeError(
            f"length {length} outside sampled span "
            f"[{points[0].length}, {points[-1].length}]"
        )
    for i, point in enumerate(points):
        if point.length == length:
            return point.mean_ratio
        if point.length > length:
            left = points[i - 1]
            t = (length - left.length) / (point.length - left.length)
            return left.mean_ratio + t * (point.mean_ratio - left.mean_ratio)
    raise AssertionError("unreachable")


def normalize_ratio(
    raw_ratio: float,
    own_length: int,
    reference_length: int,
    curve: BaselineCurve,
) -> float:
    """Rescale ``raw_ratio`` to the ratio expected at ``reference_length``.

    Multiplies by the baseline ratio at the reference length and divides
    by the baseline at the string's own length.  The factor is formed
    first so equal lengths rescale by exactly 1.0.
    """
    factor = baseline_at(curve, reference_length) / baseline_at(curve, own_length)
    return raw_ratio * factor


# -------------------------------------------------------------- persistence


def curve_to_json(curve: BaselineCurve) -> str:
    payload = {
        "alphabet_size": curve.alphabet_size,
        "samples_per_length": curve.samples_per_length,
        "rng_seed": curve.rng_seed,
        "points": [
            {"length": p.length, "mean_ratio": p.mean_ratio, "std_dev": p.std_dev}
            for p in curve.points
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def curve_from_json(text: str) -> BaselineCurve:
    payload = json.loads(text)
    points = tuple(
        BaselinePoint(int(p["length"]), float(p["mean_ratio"]), float(p["std_dev"]))
        for p in payload["points"]
    )
    return BaselineCurve(
        alphabet_size=int(payload["alphabet_size"]),
        samples_per_length=int(payload["samples_per_length"]),
        points=points,
        rng_seed=int(payload["rng_seed"]),
    )


def curve_to_csv(curve: BaselineCurve) -> str:
    lines = ["length,mean_ratio"]
    lines += [f"{p.length},{p.mean_ratio:.6f}" for p in curve.points]
    return "\n".join(lines) + "\n"
