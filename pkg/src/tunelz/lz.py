"""Lempel-Ziv token coders used to estimate melodic complexity.

Two coders operate on plain symbol sequences (strings of one-character
pitch symbols):

* LZ77: greedy left-to-right parse into literals and back-references
  ``[start, length]`` over an unbounded window.  A back-reference may
  overlap the text it is producing (self-extending copy), which is what
  lets a run such as ``dddd`` compress to a literal plus one copy.
* LZ78: incremental phrase dictionary.  Each token names a previously
  emitted phrase (0 = the empty phrase) plus one new symbol; the final
  token may omit the extension when the input ends exactly on a known
  phrase.

Token count, not bit cost, is the unit of account: the compression ratio
of a stream is ``source_length / token_count`` as an exact rational.
All functions here are pure and safe to call from multiple threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

MIN_MATCH = 2


class Algorithm(Enum):
    LZ77 = "lz77"
    LZ78 = "lz78"


class CorruptStream(ValueError):
    """A token stream violates its own invariants and cannot be decoded."""


@dataclass(frozen=True)
class Literal:
    """A single symbol emitted verbatim."""

    symbol: str


@dataclass(frozen=True)
class BackRef:
    """Copy ``length`` symbols starting at absolute 0-based ``start``.

    ``start`` always precedes the position where the token begins
    emitting, but ``start + length`` may reach past it: the copy
    proceeds symbol by symbol, so it can consume symbols it produced
    itself.
    """

    start: int
    length: int


Lz77Token = Literal | BackRef


@dataclass(frozen=True)
class Lz78Token:
    """Dictionary phrase ``prefix_index`` extended by one symbol.

    ``prefix_index`` 0 is the empty phrase; index k >= 1 is the phrase
    created by the k-th token of the stream.  ``extension`` is None only
    on a final token whose phrase already exists in the dictionary.
    """

    prefix_index: int
    extension: str | None = None


@dataclass(frozen=True)
class TokenStream:
    algorithm: Algorithm
    tokens: tuple[Lz77Token | Lz78Token, ...]
    source_length: int


def _longest_match(seq: str, pos: int) -> tuple[int, int] | None:
    """Longest match for the text at ``pos`` against any earlier start.

    Returns ``(start, length)`` with the smallest start among the
    longest matches, or None when no match reaches MIN_MATCH.  A match
    starting at ``s`` may run past ``pos`` (overlapping copy), so the
    search asks whether ``seq[pos:pos+k]`` occurs anywhere beginning
    strictly before ``pos`` -- equivalently, inside ``seq[:pos+k-1]``.
    """
    limit = len(seq) - pos
    if limit < MIN_MATCH:
        return None
    if seq.find(seq[pos:pos + MIN_MATCH], 0, pos + MIN_MATCH - 1) == -1:
        return None
    lo, hi = MIN_MATCH, limit
    while lo < hi:  # largest k for which a match exists; monotone in k
        mid = (lo + hi + 1) // 2
        if seq.find(seq[pos:pos + mid], 0, pos + mid - 1) != -1:
            lo = mid
        else:
            hi = mid - 1
    start = seq.find(seq[pos:pos + lo], 0, pos + lo - 1)
    return start, lo


def compress_lz77(seq: str) -> TokenStream:
    """Greedy LZ77 parse of ``seq`` over an unbounded window.

    At each position the longest match against any earlier starting
    position is taken (ties broken toward the smallest start, overlap
    allowed); matches shorter than two symbols become literals.
    """
    tokens: list[Lz77Token] = []
    pos = 0
    n = len(seq)
    while pos < n:
        match = _longest_match(seq, pos)
        if match is None:
            tokens.append(Literal(seq[pos]))
            pos += 1
        else:
            tokens.append(BackRef(*match))
            pos += match[1]
    return TokenStream(Algorithm.LZ77, tuple(tokens), n)


def compress_lz78(seq: str) -> TokenStream:
    """Incremental LZ78 parse of ``seq``.

    Each token consumes the longest known phrase plus one following
    symbol and enters the extended phrase into the dictionary (phrases
    are numbered from 1 in emission order).  If the input ends exactly
    on a known phrase, a terminal token without extension is emitted.
    """
    children: dict[tuple[int, str], int] = {}
    tokens: list[Lz78Token] = []
    node = 0
    next_index = 1
    for ch in seq:
        child = children.get((node, ch))
        if child is not None:
            node = child
            continue
        tokens.append(Lz78Token(node, ch))
        children[(node, ch)] = next_index
        next_index += 1
        node = 0
    if node:
        tokens.append(Lz78Token(node, None))
    return TokenStream(Algorithm.LZ78, tuple(tokens), len(seq))


def decompress(stream: TokenStream) -> str:
    """Reconstruct the source sequence of a token stream.

    Raises CorruptStream when a token index is out of range, a terminal
    LZ78 token is not last, or the decoded length disagrees with the
    stream's ``source_length``.
    """
    if stream.algorithm is Algorithm.LZ77:
        text = _decompress_lz77(stream.tokens)
    else:
        text = _decompress_lz78(stream.tokens)
    if len(text) != stream.source_length:
        raise CorruptStream(
            f"decoded {len(text)} symbols, stream claims {stream.source_length}"
        )
    return text


def _decompress_lz77(tokens: tuple[Lz77Token, ...]) -> str:
    out: list[str] = []
    for i, tok in enumerate(tokens):
        if isinstance(tok, Literal):
            out.append(tok.symbol)
            continue
        if not isinstance(tok, BackRef):
            raise CorruptStream(f"token {i} is not an LZ77 token: {tok!r}")
        if tok.length < MIN_MATCH:
            raise CorruptStream(f"token {i}: back-reference length {tok.length} < {MIN_MATCH}")
        if not 0 <= tok.start < len(out):
            raise CorruptStream(
                f"token {i}: start {tok.start} outside emitted prefix of {len(out)}"
            )
        for k in range(tok.length):  # symbol by symbol so overlaps self-extend
            out.append(out[tok.start + k])
    return "".join(out)


def _decompress_lz78(tokens: tuple[Lz78Token, ...]) -> str:
    phrases = [""]
    out: list[str] = []
    for i, tok in enumerate(tokens):
        if not isinstance(tok, Lz78Token):
            raise CorruptStream(f"token {i} is not an LZ78 token: {tok!r}")
        if not 0 <= tok.prefix_index < len(phrases):
            raise CorruptStream(
                f"token {i}: phrase index {tok.prefix_index} not yet defined"
            )
        if tok.extension is None:
            if i != len(tokens) - 1:
                raise CorruptStream(f"token {i}: terminal token before end of stream")
            out.append(phrases[tok.prefix_index])
            continue
        phrase = phrases[tok.prefix_index] + tok.extension
        phrases.append(phrase)
        out.append(phrase)
    return "".join(out)


def compression_ratio(stream: TokenStream) -> Fraction:
    """Source length over token count, each token counting as one unit."""
    if not stream.tokens:
        raise ValueError("compression ratio is undefined for an empty stream")
    return Fraction(stream.source_length, len(stream.tokens))


# ----------------------------------------------------------------- text form
#
# Literals print as bare letters.  LZ77 back-references print as [i,j];
# LZ78 tokens print as index+letter ("1d"), a zero index is dropped, and
# a terminal token prints as the bare index.  Tokens are space-separated.

_LZ77_REF_RE = re.compile(r"\[(\d+)\s*,\s*(\d+)\]")
_LZ78_TOKEN_RE = re.compile(r"(\d*)(\D?)")


def stream_to_text(stream: TokenStream, index_base: int = 0) -> str:
    """Render a stream in the compact text notation.

    ``index_base`` shifts displayed LZ77 positions (0 or 1); storage is
    always 0-based.
    """
    if index_base not in (0, 1):
        raise ValueError("index_base must be 0 or 1")
    parts: list[str] = []
    for tok in stream.tokens:
        if isinstance(tok, Literal):
            parts.append(tok.symbol)
        elif isinstance(tok, BackRef):
            parts.append(f"[{tok.start + index_base},{tok.length}]")
        elif tok.extension is None:
            parts.append(str(tok.prefix_index))
        elif tok.prefix_index == 0:
            parts.append(tok.extension)
        else:
            parts.append(f"{tok.prefix_index}{tok.extension}")
    return " ".join(parts)


def stream_from_text(
    text: str,
    algorithm: Algorithm | None = None,
    index_base: int = 0,
) -> TokenStream:
    """Parse the text notation back into a TokenStream.

    When ``algorithm`` is None it is inferred: bracketed pairs mean
    LZ77, digit-prefixed tokens mean LZ78, and a stream of bare letters
    defaults to LZ77 (both coders decode it identically).
    """
    if index_base not in (0, 1):
        raise ValueError("index_base must be 0 or 1")
    words = text.split()
    if algorithm is None:
        if any("[" in w for w in words):
            algorithm = Algorithm.LZ77
        elif any(any(c.isdigit() for c in w) for w in words):
            algorithm = Algorithm.LZ78
        else:
            algorithm = Algorithm.LZ77
    tokens: list[Lz77Token | Lz78Token] = []
    for word in words:
        if algorithm is Algorithm.LZ77:
            m = _LZ77_REF_RE.fullmatch(word)
            if m:
                start = int(m.group(1)) - index_base
                tokens.append(BackRef(start, int(m.group(2))))
            elif len(word) == 1 and not word.isdigit():
                tokens.append(Literal(word))
            else:
                raise CorruptStream(f"unrecognized LZ77 token {word!r}")
        else:
            m = _LZ78_TOKEN_RE.fullmatch(word)
            if not m or (not m.group(1) and not m.group(2)):
                raise CorruptStream(f"unrecognized LZ78 token {word!r}")
            prefix = int(m.group(1)) if m.group(1) else 0
            tokens.append(Lz78Token(prefix, m.group(2) or None))
    stream = TokenStream(algorithm, tuple(tokens), 0)
    decoded = (
        _decompress_lz77(stream.tokens)
        if algorithm is Algorithm.LZ77
        else _decompress_lz78(stream.tokens)
    )
    return TokenStream(algorithm, stream.tokens, len(decoded))


# ----------------------------------------------------------------- JSON form


def stream_to_json(stream: TokenStream) -> str:
    tokens: list[dict] = []
    for tok in stream.tokens:
        if isinstance(tok, Literal):
            tokens.append({"symbol": tok.symbol})
        elif isinstance(tok, BackRef):
            tokens.append({"start": tok.start, "length": tok.length})
        else:
            tokens.append({"prefix": tok.prefix_index, "extension": tok.extension})
    payload = {
        "algorithm": stream.algorithm.value,
        "source_length": stream.source_length,
        "tokens": tokens,
    }
    return json.dumps(payload, sort_keys=True)


def stream_from_json(text: str) -> TokenStream:
    try:
        payload = json.loads(text)
        algorithm = Algorithm(payload["algorithm"])
        raw = payload["tokens"]
        source_length = int(payload["source_length"])
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise CorruptStream(f"malformed stream JSON: {exc}") from exc
    tokens: list[Lz77Token | Lz78Token] = []
    for entry in raw:
        if "symbol" in entry:
            tokens.append(Literal(entry["symbol"]))
        elif "start" in entry:
            tokens.append(BackRef(int(entry["start"]), int(entry["length"])))
        else:
            tokens.append(Lz78Token(int(entry["prefix"]), entry.get("extension")))
    return TokenStream(algorithm, tuple(tokens), source_length)
