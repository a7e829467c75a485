"""Tokenization, frequency counting, coverage curves and frequency bands."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import IngestEncodingError, MalformedInputError
from .lexicon import FrequencyDictionary

# runs of characters for which str.isalnum() holds
_ALNUM_RUN = re.compile(r"[^\W_]+")

SPLIT_RULES = ("unicode-alphanumeric-runs",)
BAND_MODES = ("equal-count", "rank-window")


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    split_rule: str = "unicode-alphanumeric-runs"
    min_token_length: int = 1

    def __post_init__(self):
        if self.split_rule not in SPLIT_RULES:
            raise ValueError(f"unknown split rule {self.split_rule!r}")
        if self.min_token_length < 1:
            raise ValueError("min_token_length must be positive")

    def as_dict(self) -> dict:
        return asdict(self)


class CoveragePoint(NamedTuple):
    rank: int
    cumulative_fraction: float


class FrequencyBand(NamedTuple):
    band_index: int
    count: int | None          # shared count in equal-count mode
    ranks: tuple[int, int]     # inclusive 1-based rank interval
    words: tuple[str, ...]


def decode(data: bytes, source: str | None = None) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        where = f" in {source}" if source else ""
        raise IngestEncodingError(
            f"invalid UTF-8{where} at byte offset {exc.start}", offset=exc.start, source=source
        ) from None


def tokenize(text: str | bytes, cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    if isinstance(text, (bytes, bytearray)):
        text = decode(bytes(text))
    tokens = _ALNUM_RUN.findall(text)
    if cfg.lowercase:
        tokens = [t.lower() for t in tokens]
    if cfg.min_token_length > 1:
        tokens = [t for t in tokens if len(t) >= cfg.min_token_length]
    return tokens


def count_frequencies(tokens: Iterable[str]) -> FrequencyDictionary:
    return FrequencyDictionary(Counter(tokens))


def coverage_curve(freq: FrequencyDictionary, ranks: Iterable[int]) -> list[CoveragePoint]:
    """Fraction of all tokens covered by the top-``r`` words, for each ``r``.

    Ranks past the vocabulary size cover everything.
    """
    ranks = [int(r) for r in ranks]
    if any(r < 1 for r in ranks) or any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise ValueError("ranks must be positive and strictly increasing")
    if not freq.entries:
        return []
    counts = np.array([c for _, c in freq.ranked()], dtype=np.int64)
    cumulative = np.cumsum(counts)
    total = freq.total_tokens
    points = []
    for r in ranks:
        covered = int(cumulative[min(r, len(cumulative)) - 1])
        points.append(CoveragePoint(r, covered / total))
    return points


def default_ranks(vocabulary_size: int) -> list[int]:
    """1-2-5 ladder up to the vocabulary size, always ending on it."""
    ranks = []
    decade = 1
    while decade <= vocabulary_size:
        for m in (1, 2, 5):
            if m * decade < vocabulary_size:
                ranks.append(m * decade)
        decade *= 10
    if vocabulary_size > 0:
        ranks.append(vocabulary_size)
    return ranks


def band_by_frequency(freq: FrequencyDictionary, mode: str = "equal-count", param: int = 1) -> list[FrequencyBand]:
    if mode not in BAND_MODES:
        raise ValueError(f"mode must be one of {BAND_MODES}")
    ranked = freq.ranked()
    bands: list[FrequencyBand] = []
    if mode == "rank-window":
        if param < 1:
            raise ValueError("rank-window width must be positive")
        for start in range(0, len(ranked), param):
            chunk = ranked[start:start + param]
            bands.append(FrequencyBand(len(bands), None, (start + 1, start + len(chunk)),
                                       tuple(w for w, _ in chunk)))
        return bands
    start = 0
    while start < len(ranked):
        count = ranked[start][1]
        stop = start
        while stop < len(ranked) and ranked[stop][1] == count:
            stop += 1
        bands.append(FrequencyBand(len(bands), count, (start + 1, stop),
                                   tuple(w for w, _ in ranked[start:stop])))
        start = stop
    return bands


def format_tsv(freq: FrequencyDictionary) -> str:
    lines = [f"#total {freq.total_tokens}"]
    lines.extend(f"{word}\t{count}" for word, count in freq.ranked())
    return "\n".join(lines) + "\n"


def parse_tsv(text: str) -> FrequencyDictionary:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#total "):
        raise MalformedInputError("frequency file must start with '#total <N>'")
    try:
        total = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise MalformedInputError(f"bad header line {lines[0]!r}") from None
    entries: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedInputError(f"line {lineno}: expected word<TAB>count")
        word, raw = parts
        try:
            count = int(raw)
        except ValueError:
            raise MalformedInputError(f"line {lineno}: count {raw!r} is not an integer") from None
        if count < 1 or not word or word in entries:
            raise MalformedInputError(f"line {lineno}: invalid or duplicate entry {word!r}")
        entries[word] = count
    try:
        return FrequencyDictionary(entries, total)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from None
