"""Vocabulary construction for embedding training."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import EmptyCorpus


@dataclass
class Vocabulary:
    """Frequency-filtered token inventory with dense indexes.

    Indexes are assigned by descending count, ties broken lexicographically,
    so equal corpora always produce the same layout.
    """

    words: list[str]
    counts: np.ndarray
    min_count: int
    total_tokens: int
    subsample_t: float = 1e-4
    word_to_index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.word_to_index = {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    @property
    def kept_tokens(self) -> int:
        return int(self.counts.sum())

    def keep_probabilities(self) -> np.ndarray:
        """Per-word keep probability for frequent-word subsampling.

        Standard formula: keep with probability sqrt(t/f) + t/f where f is
        the word's corpus frequency. t <= 0 disables subsampling.
        """
        if self.subsample_t <= 0:
            return np.ones(len(self.words), dtype=np.float64)
        freqs = self.counts.astype(np.float64) / max(self.kept_tokens, 1)
        ratio = self.subsample_t / freqs
        return np.minimum(1.0, np.sqrt(ratio) + ratio)

    def negative_table(self, size: int = 1 << 20) -> np.ndarray:
        """Sampling table proportional to count^0.75 (unigram smoothing)."""
        weights = self.counts.astype(np.float64) ** 0.75
        cumulative = np.cumsum(weights)
        cumulative /= cumulative[-1]
        probes = (np.arange(size, dtype=np.float64) + 0.5) / size
        return np.searchsorted(cumulative, probes).astype(np.int32)


def build_vocab(
    lines: Iterable[Iterable[str] | str],
    min_count: int = 5,
    subsample_t: float = 1e-4,
) -> Vocabulary:
    """Count tokens and drop those seen fewer than min_count times."""
    counter: Counter[str] = Counter()
    total = 0
    for line in lines:
        tokens = line.split() if isinstance(line, str) else line
        for token in tokens:
            counter[token] += 1
            total += 1
    kept = [(w, c) for w, c in counter.items() if c >= min_count]
    if not kept:
        raise EmptyCorpus(
            f"no token reaches min_count={min_count} (saw {total} tokens)"
        )
    kept.sort(key=lambda item: (-item[1], item[0]))
    words = [w for w, _ in kept]
    counts = np.array([c for _, c in kept], dtype=np.int64)
    return Vocabulary(
        words=words,
        counts=counts,
        min_count=min_count,
        total_tokens=total,
        subsample_t=subsample_t,
    )
