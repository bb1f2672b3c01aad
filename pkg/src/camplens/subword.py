"""Character n-gram enumeration and hashing for subword vectors."""

from __future__ import annotations

from dataclasses import dataclass

FNV_OFFSET_32 = 0x811C9DC5
FNV_PRIME_32 = 0x01000193


def fnv1a_32(data: bytes) -> int:
    """32-bit FNV-1a hash; fixes bucket assignment across platforms."""
    h = FNV_OFFSET_32
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME_32) & 0xFFFFFFFF
    return h


@dataclass(frozen=True)
class SubwordConfig:
    n_min: int = 3
    n_max: int = 6
    bucket_count: int = 2_000_000

    def __post_init__(self) -> None:
        if not (1 <= self.n_min <= self.n_max):
            raise ValueError("require 1 <= n_min <= n_max")
        if self.bucket_count < 1:
            raise ValueError("bucket_count must be positive")


def ngram_strings(word: str, cfg: SubwordConfig, keep_whole: bool = False) -> list[str]:
    """All n-grams of the boundary-wrapped word, in enumeration order.

    The whole wrapped word is skipped (the word's own vocabulary vector
    stands for it) unless keep_whole is set, which the out-of-vocabulary
    path uses so that very short unknown words stay representable.
    """
    if not word:
        raise ValueError("word must be non-empty")
    wrapped = f"<{word}>"
    length = len(wrapped)
    grams: list[str] = []
    for n in range(cfg.n_min, min(cfg.n_max, length) + 1):
        for i in range(length - n + 1):
            gram = wrapped[i : i + n]
            if gram == wrapped and not keep_whole:
                continue
            grams.append(gram)
    return grams


def subword_ngrams(word: str, cfg: SubwordConfig, keep_whole: bool = False) -> list[int]:
    """Bucket indices (FNV-1a mod bucket_count) for the word's n-grams."""
    return [
        fnv1a_32(gram.encode("utf-8")) % cfg.bucket_count
        for gram in ngram_strings(word, cfg, keep_whole)
    ]
