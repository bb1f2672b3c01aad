"""Sentiment lexicon loading.

Lexicon surfaces run through the same preprocessing pipeline as the corpus,
because the embedding vocabulary consists of stems; matching raw surface
forms against stemmed neighbors would silently miss everything.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import MalformedLexicon
from .textprep import PipelineConfig, preprocess_token

log = logging.getLogger(__name__)


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    polarity: Polarity
    normalized: str


def load_lexicon(path: Path, cfg: PipelineConfig | None = None) -> list[LexiconEntry]:
    """Read a `surface<TAB>polarity` TSV and normalize the surfaces.

    Entries whose normalization is empty (or splits into several tokens) are
    dropped with a warning. Two surfaces normalizing to the same token must
    agree on polarity.
    """
    entries: dict[str, LexiconEntry] = {}
    dropped = 0
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MalformedLexicon(f"{path}:{lineno}: expected 2 tab-separated fields")
            surface, polarity_token = parts[0].strip(), parts[1].strip().lower()
            try:
                polarity = Polarity(polarity_token)
            except ValueError:
                raise MalformedLexicon(
                    f"{path}:{lineno}: unknown polarity {polarity_token!r}"
                ) from None
            normalized = preprocess_token(surface, cfg)
            if not normalized:
                dropped += 1
                continue
            existing = entries.get(normalized)
            if existing is not None:
                if existing.polarity is not polarity:
                    raise MalformedLexicon(
                        f"{path}:{lineno}: {surface!r} normalizes to {normalized!r} "
                        f"with polarity {polarity.value}, conflicting with "
                        f"{existing.surface!r} ({existing.polarity.value})"
                    )
                continue
            entries[normalized] = LexiconEntry(surface, polarity, normalized)
    if dropped:
        log.warning("lexicon %s: dropped %d entries that did not normalize to one token",
                    path, dropped)
    return list(entries.values())


def write_lexicon(entries: list[tuple[str, str]], path: Path) -> None:
    """Write (surface, polarity) pairs as lexicon TSV."""
    with path.open("w", encoding="utf-8") as fh:
        for surface, polarity in entries:
            fh.write(f"{surface}\t{polarity}\n")
