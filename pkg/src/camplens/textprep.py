"""Deterministic tweet-to-token pipeline for Turkish text.

Stage order matters: numbers are replaced before non-letter removal (so digit
runs still exist when the number rule fires) and transliteration runs last
(so the stemmer sees native Turkish orthography).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .turkish_stemmer import stem_word


class Stage(str, Enum):
    CASE_FOLD = "case_fold"
    STRIP_ENTITIES = "strip_entities"
    NUMBER_TOKEN = "number_token"
    REMOVE_NONLETTERS = "remove_nonletters"
    STEM = "stem"
    TRANSLITERATE = "transliterate"


DEFAULT_STAGES = (
    Stage.CASE_FOLD,
    Stage.STRIP_ENTITIES,
    Stage.NUMBER_TOKEN,
    Stage.REMOVE_NONLETTERS,
    Stage.STEM,
    Stage.TRANSLITERATE,
)


@dataclass(frozen=True)
class PipelineConfig:
    stages: tuple[Stage, ...] = DEFAULT_STAGES
    number_token: str = "number"

    def __post_init__(self) -> None:
        if len(set(self.stages)) != len(self.stages):
            raise ValueError("each pipeline stage may appear at most once")


_CASEFOLD_MAP = {ord("İ"): "i", ord("I"): "ı"}

_TRANSLIT_MAP = str.maketrans(
    {
        "ç": "c", "ğ": "g", "ı": "i", "ö": "o", "ş": "s", "ü": "u",
        "Ç": "C", "Ğ": "G", "İ": "I", "Ö": "O", "Ş": "S", "Ü": "U",
    }
)

_URL_RE = re.compile(r"^(?:[A-Za-z][A-Za-z0-9+.-]*://|www\.)")
_DIGIT_RUN_RE = re.compile(r"\d+")


def turkish_lowercase(s: str) -> str:
    """Locale-correct Turkish lowercasing: İ -> i and I -> ı."""
    return s.translate(_CASEFOLD_MAP).lower()


def strip_entities(s: str) -> str:
    """Drop URL, #hashtag, and @mention tokens whole; collapse whitespace."""
    kept = [
        tok
        for tok in s.split()
        if not (tok.startswith("#") or tok.startswith("@") or _URL_RE.match(tok))
    ]
    return " ".join(kept)


def replace_numbers(s: str, token: str = "number") -> str:
    """Replace every maximal digit run with the number token."""
    return " ".join(_DIGIT_RUN_RE.sub(f" {token} ", s).split())


def remove_nonletters(s: str) -> str:
    """Delete characters that are neither letters nor whitespace."""
    cleaned = "".join(c for c in s if c.isalpha() or c.isspace())
    return " ".join(cleaned.split())


def transliterate(s: str) -> str:
    """Map Turkish-specific letters to the closest English letters."""
    return s.translate(_TRANSLIT_MAP)


def _stem_text(s: str) -> str:
    return " ".join(stem_word(tok) for tok in s.split())


_STAGE_FUNCS = {
    Stage.CASE_FOLD: lambda s, cfg: turkish_lowercase(s),
    Stage.STRIP_ENTITIES: lambda s, cfg: strip_entities(s),
    Stage.NUMBER_TOKEN: lambda s, cfg: replace_numbers(s, cfg.number_token),
    Stage.REMOVE_NONLETTERS: lambda s, cfg: remove_nonletters(s),
    Stage.STEM: lambda s, cfg: _stem_text(s),
    Stage.TRANSLITERATE: lambda s, cfg: transliterate(s),
}


def preprocess_tweet(s: str, cfg: PipelineConfig | None = None) -> list[str]:
    """Apply the configured stages in order and tokenize on whitespace."""
    cfg = cfg or PipelineConfig()
    for stage in cfg.stages:
        s = _STAGE_FUNCS[stage](s, cfg)
    return [tok for tok in s.split() if tok]


def preprocess_token(token: str, cfg: PipelineConfig | None = None) -> str | None:
    """Run a single token (lexicon surface, query term) through the pipeline.

    Returns the normalized token, or None when the input does not survive as
    exactly one token.
    """
    out = preprocess_tweet(token, cfg)
    return out[0] if len(out) == 1 else None
