"""Cross-space rank comparison reports.

Different embedding spaces are never compared by cosine values; reports
carry neighbor ranks only.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .compat import tomllib
from .errors import UnrepresentableAlias
from .lexicon import LexiconEntry, Polarity
from .matching import MatchGroup, MatchKind, match_sentiment, match_subsuming
from .model import EmbeddingModel
from .textprep import PipelineConfig, preprocess_token


@dataclass(frozen=True)
class EntitySpec:
    canonical: str
    aliases: tuple[str, ...]
    spaces: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.aliases:
            raise ValueError("aliases must be non-empty")
        if self.canonical not in self.aliases:
            raise ValueError("canonical must be one of the aliases")


def load_entity_spec(path: Path, cfg: PipelineConfig | None = None) -> EntitySpec:
    """Read an entity TOML (canonical, aliases, spaces); aliases are normalized."""
    with path.open("rb") as fh:
        data = tomllib.load(fh)
    canonical = preprocess_token(str(data["canonical"]), cfg)
    if not canonical:
        raise UnrepresentableAlias(
            f"canonical {data['canonical']!r} does not normalize to one token"
        )
    aliases = [canonical]
    for raw in data.get("aliases", []):
        norm = preprocess_token(str(raw), cfg)
        if not norm:
            raise UnrepresentableAlias(f"alias {raw!r} does not normalize to one token")
        if norm not in aliases:
            aliases.append(norm)
    return EntitySpec(canonical, tuple(aliases), tuple(data.get("spaces", [])))


@dataclass
class SpaceSection:
    space: str
    groups: list[MatchGroup]
    positive_median_rank: float | None
    negative_median_rank: float | None


@dataclass
class MatchReport:
    entity: EntitySpec
    k: int
    max_edit: int
    spaces: list[SpaceSection] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "entity": {
                "canonical": self.entity.canonical,
                "aliases": list(self.entity.aliases),
            },
            "k": self.k,
            "max_edit": self.max_edit,
            "spaces": [
                {
                    "space": section.space,
                    "groups": [g.as_dict() for g in section.groups],
                    "summary": {
                        "positive_median_best_rank": section.positive_median_rank,
                        "negative_median_best_rank": section.negative_median_rank,
                    },
                }
                for section in self.spaces
            ],
        }


def _median_rank(groups: list[MatchGroup], polarity: Polarity) -> float | None:
    ranks = [g.best_rank for g in groups if g.polarity is polarity]
    return float(statistics.median(ranks)) if ranks else None


def compare_spaces(
    entity: EntitySpec,
    models: Sequence[tuple[str, EmbeddingModel]],
    lexicon: list[LexiconEntry],
    k: int = 2000,
    max_edit: int = 1,
) -> MatchReport:
    """Per-space sentiment and subsumption match groups for one entity."""
    for space, model in models:
        for alias in entity.aliases:
            if not model.representable(alias):
                raise UnrepresentableAlias(
                    f"alias {alias!r} is not representable in space {space!r}"
                )
    report = MatchReport(entity=entity, k=k, max_edit=max_edit)
    for space, model in models:
        nns = model.nearest_neighbors(entity.canonical, k)
        groups = match_sentiment(nns, lexicon, max_edit) + match_subsuming(
            nns, list(entity.aliases)
        )
        groups.sort(key=lambda g: (g.best_rank, g.kind.value, g.label))
        report.spaces.append(
            SpaceSection(
                space=space,
                groups=groups,
                positive_median_rank=_median_rank(groups, Polarity.POSITIVE),
                negative_median_rank=_median_rank(groups, Polarity.NEGATIVE),
            )
        )
    return report


def _markdown_cell(group: MatchGroup) -> str:
    if group.polarity is Polarity.POSITIVE:
        label = f"*{group.label}*"
    elif group.polarity is Polarity.NEGATIVE:
        label = f"**{group.label}**"
    else:
        label = group.label
    if group.occurrence_count > 1:
        return f"{label} ({group.best_rank}, {group.occurrence_count}x)"
    return f"{label} ({group.best_rank})"


def _format_median(value: float | None) -> str:
    if value is None:
        return "n/a"
    return f"{value:g}"


def render_report(report: MatchReport, format: str = "json") -> bytes:
    """Serialize a report; output is deterministic byte-for-byte."""
    if format == "json":
        text = json.dumps(report.as_dict(), indent=2, sort_keys=True,
                          ensure_ascii=False) + "\n"
        return text.encode("utf-8")
    if format != "markdown":
        raise ValueError(f"unknown report format {format!r}")
    lines = [
        f"# Neighborhood report: {report.entity.canonical}",
        "",
        f"Aliases: {', '.join(report.entity.aliases)}. "
        f"Top {report.k} neighbors, sentiment matches within "
        f"{report.max_edit} edit(s). Positive matches are *italicized*, "
        "negative matches are **bolded**; a trailing Nx is the number of "
        "distinct matching neighbors.",
        "",
        "| Space | Matches (best rank first) |",
        "| --- | --- |",
    ]
    for section in report.spaces:
        cells = "; ".join(_markdown_cell(g) for g in section.groups)
        lines.append(f"| {section.space} | {cells} |")
    lines += [
        "",
        "## Rank summary",
        "",
        "| Space | Median positive rank | Median negative rank |",
        "| --- | --- | --- |",
    ]
    for section in report.spaces:
        lines.append(
            f"| {section.space} "
            f"| {_format_median(section.positive_median_rank)} "
            f"| {_format_median(section.negative_median_rank)} |"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
