"""Edit-distance and neighbor matching against lexicon entries and aliases."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicon import LexiconEntry, Polarity
from .model import NNResult

# At edit distance 1 nearly everything matches a 3-letter stem, so fuzzy
# matching only applies when both sides are at least this long.
MIN_FUZZY_LENGTH = 4


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance (insert/delete/substitute) over code points."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i] + [0] * len(b)
        for j, cb in enumerate(b, 1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            )
        previous = current
    return previous[-1]


class MatchKind(str, Enum):
    SENTIMENT = "sentiment"
    SUBSUMPTION = "subsumption"


@dataclass(frozen=True)
class MatchGroup:
    label: str
    kind: MatchKind
    polarity: Polarity | None
    best_rank: int
    occurrence_count: int
    members: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind.value,
            "polarity": self.polarity.value if self.polarity else None,
            "best_rank": self.best_rank,
            "occurrence_count": self.occurrence_count,
            "members": [[term, rank] for term, rank in self.members],
        }


def _group(label: str, kind: MatchKind, polarity: Polarity | None,
           members: list[tuple[str, int]]) -> MatchGroup:
    members = sorted(members, key=lambda m: (m[1], m[0]))
    return MatchGroup(
        label=label,
        kind=kind,
        polarity=polarity,
        best_rank=min(rank for _, rank in members),
        occurrence_count=len(members),
        members=tuple(members),
    )


def match_sentiment(
    nns: list[NNResult], lexicon: list[LexiconEntry], max_edit: int = 1
) -> list[MatchGroup]:
    """Group neighbors by the lexicon entry they match.

    Each neighbor term is assigned to at most one entry: smallest edit
    distance first, then lexicographically smallest normalized form. Exact
    matches always count; fuzzy matches require both sides to be longer
    than 3 characters.
    """
    by_entry: dict[str, tuple[LexiconEntry, list[tuple[str, int]]]] = {}
    for nn in nns:
        best: tuple[int, str, LexiconEntry] | None = None
        for entry in lexicon:
            if nn.term == entry.normalized:
                distance = 0
            elif (
                max_edit >= 1
                and len(nn.term) >= MIN_FUZZY_LENGTH
                and len(entry.normalized) >= MIN_FUZZY_LENGTH
                and abs(len(nn.term) - len(entry.normalized)) <= max_edit
            ):
                distance = levenshtein(nn.term, entry.normalized)
                if distance > max_edit:
                    continue
            else:
                continue
            candidate = (distance, entry.normalized, entry)
            if best is None or candidate[:2] < best[:2]:
                best = candidate
        if best is not None:
            entry = best[2]
            by_entry.setdefault(entry.normalized, (entry, []))[1].append(
                (nn.term, nn.rank)
            )
    groups = [
        _group(label, MatchKind.SENTIMENT, entry.polarity, members)
        for label, (entry, members) in by_entry.items()
    ]
    return sorted(groups, key=lambda g: (g.best_rank, g.label))


def match_subsuming(nns: list[NNResult], aliases: list[str]) -> list[MatchGroup]:
    """Group neighbors that strictly contain an entity alias as a substring."""
    groups: list[MatchGroup] = []
    for alias in sorted(set(aliases)):
        members = [
            (nn.term, nn.rank) for nn in nns if alias in nn.term and nn.term != alias
        ]
        if members:
            groups.append(_group(alias, MatchKind.SUBSUMPTION, None, members))
    return sorted(groups, key=lambda g: (g.best_rank, g.label))
