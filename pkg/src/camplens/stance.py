"""Stance labeling: profile seed rules, then retweet-based label propagation.

Propagation is synchronous: each iteration derives camp endorsement sets
from the labels as of the start of the iteration, so the result does not
depend on user or key iteration order. A content key endorsed by both camps
is excluded from both endorsement sets. Labels are immutable once assigned.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping

from .compat import tomllib
from .errors import EmptyGold
from .records import ContentKey, RetweetIndex, UserRecord
from .textprep import transliterate, turkish_lowercase


class Stance(str, Enum):
    PRO = "pro"
    ANTI = "anti"

    @property
    def opposite(self) -> "Stance":
        return Stance.ANTI if self is Stance.PRO else Stance.PRO


class RuleField(str, Enum):
    SCREEN_NAME = "screen_name"
    DISPLAY_NAME = "display_name"
    DESCRIPTION = "description"


class MatchMode(str, Enum):
    SUBSTRING = "substring"
    WORD_BOUNDARY = "word_boundary"


@dataclass(frozen=True)
class SeedRule:
    pattern: str
    field: RuleField
    mode: MatchMode
    label: Stance

    def __post_init__(self) -> None:
        if not self.pattern:
            raise ValueError("seed rule pattern must be non-empty")

    @property
    def rule_id(self) -> str:
        return f"{self.pattern}@{self.field.value}"

    def matches(self, user: UserRecord) -> bool:
        # fold case and Turkish diacritics on both sides, so that e.g. an
        # all-caps handle (whose I lowercases to dotless ı) still matches an
        # ASCII pattern
        value = transliterate(turkish_lowercase(getattr(user, self.field.value)))
        pattern = transliterate(turkish_lowercase(self.pattern))
        if self.mode is MatchMode.SUBSTRING:
            return pattern in value
        return re.search(rf"(?<!\w){re.escape(pattern)}(?!\w)", value) is not None


@dataclass
class StanceLabeling:
    """Per-user labels with provenance, plus users with contradictory seeds."""

    labels: dict[str, tuple[Stance, str]] = field(default_factory=dict)
    conflicts: set[str] = field(default_factory=set)

    def stance_of(self, user_id: str) -> Stance | None:
        entry = self.labels.get(user_id)
        return entry[0] if entry is not None else None

    def counts(self) -> dict[str, int]:
        out = {Stance.PRO.value: 0, Stance.ANTI.value: 0}
        for stance, _ in self.labels.values():
            out[stance.value] += 1
        return out


@dataclass(frozen=True)
class PropagationConfig:
    threshold: int = 10
    max_iterations: int = 50

    def __post_init__(self) -> None:
        if self.threshold < 1:
            raise ValueError("threshold must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def apply_seed_rules(
    users: Iterable[UserRecord], rules: list[SeedRule]
) -> StanceLabeling:
    """Label users whose profiles match rules of exactly one camp.

    Users hitting rules of both camps go to the conflict set for review.
    Duplicate records of one user are merged by unioning their rule hits.
    """
    hits: dict[str, set[Stance]] = {}
    first_rule: dict[str, str] = {}
    for user in users:
        for rule in rules:
            if rule.matches(user):
                hits.setdefault(user.user_id, set()).add(rule.label)
                first_rule.setdefault(user.user_id, rule.rule_id)
    labeling = StanceLabeling()
    for user_id, labels in hits.items():
        if len(labels) == 1:
            stance = next(iter(labels))
            labeling.labels[user_id] = (stance, f"seed:{first_rule[user_id]}")
        else:
            labeling.conflicts.add(user_id)
    return labeling


def propagate_once(
    index: RetweetIndex, current: StanceLabeling, cfg: PropagationConfig
) -> dict[str, Stance]:
    """One synchronous propagation round; returns newly qualifying users."""
    endorsement: dict[ContentKey, Stance | None] = {}
    for key, users in index.key_to_users.items():
        seen: set[Stance] = set()
        for user_id in users:
            stance = current.stance_of(user_id)
            if stance is not None:
                seen.add(stance)
                if len(seen) == 2:
                    break
        if len(seen) == 1:
            endorsement[key] = next(iter(seen))
    new_labels: dict[str, Stance] = {}
    for user_id, keys in index.user_to_keys.items():
        if current.stance_of(user_id) is not None:
            continue
        pro = anti = 0
        for key in keys:
            side = endorsement.get(key)
            if side is Stance.PRO:
                pro += 1
            elif side is Stance.ANTI:
                anti += 1
        if pro >= cfg.threshold and anti == 0:
            new_labels[user_id] = Stance.PRO
        elif anti >= cfg.threshold and pro == 0:
            new_labels[user_id] = Stance.ANTI
    return new_labels


@dataclass
class PropagationResult:
    labeling: StanceLabeling
    iteration_counts: list[int]
    converged: bool


def propagate_to_fixpoint(
    index: RetweetIndex, seeds: StanceLabeling, cfg: PropagationConfig
) -> PropagationResult:
    """Iterate propagate_once until no new user is labeled.

    Labels only accumulate. If max_iterations is hit first, the partial
    labeling is returned with converged=False.
    """
    labeling = StanceLabeling(labels=dict(seeds.labels), conflicts=set(seeds.conflicts))
    counts: list[int] = []
    converged = False
    for iteration in range(1, cfg.max_iterations + 1):
        new_labels = propagate_once(index, labeling, cfg)
        counts.append(len(new_labels))
        if not new_labels:
            converged = True
            break
        for user_id, stance in new_labels.items():
            labeling.labels[user_id] = (stance, f"propagated:{iteration}")
    return PropagationResult(labeling, counts, converged)


UNDECIDABLE = "undecidable"


@dataclass
class EvaluationReport:
    match: int
    mismatch: int
    undecidable: int
    unlabeled: int
    decided_accuracy: float | None

    def as_dict(self) -> dict:
        return {
            "match": self.match,
            "mismatch": self.mismatch,
            "undecidable": self.undecidable,
            "unlabeled": self.unlabeled,
            "decided_accuracy": self.decided_accuracy,
        }


def evaluate_against(
    result: StanceLabeling, gold: Mapping[str, Stance | str]
) -> EvaluationReport:
    """Compare a labeling against gold labels (Stance or "undecidable")."""
    if not gold:
        raise EmptyGold("gold labeling is empty")
    match = mismatch = undecidable = unlabeled = 0
    for user_id, expected in gold.items():
        if expected == UNDECIDABLE:
            undecidable += 1
            continue
        actual = result.stance_of(user_id)
        if actual is None:
            unlabeled += 1
        elif actual == expected:
            match += 1
        else:
            mismatch += 1
    decided = match + mismatch
    accuracy = match / decided if decided else None
    return EvaluationReport(match, mismatch, undecidable, unlabeled, accuracy)


def load_seed_rules(path: Path) -> list[SeedRule]:
    """Read seed rules from a TOML file with [[rule]] tables."""
    with path.open("rb") as fh:
        data = tomllib.load(fh)
    rules = []
    for entry in data.get("rule", []):
        rules.append(
            SeedRule(
                pattern=entry["pattern"],
                field=RuleField(entry["field"]),
                mode=MatchMode(entry.get("mode", "substring")),
                label=Stance(entry["label"]),
            )
        )
    return rules


def default_seed_rules() -> list[SeedRule]:
    """The bundled profile rules for the Turkish election domain."""
    from importlib.resources import files

    rules_path = files("camplens").joinpath("data/seed_rules.toml")
    with rules_path.open("rb") as fh:  # type: ignore[call-arg]
        data = tomllib.load(fh)
    return [
        SeedRule(
            pattern=entry["pattern"],
            field=RuleField(entry["field"]),
            mode=MatchMode(entry.get("mode", "substring")),
            label=Stance(entry["label"]),
        )
        for entry in data.get("rule", [])
    ]


def write_labeling_tsv(labeling: StanceLabeling, path: Path) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for user_id in sorted(labeling.labels):
            stance, provenance = labeling.labels[user_id]
            fh.write(f"{user_id}\t{stance.value}\t{provenance}\n")


def read_labeling_tsv(path: Path) -> StanceLabeling:
    labeling = StanceLabeling()
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            user_id, stance, provenance = line.split("\t")
            labeling.labels[user_id] = (Stance(stance), provenance)
    return labeling


def write_review_tsv(labeling: StanceLabeling, path: Path) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for user_id in sorted(labeling.conflicts):
            fh.write(f"{user_id}\tconflicting_seed_rules\n")


def read_gold_tsv(path: Path) -> dict[str, Stance | str]:
    gold: dict[str, Stance | str] = {}
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            user_id, value = line.split("\t")[:2]
            gold[user_id] = UNDECIDABLE if value == UNDECIDABLE else Stance(value)
    return gold
