"""Core record types for the tweet corpus store."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple


class KeyKind(str, Enum):
    ORIGIN = "origin"
    TEXT_HASH = "text_hash"


class ContentKey(NamedTuple):
    """Canonical identity of a tweet across retweets and exact duplicates."""

    kind: KeyKind
    value: str


@dataclass(frozen=True)
class TweetRecord:
    tweet_id: str
    author_id: str
    text: str
    lang: str = ""
    origin_id: str | None = None
    created_at: str | None = None

    def __post_init__(self) -> None:
        if not self.tweet_id:
            raise ValueError("tweet_id must be non-empty")
        if self.origin_id is not None and self.origin_id == self.tweet_id:
            raise ValueError("origin_id must differ from tweet_id")


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    screen_name: str = ""
    display_name: str = ""
    description: str = ""

    def __post_init__(self) -> None:
        if not self.user_id:
            raise ValueError("user_id must be non-empty")


def _normalize_for_hash(text: str) -> str:
    # Turkish-aware lowercasing plus whitespace-run collapsing; exact text
    # duplicates (the retweet-style copy) map to one key, nothing fuzzier.
    from .textprep import turkish_lowercase

    return " ".join(turkish_lowercase(text).split())


def content_key(record: TweetRecord) -> ContentKey:
    """Canonical key: retweets share their origin id, duplicates share a text hash."""
    if record.origin_id is not None:
        return ContentKey(KeyKind.ORIGIN, record.origin_id)
    digest = hashlib.blake2b(
        _normalize_for_hash(record.text).encode("utf-8"), digest_size=16
    ).hexdigest()
    return ContentKey(KeyKind.TEXT_HASH, digest)


@dataclass
class RetweetIndex:
    """Bidirectional user <-> content-key endorsement index."""

    user_to_keys: dict[str, set[ContentKey]] = field(default_factory=dict)
    key_to_users: dict[ContentKey, set[str]] = field(default_factory=dict)

    def add(self, user_id: str, key: ContentKey) -> None:
        self.user_to_keys.setdefault(user_id, set()).add(key)
        self.key_to_users.setdefault(key, set()).add(user_id)

    def merge(self, other: "RetweetIndex") -> None:
        for user_id, keys in other.user_to_keys.items():
            for key in keys:
                self.add(user_id, key)

    def check_inverse(self) -> bool:
        """True iff user_to_keys and key_to_users are exact inverses."""
        forward = {(u, k) for u, ks in self.user_to_keys.items() for k in ks}
        backward = {(u, k) for k, us in self.key_to_users.items() for u in us}
        return forward == backward


def build_retweet_index(records: Iterable[TweetRecord]) -> RetweetIndex:
    """Associate each record's author with the record's content key."""
    index = RetweetIndex()
    for record in records:
        index.add(record.author_id, content_key(record))
    return index
