"""Tweet archive ingestion and file-backed corpus persistence.

Input is classic status JSONL (one object per line). Malformed lines never
abort the stream; they are counted and skipped. The persisted corpus is a
pair of append-only JSONL files (normalized tweets, deduplicated user
profiles) plus a manifest with counts and input digests.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import MalformedRecord
from .records import TweetRecord, UserRecord

SCHEMA_VERSION = 1


def parse_tweet_line(line: str) -> tuple[TweetRecord, UserRecord]:
    """Project one archive line into a TweetRecord plus its author's profile."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedRecord("line is not a JSON object")
    user = obj.get("user")
    if not isinstance(user, dict):
        user = {}
    tweet_id = obj.get("id")
    user_id = user.get("id")
    text = obj.get("full_text", obj.get("text"))
    if tweet_id in (None, "") or user_id in (None, "") or text is None:
        raise MalformedRecord("missing id, user.id, or text")
    origin_id = None
    rt = obj.get("retweeted_status")
    if isinstance(rt, dict) and rt.get("id") not in (None, ""):
        origin_id = str(rt["id"])
    try:
        record = TweetRecord(
            tweet_id=str(tweet_id),
            author_id=str(user_id),
            text=str(text),
            lang=str(obj.get("lang") or ""),
            origin_id=origin_id,
            created_at=str(obj["created_at"]) if obj.get("created_at") else None,
        )
        profile = UserRecord(
            user_id=str(user_id),
            screen_name=str(user.get("screen_name") or ""),
            display_name=str(user.get("name") or ""),
            description=str(user.get("description") or ""),
        )
    except ValueError as exc:
        raise MalformedRecord(str(exc)) from exc
    return record, profile


def filter_language(record: TweetRecord, allowed: set[str]) -> bool:
    """Keep a record iff its language code is in the allowed set."""
    return record.lang in allowed


@dataclass
class IngestStats:
    total: int = 0
    kept: int = 0
    malformed: int = 0
    language_filtered: int = 0

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def iter_archive(
    lines: Iterable[str],
    allowed_langs: set[str] | None = None,
    stats: IngestStats | None = None,
) -> Iterator[tuple[TweetRecord, UserRecord]]:
    """Parse an archive stream, skipping malformed and filtered lines."""
    stats = stats if stats is not None else IngestStats()
    for line in lines:
        if not line.strip():
            continue
        stats.total += 1
        try:
            record, profile = parse_tweet_line(line)
        except MalformedRecord:
            stats.malformed += 1
            continue
        if allowed_langs is not None and not filter_language(record, allowed_langs):
            stats.language_filtered += 1
            continue
        stats.kept += 1
        yield record, profile


def tweet_to_json(record: TweetRecord) -> str:
    obj = {
        "tweet_id": record.tweet_id,
        "author_id": record.author_id,
        "text": record.text,
        "lang": record.lang,
    }
    if record.origin_id is not None:
        obj["origin_id"] = record.origin_id
    if record.created_at is not None:
        obj["created_at"] = record.created_at
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def tweet_from_json(line: str) -> TweetRecord:
    obj = json.loads(line)
    return TweetRecord(
        tweet_id=obj["tweet_id"],
        author_id=obj["author_id"],
        text=obj["text"],
        lang=obj.get("lang", ""),
        origin_id=obj.get("origin_id"),
        created_at=obj.get("created_at"),
    )


def ingest_to_store(
    inputs: list[Path],
    out_dir: Path,
    allowed_langs: set[str] | None = None,
) -> IngestStats:
    """Ingest archive files into a corpus store directory.

    Writes tweets.jsonl (normalized records), users.jsonl (unique authors,
    last profile seen wins), ingest_stats.json and manifest.json.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    stats = IngestStats()
    users: dict[str, UserRecord] = {}
    tweets_path = out_dir / "tweets.jsonl"
    with tweets_path.open("w", encoding="utf-8") as tw:
        for path in inputs:
            with path.open("r", encoding="utf-8") as fh:
                for record, profile in iter_archive(fh, allowed_langs, stats):
                    tw.write(tweet_to_json(record) + "\n")
                    users[profile.user_id] = profile
    users_path = out_dir / "users.jsonl"
    with users_path.open("w", encoding="utf-8") as uf:
        for user_id in sorted(users):
            uf.write(json.dumps(dataclasses.asdict(users[user_id]),
                                ensure_ascii=False, sort_keys=True) + "\n")
    (out_dir / "ingest_stats.json").write_text(
        json.dumps(stats.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    from .workspace import sha256_file

    manifest = {
        "schema_version": SCHEMA_VERSION,
        "files": {
            "tweets": tweets_path.name,
            "users": users_path.name,
        },
        "counts": {"tweets": stats.kept, "users": len(users)},
        "inputs": {p.name: sha256_file(p) for p in inputs},
        "language_filter": sorted(allowed_langs) if allowed_langs else None,
    }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return stats


def read_tweets(store_dir: Path) -> Iterator[TweetRecord]:
    with (store_dir / "tweets.jsonl").open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield tweet_from_json(line)


def read_users(store_dir: Path) -> Iterator[UserRecord]:
    with (store_dir / "users.jsonl").open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                obj = json.loads(line)
                yield UserRecord(**obj)
