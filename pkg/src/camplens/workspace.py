"""Workspace layout and artifact provenance helpers.

Every produced artifact gets a sibling `<name>.meta.json` recording the
producing config and the digests of its inputs. Metadata carries no
timestamps, so re-running a stage with unchanged inputs reproduces the
artifact byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from . import __version__


class Workspace:
    SUBDIRS = ("corpus", "labels", "tokens", "models", "reports", "synth")

    def __init__(self, root: Path):
        self.root = Path(root)

    def ensure(self) -> "Workspace":
        for sub in self.SUBDIRS:
            (self.root / sub).mkdir(parents=True, exist_ok=True)
        return self

    @property
    def corpus(self) -> Path:
        return self.root / "corpus"

    @property
    def labels(self) -> Path:
        return self.root / "labels"

    @property
    def tokens(self) -> Path:
        return self.root / "tokens"

    @property
    def models(self) -> Path:
        return self.root / "models"

    @property
    def reports(self) -> Path:
        return self.root / "reports"

    @property
    def synth(self) -> Path:
        return self.root / "synth"


def sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with Path(path).open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_json(path: Path, obj) -> None:
    Path(path).write_text(
        json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def write_meta(artifact: Path, config: dict, inputs: list[Path]) -> None:
    meta = {
        "artifact": artifact.name,
        "config": config,
        "inputs": {Path(p).name: sha256_file(p) for p in inputs},
        "tool_version": __version__,
    }
    write_json(artifact.with_name(artifact.name + ".meta.json"), meta)
