from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS_DIR))

from camplens.records import ContentKey, KeyKind, RetweetIndex  # noqa: E402
from camplens.stance import Stance, StanceLabeling  # noqa: E402


def make_index(user_to_keys: dict[str, set[str]]) -> RetweetIndex:
    """Build a RetweetIndex from plain user -> key-name sets."""
    index = RetweetIndex()
    for user, keys in user_to_keys.items():
        for key in keys:
            index.add(user, ContentKey(KeyKind.ORIGIN, key))
    return index


def make_seeds(assignments: dict[str, str]) -> StanceLabeling:
    labeling = StanceLabeling()
    for user, stance in assignments.items():
        labeling.labels[user] = (Stance(stance), "seed:test")
    return labeling


def random_graph(rng: random.Random, max_users: int = 50, max_keys: int = 200):
    """Random endorsement graph plus random seed labels.

    Returns (user_to_keys: dict[str, set[str]], seeds: dict[str, str]).
    """
    n_users = rng.randint(2, max_users)
    n_keys = rng.randint(1, max_keys)
    keys = [f"k{i}" for i in range(n_keys)]
    user_to_keys: dict[str, set[str]] = {}
    for u in range(n_users):
        degree = rng.randint(0, min(n_keys, 15))
        user_to_keys[f"u{u}"] = set(rng.sample(keys, degree))
    seeds: dict[str, str] = {}
    for u in range(n_users):
        roll = rng.random()
        if roll < 0.15:
            seeds[f"u{u}"] = "pro"
        elif roll < 0.3:
            seeds[f"u{u}"] = "anti"
    return user_to_keys, seeds


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return TESTS_DIR / "data"
