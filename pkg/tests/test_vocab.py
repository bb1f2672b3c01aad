from __future__ import annotations

import numpy as np
import pytest

from camplens.errors import EmptyCorpus
from camplens.vocab import build_vocab


def test_min_count_filters():
    vocab = build_vocab(["a a b"], min_count=2)
    assert vocab.words == ["a"]
    assert vocab.counts[0] == 2
    assert vocab.total_tokens == 3


def test_min_count_one_keeps_all():
    vocab = build_vocab(["a a b"], min_count=1)
    assert set(vocab.words) == {"a", "b"}


def test_empty_corpus_raises():
    with pytest.raises(EmptyCorpus):
        build_vocab([], min_count=1)
    with pytest.raises(EmptyCorpus):
        build_vocab(["a b"], min_count=5)


def test_index_order_by_frequency_then_token():
    vocab = build_vocab(["c c b b a"], min_count=1)
    assert vocab.words == ["b", "c", "a"]
    assert vocab.word_to_index == {"b": 0, "c": 1, "a": 2}


def test_accepts_token_lists():
    vocab = build_vocab([["x", "y"], ["x"]], min_count=1)
    assert vocab.word_to_index["x"] == 0


def test_keep_probabilities():
    vocab = build_vocab(["a " * 1000 + "b"], min_count=1, subsample_t=1e-2)
    probs = vocab.keep_probabilities()
    a, b = vocab.word_to_index["a"], vocab.word_to_index["b"]
    # frequent word subsampled, rare word (f < t) always kept
    assert 0.0 < probs[a] < 1.0
    assert probs[b] == 1.0
    disabled = build_vocab(["a a b"], min_count=1, subsample_t=0.0)
    assert np.all(disabled.keep_probabilities() == 1.0)


def test_negative_table_smoothed_proportions():
    vocab = build_vocab(["a " * 160 + "b " * 10], min_count=1)
    table = vocab.negative_table(size=100_000)
    counts = np.bincount(table, minlength=2).astype(float)
    ratio = counts[vocab.word_to_index["a"]] / counts[vocab.word_to_index["b"]]
    assert ratio == pytest.approx((160 / 10) ** 0.75, rel=0.01)
