"""Skip-gram training with negative sampling and hashed subword vectors.

The hidden representation of a center word is the mean of its own input
vector and its character n-gram bucket vectors; every (center, context)
pair is scored against the context word's output vector plus sampled
negatives. Updates run in a compiled kernel; with workers=1 and a fixed
seed the whole run is bit-reproducible. With more workers the shards race
on the shared weight matrices (statistical guarantees only).
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
from numba import njit

from .errors import EmptyCorpus
from .subword import SubwordConfig, subword_ngrams
from .vocab import Vocabulary


@dataclass(frozen=True)
class TrainConfig:
    dim: int = 100
    lr: float = 0.05
    epochs: int = 5
    window: int = 5
    negatives: int = 5
    seed: int = 42
    workers: int = 1

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.lr <= 0:
            raise ValueError("lr must be positive")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.window < 1 or self.negatives < 0 or self.workers < 1:
            raise ValueError("bad window/negatives/workers")


# ---------------------------------------------------------------------------
# reference math for the per-pair objective (kept in plain numpy so tests can
# check the compiled kernel and finite differences against the same formulas)

def _log_sigmoid(x: float) -> float:
    return -math.log1p(math.exp(-x)) if x >= 0 else x - math.log1p(math.exp(x))


def _sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def pair_loss(input_rows: np.ndarray, target_vec: np.ndarray,
              neg_vecs: np.ndarray) -> float:
    """Negative log likelihood of one (center, context) pair with negatives."""
    hidden = input_rows.mean(axis=0)
    loss = -_log_sigmoid(float(hidden @ target_vec))
    for neg in neg_vecs:
        loss += -_log_sigmoid(-float(hidden @ neg))
    return loss


def pair_gradients(input_rows: np.ndarray, target_vec: np.ndarray,
                   neg_vecs: np.ndarray):
    """Analytic gradients of pair_loss for every participating vector.

    Returns (grad_inputs, grad_target, grad_negs); grad_inputs has one row
    per input row (each equals the hidden gradient divided by the number of
    averaged rows).
    """
    k = input_rows.shape[0]
    hidden = input_rows.mean(axis=0)
    f_pos = _sigmoid(float(hidden @ target_vec))
    grad_target = (f_pos - 1.0) * hidden
    grad_hidden = (f_pos - 1.0) * target_vec.astype(np.float64)
    grad_negs = np.empty_like(neg_vecs, dtype=np.float64)
    for i, neg in enumerate(neg_vecs):
        f_neg = _sigmoid(float(hidden @ neg))
        grad_negs[i] = f_neg * hidden
        grad_hidden = grad_hidden + f_neg * neg
    grad_inputs = np.tile(grad_hidden / k, (k, 1))
    return grad_inputs, grad_target.astype(np.float64), grad_negs


# ---------------------------------------------------------------------------
# compiled kernel

@njit(cache=True, nogil=True)
def _fill_uniform(arr, scale, seed):
    """Fill with splitmix64-driven uniforms in [-scale, scale]."""
    state = np.uint64(seed)
    rows, cols = arr.shape
    for i in range(rows):
        for j in range(cols):
            state = state + np.uint64(0x9E3779B97F4A7C15)
            z = state
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
            u = (z >> np.uint64(11)) * (1.0 / 9007199254740992.0)
            arr[i, j] = np.float32((2.0 * u - 1.0) * scale)


@njit(cache=True, nogil=True)
def _train_shard(tokens, sent_offsets, sent_lo, sent_hi,
                 syn0, syn1, rows, row_offsets,
                 keep_prob, neg_table,
                 window, negatives, lr0, total_schedule, pos_start, seed):
    """Train on sentences [sent_lo, sent_hi). Returns (loss_sum, pairs, positions)."""
    dim = syn0.shape[1]
    state = np.uint64(seed)
    table_size = np.uint64(len(neg_table))
    hidden = np.empty(dim, dtype=np.float32)
    grad = np.empty(dim, dtype=np.float32)
    max_len = 0
    for s in range(sent_lo, sent_hi):
        length = sent_offsets[s + 1] - sent_offsets[s]
        if length > max_len:
            max_len = length
    reduced = np.empty(max_len if max_len > 0 else 1, dtype=np.int32)
    red_pos = np.empty(max_len if max_len > 0 else 1, dtype=np.int64)

    loss_sum = 0.0
    pair_count = 0
    position = pos_start
    for s in range(sent_lo, sent_hi):
        n_kept = 0
        for idx in range(sent_offsets[s], sent_offsets[s + 1]):
            word = tokens[idx]
            state = state + np.uint64(0x9E3779B97F4A7C15)
            z = state
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
            u = (z >> np.uint64(11)) * (1.0 / 9007199254740992.0)
            if u < keep_prob[word]:
                reduced[n_kept] = word
                red_pos[n_kept] = position
                n_kept += 1
            position += 1
        for i in range(n_kept):
            center = reduced[i]
            lr = lr0 * (1.0 - red_pos[i] / total_schedule)
            if lr < 0.0:
                lr = 0.0
            state = state + np.uint64(0x9E3779B97F4A7C15)
            z = state
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
            b = 1 + int(z % np.uint64(window))
            r0 = row_offsets[center]
            r1 = row_offsets[center + 1]
            k_rows = r1 - r0
            inv_k = np.float32(1.0 / k_rows)
            for j in range(i - b, i + b + 1):
                if j == i or j < 0 or j >= n_kept:
                    continue
                target = reduced[j]
                for d in range(dim):
                    hidden[d] = np.float32(0.0)
                for ri in range(r0, r1):
                    row = rows[ri]
                    for d in range(dim):
                        hidden[d] += syn0[row, d]
                for d in range(dim):
                    hidden[d] *= inv_k
                    grad[d] = np.float32(0.0)
                for n in range(negatives + 1):
                    if n == 0:
                        out_row = target
                        label = 1.0
                    else:
                        label = 0.0
                        out_row = -1
                        for _attempt in range(8):
                            state = state + np.uint64(0x9E3779B97F4A7C15)
                            z = state
                            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
                            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
                            z = z ^ (z >> np.uint64(31))
                            cand = neg_table[int(z % table_size)]
                            if cand != target:
                                out_row = cand
                                break
                        if out_row < 0:
                            continue
                    dot = 0.0
                    for d in range(dim):
                        dot += hidden[d] * syn1[out_row, d]
                    if dot >= 0.0:
                        f = 1.0 / (1.0 + np.exp(-dot))
                        loss_sum += (np.log1p(np.exp(-dot)) if label == 1.0
                                     else dot + np.log1p(np.exp(-dot)))
                    else:
                        e = np.exp(dot)
                        f = e / (1.0 + e)
                        loss_sum += (-dot + np.log1p(e) if label == 1.0
                                     else np.log1p(e))
                    g = np.float32((label - f) * lr)
                    for d in range(dim):
                        grad[d] += g * syn1[out_row, d]
                        syn1[out_row, d] += g * hidden[d]
                pair_count += 1
                for ri in range(r0, r1):
                    row = rows[ri]
                    for d in range(dim):
                        syn0[row, d] += grad[d] * inv_k
    return loss_sum, pair_count, position - pos_start


def _mix_seed(*parts: int) -> int:
    state = 0
    for part in parts:
        state = (state + part + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
        state ^= state >> 30
        state = (state * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
        state ^= state >> 27
        state = (state * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
        state ^= state >> 31
    return state or 1


def encode_corpus(
    lines: Iterable[Iterable[str] | str], vocab: Vocabulary
) -> tuple[np.ndarray, np.ndarray]:
    """Map token lines to index arrays (unknown tokens dropped)."""
    tokens: list[int] = []
    offsets: list[int] = [0]
    w2i = vocab.word_to_index
    for line in lines:
        parts = line.split() if isinstance(line, str) else line
        for token in parts:
            idx = w2i.get(token)
            if idx is not None:
                tokens.append(idx)
        offsets.append(len(tokens))
    return np.asarray(tokens, dtype=np.int32), np.asarray(offsets, dtype=np.int64)


def build_input_rows(
    vocab: Vocabulary, sub_cfg: SubwordConfig
) -> tuple[np.ndarray, np.ndarray]:
    """Per-word input rows: the word row itself plus its bucket rows."""
    rows: list[int] = []
    offsets = np.empty(len(vocab) + 1, dtype=np.int64)
    offsets[0] = 0
    v = len(vocab)
    for i, word in enumerate(vocab.words):
        rows.append(i)
        rows.extend(v + b for b in subword_ngrams(word, sub_cfg))
        offsets[i + 1] = len(rows)
    return np.asarray(rows, dtype=np.int64), offsets


def train(
    lines: Iterable[Iterable[str] | str],
    vocab: Vocabulary,
    cfg: TrainConfig,
    sub_cfg: SubwordConfig,
    provenance: dict | None = None,
    progress_path: Path | None = None,
):
    """Train an embedding model over pre-tokenized lines."""
    from .model import EmbeddingModel

    tokens, sent_offsets = encode_corpus(lines, vocab)
    if len(tokens) == 0:
        raise EmptyCorpus("corpus contains no in-vocabulary token")
    v = len(vocab)
    rows, row_offsets = build_input_rows(vocab, sub_cfg)
    syn0 = np.empty((v + sub_cfg.bucket_count, cfg.dim), dtype=np.float32)
    _fill_uniform(syn0, 1.0 / cfg.dim, np.uint64(_mix_seed(cfg.seed, 0xA11CE)))
    syn1 = np.zeros((v, cfg.dim), dtype=np.float32)
    keep_prob = vocab.keep_probabilities()
    neg_table = vocab.negative_table()

    n_sent = len(sent_offsets) - 1
    tokens_per_epoch = len(tokens)
    total_schedule = float(max(tokens_per_epoch * max(cfg.epochs, 1), 1))
    progress: list[dict] = []

    # contiguous sentence shards, balanced by token count
    def shard_bounds(workers: int) -> list[tuple[int, int, int]]:
        bounds = []
        target = tokens_per_epoch / workers
        lo = 0
        consumed = 0
        for w in range(workers):
            if w == workers - 1:
                hi = n_sent
            else:
                hi = lo
                goal = (w + 1) * target
                while hi < n_sent and sent_offsets[hi] < goal:
                    hi += 1
            bounds.append((lo, hi, int(sent_offsets[lo])))
            lo = hi
        return bounds

    workers = min(cfg.workers, max(n_sent, 1))
    bounds = shard_bounds(workers)
    for epoch in range(cfg.epochs):
        epoch_loss = 0.0
        epoch_pairs = 0
        results: list[tuple[float, int, int] | None] = [None] * len(bounds)
        if workers == 1:
            lo, hi, tok_start = bounds[0]
            results[0] = _train_shard(
                tokens, sent_offsets, lo, hi, syn0, syn1, rows, row_offsets,
                keep_prob, neg_table, cfg.window, cfg.negatives, cfg.lr,
                total_schedule, epoch * tokens_per_epoch + tok_start,
                np.uint64(_mix_seed(cfg.seed, epoch, 0)),
            )
        else:
            threads = []
            for w, (lo, hi, tok_start) in enumerate(bounds):
                def run(w=w, lo=lo, hi=hi, tok_start=tok_start):
                    results[w] = _train_shard(
                        tokens, sent_offsets, lo, hi, syn0, syn1, rows,
                        row_offsets, keep_prob, neg_table, cfg.window,
                        cfg.negatives, cfg.lr, total_schedule,
                        epoch * tokens_per_epoch + tok_start,
                        np.uint64(_mix_seed(cfg.seed, epoch, w)),
                    )
                t = threading.Thread(target=run)
                t.start()
                threads.append(t)
            for t in threads:
                t.join()
        for res in results:
            assert res is not None
            epoch_loss += res[0]
            epoch_pairs += res[1]
        end_pos = (epoch + 1) * tokens_per_epoch
        progress.append(
            {
                "epoch": epoch + 1,
                "tokens": end_pos,
                "mean_loss": epoch_loss / epoch_pairs if epoch_pairs else None,
                "lr": cfg.lr * max(0.0, 1.0 - end_pos / total_schedule),
            }
        )

    if progress_path is not None:
        with progress_path.open("w", encoding="utf-8") as fh:
            for entry in progress:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")

    return EmbeddingModel(
        vocab=vocab,
        syn0=syn0,
        syn1=syn1,
        train_cfg=cfg,
        sub_cfg=sub_cfg,
        provenance=dict(provenance or {}),
        progress=progress,
    )
