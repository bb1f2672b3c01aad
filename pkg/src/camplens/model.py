"""Embedding model container: query-time composition, NN search, file format.

A word's representation is the mean of its vocabulary vector and its hashed
subword bucket vectors; out-of-vocabulary queries use bucket vectors alone.
The binary model file is magic + version + JSON header + raw little-endian
float32 matrices and round-trips bit-exactly.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import IoFailure, NoRepresentableNgrams, VersionMismatch
from .subword import SubwordConfig, subword_ngrams
from .train import TrainConfig
from .vocab import Vocabulary

MAGIC = b"CLWEMB01"
FORMAT_VERSION = 1


class NNResult(NamedTuple):
    term: str
    rank: int
    cosine: float


@dataclass
class EmbeddingModel:
    vocab: Vocabulary
    syn0: np.ndarray  # (V + buckets, dim) float32 input vectors
    syn1: np.ndarray  # (V, dim) float32 output vectors
    train_cfg: TrainConfig
    sub_cfg: SubwordConfig
    provenance: dict = field(default_factory=dict)
    progress: list = field(default_factory=list)
    _composed: np.ndarray | None = field(default=None, repr=False, compare=False)
    _normalized: np.ndarray | None = field(default=None, repr=False, compare=False)
    _lex_rank: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return int(self.syn0.shape[1])

    def vector(self, word: str) -> np.ndarray:
        """Composed representation of a word (works for OOV queries)."""
        if not word:
            raise ValueError("word must be non-empty")
        idx = self.vocab.word_to_index.get(word)
        v = len(self.vocab)
        if idx is not None:
            bucket_rows = [v + b for b in subword_ngrams(word, self.sub_cfg)]
            rows = np.array([idx] + bucket_rows, dtype=np.int64)
            return self.syn0[rows].mean(axis=0)
        buckets = subword_ngrams(word, self.sub_cfg, keep_whole=True)
        if not buckets:
            raise NoRepresentableNgrams(
                f"word {word!r} has no n-grams with n_min={self.sub_cfg.n_min}"
            )
        rows = np.array([v + b for b in buckets], dtype=np.int64)
        return self.syn0[rows].mean(axis=0)

    def representable(self, word: str) -> bool:
        try:
            self.vector(word)
            return True
        except NoRepresentableNgrams:
            return False

    def word_vectors(self) -> np.ndarray:
        """Composed vectors for every vocabulary word (cached)."""
        if self._composed is None:
            out = np.empty((len(self.vocab), self.dim), dtype=np.float32)
            for i, word in enumerate(self.vocab.words):
                out[i] = self.vector(word)
            self._composed = out
        return self._composed

    def _norm_matrix(self) -> np.ndarray:
        if self._normalized is None:
            mat = self.word_vectors().astype(np.float64)
            norms = np.linalg.norm(mat, axis=1)
            norms[norms == 0.0] = 1.0
            self._normalized = mat / norms[:, None]
        return self._normalized

    def nearest_neighbors(self, query: str, k: int) -> list[NNResult]:
        """Top-k cosine neighbors; ties break on ascending token order."""
        if k < 1:
            raise ValueError("k must be >= 1")
        q = self.vector(query).astype(np.float64)
        norm = float(np.linalg.norm(q))
        if norm > 0.0:
            q = q / norm
        scores = np.clip(self._norm_matrix() @ q, -1.0, 1.0)
        if self._lex_rank is None:
            order = sorted(range(len(self.vocab)), key=lambda i: self.vocab.words[i])
            ranks = np.empty(len(order), dtype=np.int64)
            ranks[order] = np.arange(len(order))
            self._lex_rank = ranks
        ordering = np.lexsort((self._lex_rank, -scores))
        query_idx = self.vocab.word_to_index.get(query, -1)
        results: list[NNResult] = []
        for idx in ordering:
            if idx == query_idx:
                continue
            results.append(
                NNResult(self.vocab.words[idx], len(results) + 1, float(scores[idx]))
            )
            if len(results) == k:
                break
        return results

    # --- persistence --------------------------------------------------------

    def _header(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "dim": self.dim,
            "vocab": [[w, int(c)] for w, c in zip(self.vocab.words, self.vocab.counts)],
            "min_count": self.vocab.min_count,
            "total_tokens": self.vocab.total_tokens,
            "subsample_t": self.vocab.subsample_t,
            "n_min": self.sub_cfg.n_min,
            "n_max": self.sub_cfg.n_max,
            "bucket_count": self.sub_cfg.bucket_count,
            "lr": self.train_cfg.lr,
            "epochs": self.train_cfg.epochs,
            "window": self.train_cfg.window,
            "negatives": self.train_cfg.negatives,
            "seed": self.train_cfg.seed,
            "workers": self.train_cfg.workers,
            "provenance": self.provenance,
            "progress": self.progress,
        }

    def save(self, path: Path) -> None:
        header = json.dumps(self._header(), sort_keys=True,
                            separators=(",", ":"), ensure_ascii=False).encode("utf-8")
        syn0 = np.ascontiguousarray(self.syn0, dtype="<f4")
        syn1 = np.ascontiguousarray(self.syn1, dtype="<f4")
        try:
            with path.open("wb") as fh:
                fh.write(MAGIC)
                fh.write(struct.pack("<I", FORMAT_VERSION))
                fh.write(struct.pack("<Q", len(header)))
                fh.write(header)
                fh.write(struct.pack("<Q", syn0.nbytes))
                fh.write(syn0.tobytes())
                fh.write(struct.pack("<Q", syn1.nbytes))
                fh.write(syn1.tobytes())
        except OSError as exc:
            raise IoFailure(f"cannot write model: {exc}") from exc


def _read_exact(fh, n: int, what: str) -> bytes:
    data = fh.read(n)
    if len(data) != n:
        raise IoFailure(f"model file truncated while reading {what}")
    return data


def load(path: Path) -> EmbeddingModel:
    """Load a model file; truncated or alien files never yield a partial model."""
    try:
        fh = path.open("rb")
    except OSError as exc:
        raise IoFailure(f"cannot open model: {exc}") from exc
    with fh:
        magic = _read_exact(fh, len(MAGIC), "magic")
        if magic != MAGIC:
            raise VersionMismatch(f"not a model file (magic {magic!r})")
        (version,) = struct.unpack("<I", _read_exact(fh, 4, "version"))
        if version != FORMAT_VERSION:
            raise VersionMismatch(f"unsupported model version {version}")
        (header_len,) = struct.unpack("<Q", _read_exact(fh, 8, "header length"))
        try:
            header = json.loads(_read_exact(fh, header_len, "header"))
        except json.JSONDecodeError as exc:
            raise VersionMismatch(f"corrupt model header: {exc}") from exc
        dim = header["dim"]
        words = [w for w, _ in header["vocab"]]
        counts = np.array([c for _, c in header["vocab"]], dtype=np.int64)
        vocab = Vocabulary(
            words=words,
            counts=counts,
            min_count=header["min_count"],
            total_tokens=header["total_tokens"],
            subsample_t=header["subsample_t"],
        )
        sub_cfg = SubwordConfig(
            n_min=header["n_min"], n_max=header["n_max"],
            bucket_count=header["bucket_count"],
        )
        train_cfg = TrainConfig(
            dim=dim, lr=header["lr"], epochs=header["epochs"],
            window=header["window"], negatives=header["negatives"],
            seed=header["seed"], workers=header["workers"],
        )
        (n0,) = struct.unpack("<Q", _read_exact(fh, 8, "syn0 length"))
        expect0 = (len(words) + sub_cfg.bucket_count) * dim * 4
        if n0 != expect0:
            raise VersionMismatch(f"syn0 size {n0} != expected {expect0}")
        syn0 = np.frombuffer(_read_exact(fh, n0, "syn0"), dtype="<f4").reshape(
            len(words) + sub_cfg.bucket_count, dim
        ).copy()
        (n1,) = struct.unpack("<Q", _read_exact(fh, 8, "syn1 length"))
        expect1 = len(words) * dim * 4
        if n1 != expect1:
            raise VersionMismatch(f"syn1 size {n1} != expected {expect1}")
        syn1 = np.frombuffer(_read_exact(fh, n1, "syn1"), dtype="<f4").reshape(
            len(words), dim
        ).copy()
        if fh.read(1):
            raise VersionMismatch("trailing bytes after model payload")
    return EmbeddingModel(
        vocab=vocab, syn0=syn0, syn1=syn1, train_cfg=train_cfg,
        sub_cfg=sub_cfg, provenance=header.get("provenance", {}),
        progress=header.get("progress", []),
    )


def export_text(model: EmbeddingModel, path: Path) -> None:
    """Write `V dim` then one `token v1 .. vdim` line per vocabulary word."""
    mat = model.word_vectors()
    try:
        with path.open("w", encoding="utf-8") as fh:
            fh.write(f"{len(model.vocab)} {model.dim}\n")
            for word, row in zip(model.vocab.words, mat):
                fh.write(word + " " + " ".join(f"{float(x):.6f}" for x in row) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write text export: {exc}") from exc
