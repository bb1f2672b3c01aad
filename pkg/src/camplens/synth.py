"""Synthetic polarized populations for end-to-end validation.

Generators emit the same archive JSONL shape as real ingestion, so the whole
pipeline runs unmodified on synthetic data. Tokens are built from consonants
only, which makes them fixed points of the preprocessing pipeline (no case,
digits, entities, stemmable suffixes, or transliterable letters).

All randomness comes from a 64-bit splittable counter-based generator
(splitmix64): state advances by the golden-gamma constant and each output is
a finalizer mix of the state, so identical seeds reproduce identical bytes
on every platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidParams
from .records import TweetRecord, UserRecord
from .stance import Stance

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15

# consonant-only alphabet: tokens survive the default pipeline unchanged
_ALPHABET = "bcdfghjklmnpqrstvz"

SENTENCE_LENGTH = 20
ENTITY_SENTENCE_RATE = 0.3
LEXICON_WORDS_PER_POLARITY = 20


class SplitMix64:
    """splitmix64 stream; `split` derives an independent child stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    @staticmethod
    def _mix(z: int) -> int:
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
        return z ^ (z >> 31)

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return self._mix(self._state)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def randint(self, n: int) -> int:
        """Uniform int in [0, n); n is small here so modulo bias is negligible."""
        return self.next_u64() % n

    def choice(self, seq):
        return seq[self.randint(len(seq))]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), order randomized."""
        picked: list[int] = []
        pool = list(range(n))
        for i in range(k):
            j = i + self.randint(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            picked.append(pool[i])
        return picked

    def split(self, tag: int) -> "SplitMix64":
        return SplitMix64(self._mix((self._state ^ (tag * _GAMMA)) & _MASK))


def _token(rng: SplitMix64, length: int) -> str:
    return "".join(_ALPHABET[rng.randint(len(_ALPHABET))] for _ in range(length))


def _unique_tokens(rng: SplitMix64, count: int, reserved: set[str]) -> list[str]:
    out: list[str] = []
    seen = set(reserved)
    while len(out) < count:
        tok = _token(rng, 4 + rng.randint(4))
        if tok not in seen:
            seen.add(tok)
            out.append(tok)
    return out


# ---------------------------------------------------------------------------
# retweet network with planted camps

@dataclass(frozen=True)
class NetworkParams:
    users_per_camp: int = 500
    seeds_per_camp: int = 20
    tweets_per_camp: int = 200
    retweets_per_user: int = 12
    cross_camp_retweet_prob: float = 0.05
    rng_seed: int = 42

    def __post_init__(self) -> None:
        if min(self.users_per_camp, self.seeds_per_camp,
               self.tweets_per_camp, self.retweets_per_user) < 1:
            raise InvalidParams("all counts must be positive")
        if self.seeds_per_camp > self.users_per_camp:
            raise InvalidParams("seeds_per_camp must not exceed users_per_camp")
        if self.retweets_per_user > self.tweets_per_camp:
            raise InvalidParams("retweets_per_user must not exceed tweets_per_camp")
        if not 0.0 <= self.cross_camp_retweet_prob <= 1.0:
            raise InvalidParams("cross_camp_retweet_prob must be in [0, 1]")


_SEED_DECLARATION = {Stance.PRO: "oy verdik #devam", Stance.ANTI: "söz bitti #tamam"}


@dataclass
class SynthNetwork:
    users: list[UserRecord]
    tweets: list[TweetRecord]
    gold: dict[str, Stance]
    seed_users: set[str] = field(default_factory=set)


def gen_polarized_network(params: NetworkParams) -> SynthNetwork:
    """Two retweet camps; seeds self-declare in their profile description."""
    rng = SplitMix64(params.rng_seed)
    users: list[UserRecord] = []
    tweets: list[TweetRecord] = []
    gold: dict[str, Stance] = {}
    seed_users: set[str] = set()
    camps = (Stance.PRO, Stance.ANTI)
    camp_users: dict[Stance, list[str]] = {}
    camp_tweets: dict[Stance, list[TweetRecord]] = {}

    for camp in camps:
        ids = [f"{camp.value}_u{i:05d}" for i in range(params.users_per_camp)]
        camp_users[camp] = ids
        for i, user_id in enumerate(ids):
            is_seed = i < params.seeds_per_camp
            users.append(
                UserRecord(
                    user_id=user_id,
                    screen_name=f"{camp.value}{i:05d}",
                    display_name=f"user {camp.value} {i}",
                    description=_SEED_DECLARATION[camp] if is_seed else "",
                )
            )
            gold[user_id] = camp
            if is_seed:
                seed_users.add(user_id)

    token_rng = rng.split(1)
    for camp in camps:
        originals = []
        for j in range(params.tweets_per_camp):
            author = camp_users[camp][rng.randint(params.users_per_camp)]
            words = [_token(token_rng, 5) for _ in range(5)]
            words.append(f"{'x' * (1 + j % 3)}{_token(token_rng, 4)}")
            originals.append(
                TweetRecord(
                    tweet_id=f"{camp.value}_t{j:05d}",
                    author_id=author,
                    text=" ".join(words),
                    lang="tr",
                )
            )
        camp_tweets[camp] = originals
        tweets.extend(originals)

    # Cross-camp retweets all hit the opposite camp's most viral item
    # (tweet 0). Spreading them uniformly would eventually taint every
    # popular key as dual-endorsed and starve the exclusivity rule. Seeds
    # always retweet their own camp's viral item so that both viral keys
    # carry labeled endorsers from both sides by the first iteration.
    for camp in camps:
        other = camp.opposite
        for i, user_id in enumerate(camp_users[camp]):
            if i < params.seeds_per_camp:
                rest = rng.sample_indices(params.tweets_per_camp - 1,
                                          params.retweets_per_user - 1)
                chosen = [(0, False)] + [(t + 1, True) for t in rest]
            else:
                chosen = [(t, True) for t in rng.sample_indices(
                    params.tweets_per_camp, params.retweets_per_user)]
            for k, (tweet_idx, may_cross) in enumerate(chosen):
                if may_cross and rng.uniform() < params.cross_camp_retweet_prob:
                    origin = camp_tweets[other][0]
                else:
                    origin = camp_tweets[camp][tweet_idx]
                tweets.append(
                    TweetRecord(
                        tweet_id=f"{user_id}_r{k:02d}",
                        author_id=user_id,
                        text=origin.text,
                        lang="tr",
                        origin_id=origin.tweet_id,
                    )
                )
    return SynthNetwork(users=users, tweets=tweets, gold=gold, seed_users=seed_users)


# ---------------------------------------------------------------------------
# token corpora with planted entity-sentiment co-occurrence

@dataclass(frozen=True)
class CorpusParams:
    vocab_size: int = 2000
    sentences: int = 10000
    entity_token: str = "zmrgdln"
    positive_ratio_camp_a: float = 0.9
    window_cooccurrence: int = 3
    rng_seed: int = 42

    def __post_init__(self) -> None:
        if self.vocab_size < 10 or self.sentences < 1:
            raise InvalidParams("vocab_size/sentences too small")
        if not self.entity_token:
            raise InvalidParams("entity_token must be non-empty")
        if not 0.0 <= self.positive_ratio_camp_a <= 1.0:
            raise InvalidParams("positive_ratio_camp_a must be in [0, 1]")
        if not 1 <= self.window_cooccurrence < SENTENCE_LENGTH:
            raise InvalidParams("window_cooccurrence out of range")


@dataclass
class SynthCorpus:
    sentences_a: list[list[str]]
    sentences_b: list[list[str]]
    lexicon: list[tuple[str, str]]  # (token, "positive"|"negative")
    entity_token: str


def gen_polarized_corpus(params: CorpusParams) -> SynthCorpus:
    """Camp A pairs the entity with positive tokens at the configured ratio;
    camp B uses the complementary ratio."""
    rng = SplitMix64(params.rng_seed)
    reserved = {params.entity_token}
    vocab = _unique_tokens(rng.split(2), params.vocab_size, reserved)
    reserved.update(vocab)
    pos_words = _unique_tokens(rng.split(3), LEXICON_WORDS_PER_POLARITY, reserved)
    reserved.update(pos_words)
    neg_words = _unique_tokens(rng.split(4), LEXICON_WORDS_PER_POLARITY, reserved)
    lexicon = [(w, "positive") for w in pos_words] + [
        (w, "negative") for w in neg_words
    ]

    def build_camp(positive_prob: float, stream: SplitMix64) -> list[list[str]]:
        sentences = []
        for _ in range(params.sentences):
            sent = [vocab[stream.randint(params.vocab_size)]
                    for _ in range(SENTENCE_LENGTH)]
            if stream.uniform() < ENTITY_SENTENCE_RATE:
                entity_at = stream.randint(SENTENCE_LENGTH)
                sent[entity_at] = params.entity_token
                pool = pos_words if stream.uniform() < positive_prob else neg_words
                offset = 1 + stream.randint(params.window_cooccurrence)
                if stream.uniform() < 0.5:
                    offset = -offset
                at = min(max(entity_at + offset, 0), SENTENCE_LENGTH - 1)
                if at == entity_at:
                    at = entity_at - 1 if entity_at > 0 else entity_at + 1
                sent[at] = pool[stream.randint(len(pool))]
            sentences.append(sent)
        return sentences

    return SynthCorpus(
        sentences_a=build_camp(params.positive_ratio_camp_a, rng.split(5)),
        sentences_b=build_camp(1.0 - params.positive_ratio_camp_a, rng.split(6)),
        lexicon=lexicon,
        entity_token=params.entity_token,
    )


# ---------------------------------------------------------------------------
# archive-shaped emission

def archive_line(tweet: TweetRecord, user: UserRecord) -> str:
    obj = {
        "id": tweet.tweet_id,
        "user": {
            "id": user.user_id,
            "screen_name": user.screen_name,
            "name": user.display_name,
            "description": user.description,
        },
        "text": tweet.text,
        "lang": tweet.lang,
    }
    if tweet.origin_id is not None:
        obj["retweeted_status"] = {"id": tweet.origin_id}
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def write_gold_tsv(gold: dict[str, Stance], path: Path) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for user_id in sorted(gold):
            fh.write(f"{user_id}\t{gold[user_id].value}\n")


def emit_network_archive(net: SynthNetwork, tweets_path: Path, gold_path: Path) -> None:
    by_id = {u.user_id: u for u in net.users}
    with tweets_path.open("w", encoding="utf-8") as fh:
        for tweet in net.tweets:
            fh.write(archive_line(tweet, by_id[tweet.author_id]) + "\n")
    write_gold_tsv(net.gold, gold_path)


AUTHORS_PER_CAMP = 50


def emit_corpus_archive(
    corpus: SynthCorpus, tweets_path: Path, gold_path: Path, lexicon_path: Path
) -> None:
    """One tweet per sentence, authored by self-declaring camp users."""
    gold: dict[str, Stance] = {}
    with tweets_path.open("w", encoding="utf-8") as fh:
        for camp, sentences in (
            (Stance.PRO, corpus.sentences_a),
            (Stance.ANTI, corpus.sentences_b),
        ):
            for i, sent in enumerate(sentences):
                author_idx = i % AUTHORS_PER_CAMP
                user = UserRecord(
                    user_id=f"{camp.value}_a{author_idx:03d}",
                    screen_name=f"{camp.value}author{author_idx:03d}",
                    display_name=f"author {camp.value} {author_idx}",
                    description=_SEED_DECLARATION[camp],
                )
                gold[user.user_id] = camp
                tweet = TweetRecord(
                    tweet_id=f"{camp.value}_c{i:06d}",
                    author_id=user.user_id,
                    text=" ".join(sent),
                    lang="tr",
                )
                fh.write(archive_line(tweet, user) + "\n")
    write_gold_tsv(gold, gold_path)
    from .lexicon import write_lexicon

    write_lexicon(corpus.lexicon, lexicon_path)
