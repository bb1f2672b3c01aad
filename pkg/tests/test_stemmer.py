from __future__ import annotations

import random

import pytest

from camplens.turkish_stemmer import stem_word
from oracles.snowball_reference import reference_stem

ANCHORS = [
    ("okullarımızdan", "okul"),
    ("okullar", "okul"),
    ("okul", "okul"),
    ("kitaplar", "kitap"),
    ("kitabı", "kitap"),
    ("kitapta", "kitap"),
    ("arabanın", "araba"),
    ("arabasıyla", "araba"),
    ("evde", "ev"),
    ("evdeki", "ev"),
    ("evlerinin", "ev"),
    ("çocuğu", "çocuk"),
    ("güzeldir", "güzel"),
    ("geldiniz", "gel"),
    ("gözlerimizde", "göz"),
    ("telefonlarından", "telefon"),
    ("kedim", "kedi"),
    ("kapıdaki", "kapı"),
]


@pytest.mark.parametrize("word,expected", ANCHORS)
def test_known_stems(word, expected):
    assert stem_word(word) == expected


def test_single_syllable_words_untouched():
    for word in ("ev", "at", "su", "bir", "alt", "xyz", ""):
        assert stem_word(word) == word


def test_reserved_words_keep_final_consonant():
    assert stem_word("ad") == "ad"
    assert stem_word("soyad") == "soyad"
    # non-reserved d-final stems get devoiced instead
    assert stem_word("kitabı").endswith("p")


def test_final_consonant_devoicing():
    assert stem_word("kitabı") == "kitap"
    assert stem_word("çocuğu") == "çocuk"


def test_truncated_vowel_restored_after_d_or_g():
    # possessive stripping leaves "ked"; the buffer vowel is appended back
    assert stem_word("kedim") == "kedi"


def test_unknown_words_pass_through():
    for word in ("number", "internet", "qwxz", "twitter"):
        assert stem_word(word) == reference_stem(word)


def test_golden_file_exact_agreement(data_dir):
    rows = [line.rstrip("\n").split("\t")
            for line in (data_dir / "turkish_stem_golden.tsv").open(encoding="utf-8")]
    assert len(rows) == 1000
    agree = sum(1 for word, expected in rows if stem_word(word) == expected)
    assert agree / len(rows) >= 0.99


def test_matches_reference_on_random_strings():
    rng = random.Random(17)
    alphabet = "abcçdefgğhıijklmnoöprsştuüvyz"
    for _ in range(3000):
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        assert stem_word(word) == reference_stem(word), word
