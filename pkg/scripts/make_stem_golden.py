#!/usr/bin/env python3
"""Regenerate the 1,000-word Turkish stemming golden file.

The word list is built from common roots and harmony-correct suffix
paradigms; the expected stems come from the reference oracle in
tests/oracles/snowball_reference.py. Run from the repo root:

    PYTHONPATH=src:tests python3 scripts/make_stem_golden.py
"""

from __future__ import annotations

import random
from pathlib import Path

from oracles.snowball_reference import reference_stem

VOWELS = set("aeıioöuü")
BACK = set("aıou")

ROOTS = [
    "okul", "kitap", "araba", "ev", "çocuk", "göz", "telefon", "gün", "yol", "su",
    "anne", "baba", "kardeş", "şehir", "köy", "deniz", "orman", "dağ", "çiçek", "kuş",
    "masa", "kapı", "pencere", "duvar", "bahçe", "sokak", "yemek", "ekmek", "çay", "kahve",
    "lider", "başkan", "seçim", "oy", "parti", "millet", "devlet", "asker", "polis", "adalet",
    "özgürlük", "barış", "savaş", "dost", "düşman", "haber", "gazete", "ülke", "meclis", "karar",
    "öğretmen", "öğrenci", "doktor", "mühendis", "işçi", "memur", "çiftçi", "sanatçı", "şoför", "yazar",
    "elma", "armut", "üzüm", "karpuz", "domates", "biber", "patlıcan", "soğan", "peynir", "limon",
    "kedi", "köpek", "at", "inek", "koyun", "keçi", "tavuk", "kartal", "balık", "arı",
    "kalem", "defter", "silgi", "çanta", "ayakkabı", "gömlek", "pantolon", "ceket", "şapka", "saat",
    "hak", "halk", "vatan", "bayrak", "ordu", "zafer", "tarih", "kültür", "sanat", "müzik",
    "hava", "toprak", "ateş", "rüzgar", "yağmur", "bulut", "güneş", "yıldız", "gece", "sabah",
    "hafta", "sene", "saniye", "dakika", "mevsim", "bahar", "kış", "yaz", "eylül", "haziran",
]

NOMINAL = ["lAr", "(U)m", "(U)mUz", "(s)U", "(n)Un", "(y)U", "(y)A", "dA", "dAn",
           "(y)lA", "ndA", "ndAn", "ki", "lArU"]
VERBAL = ["dUr", "(y)dU", "(y)mUş", "(y)sA", "(y)Um", "sUn", "sUnUz", "(y)Uz", "ken"]

EXTRAS = [
    "okullarımızdan", "ad", "soyad", "soyadı", "number", "bir", "ve", "çok",
    "güzel", "kötü", "iyi", "merhaba", "tamam", "devam", "evet", "hayır",
    "istanbul", "ankara", "izmir", "türkiye", "twitter", "internet",
]


def _last_vowel(w: str) -> str:
    for ch in reversed(w):
        if ch in VOWELS:
            return ch
    return "e"


def attach(stem: str, template: str) -> str:
    lv = _last_vowel(stem)
    a = "a" if lv in BACK else "e"
    if lv in "aı":
        u = "ı"
    elif lv in "ei":
        u = "i"
    elif lv in "ou":
        u = "u"
    else:
        u = "ü"
    ends_vowel = stem[-1] in VOWELS
    out = template
    for buf in ("y", "s", "n"):
        if out.startswith(f"({buf})"):
            out = (buf if ends_vowel else "") + out[3:]
    if out.startswith("(U)"):
        out = ("" if ends_vowel else "U") + out[3:]
    return stem + out.replace("A", a).replace("U", u)


def build_words(n: int = 1000) -> list[str]:
    rng = random.Random(20180624)
    words: list[str] = []
    seen: set[str] = set()

    def add(w: str) -> None:
        if w and w not in seen:
            seen.add(w)
            words.append(w)

    for w in EXTRAS:
        add(w)
    for root in ROOTS:
        add(root)
    for root in ROOTS:
        for suf in NOMINAL + VERBAL:
            add(attach(root, suf))
    for root in ROOTS:
        for s1 in ("lAr", "(s)U", "(U)mUz"):
            mid = attach(root, s1)
            for s2 in ("dA", "dAn", "(n)Un", "ki", "(y)dU"):
                add(attach(mid, s2))
    rng.shuffle(words)
    head = words[:n]
    # keep the anchor forms present regardless of the shuffle cut
    for w in ("okullarımızdan", "okul", "ad", "soyad", "number"):
        if w not in head:
            head[head.index(next(x for x in head if x not in EXTRAS))] = w
    return head[:n]


def main() -> None:
    words = build_words(1000)
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "turkish_stem_golden.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as fh:
        for w in words:
            fh.write(f"{w}\t{reference_stem(w)}\n")
    print(f"wrote {len(words)} rows to {out}")


if __name__ == "__main__":
    main()
