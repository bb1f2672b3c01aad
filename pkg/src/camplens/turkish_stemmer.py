"""Suffix-stripping stemmer for Turkish.

Implements the published Snowball algorithm for Turkish: one pass of nominal
verb suffix stripping, then a chain of noun inflection suffixes, then final
consonant devoicing (b,c,d,ğ -> p,ç,t,k) and restoration of a truncated
final vowel after d/g stems.

Matching runs right-to-left over lowercase Turkish text. Every candidate
suffix family checks for vowel harmony and for buffer consonants (y, n, s)
or buffer vowels (ı, i, u, ü) that attach a suffix to the stem; a failed
context check rejects the whole candidate. Words with fewer than two vowels
are never stemmed.
"""

from __future__ import annotations

VOWELS = frozenset("aeıioöuü")
U_VOWELS = frozenset("ıiuü")

# Vowel classes compatible with a suffix vowel under (loose) vowel harmony.
_HARMONY = {
    "a": frozenset("aıou"),
    "e": frozenset("eiöü"),
    "ı": frozenset("aı"),
    "i": frozenset("ei"),
    "o": frozenset("ou"),
    "ö": frozenset("öü"),
    "u": frozenset("ou"),
    "ü": frozenset("öü"),
}


def _obeys_harmony(s: str) -> bool:
    """Last vowel of s must be preceded somewhere by a compatible vowel."""
    i = len(s) - 1
    while i >= 0 and s[i] not in VOWELS:
        i -= 1
    if i < 0:
        return False
    allowed = _HARMONY[s[i]]
    for j in range(i - 1, -1, -1):
        if s[j] in allowed:
            return True
    return False


def _opt_consonant(rest: str, c: str) -> int | None:
    """Context check for a suffix with an optional buffer consonant.

    rest is the string left of the matched suffix. Returns how many extra
    characters belong to the suffix (1 when the buffer consonant is present,
    0 otherwise), or None when the context is invalid.
    """
    if rest.endswith(c):
        if len(rest) >= 2 and rest[-2] in VOWELS:
            return 1
        return None
    if len(rest) >= 2 and rest[-2] in VOWELS:
        return 0
    return None


def _opt_u_vowel(rest: str) -> int | None:
    """Context check for a suffix with an optional buffer vowel (ı/i/u/ü)."""
    if rest and rest[-1] in U_VOWELS:
        if len(rest) >= 2 and rest[-2] not in VOWELS:
            return 1
        return None
    if len(rest) >= 2 and rest[-2] not in VOWELS:
        return 0
    return None


def _ends_with_any(s: str, suffixes: tuple[str, ...]) -> int | None:
    """Length of the longest matching suffix, or None."""
    for suf in suffixes:
        if s.endswith(suf):
            return len(suf)
    return None


def _by_len(forms) -> tuple[str, ...]:
    return tuple(sorted(forms, key=len, reverse=True))


_LAR = _by_len(["lar", "ler"])
_LARI = _by_len(["ları", "leri"])
_POSS_MUZ = _by_len(["mız", "miz", "muz", "müz"])
_NU = _by_len(["nı", "ni", "nu", "nü"])
_NUN = _by_len(["ın", "in", "un", "ün"])
_YLA = _by_len(["la", "le"])
_NCA = _by_len(["ca", "ce"])
_YUM = _by_len(["ım", "im", "um", "üm"])
_SUN = _by_len(["sın", "sin", "sun", "sün"])
_YUZ = _by_len(["ız", "iz", "uz", "üz"])
_SUNUZ = _by_len(["sınız", "siniz", "sunuz", "sünüz"])
_NUZ = _by_len(["nız", "niz", "nuz", "nüz"])
_DUR = _by_len([c + v + "r" for c in "dt" for v in "ıiuü"])
_CASINA = _by_len(["casına", "cesine"])
_YDU = _by_len([c + v + p for c in "dt" for v in "ıiuü" for p in ("m", "n", "k", "")])
_YSA = _by_len(["sam", "san", "sak", "sem", "sen", "sek", "sa", "se"])
_YMUS = _by_len(["mış", "miş", "muş", "müş"])
_DA = _by_len(["da", "de", "ta", "te"])
_NDA = _by_len(["nda", "nde"])
_DAN = _by_len(["dan", "den", "tan", "ten"])
_NDAN = _by_len(["ndan", "nden"])
_NA = _by_len(["na", "ne"])
_YA = _by_len(["a", "e"])


def _plain_mark(forms: tuple[str, ...], harmony: bool):
    def mark(s: str) -> int | None:
        if harmony and not _obeys_harmony(s):
            return None
        return _ends_with_any(s, forms)

    return mark


def _buffered_mark(forms: tuple[str, ...], harmony: bool, cons: str):
    def mark(s: str) -> int | None:
        if harmony and not _obeys_harmony(s):
            return None
        n = _ends_with_any(s, forms)
        if n is None:
            return None
        extra = _opt_consonant(s[:-n], cons)
        if extra is None:
            return None
        return n + extra

    return mark


_mark_lar = _plain_mark(_LAR, harmony=True)
_mark_lari = _plain_mark(_LARI, harmony=False)
_mark_nu = _plain_mark(_NU, harmony=True)
_mark_sun = _plain_mark(_SUN, harmony=True)
_mark_sunuz = _plain_mark(_SUNUZ, harmony=False)
_mark_nuz = _plain_mark(_NUZ, harmony=True)
_mark_dur = _plain_mark(_DUR, harmony=True)
_mark_casina = _plain_mark(_CASINA, harmony=False)
_mark_da = _plain_mark(_DA, harmony=True)
_mark_nda = _plain_mark(_NDA, harmony=True)
_mark_dan = _plain_mark(_DAN, harmony=True)
_mark_ndan = _plain_mark(_NDAN, harmony=True)
_mark_na = _plain_mark(_NA, harmony=True)

_mark_nun = _buffered_mark(_NUN, harmony=True, cons="n")
_mark_yla = _buffered_mark(_YLA, harmony=True, cons="y")
_mark_nca = _buffered_mark(_NCA, harmony=True, cons="n")
_mark_yum = _buffered_mark(_YUM, harmony=True, cons="y")
_mark_yuz = _buffered_mark(_YUZ, harmony=True, cons="y")
_mark_ydu = _buffered_mark(_YDU, harmony=True, cons="y")
_mark_ysa = _buffered_mark(_YSA, harmony=False, cons="y")
_mark_ymus = _buffered_mark(_YMUS, harmony=True, cons="y")
_mark_yken = _buffered_mark(("ken",), harmony=False, cons="y")
_mark_ya = _buffered_mark(_YA, harmony=True, cons="y")


def _mark_possessives(s: str) -> int | None:
    n = _ends_with_any(s, _POSS_MUZ)
    if n is None:
        return None
    extra = _opt_u_vowel(s[:-n])
    if extra is None:
        return None
    return n + extra


def _mark_su(s: str) -> int | None:
    if not _obeys_harmony(s):
        return None
    if not s or s[-1] not in U_VOWELS:
        return None
    extra = _opt_consonant(s[:-1], "s")
    if extra is None:
        return None
    return 1 + extra


def _mark_yu(s: str) -> int | None:
    if not _obeys_harmony(s):
        return None
    if not s or s[-1] not in U_VOWELS:
        return None
    extra = _opt_consonant(s[:-1], "y")
    if extra is None:
        return None
    return 1 + extra


def _mark_ki(s: str) -> int | None:
    return 2 if s.endswith("ki") else None


def _first(s: str, *marks) -> int | None:
    for mark in marks:
        n = mark(s)
        if n is not None:
            return n
    return None


def _strip_nominal_verb_suffixes(s: str) -> tuple[str, bool]:
    """One pass over "to be" style suffixes. Returns (stem, continue_nouns)."""
    # -(y)mUş / -(y)DU / -(y)sA / -(y)ken
    n = _first(s, _mark_ymus, _mark_ydu, _mark_ysa, _mark_yken)
    if n is not None:
        return s[:-n], True
    # -cAsInA with optional person suffix and a required -(y)mUş before it
    n = _mark_casina(s)
    if n is not None:
        r = s[:-n]
        p = _first(r, _mark_sunuz, _mark_lar, _mark_yum, _mark_sun, _mark_yuz)
        r2 = r[:-p] if p is not None else r
        m = _mark_ymus(r2)
        if m is not None:
            return r2[:-m], True
    # plural read as a verb suffix: stop noun stemming afterwards
    n = _mark_lar(s)
    if n is not None:
        s = s[:-n]
        m = _first(s, _mark_dur, _mark_ydu, _mark_ysa, _mark_ymus)
        if m is not None:
            s = s[:-m]
        return s, False
    # -nUz with a required past/conditional before it
    n = _mark_nuz(s)
    if n is not None:
        r = s[:-n]
        m = _first(r, _mark_ydu, _mark_ysa)
        if m is not None:
            return r[:-m], True
    # person suffixes, optionally preceded by -(y)mUş
    n = _first(s, _mark_sunuz, _mark_yuz, _mark_sun, _mark_yum)
    if n is not None:
        s = s[:-n]
        m = _mark_ymus(s)
        if m is not None:
            s = s[:-m]
        return s, True
    # -DUr, optionally preceded by person and a required -(y)mUş
    n = _mark_dur(s)
    if n is not None:
        s = s[:-n]
        p = _first(s, _mark_sunuz, _mark_lar, _mark_yum, _mark_sun, _mark_yuz)
        r2 = s[:-p] if p is not None else s
        m = _mark_ymus(r2)
        if m is not None:
            return r2[:-m], True
        return s, True
    return s, True


def _chain_ki(s: str) -> tuple[str, bool]:
    """Strip a -ki relative suffix plus the case suffix it rides on.

    Returns (string, matched). On a failed inner continuation the already
    deleted portion stays deleted, mirroring the reference control flow.
    """
    n = _mark_ki(s)
    if n is None:
        return s, False
    r = s[:-n]
    m = _mark_da(r)
    if m is not None:
        r = r[:-m]
        p = _mark_lar(r)
        if p is not None:
            return _chain_ki(r[:-p])[0], True
        p = _mark_possessives(r)
        if p is not None:
            return _try_lar_chain(r[:-p]), True
        return r, True
    m = _mark_nun(r)
    if m is not None:
        r = r[:-m]
        p = _mark_lari(r)
        if p is not None:
            return r[:-p], True
        p = _first(r, _mark_possessives, _mark_su)
        if p is not None:
            return _try_lar_chain(r[:-p]), True
        return _chain_ki(r)[0], True
    m = _mark_nda(r)
    if m is not None:
        rr = r[:-m]
        p = _mark_lari(rr)
        if p is not None:
            return rr[:-p], True
        p = _mark_su(rr)
        if p is not None:
            return _try_lar_chain(rr[:-p]), True
        # bare recursion left of the matched region; -ndA-ki stays in place
        rr2, ok = _chain_ki(rr)
        if ok:
            return rr2 + s[len(rr):], True
        return s, False
    return s, False


def _try_lar_chain(s: str) -> str:
    """Optionally strip plural then a -ki chain (failures keep progress)."""
    m = _mark_lar(s)
    if m is None:
        return s
    return _chain_ki(s[:-m])[0]


def _strip_noun_suffixes(s: str) -> str:
    """One pass over noun inflection suffix patterns, first match wins.

    A few branches delete a suffix before a required continuation; when the
    continuation fails the deletion is kept and matching moves on, exactly
    like the reference control flow.
    """
    # plural
    n = _mark_lar(s)
    if n is not None:
        return _chain_ki(s[:-n])[0]
    # -(n)cA
    n = _mark_nca(s)
    if n is not None:
        s = s[:-n]
        m = _mark_lari(s)
        if m is not None:
            return s[:-m]
        m = _first(s, _mark_possessives, _mark_su)
        if m is not None:
            return _try_lar_chain(s[:-m])
        m = _mark_lar(s)
        if m is not None:
            s = _chain_ki(s[:-m])[0]
        return s
    # locative/dative with buffer n
    n = _first(s, _mark_nda, _mark_na)
    if n is not None:
        r = s[:-n]
        m = _mark_lari(r)
        if m is not None:
            return r[:-m]
        m = _mark_su(r)
        if m is not None:
            return _try_lar_chain(r[:-m])
        r2, ok = _chain_ki(r)
        if ok:
            return r2 + s[len(r):]
        # nothing deleted: keep trying later suffix patterns
    # ablative/accusative with buffer n: only with a possessive before it
    n = _first(s, _mark_ndan, _mark_nu)
    if n is not None:
        r = s[:-n]
        m = _mark_lari(r)
        if m is not None:
            return r[:-m]
        m = _mark_su(r)
        if m is not None:
            return _try_lar_chain(r[:-m])
    # ablative
    n = _mark_dan(s)
    if n is not None:
        s = s[:-n]
        m = _mark_possessives(s)
        if m is not None:
            return _try_lar_chain(s[:-m])
        m = _mark_lar(s)
        if m is not None:
            return _chain_ki(s[:-m])[0]
        return _chain_ki(s)[0]
    # genitive / instrumental
    n = _first(s, _mark_nun, _mark_yla)
    if n is not None:
        s = s[:-n]
        m = _mark_lar(s)
        if m is not None:
            r = s[:-m]
            r2, ok = _chain_ki(r)
            if ok:
                return r2
            s = r2
        m = _first(s, _mark_possessives, _mark_su)
        if m is not None:
            return _try_lar_chain(s[:-m])
        return _chain_ki(s)[0]
    # -lArI
    n = _mark_lari(s)
    if n is not None:
        return s[:-n]
    # bare -ki chain
    s2, ok = _chain_ki(s)
    if ok:
        return s2
    # plain case / accusative / dative
    n = _first(s, _mark_da, _mark_yu, _mark_ya)
    if n is not None:
        s = s[:-n]
        m = _mark_possessives(s)
        if m is not None:
            s = s[:-m]
            m2 = _mark_lar(s)
            if m2 is not None:
                s = s[:-m2]
            return _chain_ki(s)[0]
        m = _mark_lar(s)
        if m is not None:
            return _chain_ki(s[:-m])[0]
        return s
    # possessive alone
    n = _first(s, _mark_possessives, _mark_su)
    if n is not None:
        return _try_lar_chain(s[:-n])
    return s


def _postlude(s: str) -> str:
    if s in ("ad", "soyad"):
        return s
    if s and s[-1] in "dg":
        for ch in reversed(s):
            if ch in VOWELS:
                if ch in "aı":
                    s = s + "ı"
                elif ch in "ei":
                    s = s + "i"
                elif ch in "ou":
                    s = s + "u"
                else:
                    s = s + "ü"
                break
    if s:
        repl = {"b": "p", "c": "ç", "d": "t", "ğ": "k"}.get(s[-1])
        if repl is not None:
            s = s[:-1] + repl
    return s


def stem_word(word: str) -> str:
    """Stem a lowercase Turkish word; unknown words pass through."""
    if sum(1 for c in word if c in VOWELS) < 2:
        return word
    s, continue_nouns = _strip_nominal_verb_suffixes(word)
    if not continue_nouns:
        return s
    s = _strip_noun_suffixes(s)
    return _postlude(s)
