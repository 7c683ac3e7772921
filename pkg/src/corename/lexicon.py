"""Identifier splitting and inflection-folding.

Identifiers are split into words on underscores, lower-to-upper case
transitions, letter/digit boundaries, and acronym-run ends.  Each word is
case-folded and, in ``lemma`` mode, reduced to a base form so that
``nodes``/``node`` or ``queries``/``query`` compare equal.  The lemmatizer
stays within a part of speech: ``creator`` never becomes ``create``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources

from .errors import InvalidIdentifier

CASING_LOWER = "lower"
CASING_CAPITALIZED = "Capitalized"
CASING_ALLCAPS = "ALLCAPS"
CASING_MIXED = "mixed"

_IDENTIFIER_RE = re.compile(r"[A-Za-z0-9_]+\Z")

MODES = ("raw", "lemma")


def casing_of(surface: str) -> str:
    """Classify the casing pattern of one word from its characters alone."""
    letters = [c for c in surface if c.isalpha()]
    if not letters or all(c.islower() for c in letters):
        return CASING_LOWER
    if surface[0].isupper() and all(c.islower() for c in letters[1:]):
        return CASING_CAPITALIZED
    if all(c.isupper() for c in letters):
        return CASING_ALLCAPS
    return CASING_MIXED


def re_case(word: str, casing: str) -> str:
    """Render a lowercase word in the given casing pattern.

    ``mixed`` has no reproducible pattern, so the word is returned as-is.
    """
    if casing == CASING_CAPITALIZED:
        return word[:1].upper() + word[1:]
    if casing == CASING_ALLCAPS:
        return word.upper()
    return word


@dataclass(frozen=True)
class Word:
    """One word of an identifier.

    ``folded`` is always ``surface.lower()``; ``lemma`` equals ``folded``
    until a lemmatizing normalization replaces it.
    """

    surface: str
    folded: str
    lemma: str
    casing: str


@dataclass(frozen=True)
class WordSequence:
    """The words of one identifier, in order, plus the raw identifier."""

    origin: str
    words: tuple[Word, ...]

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(w.surface for w in self.words)

    @property
    def folded(self) -> tuple[str, ...]:
        return tuple(w.folded for w in self.words)

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(w.lemma for w in self.words)

    def __len__(self) -> int:
        return len(self.words)


def _word_boundaries(run: str) -> list[str]:
    """Split one separator-free run at case and digit boundaries."""
    parts: list[str] = []
    start = 0
    for i in range(1, len(run)):
        prev, cur = run[i - 1], run[i]
        boundary = False
        if prev.islower() and cur.isupper():
            boundary = True
        elif prev.isdigit() != cur.isdigit():
            boundary = True
        elif (
            prev.isupper()
            and cur.isupper()
            and i + 1 < len(run)
            and run[i + 1].islower()
        ):
            # Acronym run followed by a capitalized word: HTTPServer -> HTTP, Server
            boundary = True
        if boundary:
            parts.append(run[start:i])
            start = i
    parts.append(run[start:])
    return parts


def split_identifier(name: str) -> WordSequence:
    """Split a raw identifier into its word sequence.

    >>> split_identifier("dataProviderId").surfaces
    ('data', 'Provider', 'Id')
    >>> split_identifier("getDisabledMetricTypes").folded
    ('get', 'disabled', 'metric', 'types')
    >>> split_identifier("TIMES").folded
    ('times',)

    Raises InvalidIdentifier for empty, all-underscore, or non
    letter/digit/underscore input.
    """
    if not name or not _IDENTIFIER_RE.match(name):
        raise InvalidIdentifier(f"not a valid identifier: {name!r}")
    words: list[Word] = []
    for run in name.split("_"):
        if not run:
            continue
        for part in _word_boundaries(run):
            folded = part.lower()
            words.append(Word(part, folded, folded, casing_of(part)))
    if not words:
        raise InvalidIdentifier(f"identifier has no words: {name!r}")
    return WordSequence(origin=name, words=tuple(words))


def join_words(seq: WordSequence) -> str:
    """Boundary-preserving join of a word sequence (underscore style)."""
    return "_".join(w.folded for w in seq.words)


# Stems left by -ed/-ing stripping that need their silent 'e' back.
_RESTORE_E = frozenset(
    """
    cach captur chang cod com combin compar compil compos configur creat
    declar decod decreas deriv describ deserializ disabl divid emul enabl
    encod enforc ensur escap evaluat execut exclud expos generat giv handl
    improv increas iterat includ invok mak manag measur merg migrat mov nam
    not observ pars phras pip plac prepar produc promot prov provid quot
    reduc refin renam replac requir resolv restor retriev revers revok
    rewrit rotat sampl sav scal schedul scop serializ serv shap shar slic
    squar stag stor styl templat terminat trac translat truncat tun typ
    updat upgrad us utiliz validat valu wir writ
    """.split()
)

_UNDOUBLE = frozenset("bdgkmnprtv")


def _undouble(word: str) -> str:
    """Drop a doubled final consonant left by -ed/-ing stripping.

    Letters that legitimately end words doubled (ss, ll, ff, zz, ee, oo)
    are kept; the result is never shortened below three characters.
    """
    if len(word) >= 4 and word[-1] == word[-2] and word[-1] in _UNDOUBLE:
        return word[:-1]
    return word


def _restore_e(word: str) -> str:
    if word in _RESTORE_E:
        return word + "e"
    # -se verbs (close, parse, use, ...) lose their 'e' with the suffix.
    if word.endswith("s") and not word.endswith("ss"):
        return word + "e"
    return word


class Lemmatizer:
    """Exception-table-first, suffix-rule lemmatizer for identifier words.

    The rules only undo within-part-of-speech inflection (plural
    number, verb tense); derivations like creator -> create are out of
    scope and such words pass through unchanged.
    """

    def __init__(self, exceptions: dict[str, str]):
        self.exceptions = dict(exceptions)

    @classmethod
    def from_file(cls, path) -> "Lemmatizer":
        exceptions: dict[str, str] = {}
        with open(path, encoding="utf-8") as fh:
            cls._parse_table(fh, exceptions)
        return cls(exceptions)

    @classmethod
    def bundled(cls) -> "Lemmatizer":
        exceptions: dict[str, str] = {}
        text = (
            resources.files("corename")
            .joinpath("data/irregular_forms.txt")
            .read_text(encoding="utf-8")
        )
        cls._parse_table(text.splitlines(), exceptions)
        return cls(exceptions)

    @staticmethod
    def _parse_table(lines, exceptions: dict[str, str]) -> None:
        for raw in lines:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            inflected, lemma = line.split()
            exceptions[inflected] = lemma

    def __call__(self, word: str) -> str:
        if not word.isalpha():
            return word
        hit = self.exceptions.get(word)
        if hit is not None:
            return hit
        return self._suffix_rules(word)

    @staticmethod
    def _suffix_rules(w: str) -> str:
        if w.endswith("ies") and len(w) >= 4:
            return w[:-3] + "y"
        if w.endswith("sses") and len(w) >= 5:
            return w[:-2]
        if w.endswith("xes") and len(w) >= 4:
            return w[:-2]
        if (w.endswith("ches") or w.endswith("shes")) and len(w) >= 5:
            return w[:-2]
        if (
            w.endswith("s")
            and len(w) >= 3
            and not w.endswith(("ss", "us", "is"))
        ):
            return w[:-1]
        if w.endswith("ied") and len(w) >= 5:
            return w[:-3] + "y"
        if w.endswith("ed") and len(w) >= 5 and not w.endswith("eed"):
            return _restore_e(_undouble(w[:-2]))
        if w.endswith("ing") and len(w) >= 5:
            return _restore_e(_undouble(w[:-3]))
        return w


_DEFAULT_LEMMATIZER: Lemmatizer | None = None


def default_lemmatizer() -> Lemmatizer:
    global _DEFAULT_LEMMATIZER
    if _DEFAULT_LEMMATIZER is None:
        _DEFAULT_LEMMATIZER = Lemmatizer.bundled()
    return _DEFAULT_LEMMATIZER


def lemmatize_word(folded: str, lemmatizer: Lemmatizer | None = None) -> str:
    """Lemmatize one lowercase word.

    >>> lemmatize_word("queries")
    'query'
    >>> lemmatize_word("creator")
    'creator'
    >>> lemmatize_word("nodes")
    'node'
    """
    return (lemmatizer or default_lemmatizer())(folded)


def pluralize(lemma: str) -> str:
    """Form a regular plural; the inverse of the stripping suffix rules."""
    if not lemma.isalpha():
        return lemma
    if lemma.endswith("y") and len(lemma) >= 2 and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        return lemma + "es"
    return lemma + "s"


def normalize(
    name: str,
    mode: str = "lemma",
    lemmatizer: Lemmatizer | None = None,
) -> WordSequence:
    """Split and case-fold an identifier; lemmatize in ``lemma`` mode."""
    if mode not in MODES:
        raise ValueError(f"unknown mode: {mode!r}")
    seq = split_identifier(name)
    if mode == "raw":
        return seq
    lem = lemmatizer or default_lemmatizer()
    words = tuple(replace(w, lemma=lem(w.folded)) for w in seq.words)
    return WordSequence(origin=seq.origin, words=words)


@lru_cache(maxsize=65536)
def _normalize_cached(name: str, mode: str) -> WordSequence:
    return normalize(name, mode)


def normalize_cached(name: str, mode: str = "lemma") -> WordSequence:
    """Memoized ``normalize`` with the bundled lemmatizer (hot paths)."""
    return _normalize_cached(name, mode)
