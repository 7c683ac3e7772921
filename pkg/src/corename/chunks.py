"""Operational chunks: typed word-level edits between two identifiers.

The differ aligns the two word sequences on their lemmas, keeping as many
words as possible unchanged; every maximal run of changed words becomes one
chunk (Insert, Delete, or Replace).  When the lemma sequences are already
equal the identifiers can still differ by inflection or casing, which is
reported per word position as Inflect or Other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateResult
from .lexicon import (
    CASING_CAPITALIZED,
    CASING_LOWER,
    WordSequence,
    normalize,
    pluralize,
    re_case,
)


class ChunkKind(str, enum.Enum):
    INSERT = "Insert"
    DELETE = "Delete"
    REPLACE = "Replace"
    OTHER = "Other"
    INFLECT = "Inflect"


_KEY_TAG = {
    ChunkKind.INSERT: "I",
    ChunkKind.DELETE: "D",
    ChunkKind.REPLACE: "R",
    ChunkKind.OTHER: "O",
    ChunkKind.INFLECT: "F",
}


@dataclass(frozen=True, slots=True)
class OperationalChunk:
    """One contiguous word-level edit.

    ``anchor`` is the index of the chunk's left boundary in the old word
    sequence.  ``left_context``/``right_context`` hold the lemmas adjacent
    to the edit in the old sequence (used to anchor Insert applications);
    they do not participate in chunk identity.
    """

    kind: ChunkKind
    deleted: tuple[str, ...]
    added: tuple[str, ...]
    anchor: int
    left_context: str | None = None
    right_context: str | None = None

    @property
    def changed_words(self) -> int:
        return len(self.deleted) + len(self.added)


def chunk_key(chunk: OperationalChunk) -> str:
    """Canonical identity string: kind tag, deleted lemmas, added lemmas.

    >>> chunk_key(OperationalChunk(ChunkKind.INSERT, (), ("instance",), 2))
    'I||instance'
    """
    return "|".join(
        (_KEY_TAG[chunk.kind], "+".join(chunk.deleted), "+".join(chunk.added))
    )


def _lcs_len(a, b) -> int:
    n = len(b)
    if not a or not n:
        return 0
    if len(a) == 1:
        return 1 if a[0] in b else 0
    if n == 1:
        return 1 if b[0] in a else 0
    prev = [0] * (n + 1)
    for ai in a:
        cur = [0]
        append = cur.append
        best = 0
        for j in range(n):
            if ai == b[j]:
                value = prev[j] + 1
                if value > best:
                    best = value
            else:
                value = prev[j + 1]
                if best > value:
                    value = best
                else:
                    best = value
            append(value)
        prev = cur
    return prev[n]


def _gap_chunk(deleted, added, anchor, old) -> OperationalChunk:
    if deleted and added:
        kind = ChunkKind.REPLACE
    elif deleted:
        kind = ChunkKind.DELETE
    else:
        kind = ChunkKind.INSERT
    left = old[anchor - 1] if anchor > 0 else None
    right_at = anchor + len(deleted)
    right = old[right_at] if right_at < len(old) else None
    return OperationalChunk(kind, tuple(deleted), tuple(added), anchor, left, right)


def _split(a, b, offset, old, out, i, j, length, left_total, right_total):
    """Match the run at (i, j) and resolve what surrounds it."""
    if left_total == 0:
        if i or j:
            out.append(_gap_chunk(a[:i], b[:j], offset, old))
    else:
        _diff_rec(a[:i], b[:j], offset, old, out, left_total)
    end_a, end_b = i + length, j + length
    if right_total == 0:
        if end_a < len(a) or end_b < len(b):
            out.append(_gap_chunk(a[end_a:], b[end_b:], offset + end_a, old))
    else:
        _diff_rec(a[end_a:], b[end_b:], offset + end_a, old, out, right_total)


def _diff_rec(a, b, offset, old, out, total=None) -> None:
    if a == b:
        return
    if not a or not b:
        out.append(_gap_chunk(a, b, offset, old))
        return
    m, n = len(a), len(b)
    # run[i][j]: length of the common contiguous run starting at (i, j);
    # the scan right-to-left, bottom-to-top resolves length ties to the
    # smallest (i, j).
    run = [None] * m
    best_len = 0
    best_i = best_j = 0
    below = [0] * (n + 1)
    for i in range(m - 1, -1, -1):
        ai = a[i]
        row = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            if ai == b[j]:
                length = below[j + 1] + 1
                row[j] = length
                if length >= best_len:
                    best_len = length
                    best_i, best_j = i, j
        run[i] = below = row
    if best_len == 0:
        out.append(_gap_chunk(a, b, offset, old))
        return
    if total is None:
        if best_len == m or best_len == n:
            total = best_len  # a full-side run is always a maximum alignment
        else:
            total = _lcs_len(a, b)
    if best_len == total:
        # The leftmost longest run accounts for every unchanged word, so
        # whatever surrounds it is a plain gap on each side.
        _split(a, b, offset, old, out, best_i, best_j, best_len, 0, 0)
        return
    # The longest run overcommits.  Try runs longest-first (leftmost on
    # ties) and split at the first whose matching keeps the overall number
    # of unchanged words maximal.
    candidates = []
    for i in range(m):
        row = run[i]
        for j in range(n):
            if row[j]:
                candidates.append((-row[j], i, j))
    candidates.sort()
    for neg_len, i, j in candidates:
        length = -neg_len
        need = total - length
        cap_left = i if i < j else j
        rem_a, rem_b = m - i - length, n - j - length
        cap_right = rem_a if rem_a < rem_b else rem_b
        if cap_left + cap_right < need:
            continue
        left = _lcs_len(a[:i], b[:j])
        if left + cap_right < need:
            continue
        right = _lcs_len(a[i + length :], b[j + length :])
        if left + right == need:
            _split(a, b, offset, old, out, i, j, length, left, right)
            return
    # Defensive completeness: an optimal alignment's own runs are prefixes
    # of text runs, so trying truncated runs as well always finds a split.
    for length in range(best_len - 1, 0, -1):
        for i in range(m):
            row = run[i]
            for j in range(n):
                if row[j] > length:
                    left = _lcs_len(a[:i], b[:j])
                    right = _lcs_len(a[i + length :], b[j + length :])
                    if left + length + right == total:
                        _split(a, b, offset, old, out, i, j, length, left, right)
                        return
    raise AssertionError("no optimal common run found")  # pragma: no cover


def diff_lemmas(old: tuple[str, ...], new: tuple[str, ...]) -> list[OperationalChunk]:
    """Insert/Delete/Replace chunks between two lemma sequences.

    The alignment minimizes the total number of changed words; ties are
    broken by matching the leftmost longest common run first.
    """
    out: list[OperationalChunk] = []
    _diff_rec(tuple(old), tuple(new), 0, tuple(old), out)
    return out


def diff_chunks(
    old: WordSequence, new: WordSequence, mode: str = "lemma"
) -> list[OperationalChunk]:
    """All operational chunks of the rename ``old -> new``.

    Both sequences must have been normalized with the same ``mode``.  When
    the lemma-level diff is empty, remaining per-word differences are
    classified positionally: in lemma mode a case-insensitive difference is
    Inflect and a case-only difference is Other; in raw mode any folded
    difference is Other.
    """
    chunks = diff_lemmas(old.lemmas, new.lemmas)
    if chunks:
        return chunks
    if mode == "raw":
        if old.folded == new.folded:
            return []
        return [
            OperationalChunk(ChunkKind.OTHER, (w.lemma,), (), i)
            for i, (w, v) in enumerate(zip(old.words, new.words))
            if w.folded != v.folded
        ]
    if old.surfaces == new.surfaces:
        return []
    out = []
    for i, (w, v) in enumerate(zip(old.words, new.words)):
        if w.folded != v.folded:
            out.append(OperationalChunk(ChunkKind.INFLECT, (w.lemma,), (), i))
        elif w.surface != v.surface:
            out.append(OperationalChunk(ChunkKind.OTHER, (w.lemma,), (), i))
    return out


def replay_chunks(old_lemmas, chunks) -> tuple[str, ...]:
    """Apply chunks at their anchors to an old lemma sequence.

    Other and Inflect leave lemmas untouched by definition.
    """
    out = list(old_lemmas)
    shift = 0
    for ch in sorted(chunks, key=lambda c: c.anchor):
        at = ch.anchor + shift
        if ch.kind is ChunkKind.INSERT:
            out[at:at] = ch.added
            shift += len(ch.added)
        elif ch.kind is ChunkKind.DELETE:
            del out[at : at + len(ch.deleted)]
            shift -= len(ch.deleted)
        elif ch.kind is ChunkKind.REPLACE:
            out[at : at + len(ch.deleted)] = ch.added
            shift += len(ch.added) - len(ch.deleted)
    return tuple(out)


def _render(target: WordSequence, surfaces: list[str]) -> str:
    """Rebuild an identifier string from new word surfaces.

    Underscore-separated targets are joined with underscores; otherwise the
    camel convention is enforced: the first word keeps the target's leading
    casing and later all-lowercase words are capitalized.  Mixed separator
    styles are normalized to the dominant one.
    """
    if "_" in target.origin:
        return "_".join(surfaces)
    first = target.words[0]
    out = []
    for pos, s in enumerate(surfaces):
        if pos == 0:
            if s != first.surface and first.casing in (
                CASING_LOWER,
                CASING_CAPITALIZED,
            ):
                s = re_case(s.lower(), first.casing)
        elif s.isalpha() and s.islower():
            s = re_case(s, CASING_CAPITALIZED)
        out.append(s)
    return "".join(out)


def _added_surfaces(chunk: OperationalChunk, occurrence: list) -> list[str]:
    """Surfaces for the chunk's added lemmas at one Replace occurrence.

    Each added word copies the casing of its positional counterpart in the
    replaced run; if the last replaced surface was plural and its lemma was
    not, the final added word is pluralized to match.
    """
    added = list(chunk.added)
    last = occurrence[-1]
    if last.folded.endswith("s") and not last.lemma.endswith("s"):
        added[-1] = pluralize(added[-1])
    out = []
    for idx, lemma in enumerate(added):
        counterpart = occurrence[min(idx, len(occurrence) - 1)]
        out.append(re_case(lemma, counterpart.casing))
    return out


def apply_chunk(
    chunk: OperationalChunk, target: WordSequence, mode: str = "lemma"
) -> list[WordSequence]:
    """Apply a chunk everywhere it fits in ``target``.

    Replace/Delete rewrite every contiguous occurrence of the deleted
    lemmas; Insert requires the word adjacent to the original insertion
    point to occur in the target and inserts next to it.  Other and Inflect
    describe form-only changes and produce nothing.  One renamed
    WordSequence is returned per occurrence; raises DegenerateResult if an
    application would delete every word.
    """
    if chunk.kind in (ChunkKind.OTHER, ChunkKind.INFLECT):
        return []
    lemmas = target.lemmas
    results: list[WordSequence] = []
    if chunk.kind is ChunkKind.INSERT:
        context = chunk.left_context if chunk.anchor > 0 else chunk.right_context
        if context is None:
            return []
        after = chunk.anchor > 0
        for i, lemma in enumerate(lemmas):
            if lemma != context:
                continue
            at = i + 1 if after else i
            added = [re_case(lem, target.words[i].casing) for lem in chunk.added]
            surfaces = (
                [w.surface for w in target.words[:at]]
                + added
                + [w.surface for w in target.words[at:]]
            )
            name = _render(target, surfaces)
            if name != target.origin:
                results.append(normalize(name, mode))
        return results
    k = len(chunk.deleted)
    for i in range(len(lemmas) - k + 1):
        if lemmas[i : i + k] != chunk.deleted:
            continue
        occurrence = list(target.words[i : i + k])
        added = (
            _added_surfaces(chunk, occurrence)
            if chunk.kind is ChunkKind.REPLACE
            else []
        )
        surfaces = (
            [w.surface for w in target.words[:i]]
            + added
            + [w.surface for w in target.words[i + k :]]
        )
        if not surfaces:
            raise DegenerateResult(
                f"removing {'+'.join(chunk.deleted)} empties {target.origin!r}"
            )
        name = _render(target, surfaces)
        if name != target.origin:
            results.append(normalize(name, mode))
    return results
