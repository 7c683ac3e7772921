"""Meaningful rename sets: renames sharing an operational chunk in a commit."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .chunks import diff_chunks
from .errors import InvalidIdentifier
from .lexicon import Lemmatizer, normalize
from .mining import RenameRecord, with_chunks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeaningfulRenameSet:
    """All renames of one commit whose chunks include one shared chunk key."""

    commit: str
    key: str
    members: tuple[RenameRecord, ...]

    def __len__(self) -> int:
        return len(self.members)

    def member_identity(self) -> frozenset:
        return frozenset(
            m.index if m.index is not None else id(m) for m in self.members
        )

    def unique_old_names(self) -> int:
        return len({m.old_name for m in self.members})


@dataclass(frozen=True)
class RenameSetCollection:
    sets: tuple[MeaningfulRenameSet, ...]
    mode: str

    def __len__(self) -> int:
        return len(self.sets)

    def member_total(self) -> int:
        return sum(len(s) for s in self.sets)


def attach_chunks(
    records: Iterable[RenameRecord],
    mode: str,
    lemmatizer: Lemmatizer | None = None,
) -> list[RenameRecord]:
    """Compute each record's operational chunks for the given mode.

    Records whose names are not splittable identifiers keep an empty chunk
    list (they then belong to no rename set) and are logged.
    """
    out = []
    for record in records:
        try:
            old_seq = normalize(record.old_name, mode, lemmatizer)
            new_seq = normalize(record.new_name, mode, lemmatizer)
        except InvalidIdentifier as exc:
            logger.warning(
                "skipping rename %s -> %s: %s",
                record.old_name,
                record.new_name,
                exc,
            )
            out.append(with_chunks(record, ()))
            continue
        out.append(with_chunks(record, diff_chunks(old_seq, new_seq, mode)))
    return out


def build_rename_sets(
    records: Iterable[RenameRecord], mode: str
) -> RenameSetCollection:
    """Group records into one set per (commit, chunk key) they share.

    A rename with several distinct chunk keys joins several sets; a rename
    with no chunks joins none.  Sets are ordered by (commit, key) and each
    lists its members in input order without duplicates.
    """
    grouped: dict[tuple[str, str], list[RenameRecord]] = {}
    for record in records:
        for key in record.chunk_keys():
            grouped.setdefault((record.commit, key), []).append(record)
    sets = tuple(
        MeaningfulRenameSet(commit=commit, key=key, members=tuple(members))
        for (commit, key), members in sorted(grouped.items())
    )
    return RenameSetCollection(sets=sets, mode=mode)


def enumerate_pairs(rename_set: MeaningfulRenameSet):
    """All unordered pairs of distinct members: n*(n-1)/2 of them."""
    return list(combinations(rename_set.members, 2))


def collection_difference(
    lemma_coll: RenameSetCollection, raw_coll: RenameSetCollection
) -> list[MeaningfulRenameSet]:
    """Sets of the first collection with no membership-identical set in the
    second.

    Identity is by member records, not by chunk key: folding inflection
    rewrites keys, so a set only counts as new when no set over the same
    records existed before.
    """
    raw_identities = {s.member_identity() for s in raw_coll.sets}
    return [
        s for s in lemma_coll.sets if s.member_identity() not in raw_identities
    ]


def serialize_rename_sets(collection: RenameSetCollection, fp) -> None:
    """Write one JSON object per set: {commit, key, members: [indices]}."""
    for s in collection.sets:
        fp.write(
            json.dumps(
                {
                    "commit": s.commit,
                    "key": s.key,
                    "members": [m.index for m in s.members],
                },
                sort_keys=True,
            )
        )
        fp.write("\n")


def load_rename_sets(
    stream: Iterable[str], records: list[RenameRecord], mode: str
) -> RenameSetCollection:
    sets = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        obj = json.loads(line)
        members = tuple(records[i] for i in obj["members"])
        sets.append(
            MeaningfulRenameSet(commit=obj["commit"], key=obj["key"], members=members)
        )
    return RenameSetCollection(sets=tuple(sets), mode=mode)
