"""Rename-record ingestion, a naive declaration-matching detector, and
repository history walking.

The primary source of rename records is the JSONL output of an external
refactoring detector; the built-in detector is a conservative convenience
with deliberately lower recall (it only matches declarations positionally
within an unchanged container).
"""

from __future__ import annotations

import enum
import json
import subprocess
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator

from .chunks import OperationalChunk
from .errors import ParseError, RepoError, UnknownKind
from .facts.model import CodeFacts, EntityKind


class IdentifierKind(str, enum.Enum):
    CLASS = "Class"
    METHOD = "Method"
    ATTRIBUTE = "Attribute"
    PARAMETER = "Parameter"
    VARIABLE = "Variable"


@dataclass(frozen=True)
class RenameRecord:
    """One identifier rename in one commit."""

    commit: str
    kind: IdentifierKind
    old_name: str
    new_name: str
    file: str = ""
    container: str | None = None
    chunks: tuple[OperationalChunk, ...] = ()
    index: int | None = field(default=None, compare=False)

    def chunk_keys(self) -> tuple[str, ...]:
        from .chunks import chunk_key

        return tuple(dict.fromkeys(chunk_key(c) for c in self.chunks))


def load_rename_records(stream: Iterable[str]) -> list[RenameRecord]:
    """Parse line-delimited JSON rename records.

    Each line holds an object with keys commit, kind, old, new, file, and
    optionally container.  Raises ParseError (with the offending line
    number) for malformed lines and UnknownKind for kinds outside the
    supported five.
    """
    records: list[RenameRecord] = []
    for number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=number) from exc
        if not isinstance(obj, dict):
            raise ParseError("record is not an object", line=number)
        missing = {"commit", "kind", "old", "new"} - obj.keys()
        if missing:
            raise ParseError(
                f"missing keys: {', '.join(sorted(missing))}", line=number
            )
        try:
            kind = IdentifierKind(obj["kind"])
        except ValueError:
            raise UnknownKind(
                f"unknown identifier kind: {obj['kind']!r}", line=number
            ) from None
        if obj["old"] == obj["new"]:
            raise ParseError("old and new names are identical", line=number)
        records.append(
            RenameRecord(
                commit=str(obj["commit"]),
                kind=kind,
                old_name=str(obj["old"]),
                new_name=str(obj["new"]),
                file=str(obj.get("file", "")),
                container=obj.get("container"),
                index=len(records),
            )
        )
    return records


def record_to_obj(record: RenameRecord) -> dict:
    obj = {
        "commit": record.commit,
        "kind": record.kind.value,
        "old": record.old_name,
        "new": record.new_name,
        "file": record.file,
    }
    if record.container is not None:
        obj["container"] = record.container
    return obj


def serialize_rename_records(records: Iterable[RenameRecord], fp) -> None:
    for record in records:
        fp.write(json.dumps(record_to_obj(record), sort_keys=True))
        fp.write("\n")


def load_rename_records_file(path) -> list[RenameRecord]:
    with open(path, encoding="utf-8") as fh:
        return load_rename_records(fh)


_KIND_FROM_ENTITY = {
    EntityKind.CLASS: IdentifierKind.CLASS,
    EntityKind.INTERFACE: IdentifierKind.CLASS,
    EntityKind.METHOD: IdentifierKind.METHOD,
    EntityKind.ATTRIBUTE: IdentifierKind.ATTRIBUTE,
    EntityKind.PARAMETER: IdentifierKind.PARAMETER,
    EntityKind.VARIABLE: IdentifierKind.VARIABLE,
}


def detect_renames(
    before: CodeFacts,
    after: CodeFacts,
    commit: str = "",
    file: str = "",
) -> list[RenameRecord]:
    """Match declarations positionally between two versions of one file.

    A rename is reported only when the declaration sits at the same
    ordinal position among same-kind siblings of a container whose own
    qualified path is unchanged, and the sibling counts agree; anything
    ambiguous is dropped.
    """

    def groups(facts: CodeFacts) -> dict[tuple[str, EntityKind], list]:
        by_container: dict[tuple[str, EntityKind], list] = {}
        for entity in facts.entities:
            if entity.container is None:
                path = ""
            else:
                path = facts.qualified_path(facts.entities[entity.container])
            by_container.setdefault((path, entity.kind), []).append(entity)
        return by_container

    before_groups = groups(before)
    after_groups = groups(after)
    records: list[RenameRecord] = []
    for key, old_entities in sorted(before_groups.items()):
        new_entities = after_groups.get(key)
        if new_entities is None or len(new_entities) != len(old_entities):
            continue  # container gone or sibling count changed: ambiguous
        for old_entity, new_entity in zip(old_entities, new_entities):
            if old_entity.name == new_entity.name:
                continue
            records.append(
                RenameRecord(
                    commit=commit,
                    kind=_KIND_FROM_ENTITY[old_entity.kind],
                    old_name=old_entity.name,
                    new_name=new_entity.name,
                    file=file or old_entity.file,
                    container=key[0] or None,
                    index=len(records),
                )
            )
    return records


@dataclass(frozen=True)
class CommitFiles:
    """One commit plus the before/after text of its changed source files."""

    commit: str
    pairs: tuple[tuple[str, str | None, str | None], ...]


def _git(repo: Path, *args: str) -> str:
    proc = subprocess.run(
        ["git", "-C", str(repo), *args],
        capture_output=True,
        text=True,
    )
    if proc.returncode != 0:
        raise RepoError(proc.stderr.strip() or f"git {' '.join(args)} failed")
    return proc.stdout


def _show(repo: Path, commit: str, path: str) -> str | None:
    proc = subprocess.run(
        ["git", "-C", str(repo), "show", f"{commit}:{path}"],
        capture_output=True,
        text=True,
    )
    return proc.stdout if proc.returncode == 0 else None


def walk_history(
    repo, rev_range: str = "HEAD", suffixes: tuple[str, ...] = (".java",)
) -> Iterator[CommitFiles]:
    """Yield each commit in the range with its changed source files.

    Merge commits are compared against their first parent; root commits
    against the empty tree.  Added and deleted files appear with None on
    the missing side.
    """
    repo = Path(repo)
    _git(repo, "rev-parse", "--git-dir")
    revs = _git(repo, "rev-list", "--reverse", rev_range).split()
    for commit in revs:
        parents = _git(repo, "log", "--format=%P", "-n", "1", commit).split()
        if parents:
            raw = _git(
                repo, "diff-tree", "--no-renames", "--name-status", "-r",
                parents[0], commit,
            )
        else:
            raw = _git(
                repo, "diff-tree", "--no-renames", "--name-status", "-r",
                "--root", commit,
            )
            raw = "\n".join(raw.splitlines()[1:])  # drop echoed commit id
        pairs = []
        for line in raw.splitlines():
            if not line.strip():
                continue
            status, _, path = line.partition("\t")
            if not path or not path.endswith(suffixes):
                continue
            old_text = _show(repo, parents[0], path) if parents else None
            new_text = _show(repo, commit, path)
            if status.startswith("A"):
                old_text = None
            elif status.startswith("D"):
                new_text = None
            pairs.append((path, old_text, new_text))
        if pairs:
            yield CommitFiles(commit=commit, pairs=tuple(pairs))


def with_chunks(record: RenameRecord, chunks) -> RenameRecord:
    return replace(record, chunks=tuple(chunks))
