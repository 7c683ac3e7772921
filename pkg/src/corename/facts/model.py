"""Structural fact tables extracted from object-oriented source files."""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field


class EntityKind(str, enum.Enum):
    CLASS = "Class"
    INTERFACE = "Interface"
    METHOD = "Method"
    ATTRIBUTE = "Attribute"
    PARAMETER = "Parameter"
    VARIABLE = "Variable"


class RelationshipKind(str, enum.Enum):
    BELONGS_C = "BelongsC"
    BELONGS_M = "BelongsM"
    BELONGS_F = "BelongsF"
    BELONGS_A = "BelongsA"
    BELONGS_L = "BelongsL"
    CO_OCCURS_M = "CoOccursM"
    EXTENDS = "Extends"
    IMPLEMENTS = "Implements"
    TYPE_M = "TypeM"
    TYPE_V = "TypeV"
    INVOKES = "Invokes"
    ACCESSES = "Accesses"
    ASSIGNS = "Assigns"
    PASSES = "Passes"


@dataclass(frozen=True)
class Entity:
    id: int
    kind: EntityKind
    name: str
    container: int | None
    file: str


@dataclass
class CodeFacts:
    """Entity and relation tables for one source snapshot.

    Tables hold entity ids where the row refers to a declaration and plain
    name strings where the source only gives a textual reference:

    - contains: (parent entity id, child entity id)
    - extends: (subclass entity id, superclass name)
    - implements: (class entity id, interface name)
    - typed: (attribute/parameter/variable id, type name) — generic types
      contribute the outer name and each first-level type argument
    - returns: (method id, return type name), same generic handling
    - invokes: (method id, callee name), self-calls by name excluded
    - accesses: (method id, attribute name of the method's own class)
    - assigns: (lhs name, rhs name, rhs form)
    - passes: (formal parameter name, actual argument name, argument form)
    """

    entities: tuple[Entity, ...] = ()
    contains: tuple[tuple[int, int], ...] = ()
    extends: tuple[tuple[int, str], ...] = ()
    implements: tuple[tuple[int, str], ...] = ()
    typed: tuple[tuple[int, str], ...] = ()
    returns: tuple[tuple[int, str], ...] = ()
    invokes: tuple[tuple[int, str], ...] = ()
    accesses: tuple[tuple[int, str], ...] = ()
    assigns: tuple[tuple[str, str, str], ...] = ()
    passes: tuple[tuple[str, str, str], ...] = ()
    skipped: tuple[tuple[str, str], ...] = ()

    _index: "FactsIndex | None" = field(
        default=None, repr=False, compare=False, hash=False
    )

    @property
    def index(self) -> "FactsIndex":
        if self._index is None:
            object.__setattr__(self, "_index", FactsIndex(self))
        return self._index

    def entity(self, entity_id: int) -> Entity:
        return self.entities[entity_id]

    def qualified_path(self, entity: Entity) -> str:
        parts = [entity.name]
        current = entity
        while current.container is not None:
            current = self.entities[current.container]
            parts.append(current.name)
        return ".".join(reversed(parts))

    def to_json(self) -> dict:
        return {
            "entities": [
                {
                    "id": e.id,
                    "kind": e.kind.value,
                    "name": e.name,
                    "container": e.container,
                    "file": e.file,
                }
                for e in self.entities
            ],
            "contains": [list(r) for r in self.contains],
            "extends": [list(r) for r in self.extends],
            "implements": [list(r) for r in self.implements],
            "typed": [list(r) for r in self.typed],
            "returns": [list(r) for r in self.returns],
            "invokes": [list(r) for r in self.invokes],
            "accesses": [list(r) for r in self.accesses],
            "assigns": [list(r) for r in self.assigns],
            "passes": [list(r) for r in self.passes],
            "skipped": [list(r) for r in self.skipped],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeFacts":
        entities = tuple(
            Entity(
                id=e["id"],
                kind=EntityKind(e["kind"]),
                name=e["name"],
                container=e["container"],
                file=e["file"],
            )
            for e in data.get("entities", [])
        )
        def rows(key):
            return tuple(tuple(r) for r in data.get(key, []))
        return cls(
            entities=entities,
            contains=rows("contains"),
            extends=rows("extends"),
            implements=rows("implements"),
            typed=rows("typed"),
            returns=rows("returns"),
            invokes=rows("invokes"),
            accesses=rows("accesses"),
            assigns=rows("assigns"),
            passes=rows("passes"),
            skipped=rows("skipped"),
        )

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "CodeFacts":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


class FactsIndex:
    """Name-keyed lookups over a CodeFacts instance (built lazily once)."""

    def __init__(self, facts: CodeFacts):
        ent = facts.entities
        self.facts = facts
        self.by_name: dict[str, list[Entity]] = defaultdict(list)
        for e in ent:
            self.by_name[e.name].append(e)
        # (parent kind, child kind) -> set of (parent name, child name)
        self.contain_names: dict[
            tuple[EntityKind, EntityKind], set[tuple[str, str]]
        ] = defaultdict(set)
        for parent_id, child_id in facts.contains:
            p, c = ent[parent_id], ent[child_id]
            self.contain_names[(p.kind, c.kind)].add((p.name, c.name))
        # class name -> method names with multiplicity (sibling methods)
        self.methods_per_class: dict[str, list[str]] = defaultdict(list)
        for parent_id, child_id in facts.contains:
            p, c = ent[parent_id], ent[child_id]
            if p.kind is EntityKind.CLASS and c.kind is EntityKind.METHOD:
                self.methods_per_class[p.name].append(c.name)
        self.extends_names = {
            (super_name, ent[sub_id].name) for sub_id, super_name in facts.extends
        }
        self.implements_names = {
            (iface, ent[class_id].name) for class_id, iface in facts.implements
        }
        self.returns_names = {(ent[mid].name, t) for mid, t in facts.returns}
        self.typed_names = {(ent[vid].name, t) for vid, t in facts.typed}
        self.invokes_names = {(ent[mid].name, callee) for mid, callee in facts.invokes}
        self.accesses_names = {(ent[mid].name, attr) for mid, attr in facts.accesses}
        self.assigns_names = {(lhs, rhs) for lhs, rhs, _form in facts.assigns}
        self.passes_names = {(formal, actual) for formal, actual, _form in facts.passes}
