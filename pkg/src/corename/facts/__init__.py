"""Structural code facts: extraction, model, and relationship detection."""

from .model import CodeFacts, Entity, EntityKind, RelationshipKind
from .parser import extract_facts, extract_facts_from_dir, extract_facts_from_paths
from .relations import detect_relationships, relationship_table

__all__ = [
    "CodeFacts",
    "Entity",
    "EntityKind",
    "RelationshipKind",
    "detect_relationships",
    "extract_facts",
    "extract_facts_from_dir",
    "extract_facts_from_paths",
    "relationship_table",
]
