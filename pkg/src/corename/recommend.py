"""Co-rename candidate generation and prior-weighted ranking.

Given one performed rename, every entity whose name the rename's chunks
can rewrite becomes a candidate.  Candidates are scored by summing, for
each detected relationship to the renamed identifier, a weight keyed on
the kind of identifier the developer renamed: methods co-renamed with
methods of the same class score high when the trigger is a method, and so
on.  Candidates without any relationship fall back to a default weight,
which is zero in the shipped profile.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chunks import apply_chunk
from .errors import DegenerateResult, InvalidIdentifier, NoDataError
from .facts.model import CodeFacts, EntityKind, RelationshipKind
from .facts.relations import detect_relationships
from .lexicon import Lemmatizer, normalize
from .mining import IdentifierKind, RenameRecord

# Tie-break order across entity kinds for equal scores.
_KIND_ORDER = {
    EntityKind.CLASS: 0,
    EntityKind.INTERFACE: 0,
    EntityKind.METHOD: 1,
    EntityKind.ATTRIBUTE: 2,
    EntityKind.PARAMETER: 3,
    EntityKind.VARIABLE: 4,
}


@dataclass(frozen=True)
class PriorProfile:
    """Per-trigger-kind weights over relationship kinds."""

    weights: dict[IdentifierKind, dict[RelationshipKind, float]]
    default_weight: float = 0.0

    def weight(self, trigger: IdentifierKind, kind: RelationshipKind) -> float:
        return self.weights.get(trigger, {}).get(kind, 0.0)

    def to_json(self) -> dict:
        return {
            "default_weight": self.default_weight,
            "weights": {
                trigger.value: {
                    kind.value: value for kind, value in sorted(
                        table.items(), key=lambda kv: kv[0].value
                    )
                }
                for trigger, table in sorted(
                    self.weights.items(), key=lambda kv: kv[0].value
                )
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "PriorProfile":
        return cls(
            weights={
                IdentifierKind(trigger): {
                    RelationshipKind(kind): float(value)
                    for kind, value in table.items()
                }
                for trigger, table in data.get("weights", {}).items()
            },
            default_weight=float(data.get("default_weight", 0.0)),
        )

    @classmethod
    def load(cls, path) -> "PriorProfile":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def default_profile() -> PriorProfile:
    """Built-in priors: a small floor for every relationship, the two
    best-supported overall leaders for method triggers, and the
    relationship most associated with each other trigger kind boosted.

    Weights mined from the user's own history (build_prior_profile over
    filtered relationship rates) are preferred over these defaults.
    """
    floor = {kind: 0.02 for kind in RelationshipKind}
    weights = {trigger: dict(floor) for trigger in IdentifierKind}
    weights[IdentifierKind.METHOD][RelationshipKind.CO_OCCURS_M] = 0.408
    weights[IdentifierKind.METHOD][RelationshipKind.ASSIGNS] = 0.259
    for trigger, leader in (
        (IdentifierKind.CLASS, RelationshipKind.TYPE_V),
        (IdentifierKind.ATTRIBUTE, RelationshipKind.ACCESSES),
        (IdentifierKind.PARAMETER, RelationshipKind.PASSES),
        (IdentifierKind.VARIABLE, RelationshipKind.PASSES),
    ):
        weights[trigger][RelationshipKind.ASSIGNS] = 0.30
        weights[trigger][leader] = 0.25
    return PriorProfile(weights=weights, default_weight=0.0)


def build_prior_profile(
    filtered_rates: dict[IdentifierKind, dict[RelationshipKind, float] | None],
    default_weight: float = 0.0,
) -> PriorProfile:
    """Turn kind-filtered relationship rates into a prior profile."""
    weights = {
        trigger: dict(rates)
        for trigger, rates in filtered_rates.items()
        if rates is not None
    }
    if not weights:
        raise NoDataError("no relationship rates to build a profile from")
    return PriorProfile(weights=weights, default_weight=default_weight)


@dataclass(frozen=True)
class RecommendationCandidate:
    target_name: str
    target_kind: EntityKind
    file: str
    container: str | None
    proposed_name: str
    relationships: frozenset[RelationshipKind] = frozenset()
    score: float = 0.0

    def describe(self) -> str:
        kinds = "+".join(sorted(k.value for k in self.relationships)) or "-"
        return (
            f"{self.target_name} -> {self.proposed_name} "
            f"[{self.target_kind.value}] {kinds} score={self.score:.3f}"
        )


def generate_candidates(
    rename: RenameRecord,
    facts: CodeFacts,
    mode: str = "lemma",
    lemmatizer: Lemmatizer | None = None,
) -> list[RecommendationCandidate]:
    """Apply the rename's chunks to every other named entity.

    A candidate is produced per entity and distinct rewritten name; its
    relationships to the renamed identifier are detected once per entity.
    Entities whose names none of the chunks can rewrite are omitted, as is
    the renamed identifier itself.
    """
    candidates: dict[tuple[int, str], RecommendationCandidate] = {}
    relationships_cache: dict[str, frozenset[RelationshipKind]] = {}
    for entity in facts.entities:
        if entity.name == rename.old_name:
            continue
        try:
            target = normalize(entity.name, mode, lemmatizer)
        except InvalidIdentifier:
            continue
        proposals: list[str] = []
        for chunk in rename.chunks:
            try:
                results = apply_chunk(chunk, target, mode)
            except DegenerateResult:
                continue
            proposals.extend(r.origin for r in results)
        for proposed in proposals:
            key = (entity.id, proposed)
            if key in candidates:
                continue
            if entity.name not in relationships_cache:
                relationships_cache[entity.name] = frozenset(
                    detect_relationships(facts, rename.old_name, entity.name)
                )
            candidates[key] = RecommendationCandidate(
                target_name=entity.name,
                target_kind=entity.kind,
                file=entity.file,
                container=(
                    facts.qualified_path(facts.entities[entity.container])
                    if entity.container is not None
                    else None
                ),
                proposed_name=proposed,
                relationships=relationships_cache[entity.name],
            )
    return list(candidates.values())


def score_candidate(
    candidate: RecommendationCandidate,
    profile: PriorProfile,
    trigger_kind: IdentifierKind,
) -> float:
    if not candidate.relationships:
        return profile.default_weight
    return sum(
        profile.weight(trigger_kind, kind) for kind in sorted(
            candidate.relationships, key=lambda k: k.value
        )
    )


def rank_candidates(
    candidates: list[RecommendationCandidate],
    profile: PriorProfile,
    trigger_kind: IdentifierKind,
    min_score: float | None = None,
) -> list[RecommendationCandidate]:
    """Score and order candidates: score descending, then entity kind,
    then name; candidates under ``min_score`` are dropped when it is set."""
    scored = [
        RecommendationCandidate(
            target_name=c.target_name,
            target_kind=c.target_kind,
            file=c.file,
            container=c.container,
            proposed_name=c.proposed_name,
            relationships=c.relationships,
            score=score_candidate(c, profile, trigger_kind),
        )
        for c in candidates
    ]
    if min_score is not None:
        scored = [c for c in scored if c.score >= min_score]
    scored.sort(
        key=lambda c: (
            -c.score,
            _KIND_ORDER[c.target_kind],
            c.target_name,
            c.proposed_name,
        )
    )
    return scored


def recommend(
    rename: RenameRecord,
    facts: CodeFacts,
    profile: PriorProfile | None = None,
    mode: str = "lemma",
    min_score: float | None = None,
    lemmatizer: Lemmatizer | None = None,
) -> list[RecommendationCandidate]:
    """Generate, score, and rank co-rename candidates for one rename."""
    profile = profile or default_profile()
    candidates = generate_candidates(rename, facts, mode, lemmatizer)
    return rank_candidates(candidates, profile, rename.kind, min_score)
