"""Statistics over rename sets: co-rename rates, size distribution,
relationship rates (overall, kind-filtered, and inflection-affected),
chunk-kind rates, and report emission."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .chunks import ChunkKind
from .errors import NoDataError
from .facts.model import CodeFacts, RelationshipKind
from .facts.relations import detect_relationships
from .fileio import atomic_write
from .grouping import (
    MeaningfulRenameSet,
    RenameSetCollection,
    attach_chunks,
    build_rename_sets,
    collection_difference,
    enumerate_pairs,
)
from .lexicon import Lemmatizer
from .mining import IdentifierKind, RenameRecord

_EMPTY_FACTS = CodeFacts()


def _facts_for(facts, commit: str) -> CodeFacts:
    """Resolve the facts snapshot for a commit.

    Accepts a mapping commit -> CodeFacts (missing commits get empty
    facts) or a single CodeFacts used for every commit, which is a
    documented approximation for ingested records without repository
    access.
    """
    if facts is None:
        return _EMPTY_FACTS
    if isinstance(facts, CodeFacts):
        return facts
    return facts.get(commit, _EMPTY_FACTS)


def co_rename_rate(coll: RenameSetCollection) -> float:
    """Members of multi-member sets over members of all sets."""
    if not coll.sets:
        raise NoDataError("no rename sets")
    total = coll.member_total()
    shared = sum(len(s) for s in coll.sets if len(s) >= 2)
    return shared / total


@dataclass(frozen=True)
class SizeRow:
    set_size: int
    unique_names: int
    members: int
    cumulative_rate: float


def size_distribution(coll: RenameSetCollection) -> list[SizeRow]:
    """Histogram rows (n, m, members, cumulative) for co-renaming sets.

    ``m`` counts distinct pre-rename names in the set; the cumulative rate
    covers members of sets no larger than n, over all co-renaming members.
    """
    if not coll.sets:
        raise NoDataError("no rename sets")
    cells: Counter[tuple[int, int]] = Counter()
    for s in coll.sets:
        if len(s) >= 2:
            cells[(len(s), s.unique_old_names())] += len(s)
    denominator = sum(cells.values())
    members_by_size: Counter[int] = Counter()
    for (n, _m), members in cells.items():
        members_by_size[n] += members
    rows = []
    running = 0
    for n in sorted(members_by_size):
        running += members_by_size[n]
        for m in sorted(m for (size, m) in cells if size == n):
            rows.append(
                SizeRow(
                    set_size=n,
                    unique_names=m,
                    members=cells[(n, m)],
                    cumulative_rate=running / denominator,
                )
            )
    return rows


def _detect_for_set(
    rename_set: MeaningfulRenameSet, facts
) -> Counter[RelationshipKind]:
    snapshot = _facts_for(facts, rename_set.commit)
    counts: Counter[RelationshipKind] = Counter()
    for left, right in enumerate_pairs(rename_set):
        for kind in detect_relationships(snapshot, left.old_name, right.old_name):
            counts[kind] += 1
    return counts


def relationship_rates(
    coll: RenameSetCollection,
    facts,
    kind_filter: IdentifierKind | None = None,
    workers: int = 1,
) -> dict[RelationshipKind, float]:
    """Share of each relationship kind among all detections.

    Considers sets with at least two members; with ``kind_filter``, only
    sets containing at least one rename of that identifier kind.  Facts
    come from each set's commit snapshot (see _facts_for).  Raises
    NoDataError when nothing is detected.
    """
    qualifying = [
        s
        for s in coll.sets
        if len(s) >= 2
        and (kind_filter is None or any(m.kind == kind_filter for m in s.members))
    ]
    counts: Counter[RelationshipKind] = Counter()
    if workers > 1 and len(qualifying) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(
                lambda s: _detect_for_set(s, facts), qualifying
            ):
                counts.update(partial)
    else:
        for s in qualifying:
            counts.update(_detect_for_set(s, facts))
    total = sum(counts.values())
    if total == 0:
        raise NoDataError(
            "no relationships detected"
            + (f" for filter {kind_filter.value}" if kind_filter else "")
        )
    return {kind: counts[kind] / total for kind in sorted(counts, key=lambda k: k.value)}


def chunk_type_rates(
    records: Iterable[RenameRecord],
    mode: str,
    lemmatizer: Lemmatizer | None = None,
) -> dict[ChunkKind, float]:
    """Share of each chunk kind over all chunk occurrences in the mode."""
    counts: Counter[ChunkKind] = Counter()
    for record in attach_chunks(list(records), mode, lemmatizer):
        for chunk in record.chunks:
            counts[chunk.kind] += 1
    total = sum(counts.values())
    if total == 0:
        raise NoDataError("no operational chunks")
    return {kind: counts[kind] / total for kind in sorted(counts, key=lambda k: k.value)}


@dataclass(frozen=True)
class InflectionImpact:
    """Paired raw/lemma statistics and the sets created by folding inflection."""

    raw_co_rename_rate: float | None
    lemma_co_rename_rate: float | None
    raw_set_count: int
    lemma_set_count: int
    raw_member_total: int
    lemma_member_total: int
    new_set_count: int
    new_set_relationship_rates: dict[RelationshipKind, float] | None


def inflection_impact(
    records: list[RenameRecord],
    facts=None,
    lemmatizer: Lemmatizer | None = None,
    workers: int = 1,
) -> InflectionImpact:
    """Run both modes end to end and compare their rename sets.

    Relationship rates are computed only inside the newly created sets,
    i.e. lemma-mode sets whose membership matches no raw-mode set.
    """
    raw_coll = build_rename_sets(attach_chunks(records, "raw", lemmatizer), "raw")
    lemma_coll = build_rename_sets(
        attach_chunks(records, "lemma", lemmatizer), "lemma"
    )
    new_sets = collection_difference(lemma_coll, raw_coll)

    def rate_or_none(coll):
        try:
            return co_rename_rate(coll)
        except NoDataError:
            return None

    new_rates = None
    if facts is not None and new_sets:
        try:
            new_rates = relationship_rates(
                RenameSetCollection(sets=tuple(new_sets), mode="lemma"),
                facts,
                workers=workers,
            )
        except NoDataError:
            new_rates = None
    return InflectionImpact(
        raw_co_rename_rate=rate_or_none(raw_coll),
        lemma_co_rename_rate=rate_or_none(lemma_coll),
        raw_set_count=len(raw_coll),
        lemma_set_count=len(lemma_coll),
        raw_member_total=raw_coll.member_total(),
        lemma_member_total=lemma_coll.member_total(),
        new_set_count=len(new_sets),
        new_set_relationship_rates=new_rates,
    )


@dataclass(frozen=True)
class RepoStats:
    """Everything one analysis run reports.

    Optional fields hold None where the underlying population was empty;
    a missing value is reported as such, never as a silent zero.
    """

    mode: str
    record_count: int
    set_count: int
    member_total: int
    co_rename_rate: float | None
    size_distribution: tuple[SizeRow, ...]
    relationship_rates: dict[RelationshipKind, float] | None
    filtered_rates: dict[IdentifierKind, dict[RelationshipKind, float] | None]
    chunk_type_rates: dict[str, dict[ChunkKind, float] | None]
    inflection: InflectionImpact | None

    def to_json(self) -> dict:
        def rates(mapping):
            if mapping is None:
                return None
            return {k.value: v for k, v in sorted(mapping.items(), key=lambda kv: kv[0].value)}

        data = {
            "mode": self.mode,
            "record_count": self.record_count,
            "set_count": self.set_count,
            "member_total": self.member_total,
            "co_rename_rate": self.co_rename_rate,
            "size_distribution": [
                [r.set_size, r.unique_names, r.members, r.cumulative_rate]
                for r in self.size_distribution
            ],
            "relationship_rates": rates(self.relationship_rates),
            "filtered_rates": {
                k.value: rates(v) for k, v in sorted(
                    self.filtered_rates.items(), key=lambda kv: kv[0].value
                )
            },
            "chunk_type_rates": {
                mode: rates(v) for mode, v in sorted(self.chunk_type_rates.items())
            },
            "inflection": None,
        }
        if self.inflection is not None:
            inf = self.inflection
            data["inflection"] = {
                "raw_co_rename_rate": inf.raw_co_rename_rate,
                "lemma_co_rename_rate": inf.lemma_co_rename_rate,
                "raw_set_count": inf.raw_set_count,
                "lemma_set_count": inf.lemma_set_count,
                "raw_member_total": inf.raw_member_total,
                "lemma_member_total": inf.lemma_member_total,
                "new_set_count": inf.new_set_count,
                "new_set_relationship_rates": rates(inf.new_set_relationship_rates),
            }
        return data

    @classmethod
    def from_json(cls, data: dict) -> "RepoStats":
        def rel_rates(mapping):
            if mapping is None:
                return None
            return {RelationshipKind(k): v for k, v in mapping.items()}

        inflection = None
        if data.get("inflection") is not None:
            inf = data["inflection"]
            inflection = InflectionImpact(
                raw_co_rename_rate=inf["raw_co_rename_rate"],
                lemma_co_rename_rate=inf["lemma_co_rename_rate"],
                raw_set_count=inf["raw_set_count"],
                lemma_set_count=inf["lemma_set_count"],
                raw_member_total=inf["raw_member_total"],
                lemma_member_total=inf["lemma_member_total"],
                new_set_count=inf["new_set_count"],
                new_set_relationship_rates=rel_rates(
                    inf["new_set_relationship_rates"]
                ),
            )
        return cls(
            mode=data["mode"],
            record_count=data["record_count"],
            set_count=data["set_count"],
            member_total=data["member_total"],
            co_rename_rate=data["co_rename_rate"],
            size_distribution=tuple(
                SizeRow(*row) for row in data["size_distribution"]
            ),
            relationship_rates=rel_rates(data["relationship_rates"]),
            filtered_rates={
                IdentifierKind(k): rel_rates(v)
                for k, v in data["filtered_rates"].items()
            },
            chunk_type_rates={
                mode: None
                if v is None
                else {ChunkKind(k): r for k, r in v.items()}
                for mode, v in data["chunk_type_rates"].items()
            },
            inflection=inflection,
        )


def build_repo_stats(
    records: list[RenameRecord],
    coll: RenameSetCollection,
    facts=None,
    filters: Iterable[IdentifierKind] = tuple(IdentifierKind),
    lemmatizer: Lemmatizer | None = None,
    workers: int = 1,
) -> RepoStats:
    """Assemble the full report for one record stream and its collection."""

    def or_none(fn, *args, **kw):
        try:
            return fn(*args, **kw)
        except NoDataError:
            return None

    rate = or_none(co_rename_rate, coll)
    sizes = tuple(or_none(size_distribution, coll) or ())
    overall = or_none(relationship_rates, coll, facts, workers=workers)
    filtered = {
        kind: or_none(relationship_rates, coll, facts, kind, workers=workers)
        for kind in filters
    }
    chunk_rates = {
        mode: or_none(chunk_type_rates, records, mode, lemmatizer)
        for mode in ("raw", "lemma")
    }
    impact = inflection_impact(records, facts, lemmatizer, workers=workers)
    return RepoStats(
        mode=coll.mode,
        record_count=len(records),
        set_count=len(coll),
        member_total=coll.member_total(),
        co_rename_rate=rate,
        size_distribution=sizes,
        relationship_rates=overall,
        filtered_rates=filtered,
        chunk_type_rates=chunk_rates,
        inflection=impact,
    )


# --- report emission -------------------------------------------------------


def _csv(rows: list[list]) -> str:
    return "\n".join(",".join(str(cell) for cell in row) for row in rows) + "\n"


def _fmt(value) -> str:
    return "NA" if value is None else repr(value) if isinstance(value, float) else str(value)


def emit_report(stats: RepoStats, out_dir, plots: bool = False) -> list[Path]:
    """Write report.json plus CSV tables (and SVG charts with plots=True).

    Output is deterministic: two runs over equal stats produce
    byte-identical files.  Column layouts are documented in
    docs/formats.md.
    """
    out = Path(out_dir)
    written = []

    payload = json.dumps(stats.to_json(), indent=2, sort_keys=True) + "\n"
    written.append(atomic_write(out / "report.json", payload))

    summary = [["metric", "value"]]
    summary.append(["mode", stats.mode])
    summary.append(["record_count", stats.record_count])
    summary.append(["set_count", stats.set_count])
    summary.append(["member_total", stats.member_total])
    summary.append(["co_rename_rate", _fmt(stats.co_rename_rate)])
    written.append(atomic_write(out / "summary.csv", _csv(summary)))

    size_rows = [["set_size", "unique_names", "members", "cumulative_rate"]]
    for row in stats.size_distribution:
        size_rows.append(
            [row.set_size, row.unique_names, row.members, _fmt(row.cumulative_rate)]
        )
    written.append(atomic_write(out / "size_distribution.csv", _csv(size_rows)))

    rel_rows = [["filter", "relationship", "rate"]]

    def extend_rel(filter_label, mapping):
        if mapping is None:
            rel_rows.append([filter_label, "(none)", "NA"])
            return
        for kind in sorted(mapping, key=lambda k: k.value):
            rel_rows.append([filter_label, kind.value, _fmt(mapping[kind])])

    extend_rel("(all)", stats.relationship_rates)
    for kind in sorted(stats.filtered_rates, key=lambda k: k.value):
        extend_rel(kind.value, stats.filtered_rates[kind])
    if stats.inflection is not None:
        extend_rel(
            "inflection_new_sets", stats.inflection.new_set_relationship_rates
        )
    written.append(atomic_write(out / "relationship_rates.csv", _csv(rel_rows)))

    chunk_rows = [["mode", "chunk", "rate"]]
    for mode in sorted(stats.chunk_type_rates):
        mapping = stats.chunk_type_rates[mode]
        if mapping is None:
            chunk_rows.append([mode, "(none)", "NA"])
            continue
        for kind in sorted(mapping, key=lambda k: k.value):
            chunk_rows.append([mode, kind.value, _fmt(mapping[kind])])
    written.append(atomic_write(out / "chunk_type_rates.csv", _csv(chunk_rows)))

    inflection_rows = [["metric", "raw", "lemma"]]
    if stats.inflection is not None:
        inf = stats.inflection
        inflection_rows.append(
            ["co_rename_rate", _fmt(inf.raw_co_rename_rate), _fmt(inf.lemma_co_rename_rate)]
        )
        inflection_rows.append(["set_count", inf.raw_set_count, inf.lemma_set_count])
        inflection_rows.append(
            ["member_total", inf.raw_member_total, inf.lemma_member_total]
        )
        inflection_rows.append(["new_set_count", "", inf.new_set_count])
    written.append(atomic_write(out / "inflection.csv", _csv(inflection_rows)))

    if plots:
        written.append(
            atomic_write(
                out / "relationship_rates.svg",
                _bar_chart_svg(
                    "Relationship rates", stats.relationship_rates or {}
                ),
            )
        )
        written.append(
            atomic_write(
                out / "size_cumulative.svg",
                _cumulative_svg("Co-renaming size distribution", stats.size_distribution),
            )
        )
    return written


def load_report(path) -> RepoStats:
    with open(path, encoding="utf-8") as fh:
        return RepoStats.from_json(json.load(fh))


_SVG_HEAD = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
    'viewBox="0 0 {w} {h}" font-family="monospace" font-size="11">\n'
)


def _bar_chart_svg(title: str, rates: Mapping) -> str:
    entries = sorted(rates.items(), key=lambda kv: kv[0].value)
    width, height, base, left = 640, 240, 200, 20
    parts = [_SVG_HEAD.format(w=width, h=height)]
    parts.append(f'<text x="{left}" y="16">{title}</text>\n')
    if entries:
        slot = (width - 2 * left) / len(entries)
        peak = max(v for _k, v in entries) or 1.0
        for pos, (kind, value) in enumerate(entries):
            bar = (base - 40) * (value / peak)
            x = left + pos * slot
            parts.append(
                f'<rect x="{x:.1f}" y="{base - bar:.1f}" width="{slot * 0.7:.1f}" '
                f'height="{bar:.1f}" fill="#4878a8"/>\n'
            )
            parts.append(
                f'<text x="{x:.1f}" y="{base + 14}" transform="rotate(40 {x:.1f} '
                f'{base + 14})">{kind.value} {value:.3f}</text>\n'
            )
    parts.append("</svg>\n")
    return "".join(parts)


def _cumulative_svg(title: str, rows: tuple[SizeRow, ...]) -> str:
    width, height, base, left = 640, 240, 200, 40
    parts = [_SVG_HEAD.format(w=width, h=height)]
    parts.append(f'<text x="{left}" y="16">{title}</text>\n')
    by_size: dict[int, float] = {}
    for row in rows:
        by_size[row.set_size] = row.cumulative_rate
    if by_size:
        biggest = max(by_size)
        step = (width - 2 * left) / max(biggest, 1)
        previous = 0.0
        for size in sorted(by_size):
            x = left + size * step
            y = base - (base - 40) * by_size[size]
            y0 = base - (base - 40) * previous
            parts.append(
                f'<line x1="{x - step:.1f}" y1="{y0:.1f}" x2="{x:.1f}" y2="{y0:.1f}" '
                f'stroke="#a84848"/>\n'
            )
            parts.append(
                f'<line x1="{x:.1f}" y1="{y0:.1f}" x2="{x:.1f}" y2="{y:.1f}" '
                f'stroke="#a84848"/>\n'
            )
            parts.append(f'<text x="{x:.1f}" y="{base + 14}">{size}</text>\n')
            previous = by_size[size]
    parts.append("</svg>\n")
    return "".join(parts)
