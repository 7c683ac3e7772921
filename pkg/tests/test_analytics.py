"""Tests for the statistics layer, pinned to the hand-counted corpus."""

from pathlib import Path

import pytest

from corename.analytics import (
    SizeRow,
    build_repo_stats,
    chunk_type_rates,
    co_rename_rate,
    emit_report,
    inflection_impact,
    load_report,
    relationship_rates,
    size_distribution,
)
from corename.chunks import ChunkKind
from corename.errors import NoDataError
from corename.facts import RelationshipKind, extract_facts, extract_facts_from_dir
from corename.grouping import attach_chunks, build_rename_sets
from corename.mining import IdentifierKind, RenameRecord, load_rename_records_file

CORPUS = Path(__file__).parent / "fixtures" / "corpus"


def record(commit, old, new, kind=IdentifierKind.VARIABLE, index=None):
    return RenameRecord(
        commit=commit, kind=kind, old_name=old, new_name=new, index=index
    )


def collection(specs, mode="lemma"):
    records = [
        record(c, o, n, index=i) for i, (c, o, n) in enumerate(specs)
    ]
    return build_rename_sets(attach_chunks(records, mode), mode)


@pytest.fixture(scope="module")
def corpus_records():
    return load_rename_records_file(CORPUS / "renames.jsonl")


@pytest.fixture(scope="module")
def corpus_facts():
    return {
        path.name: extract_facts_from_dir(path)
        for path in sorted((CORPUS / "src").iterdir())
    }


@pytest.fixture(scope="module")
def corpus_lemma(corpus_records):
    return build_rename_sets(attach_chunks(corpus_records, "lemma"), "lemma")


class TestCoRenameRate:
    def test_three_and_one(self):
        coll = collection(
            [
                ("c1", "aValue", "aResult"),
                ("c1", "bValue", "bResult"),
                ("c1", "cValue", "cResult"),
                ("c2", "getName", "getTitle"),
            ]
        )
        assert co_rename_rate(coll) == 0.75

    def test_all_singletons(self):
        coll = collection([("c1", "aValue", "aResult"), ("c2", "bDelta", "bGamma")])
        assert co_rename_rate(coll) == 0.0

    def test_empty_raises(self):
        with pytest.raises(NoDataError):
            co_rename_rate(collection([]))

    def test_corpus(self, corpus_lemma):
        assert co_rename_rate(corpus_lemma) == 23 / 34


class TestSizeDistribution:
    def test_single_pair(self):
        coll = collection([("c1", "aValue", "aResult"), ("c1", "bValue", "bResult")])
        assert size_distribution(coll) == [SizeRow(2, 2, 2, 1.0)]

    def test_shared_old_name(self):
        coll = collection(
            [
                ("c1", "value", "result"),
                ("c1", "value", "result"),
                ("c1", "bValue", "bResult"),
            ]
        )
        assert size_distribution(coll) == [SizeRow(3, 2, 3, 1.0)]

    def test_corpus(self, corpus_lemma):
        assert size_distribution(corpus_lemma) == [
            SizeRow(2, 1, 2, 14 / 23),
            SizeRow(2, 2, 12, 14 / 23),
            SizeRow(3, 2, 3, 1.0),
            SizeRow(3, 3, 6, 1.0),
        ]


class TestRelationshipRates:
    def test_fig_fixture_rates(self):
        facts = extract_facts(
            {"M.java": (CORPUS / "src" / "c01" / "Metrics.java").read_text()}
        )
        coll = collection(
            [
                ("c1", "MetricType", "MetricAttribute"),
                ("c1", "metricType", "metricAttribute"),
                ("c1", "getDisabledMetricTypes", "getDisabledMetricAttributes"),
            ]
        )
        rates = relationship_rates(coll, facts)
        assert rates == {
            RelationshipKind.TYPE_M: 0.5,
            RelationshipKind.TYPE_V: 0.5,
        }
        assert sum(rates.values()) == pytest.approx(1.0, abs=1e-9)

    def test_filter_without_renames_raises(self, corpus_lemma, corpus_facts):
        only_class = collection([("c1", "aValue", "aResult"), ("c1", "bValue", "bResult")])
        with pytest.raises(NoDataError):
            relationship_rates(only_class, {}, IdentifierKind.METHOD)

    def test_corpus_overall(self, corpus_lemma, corpus_facts):
        assert relationship_rates(corpus_lemma, corpus_facts) == {
            RelationshipKind.ACCESSES: 1 / 11,
            RelationshipKind.ASSIGNS: 2 / 11,
            RelationshipKind.CO_OCCURS_M: 2 / 11,
            RelationshipKind.EXTENDS: 1 / 11,
            RelationshipKind.PASSES: 1 / 11,
            RelationshipKind.TYPE_M: 1 / 11,
            RelationshipKind.TYPE_V: 3 / 11,
        }

    @pytest.mark.parametrize(
        "kind,expected",
        [
            (
                IdentifierKind.CLASS,
                {
                    RelationshipKind.TYPE_V: 3 / 5,
                    RelationshipKind.TYPE_M: 1 / 5,
                    RelationshipKind.EXTENDS: 1 / 5,
                },
            ),
            (
                IdentifierKind.METHOD,
                {
                    RelationshipKind.CO_OCCURS_M: 2 / 5,
                    RelationshipKind.TYPE_V: 1 / 5,
                    RelationshipKind.TYPE_M: 1 / 5,
                    RelationshipKind.ACCESSES: 1 / 5,
                },
            ),
            (
                IdentifierKind.ATTRIBUTE,
                {
                    RelationshipKind.ASSIGNS: 2 / 3,
                    RelationshipKind.ACCESSES: 1 / 3,
                },
            ),
            (
                IdentifierKind.PARAMETER,
                {
                    RelationshipKind.TYPE_V: 1 / 3,
                    RelationshipKind.TYPE_M: 1 / 3,
                    RelationshipKind.PASSES: 1 / 3,
                },
            ),
            (
                IdentifierKind.VARIABLE,
                {
                    RelationshipKind.TYPE_V: 2 / 5,
                    RelationshipKind.ASSIGNS: 2 / 5,
                    RelationshipKind.PASSES: 1 / 5,
                },
            ),
        ],
        ids=lambda value: value.value if isinstance(value, IdentifierKind) else "",
    )
    def test_corpus_filtered(self, corpus_lemma, corpus_facts, kind, expected):
        assert relationship_rates(corpus_lemma, corpus_facts, kind) == expected

    def test_workers_do_not_change_result(self, corpus_lemma, corpus_facts):
        sequential = relationship_rates(corpus_lemma, corpus_facts, workers=1)
        parallel = relationship_rates(corpus_lemma, corpus_facts, workers=8)
        assert sequential == parallel

    def test_rate_maps_sum_to_one(self, corpus_lemma, corpus_facts):
        for kind in (None, *IdentifierKind):
            rates = relationship_rates(corpus_lemma, corpus_facts, kind)
            assert sum(rates.values()) == pytest.approx(1.0, abs=1e-9)
            assert all(0.0 <= v <= 1.0 for v in rates.values())


class TestChunkTypeRates:
    def test_single_inflection(self):
        records = [record("c1", "node", "nodes", index=0)]
        assert chunk_type_rates(records, "raw") == {ChunkKind.REPLACE: 1.0}
        assert chunk_type_rates(records, "lemma") == {ChunkKind.INFLECT: 1.0}

    def test_case_change(self):
        records = [record("c1", "TIMES", "times", index=0)]
        assert chunk_type_rates(records, "lemma") == {ChunkKind.OTHER: 1.0}
        with pytest.raises(NoDataError):
            chunk_type_rates(records, "raw")

    def test_corpus(self, corpus_records):
        assert chunk_type_rates(corpus_records, "lemma") == {
            ChunkKind.INSERT: 2 / 34,
            ChunkKind.DELETE: 4 / 34,
            ChunkKind.REPLACE: 26 / 34,
            ChunkKind.OTHER: 1 / 34,
            ChunkKind.INFLECT: 1 / 34,
        }
        assert chunk_type_rates(corpus_records, "raw") == {
            ChunkKind.INSERT: 2 / 33,
            ChunkKind.DELETE: 4 / 33,
            ChunkKind.REPLACE: 27 / 33,
        }


class TestInflectionImpact:
    def test_no_inflection_corpus(self):
        specs = [("c1", "aValue", "aResult"), ("c1", "bValue", "bResult")]
        records = [record(c, o, n, index=i) for i, (c, o, n) in enumerate(specs)]
        impact = inflection_impact(records)
        assert impact.raw_co_rename_rate == impact.lemma_co_rename_rate
        assert impact.new_set_count == 0

    def test_query_merge(self):
        records = [
            record("c1", "query", "entry", index=0),
            record("c1", "queries", "entries", index=1),
            record("c1", "Query", "Entry", kind=IdentifierKind.CLASS, index=2),
        ]
        facts = extract_facts(
            {
                "Q.java": """
                class Query { }
                class Repo { Query query; Query queries; }
                """
            }
        )
        impact = inflection_impact(records, facts)
        assert impact.new_set_count == 1
        assert RelationshipKind.TYPE_V in impact.new_set_relationship_rates

    def test_corpus(self, corpus_records, corpus_facts):
        impact = inflection_impact(corpus_records, corpus_facts)
        assert impact.raw_co_rename_rate == 21 / 33
        assert impact.lemma_co_rename_rate == 23 / 34
        assert impact.raw_set_count == 22
        assert impact.lemma_set_count == 21
        assert impact.raw_member_total == 33
        assert impact.lemma_member_total == 34
        assert impact.new_set_count == 3
        assert impact.new_set_relationship_rates == {
            RelationshipKind.TYPE_V: 0.75,
            RelationshipKind.TYPE_M: 0.25,
        }

    def test_two_pass_symmetry(self, corpus_records, corpus_facts):
        first = inflection_impact(corpus_records, corpus_facts)
        second = inflection_impact(list(reversed(corpus_records)), corpus_facts)
        assert first.raw_co_rename_rate == second.raw_co_rename_rate
        assert first.lemma_co_rename_rate == second.lemma_co_rename_rate
        assert first.new_set_count == second.new_set_count


class TestReports:
    def build(self, corpus_records, corpus_facts, workers=1):
        coll = build_rename_sets(attach_chunks(corpus_records, "lemma"), "lemma")
        return build_repo_stats(
            corpus_records, coll, corpus_facts, workers=workers
        )

    def test_round_trip(self, corpus_records, corpus_facts, tmp_path):
        stats = self.build(corpus_records, corpus_facts)
        emit_report(stats, tmp_path)
        again = load_report(tmp_path / "report.json")
        assert again == stats

    def test_deterministic_across_workers(self, corpus_records, corpus_facts, tmp_path):
        one = tmp_path / "one"
        eight = tmp_path / "eight"
        emit_report(self.build(corpus_records, corpus_facts, workers=1), one, plots=True)
        emit_report(self.build(corpus_records, corpus_facts, workers=8), eight, plots=True)
        for path in sorted(one.iterdir()):
            assert (eight / path.name).read_bytes() == path.read_bytes()

    def test_csv_headers(self, corpus_records, corpus_facts, tmp_path):
        emit_report(self.build(corpus_records, corpus_facts), tmp_path)
        assert (tmp_path / "summary.csv").read_text().splitlines()[0] == "metric,value"
        assert (
            tmp_path / "size_distribution.csv"
        ).read_text().splitlines()[0] == "set_size,unique_names,members,cumulative_rate"
        assert (
            tmp_path / "relationship_rates.csv"
        ).read_text().splitlines()[0] == "filter,relationship,rate"

    def test_svg_only_with_plots(self, corpus_records, corpus_facts, tmp_path):
        emit_report(self.build(corpus_records, corpus_facts), tmp_path / "bare")
        emit_report(
            self.build(corpus_records, corpus_facts), tmp_path / "plots", plots=True
        )
        assert not list((tmp_path / "bare").glob("*.svg"))
        assert sorted(p.name for p in (tmp_path / "plots").glob("*.svg")) == [
            "relationship_rates.svg",
            "size_cumulative.svg",
        ]

    def test_no_data_serialized_as_null(self, tmp_path):
        records = [record("c1", "aValue", "aResult", index=0)]
        coll = build_rename_sets(attach_chunks(records, "lemma"), "lemma")
        stats = build_repo_stats(records, coll, facts=None)
        assert stats.relationship_rates is None
        emit_report(stats, tmp_path)
        text = (tmp_path / "report.json").read_text()
        assert '"relationship_rates": null' in text
        assert load_report(tmp_path / "report.json") == stats
