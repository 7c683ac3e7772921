"""Command-line pipeline: mine, group, facts, analyze, recommend, report.

Stages hand off through files (JSONL for renames and sets, JSON for facts
and reports) so each stage can be tested against golden outputs.  All
writes are atomic; exit status is 0 for success, 1 for usage errors, and 2
for data errors, with diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .analytics import build_repo_stats, emit_report, load_report
from .errors import CorenameError
from .facts import extract_facts, extract_facts_from_dir
from .facts.model import CodeFacts
from .fileio import atomic_write
from .grouping import (
    attach_chunks,
    build_rename_sets,
    load_rename_sets,
    serialize_rename_sets,
)
from .lexicon import Lemmatizer
from .mining import (
    IdentifierKind,
    RenameRecord,
    detect_renames,
    load_rename_records_file,
    serialize_rename_records,
    walk_history,
)
from .recommend import PriorProfile, default_profile, recommend


@dataclass
class PipelineConfig:
    """Shared settings resolved from flags, config file, and environment."""

    repo: str | None = None
    records: str | None = None
    mode: str = "lemma"
    filters: tuple[IdentifierKind, ...] = tuple(IdentifierKind)
    out: str | None = None
    lemma_table: str | None = None
    plots: bool = False
    profile: str | None = None
    workers: int = 1

    def validate_source(self) -> None:
        if bool(self.repo) == bool(self.records):
            raise CorenameError("exactly one of --repo or --records is required")

    def validate_mode(self) -> None:
        if self.mode not in ("raw", "lemma"):
            raise CorenameError(f"unknown mode: {self.mode!r}")


def _lemmatizer(args) -> Lemmatizer | None:
    table = getattr(args, "lemma_table", None)
    return Lemmatizer.from_file(table) if table else None


def _workers(args) -> int:
    if getattr(args, "workers", None):
        return args.workers
    env = os.environ.get("CORENAME_WORKERS")
    if env and env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1


def _apply_config(args: argparse.Namespace) -> None:
    """Overlay values from --config onto parsed flags (config wins)."""
    if not getattr(args, "config", None):
        return
    with open(args.config, encoding="utf-8") as fh:
        overrides = json.load(fh)
    if not isinstance(overrides, dict):
        raise CorenameError("config file must hold a JSON object")
    for key, value in overrides.items():
        dest = key.replace("-", "_")
        if not hasattr(args, dest):
            raise CorenameError(f"config key {key!r} matches no option")
        setattr(args, dest, value)


def _write_lines(path, render) -> None:
    buffer = io.StringIO()
    render(buffer)
    atomic_write(path, buffer.getvalue())


def _cmd_mine(args) -> int:
    config = PipelineConfig(repo=args.repo, records=args.records)
    config.validate_source()
    if args.records:
        records = load_rename_records_file(args.records)
    else:
        records: list[RenameRecord] = []
        for commit in walk_history(args.repo):
            for path, before, after in commit.pairs:
                if before is None or after is None:
                    continue
                found = detect_renames(
                    extract_facts({path: before}),
                    extract_facts({path: after}),
                    commit=commit.commit,
                    file=path,
                )
                for record in found:
                    records.append(
                        RenameRecord(
                            commit=record.commit,
                            kind=record.kind,
                            old_name=record.old_name,
                            new_name=record.new_name,
                            file=record.file,
                            container=record.container,
                            index=len(records),
                        )
                    )
    _write_lines(args.out, lambda fp: serialize_rename_records(records, fp))
    print(f"wrote {len(records)} rename records to {args.out}", file=sys.stderr)
    return 0


def _cmd_group(args) -> int:
    config = PipelineConfig(
        records=args.renames,
        mode=args.mode,
        out=args.out,
        lemma_table=args.lemma_table,
    )
    config.validate_mode()
    records = load_rename_records_file(config.records)
    chunked = attach_chunks(records, config.mode, _lemmatizer(args))
    collection = build_rename_sets(chunked, config.mode)
    _write_lines(args.out, lambda fp: serialize_rename_sets(collection, fp))
    print(
        f"wrote {len(collection)} rename sets "
        f"({collection.member_total()} members) to {args.out}",
        file=sys.stderr,
    )
    return 0


def _cmd_facts(args) -> int:
    suffixes = tuple(args.suffix) if args.suffix else (".java",)
    facts = extract_facts_from_dir(args.src, suffixes=suffixes)
    for file, reason in facts.skipped:
        print(f"skipped {file}: {reason}", file=sys.stderr)
    atomic_write(
        args.out, json.dumps(facts.to_json(), indent=2, sort_keys=True) + "\n"
    )
    print(
        f"wrote {len(facts.entities)} entities to {args.out}", file=sys.stderr
    )
    return 0


def _load_facts_dir(directory) -> dict[str, CodeFacts]:
    facts: dict[str, CodeFacts] = {}
    for path in sorted(Path(directory).glob("*.json")):
        facts[path.stem] = CodeFacts.load(path)
    return facts


def _cmd_analyze(args) -> int:
    config = PipelineConfig(
        records=args.renames,
        mode=args.mode,
        out=args.out,
        lemma_table=args.lemma_table,
        plots=args.plots,
        filters=tuple(IdentifierKind(k) for k in args.filter)
        if args.filter
        else tuple(IdentifierKind),
        workers=_workers(args),
    )
    config.validate_mode()
    records = load_rename_records_file(config.records)
    with open(args.sets, encoding="utf-8") as fh:
        collection = load_rename_sets(fh, records, config.mode)
    facts = None
    if args.facts_dir:
        facts = _load_facts_dir(args.facts_dir)
        default = facts.pop("default", None)
        if default is not None:
            # single-snapshot approximation for commits without facts
            facts = {**{s.commit: default for s in collection.sets}, **facts}
    stats = build_repo_stats(
        records,
        collection,
        facts,
        filters=config.filters,
        lemmatizer=_lemmatizer(args),
        workers=config.workers,
    )
    written = emit_report(stats, config.out, plots=config.plots)
    print(
        "wrote " + ", ".join(str(p) for p in written),
        file=sys.stderr,
    )
    return 0


def _cmd_recommend(args) -> int:
    facts = extract_facts_from_dir(args.src)
    trigger = RenameRecord(
        commit="(pending)",
        kind=IdentifierKind(args.kind),
        old_name=args.old,
        new_name=args.new,
        index=0,
    )
    (trigger,) = attach_chunks([trigger], args.mode, _lemmatizer(args))
    if not trigger.chunks:
        raise CorenameError(
            f"no operational chunks between {args.old!r} and {args.new!r}"
        )
    profile = PriorProfile.load(args.profile) if args.profile else default_profile()
    ranked = recommend(
        trigger,
        facts,
        profile=profile,
        mode=args.mode,
        min_score=args.min_score,
        lemmatizer=_lemmatizer(args),
    )
    if args.format == "json":
        payload = [
            {
                "target": c.target_name,
                "kind": c.target_kind.value,
                "file": c.file,
                "container": c.container,
                "proposed": c.proposed_name,
                "relationships": sorted(k.value for k in c.relationships),
                "score": c.score,
            }
            for c in ranked
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if not ranked:
            print("no candidates")
        for c in ranked:
            print(c.describe())
    return 0


def _cmd_report(args) -> int:
    stats = load_report(args.stats)
    written = emit_report(stats, args.out, plots=args.plots)
    print("wrote " + ", ".join(str(p) for p in written), file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corename",
        description="Mine, group, analyze, and recommend co-renamed identifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file; its values override flags")

    mine = sub.add_parser("mine", help="collect rename records")
    mine.add_argument("--repo", help="version-control repository to walk")
    mine.add_argument("--records", help="pre-extracted rename records (JSONL)")
    mine.add_argument(
        "--detector",
        choices=["naive"],
        default="naive",
        help="built-in detector used with --repo",
    )
    mine.add_argument("--out", required=True)
    common(mine)
    mine.set_defaults(func=_cmd_mine)

    group = sub.add_parser("group", help="build meaningful rename sets")
    group.add_argument("--renames", required=True)
    group.add_argument("--mode", choices=["raw", "lemma"], default="lemma")
    group.add_argument("--lemma-table", help="override the bundled irregular-forms table")
    group.add_argument("--out", required=True)
    common(group)
    group.set_defaults(func=_cmd_group)

    facts = sub.add_parser("facts", help="extract structural facts from sources")
    facts.add_argument("--src", required=True)
    facts.add_argument(
        "--suffix",
        action="append",
        help="source suffix to include (repeatable; default .java)",
    )
    facts.add_argument("--out", required=True)
    common(facts)
    facts.set_defaults(func=_cmd_facts)

    analyze = sub.add_parser("analyze", help="compute statistics and reports")
    analyze.add_argument("--renames", required=True)
    analyze.add_argument("--sets", required=True)
    analyze.add_argument("--mode", choices=["raw", "lemma"], default="lemma")
    analyze.add_argument(
        "--facts-dir",
        help="directory of <commit>.json facts; default.json applies to the rest",
    )
    analyze.add_argument(
        "--filter",
        action="append",
        choices=[k.value for k in IdentifierKind],
        help="identifier kind(s) for filtered rates (repeatable; default all)",
    )
    analyze.add_argument("--plots", action="store_true")
    analyze.add_argument("--workers", type=int)
    analyze.add_argument("--lemma-table")
    analyze.add_argument("--out", required=True)
    common(analyze)
    analyze.set_defaults(func=_cmd_analyze)

    rec = sub.add_parser("recommend", help="rank co-rename candidates")
    rec.add_argument("--src", required=True)
    rec.add_argument("--old", required=True)
    rec.add_argument("--new", required=True)
    rec.add_argument(
        "--kind", required=True, choices=[k.value for k in IdentifierKind]
    )
    rec.add_argument("--mode", choices=["raw", "lemma"], default="lemma")
    rec.add_argument("--profile", help="prior profile JSON; default built-in")
    rec.add_argument("--min-score", type=float)
    rec.add_argument("--format", choices=["text", "json"], default="text")
    rec.add_argument("--lemma-table")
    common(rec)
    rec.set_defaults(func=_cmd_recommend)

    report = sub.add_parser("report", help="re-emit report files from report.json")
    report.add_argument("--stats", required=True)
    report.add_argument("--out", required=True)
    report.add_argument("--plots", action="store_true")
    common(report)
    report.set_defaults(func=_cmd_report)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        _apply_config(args)
        return args.func(args)
    except CorenameError as exc:
        print(f"corename: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"corename: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
