"""Command-line interface.

Exit codes: 0 success, 1 data error, 2 usage error. stdout carries data,
stderr carries diagnostics; every subcommand is deterministic given its flags
(randomness is seeded and the seed is echoed to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EntailkitError
from .evaluation import (
    compress_gold_label,
    folds_to_dict,
    make_folds,
    read_predictions,
    score_records,
    slice_report,
)
from .labels import COMPRESSED_TEXT, EXCLUDED, format_gold_label
from .lexicon import load_default_lexicon
from .parsing import parse_sentence
from .pipeline import (
    build_dataset,
    compute_stats,
    checksum_text,
    ingest_dataset,
    parse_column_config,
)
from .records import read_records, write_records, record_to_dict
from .seeds import load_seeds, seed_by_id
from .semantics import annotate_pair
from .truthsets import dump_join_table, generate_join_table, load_join_table


def _parse_cmd(args) -> int:
    sentence = parse_sentence(args.text)
    out = {
        "tokens": list(sentence.raw_tokens),
        "subject": list(sentence.subject),
        "verb": list(sentence.verb),
        "object": list(sentence.obj) if sentence.obj else None,
        "object_preposition": sentence.object_preposition,
    }
    print(json.dumps(out, ensure_ascii=False))
    return 0


def _generate_cmd(args) -> int:
    print(f"generate: oracle budget maxEntities={args.max_entities}", file=sys.stderr)
    records, manifest = build_dataset(max_entities=args.max_entities)
    write_records(args.out, records)
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8") as handle:
            handle.write(manifest.to_json())
    sys.stdout.write(manifest.to_json())
    return 0


def _annotate_cmd(args) -> int:
    lexicon = load_default_lexicon()
    with open(args.infile, encoding="utf-8") as handle:
        rows = [json.loads(line) for line in handle if line.strip()]
    for row in rows:
        seed = seed_by_id(int(row["seed_id"]))
        premise = parse_sentence(row["premise"], lexicon)
        hypothesis = parse_sentence(row["hypothesis"], lexicon)
        label = annotate_pair(
            premise, hypothesis, seed.relation, max_entities=args.max_entities
        )
        row["gold_label"] = format_gold_label(label)
        print(json.dumps(row, ensure_ascii=False))
    return 0


def _ingest_cmd(args) -> int:
    columns = None
    if args.columns:
        with open(args.columns, encoding="utf-8") as handle:
            columns = parse_column_config(handle.read())
    records, manifest = ingest_dataset(args.infile, columns)
    if args.out:
        write_records(args.out, records)
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8") as handle:
            handle.write(manifest.to_json())
    sys.stdout.write(manifest.to_json())
    return 0


def _stats_cmd(args) -> int:
    columns = None
    if args.columns:
        with open(args.columns, encoding="utf-8") as handle:
            columns = parse_column_config(handle.read())
    _, manifest = ingest_dataset(args.infile, columns)
    sys.stdout.write(manifest.to_json())
    return 0


def _compress_cmd(args) -> int:
    records = read_records(args.infile)
    for record in records:
        compressed = compress_gold_label(record.gold_label)
        row = record_to_dict(record)
        row["compressed_label"] = (
            "Excluded" if compressed is EXCLUDED else COMPRESSED_TEXT[compressed]
        )
        print(json.dumps(row, ensure_ascii=False))
    return 0


def _score_cmd(args) -> int:
    records = read_records(args.gold)
    predictions = read_predictions(args.pred)
    report = score_records(records, predictions, average=args.average)
    if args.table:
        sys.stdout.write(report.render_table())
    else:
        sys.stdout.write(report.to_json())
    return 0


def _slice_cmd(args) -> int:
    records = read_records(args.gold)
    predictions = read_predictions(args.pred)
    report = slice_report(records, predictions, axis=args.axis, average=args.average)
    if args.table:
        sys.stdout.write(report.render_table())
    else:
        sys.stdout.write(report.to_json())
    return 0


def _split_cmd(args) -> int:
    print(f"split: k={args.k} seed={args.seed}", file=sys.stderr)
    records = read_records(args.infile)
    folds = make_folds([r.id for r in records], args.k, args.seed)
    payload = json.dumps(folds_to_dict(folds), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    sys.stdout.write(payload)
    return 0


def _regen_join_cmd(args) -> int:
    table = generate_join_table()
    text = dump_join_table(table)
    if args.check:
        if load_join_table() != table:
            print("join table is stale", file=sys.stderr)
            return 1
        print("join table is current", file=sys.stderr)
        return 0
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entailkit",
        description="Compositional NLI dataset forge and evaluation harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="emit SVO spans for one sentence")
    p.add_argument("--text", required=True)
    p.set_defaults(func=_parse_cmd)

    p = sub.add_parser("generate", help="expand the seeds into a labeled dataset")
    p.add_argument("--out", required=True)
    p.add_argument("--manifest")
    p.add_argument("--max-entities", type=int, default=3)
    p.set_defaults(func=_generate_cmd)

    p = sub.add_parser("annotate", help="label premise/hypothesis pairs (JSONL in)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--max-entities", type=int, default=3)
    p.set_defaults(func=_annotate_cmd)

    p = sub.add_parser("ingest", help="validate a dataset file, emit canonical records")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--columns", help="column-mapping config for CSV input")
    p.add_argument("--out")
    p.add_argument("--manifest")
    p.set_defaults(func=_ingest_cmd)

    p = sub.add_parser("stats", help="manifest counts for a dataset file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--columns")
    p.set_defaults(func=_stats_cmd)

    p = sub.add_parser("compress", help="append four-way compressed labels")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_compress_cmd)

    p = sub.add_parser("score", help="score predictions against gold records")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--average", choices=["macro", "weighted"], default="macro")
    p.add_argument("--table", action="store_true", help="aligned text instead of JSON")
    p.set_defaults(func=_score_cmd)

    p = sub.add_parser("slice", help="per-modifier-type or per-slot score report")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--axis", choices=["modifier_type", "slot"], required=True)
    p.add_argument("--average", choices=["macro", "weighted"], default="macro")
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=_slice_cmd)

    p = sub.add_parser("split", help="deterministic cross-validation folds")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--seed", type=int, default=13)
    p.add_argument("--out")
    p.set_defaults(func=_split_cmd)

    p = sub.add_parser("regen-join-table", help="regenerate the relation join table")
    p.add_argument("--out")
    p.add_argument("--check", action="store_true", help="compare against the bundled table")
    p.set_defaults(func=_regen_join_cmd)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EntailkitError as exc:
        report = exc.report() if hasattr(exc, "report") else str(exc)
        print(f"error: {report}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
