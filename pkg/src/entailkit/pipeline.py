"""Corpus building, ingestion of released data, and summary statistics."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field

from .errors import ConfigError, EntailkitError, IngestError, LabelParseError
from .labels import (
    AmbiguousLabel,
    EntailmentRelation,
    SeedLabel,
    format_gold_label,
    parse_gold_label,
    parse_seed_label,
)
from .lexicon import Lexicon, ModifierType, SLOT_ORDER, Slot, load_default_lexicon
from .modify import combo_code, enumerate_combinations, generate_variants
from .parsing import parse_sentence
from .records import DatasetRecord, dump_records, record_to_dict
from .seeds import SeedPair, load_seeds
from .semantics import annotate_pair, derive_axioms, interpret

#: Fixed manifest axes (adjectives and adverbs are counted together, matching
#: the dataset's reporting convention).
MODIFIER_TYPE_BUCKETS = ("universal", "existential", "negation", "adjective_adverb")
LABEL_ORDER = (
    "FE",
    "RE",
    "Alternation",
    "Negation",
    "Negation|Alternation",
    "Neutral",
    "Equivalence",
    "Cover",
    "Cover|FE",
)


def modifier_type_bucket(mtype: ModifierType) -> str:
    if mtype in (ModifierType.ADJECTIVE, ModifierType.ADVERB):
        return "adjective_adverb"
    return mtype.value


@dataclass
class CorpusManifest:
    record_count: int = 0
    counts_by_modifier_type: dict = field(default_factory=dict)
    counts_by_slot: dict = field(default_factory=dict)
    counts_by_gold_label: dict = field(default_factory=dict)
    unlabeled_count: int = 0
    totals: dict = field(default_factory=dict)
    source_checksum: str = ""

    def validate(self):
        labeled = sum(self.counts_by_gold_label.values())
        if labeled + self.unlabeled_count != self.record_count:
            raise ConfigError(
                "manifest inconsistent: labels + unlabeled != record count"
            )
        return self

    def to_dict(self) -> dict:
        return {
            "record_count": self.record_count,
            "counts_by_modifier_type": self.counts_by_modifier_type,
            "counts_by_slot": self.counts_by_slot,
            "counts_by_gold_label": self.counts_by_gold_label,
            "unlabeled_count": self.unlabeled_count,
            "totals": self.totals,
            "source_checksum": self.source_checksum,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def compute_stats(records: list[DatasetRecord], source_checksum: str = "") -> CorpusManifest:
    """Exact counts; multi-slot records increment every slot they touch.

    The totals block reports the three views side by side: all records, the
    modified subset (the modifier-type axis), and the labeled subset (the
    label axis). For the released snapshot these three disagree, and the
    manifest surfaces that rather than reconciling it.
    """
    by_type = {k: 0 for k in MODIFIER_TYPE_BUCKETS}
    by_slot = {s.value: 0 for s in SLOT_ORDER}
    by_label = {k: 0 for k in LABEL_ORDER}
    unlabeled = 0
    modified = 0
    for record in records:
        if record.premise_modified or record.hypothesis_modified:
            modified += 1
            if record.modifier_type is not None:
                by_type[modifier_type_bucket(record.modifier_type)] += 1
            for slot in SLOT_ORDER:
                if slot in record.slots:
                    by_slot[slot.value] += 1
        if record.gold_label is None:
            unlabeled += 1
        else:
            text = format_gold_label(record.gold_label)
            by_label[text] = by_label.get(text, 0) + 1
    manifest = CorpusManifest(
        record_count=len(records),
        counts_by_modifier_type=by_type,
        counts_by_slot=by_slot,
        counts_by_gold_label=by_label,
        unlabeled_count=unlabeled,
        totals={
            "records": len(records),
            "modified": modified,
            "labeled": len(records) - unlabeled,
        },
        source_checksum=source_checksum,
    )
    return manifest.validate()


def checksum_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# generation

def build_dataset(
    seeds: list[SeedPair] | None = None,
    lexicon: Lexicon | None = None,
    max_entities: int = 3,
    include_originals: bool = True,
) -> tuple[list[DatasetRecord], CorpusManifest]:
    """Expand every seed over all modification combos and annotate each pair.

    Every record's gold label is exactly the oracle's output; the originals
    carry the frozen seed-relation mapping. Duplicate (premise, hypothesis,
    gold) surface triples are dropped, keeping the first occurrence.
    """
    seeds = seeds if seeds is not None else load_seeds()
    lexicon = lexicon or load_default_lexicon()

    records: list[DatasetRecord] = []
    seen: set[tuple] = set()
    for seed in seeds:
        try:
            premise = parse_sentence(seed.premise, lexicon)
            hypothesis = parse_sentence(seed.hypothesis, lexicon)
            axioms = derive_axioms(interpret(premise), interpret(hypothesis), seed.relation)
            for combo in enumerate_combinations(premise, hypothesis, lexicon):
                for pair in generate_variants(premise, hypothesis, combo, lexicon):
                    gold = annotate_pair(
                        pair.premise,
                        pair.hypothesis,
                        seed.relation,
                        axioms=axioms,
                        max_entities=max_entities,
                    )
                    side = {
                        (True, False): "p",
                        (False, True): "h",
                        (True, True): "b",
                    }[(pair.premise_modified, pair.hypothesis_modified)]
                    record = DatasetRecord(
                        id=f"s{seed.seed_id:02d}-{combo_code(combo)}-{side}",
                        seed_id=seed.seed_id,
                        premise=pair.premise.render(),
                        hypothesis=pair.hypothesis.render(),
                        premise_modified=pair.premise_modified,
                        hypothesis_modified=pair.hypothesis_modified,
                        slots=pair.slots,
                        modifier_surface="+".join(m.surface for m in pair.modifiers),
                        modifier_type=pair.modifiers[0].modifier_type,
                        seed_label=seed.seed_label,
                        gold_label=gold,
                    ).validate()
                    key = (record.premise, record.hypothesis, record.gold_label)
                    if key in seen:
                        continue
                    seen.add(key)
                    records.append(record)
        except EntailkitError as exc:
            raise type(exc)(f"seed {seed.seed_id}: {exc}") from exc

    if include_originals:
        for seed in seeds:
            record = DatasetRecord(
                id=f"s{seed.seed_id:02d}-orig",
                seed_id=seed.seed_id,
                premise=seed.premise,
                hypothesis=seed.hypothesis,
                premise_modified=False,
                hypothesis_modified=False,
                slots=frozenset(),
                modifier_surface=None,
                modifier_type=None,
                seed_label=seed.seed_label,
                gold_label=seed.relation,
            ).validate()
            key = (record.premise, record.hypothesis, record.gold_label)
            if key not in seen:
                seen.add(key)
                records.append(record)

    manifest = compute_stats(records, source_checksum=checksum_text(dump_records(records)))
    return records, manifest


# ---------------------------------------------------------------------------
# ingestion

DEFAULT_COLUMNS = {
    "id": "id",
    "seed_id": "seed_id",
    "premise": "premise",
    "hypothesis": "hypothesis",
    "pair_combination": "pair_combination",
    "slot": "svo",
    "modifier_type": "modifier_type",
    "modifier_surface": "modifier",
    "seed_label": "original_label",
    "gold_label": "adjusted_label",
}

_COMBINATION_VALUES = {
    "premise": (True, False),
    "hypothesis": (False, True),
    "both": (True, True),
    "none": (False, False),
}


def parse_column_config(text: str) -> dict:
    """Tiny key = value config mapping canonical fields to CSV columns."""
    mapping = dict(DEFAULT_COLUMNS)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"column config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in DEFAULT_COLUMNS:
            raise ConfigError(f"column config line {lineno}: unknown field {key!r}")
        mapping[key] = value.strip().strip('"')
    return mapping


def _record_from_csv_row(row: dict, columns: dict, lineno: int) -> DatasetRecord:
    def cell(field, required=True):
        col = columns[field]
        value = row.get(col)
        if value is None and required:
            raise LabelParseError(f"missing column {col!r}")
        return value.strip() if isinstance(value, str) else value

    combo = (cell("pair_combination") or "none").lower()
    if combo not in _COMBINATION_VALUES:
        raise LabelParseError(f"bad pair_combination {combo!r}")
    p_mod, h_mod = _COMBINATION_VALUES[combo]

    slots_text = cell("slot", required=False) or ""
    slots = frozenset(
        Slot(part.strip().lower()) for part in slots_text.split("+") if part.strip()
    )
    mtype_text = cell("modifier_type", required=False) or ""
    gold_text = cell("gold_label", required=False) or ""
    return DatasetRecord(
        id=cell("id") or f"row{lineno}",
        seed_id=int(cell("seed_id")),
        premise=cell("premise"),
        hypothesis=cell("hypothesis"),
        premise_modified=p_mod,
        hypothesis_modified=h_mod,
        slots=slots,
        modifier_surface=cell("modifier_surface", required=False) or None,
        modifier_type=ModifierType(mtype_text.lower()) if mtype_text else None,
        seed_label=parse_seed_label(cell("seed_label")),
        gold_label=parse_gold_label(gold_text) if gold_text else None,
    ).validate()


def ingest_dataset(path, column_config: dict | None = None) -> tuple[list[DatasetRecord], CorpusManifest]:
    """Read a dataset file (canonical JSONL or released CSV layout), validate
    every row, and compute the manifest."""
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    if str(path).endswith(".csv"):
        records = _ingest_csv(text, column_config or dict(DEFAULT_COLUMNS), source=str(path))
    else:
        from .records import parse_records

        records = parse_records(text, source=str(path))
    manifest = compute_stats(records, source_checksum=checksum_text(text))
    return records, manifest


def _ingest_csv(text: str, columns: dict, source: str) -> list[DatasetRecord]:
    reader = csv.DictReader(io.StringIO(text))
    records = []
    errors = []
    for lineno, row in enumerate(reader, start=2):  # header is line 1
        try:
            records.append(_record_from_csv_row(row, columns, lineno))
        except (KeyError, ValueError, TypeError, LabelParseError) as exc:
            errors.append((lineno, str(exc)))
    if errors:
        raise IngestError(f"{source}: {len(errors)} invalid row(s)", errors)
    return records


def records_to_csv(records: list[DatasetRecord], columns: dict | None = None) -> str:
    """Serialize records in the released CSV layout (the ingest inverse)."""
    columns = columns or dict(DEFAULT_COLUMNS)
    out = io.StringIO()
    fieldnames = [columns[k] for k in DEFAULT_COLUMNS]
    writer = csv.DictWriter(out, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for r in records:
        combo = {
            (True, False): "premise",
            (False, True): "hypothesis",
            (True, True): "both",
            (False, False): "none",
        }[(r.premise_modified, r.hypothesis_modified)]
        writer.writerow(
            {
                columns["id"]: r.id,
                columns["seed_id"]: r.seed_id,
                columns["premise"]: r.premise,
                columns["hypothesis"]: r.hypothesis,
                columns["pair_combination"]: combo,
                columns["slot"]: "+".join(s.value for s in SLOT_ORDER if s in r.slots),
                columns["modifier_type"]: r.modifier_type.value if r.modifier_type else "",
                columns["modifier_surface"]: r.modifier_surface or "",
                columns["seed_label"]: r.seed_label.value,
                columns["gold_label"]: format_gold_label(r.gold_label) if r.gold_label else "",
            }
        )
    return out.getvalue()
