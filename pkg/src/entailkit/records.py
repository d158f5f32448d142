"""Dataset records and their line-delimited serialization.

The canonical on-disk format is one JSON object per line, UTF-8, with the
fixed field order produced by :func:`record_to_dict`. Ingested released-data
rows may lack a gold label (no annotator consensus); generated records always
carry one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import IngestError, LabelParseError
from .labels import (
    GoldLabel,
    SeedLabel,
    format_gold_label,
    parse_gold_label,
    parse_seed_label,
)
from .lexicon import ModifierType, SLOT_ORDER, Slot

ALLOWED_SLOT_SETS = (
    frozenset(),
    frozenset({Slot.SUBJECT}),
    frozenset({Slot.VERB}),
    frozenset({Slot.OBJECT}),
    frozenset({Slot.SUBJECT, Slot.OBJECT}),
    frozenset({Slot.VERB, Slot.OBJECT}),
)


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    seed_id: int
    premise: str
    hypothesis: str
    premise_modified: bool
    hypothesis_modified: bool
    slots: frozenset[Slot]
    modifier_surface: Optional[str]
    modifier_type: Optional[ModifierType]
    seed_label: SeedLabel
    gold_label: Optional[GoldLabel]

    def validate(self):
        if not 1 <= self.seed_id <= 15:
            raise ValueError(f"{self.id}: seed_id {self.seed_id} outside 1..15")
        modified = self.premise_modified or self.hypothesis_modified
        if bool(self.slots) != modified:
            raise ValueError(
                f"{self.id}: slots must be nonempty exactly when a side is modified"
            )
        if self.slots not in ALLOWED_SLOT_SETS:
            names = sorted(s.value for s in self.slots)
            raise ValueError(f"{self.id}: slot combination {names} not allowed")
        if modified and self.modifier_surface is None:
            raise ValueError(f"{self.id}: modified record lacks a modifier surface")
        return self


def record_to_dict(record: DatasetRecord) -> dict:
    return {
        "id": record.id,
        "seed_id": record.seed_id,
        "premise": record.premise,
        "hypothesis": record.hypothesis,
        "premise_modified": record.premise_modified,
        "hypothesis_modified": record.hypothesis_modified,
        "slots": [s.value for s in SLOT_ORDER if s in record.slots],
        "modifier_surface": record.modifier_surface,
        "modifier_type": record.modifier_type.value if record.modifier_type else None,
        "seed_label": record.seed_label.value,
        "gold_label": format_gold_label(record.gold_label) if record.gold_label else None,
    }


def record_from_dict(data: dict) -> DatasetRecord:
    gold = data.get("gold_label")
    mtype = data.get("modifier_type")
    return DatasetRecord(
        id=str(data["id"]),
        seed_id=int(data["seed_id"]),
        premise=data["premise"],
        hypothesis=data["hypothesis"],
        premise_modified=bool(data["premise_modified"]),
        hypothesis_modified=bool(data["hypothesis_modified"]),
        slots=frozenset(Slot(s) for s in data.get("slots", [])),
        modifier_surface=data.get("modifier_surface"),
        modifier_type=ModifierType(mtype) if mtype else None,
        seed_label=parse_seed_label(data["seed_label"]),
        gold_label=parse_gold_label(gold) if gold else None,
    ).validate()


def dump_records(records: list[DatasetRecord]) -> str:
    lines = [json.dumps(record_to_dict(r), ensure_ascii=False) for r in records]
    return "\n".join(lines) + ("\n" if lines else "")


def write_records(path, records: list[DatasetRecord]):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dump_records(records))


def parse_records(text: str, source: str = "<input>") -> list[DatasetRecord]:
    records = []
    errors = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(record_from_dict(json.loads(line)))
        except (KeyError, ValueError, TypeError, LabelParseError) as exc:
            errors.append((lineno, str(exc)))
    if errors:
        raise IngestError(f"{source}: {len(errors)} invalid row(s)", errors)
    return records


def read_records(path) -> list[DatasetRecord]:
    with open(path, encoding="utf-8") as handle:
        return parse_records(handle.read(), source=str(path))
