#!/usr/bin/env python3
"""Build the vendored released-data snapshot fixture.

The real release cannot be fetched in this environment, so the fixture is
synthesized to the published marginals: 1,304 records = 1,289 modified + 15
originals; modifier-type counts 217/303/167/602; slot counts 560/220/509;
label counts 223/27/121/54/260/393/7/1/1 (summing 1,087, leaving 217 rows
without a consensus label); negation-by-slot 86/41/40 with Neutral 65/31/22;
verb-slot mix universal 89 / negation 41 / adverbs 90 (universal-with-Neutral
49). Texts come from the generator; labels are frozen as given.

Run from the repo root:  python3 tools/make_snapshot.py
"""

import random
import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from entailkit.labels import parse_gold_label
from entailkit.pipeline import build_dataset, compute_stats, modifier_type_bucket, records_to_csv
from entailkit.records import DatasetRecord

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

LABELS = ("FE", "RE", "Alternation", "Negation", "Negation|Alternation",
          "Neutral", "Equivalence", "Cover", "Cover|FE", None)

# (modifier bucket, slot) -> counts per label column above; row sums are the
# cell sizes. Column sums hit the published label counts exactly.
JOINT = {
    ("universal", "subject"):          (18, 5, 2, 2, 8, 20, 0, 0, 0, 15),
    ("universal", "verb"):             (10, 2, 3, 2, 10, 49, 0, 1, 0, 12),
    ("universal", "object"):           (15, 4, 2, 1, 6, 15, 0, 0, 0, 15),
    ("existential", "subject"):        (40, 6, 5, 3, 30, 55, 2, 0, 1, 38),
    ("existential", "object"):         (25, 4, 4, 2, 25, 35, 1, 0, 0, 27),
    ("negation", "subject"):           (2, 1, 5, 4, 7, 65, 0, 0, 0, 2),
    ("negation", "verb"):              (1, 0, 2, 3, 3, 31, 0, 0, 0, 1),
    ("negation", "object"):            (2, 1, 3, 2, 8, 22, 0, 0, 0, 2),
    ("adjective_adverb", "subject"):   (55, 2, 40, 15, 70, 25, 2, 0, 0, 15),
    ("adjective_adverb", "verb"):      (20, 1, 12, 8, 28, 11, 1, 0, 0, 9),
    ("adjective_adverb", "object"):    (30, 1, 40, 10, 65, 60, 1, 0, 0, 81),
}


def main():
    rng = random.Random(20230707)
    records, _ = build_dataset()

    pool = defaultdict(list)
    for r in records:
        if len(r.slots) == 1 and r.modifier_type is not None:
            slot = next(iter(r.slots)).value
            pool[(modifier_type_bucket(r.modifier_type), slot)].append(r)
    originals = [r for r in records if not r.slots]

    rows = []
    for cell, counts in JOINT.items():
        need = sum(counts)
        candidates = pool[cell]
        if len(candidates) < need:
            raise SystemExit(f"cell {cell}: need {need}, only {len(candidates)} generated")
        chosen = candidates[:need]
        labels = [lab for lab, c in zip(LABELS, counts) for _ in range(c)]
        rng.shuffle(labels)
        for rec, lab in zip(chosen, labels):
            rows.append((rec, lab))
    rng.shuffle(rows)
    for orig in originals:
        rows.append((orig, None if orig.gold_label is None else None))

    out_records = []
    for i, (rec, lab) in enumerate(rows, start=1):
        if not rec.slots:  # originals keep their frozen seed relation
            gold = rec.gold_label
        else:
            gold = parse_gold_label(lab) if lab else None
        out_records.append(
            DatasetRecord(
                id=f"r{i:04d}",
                seed_id=rec.seed_id,
                premise=rec.premise,
                hypothesis=rec.hypothesis,
                premise_modified=rec.premise_modified,
                hypothesis_modified=rec.hypothesis_modified,
                slots=rec.slots,
                modifier_surface=rec.modifier_surface,
                modifier_type=rec.modifier_type,
                seed_label=rec.seed_label,
                gold_label=gold,
            ).validate()
        )

    manifest = compute_stats(out_records)
    expect = {
        "record_count": 1304,
        "modifier": {"universal": 217, "existential": 303, "negation": 167, "adjective_adverb": 602},
        "slot": {"subject": 560, "verb": 220, "object": 509},
        "labels": {"FE": 223, "RE": 27, "Alternation": 121, "Negation": 54,
                   "Negation|Alternation": 260, "Neutral": 393, "Equivalence": 7,
                   "Cover": 1, "Cover|FE": 1},
        "unlabeled": 217,
    }
    assert manifest.record_count == expect["record_count"], manifest.record_count
    assert manifest.counts_by_modifier_type == expect["modifier"], manifest.counts_by_modifier_type
    assert manifest.counts_by_slot == expect["slot"], manifest.counts_by_slot
    assert manifest.counts_by_gold_label == expect["labels"], manifest.counts_by_gold_label
    assert manifest.unlabeled_count == expect["unlabeled"]

    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / "released_snapshot.csv").write_text(records_to_csv(out_records), encoding="utf-8")
    (FIXTURES / "sicck_columns.toml").write_text(
        "# released-layout column mapping (key = csv column)\n"
        "id = id\n"
        "seed_id = seed_id\n"
        "premise = premise\n"
        "hypothesis = hypothesis\n"
        "pair_combination = pair_combination\n"
        "slot = svo\n"
        "modifier_type = modifier_type\n"
        "modifier_surface = modifier\n"
        "seed_label = original_label\n"
        "gold_label = adjusted_label\n",
        encoding="utf-8",
    )
    print(f"wrote {len(out_records)} snapshot rows")


if __name__ == "__main__":
    main()
