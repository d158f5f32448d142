#!/usr/bin/env python3
"""Build vendored prediction fixtures over the released snapshot.

predictions_perfect.jsonl inverts the label compression (every scorable row
scores exact); predictions_noisy.jsonl degrades a deterministic fraction of
rows so slice reports have something to show.
"""

import hashlib
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from entailkit.evaluation import compress_gold_label
from entailkit.labels import EXCLUDED, CompressedLabel
from entailkit.pipeline import ingest_dataset, parse_column_config

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

_FORWARD = {
    CompressedLabel.FORWARD_ENTAILMENT: ("Entailment", "Neutral"),
    CompressedLabel.REVERSE_ENTAILMENT: ("Neutral", "Entailment"),
    CompressedLabel.CONTRADICTION: ("Contradiction", "Contradiction"),
    CompressedLabel.NEUTRAL: ("Neutral", "Neutral"),
}

_CYCLE = ["Entailment", "Contradiction", "Neutral"]


def main():
    columns = parse_column_config((FIXTURES / "sicck_columns.toml").read_text())
    records, _ = ingest_dataset(FIXTURES / "released_snapshot.csv", columns)

    perfect = []
    noisy = []
    for record in records:
        compressed = compress_gold_label(record.gold_label)
        if compressed is EXCLUDED:
            forward, reverse = "Neutral", "Neutral"
        else:
            forward, reverse = _FORWARD[compressed]
        perfect.append({"id": record.id, "forward_label": forward, "reverse_label": reverse})

        digest = hashlib.sha256(record.id.encode()).digest()
        if digest[0] % 5 == 0:  # deterministic ~20% corruption
            forward = _CYCLE[(_CYCLE.index(forward) + 1 + digest[1] % 2) % 3]
        if digest[2] % 7 == 0:
            reverse = _CYCLE[digest[3] % 3]
        noisy.append({"id": record.id, "forward_label": forward, "reverse_label": reverse})

    for name, rows in (("predictions_perfect.jsonl", perfect), ("predictions_noisy.jsonl", noisy)):
        text = "".join(json.dumps(r) + "\n" for r in rows)
        (FIXTURES / name).write_text(text, encoding="utf-8")
        print(f"wrote {name} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
