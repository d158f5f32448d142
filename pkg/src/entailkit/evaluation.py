"""Label compression, the reversed-direction heuristic, scoring, slice
reports, and cross-validation folds."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import (
    AlignmentError,
    FoldConfigError,
    LabelParseError,
    MissingReversePrediction,
)
from .labels import (
    COMPRESSED_TEXT,
    AmbiguousLabel,
    CompressedLabel,
    EXCLUDED,
    EntailmentRelation,
    Excluded,
    GoldLabel,
    parse_compressed_label,
)
from .lexicon import SLOT_ORDER
from .pipeline import modifier_type_bucket
from .records import DatasetRecord

THREE_WAY = ("Entailment", "Contradiction", "Neutral")

#: Tie-break order when deriving a label from scores.
SCORE_ORDER = {"Entailment": 0, "Contradiction": 1, "Neutral": 2}

COMPRESSED_ORDER = (
    CompressedLabel.FORWARD_ENTAILMENT,
    CompressedLabel.REVERSE_ENTAILMENT,
    CompressedLabel.CONTRADICTION,
    CompressedLabel.NEUTRAL,
)


def compress_gold_label(gold: Optional[GoldLabel]) -> Union[CompressedLabel, Excluded]:
    """Seven relations (plus the two ambiguous labels) down to four classes.

    Equivalence and Cover|FE are excluded; Negation and Alternation merge into
    Contradiction; Cover and Independence become Neutral. Unlabeled ingested
    rows are excluded too.
    """
    if gold is None:
        return EXCLUDED
    if isinstance(gold, AmbiguousLabel):
        compressed = {compress_gold_label(alt) for alt in gold.alternatives}
        if len(compressed) == 1:
            return compressed.pop()
        return EXCLUDED
    return {
        EntailmentRelation.FORWARD_ENTAILMENT: CompressedLabel.FORWARD_ENTAILMENT,
        EntailmentRelation.REVERSE_ENTAILMENT: CompressedLabel.REVERSE_ENTAILMENT,
        EntailmentRelation.NEGATION: CompressedLabel.CONTRADICTION,
        EntailmentRelation.ALTERNATION: CompressedLabel.CONTRADICTION,
        EntailmentRelation.COVER: CompressedLabel.NEUTRAL,
        EntailmentRelation.INDEPENDENCE: CompressedLabel.NEUTRAL,
        EntailmentRelation.EQUIVALENCE: EXCLUDED,
    }[gold]


@dataclass(frozen=True)
class PredictionRecord:
    """One external model judgment (forward plus optional reversed run)."""

    id: str
    forward_label: str
    reverse_label: Optional[str] = None
    forward_scores: Optional[tuple[float, float, float]] = None

    def validate(self):
        if self.forward_label not in THREE_WAY:
            raise LabelParseError(f"{self.id}: bad forward label {self.forward_label!r}")
        if self.reverse_label is not None and self.reverse_label not in THREE_WAY:
            raise LabelParseError(f"{self.id}: bad reverse label {self.reverse_label!r}")
        if self.forward_scores is not None:
            if len(self.forward_scores) != 3:
                raise LabelParseError(f"{self.id}: forward_scores must have 3 entries")
            if abs(sum(self.forward_scores) - 1.0) > 1e-6:
                raise LabelParseError(f"{self.id}: forward_scores must sum to 1")
        return self


def label_from_scores(scores) -> str:
    """Argmax with the fixed Entailment < Contradiction < Neutral tie-break."""
    best = max(range(3), key=lambda i: (scores[i], -i))
    return THREE_WAY[best]


def derive_four_way(pred: PredictionRecord) -> CompressedLabel:
    """Map a three-way judgment into the four-way space.

    A Neutral forward call is retried in the reversed direction; reversed
    Entailment means ReverseEntailment, anything else stays Neutral.
    """
    if pred.forward_label == "Entailment":
        return CompressedLabel.FORWARD_ENTAILMENT
    if pred.forward_label == "Contradiction":
        return CompressedLabel.CONTRADICTION
    if pred.reverse_label is None:
        raise MissingReversePrediction(
            f"{pred.id}: Neutral forward prediction needs a reverse prediction"
        )
    if pred.reverse_label == "Entailment":
        return CompressedLabel.REVERSE_ENTAILMENT
    return CompressedLabel.NEUTRAL


def parse_prediction_line(line: str) -> PredictionRecord:
    data = json.loads(line)
    scores = data.get("forward_scores")
    return PredictionRecord(
        id=str(data["id"]),
        forward_label=data["forward_label"],
        reverse_label=data.get("reverse_label"),
        forward_scores=tuple(scores) if scores else None,
    ).validate()


def read_predictions(path) -> list[PredictionRecord]:
    preds = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                preds.append(parse_prediction_line(line))
    return preds


@dataclass
class MetricReport:
    f1: float
    precision: float
    recall: float
    accuracy: float
    per_class: dict
    support: int
    slices: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {
            "f1": self.f1,
            "precision": self.precision,
            "recall": self.recall,
            "accuracy": self.accuracy,
            "support": self.support,
            "per_class": self.per_class,
        }
        if self.slices is not None:
            out["slices"] = {k: v.to_dict() for k, v in self.slices.items()}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render_table(self, name: str = "overall") -> str:
        """Aligned-text table in the familiar F1/Precision/Recall/Accuracy layout."""
        rows = [(name, self)]
        if self.slices:
            rows += list(self.slices.items())
        width = max(len(r[0]) for r in rows) + 2
        head = f"{'':{width}}{'F1':>8}{'Precision':>11}{'Recall':>8}{'Accuracy':>10}{'N':>7}"
        lines = [head]
        for label, rep in rows:
            lines.append(
                f"{label:{width}}{rep.f1:>8.4f}{rep.precision:>11.4f}"
                f"{rep.recall:>8.4f}{rep.accuracy:>10.4f}{rep.support:>7d}"
            )
        return "\n".join(lines) + "\n"


def score(
    gold: list[CompressedLabel],
    pred: list[CompressedLabel],
    average: str = "macro",
) -> MetricReport:
    """Averaged precision/recall/F1 over classes with gold support, plus
    exact-match accuracy. Excluded golds must be filtered beforehand."""
    if len(gold) != len(pred):
        raise AlignmentError(f"{len(gold)} gold labels vs {len(pred)} predictions")
    if average not in ("macro", "weighted"):
        raise ValueError(f"average must be macro or weighted, got {average!r}")

    total = len(gold)
    correct = sum(1 for g, p in zip(gold, pred) if g is p)
    per_class = {}
    sums = {"precision": 0.0, "recall": 0.0, "f1": 0.0}
    supported = 0
    for cls in COMPRESSED_ORDER:
        tp = sum(1 for g, p in zip(gold, pred) if g is cls and p is cls)
        fp = sum(1 for g, p in zip(gold, pred) if g is not cls and p is cls)
        fn = sum(1 for g, p in zip(gold, pred) if g is cls and p is not cls)
        support = tp + fn
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / support if support else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[COMPRESSED_TEXT[cls]] = {
            "precision": precision,
            "recall": recall,
            "f1": f1,
            "support": support,
        }
        if support:
            weight = support if average == "weighted" else 1
            supported += weight
            sums["precision"] += weight * precision
            sums["recall"] += weight * recall
            sums["f1"] += weight * f1
    div = supported if supported else 1
    return MetricReport(
        f1=sums["f1"] / div,
        precision=sums["precision"] / div,
        recall=sums["recall"] / div,
        accuracy=correct / total if total else 0.0,
        per_class=per_class,
        support=total,
    )


def _scorable(records, preds_by_id):
    gold = []
    pred = []
    for record in records:
        compressed = compress_gold_label(record.gold_label)
        if compressed is EXCLUDED:
            continue
        if record.id not in preds_by_id:
            raise AlignmentError(f"no prediction for record {record.id}")
        gold.append(compressed)
        pred.append(derive_four_way(preds_by_id[record.id]))
    return gold, pred


def score_records(
    records: list[DatasetRecord],
    predictions: list[PredictionRecord],
    average: str = "macro",
) -> MetricReport:
    preds_by_id = {p.id: p for p in predictions}
    if len(preds_by_id) != len(predictions):
        raise AlignmentError("duplicate prediction ids")
    gold, pred = _scorable(records, preds_by_id)
    return score(gold, pred, average=average)


def slice_report(
    records: list[DatasetRecord],
    predictions: list[PredictionRecord],
    axis: str,
    average: str = "macro",
) -> MetricReport:
    """Overall report plus one sub-report per axis value.

    axis "modifier_type" buckets universal/existential/negation and the merged
    adjective_adverb family; axis "slot" buckets subject/verb/object, counting
    multi-slot records in each slot they touch. Unmodified records appear only
    in the overall numbers; empty slices are omitted.
    """
    if axis not in ("modifier_type", "slot"):
        raise ValueError(f"axis must be modifier_type or slot, got {axis!r}")
    preds_by_id = {p.id: p for p in predictions}
    overall = score_records(records, predictions, average=average)

    buckets: dict[str, list[DatasetRecord]] = {}
    if axis == "modifier_type":
        keys = ["universal", "existential", "negation", "adjective_adverb"]
        for record in records:
            if record.modifier_type is not None:
                buckets.setdefault(modifier_type_bucket(record.modifier_type), []).append(record)
    else:
        keys = [s.value for s in SLOT_ORDER]
        for record in records:
            for slot in record.slots:
                buckets.setdefault(slot.value, []).append(record)

    slices = {}
    for key in keys:
        subset = buckets.get(key)
        if not subset:
            continue
        gold, pred = _scorable(subset, preds_by_id)
        report = score(gold, pred, average=average)
        report.support = len(subset)  # slice size includes excluded-gold rows
        slices[key] = report
    overall.slices = slices
    return overall


def make_folds(ids: list[str], k: int, seed: int) -> list[tuple[list[str], list[str]]]:
    """Deterministic shuffled partition into k folds of near-equal size."""
    if k < 2 or k > len(ids):
        raise FoldConfigError(f"fold count {k} invalid for {len(ids)} records")
    if len(set(ids)) != len(ids):
        raise FoldConfigError("record ids must be unique")
    shuffled = sorted(ids)
    random.Random(seed).shuffle(shuffled)
    base, extra = divmod(len(shuffled), k)
    folds = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        folds.append(shuffled[start : start + size])
        start += size
    out = []
    for i in range(k):
        test = folds[i]
        train = [x for j, fold in enumerate(folds) if j != i for x in fold]
        out.append((train, test))
    return out


def folds_to_dict(folds) -> dict:
    return {
        "k": len(folds),
        "folds": [{"train": train, "test": test} for train, test in folds],
    }
