"""Label vocabularies.

Three disjoint label spaces live here:

* the seven natural-logic entailment relations (the full gold vocabulary),
* ambiguous annotator labels (exactly the two combinations occurring in the
  released data),
* the four-way compressed space that external three-label NLI systems are
  scored against, plus the Excluded sentinel produced by compression.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import LabelParseError


class EntailmentRelation(enum.Enum):
    EQUIVALENCE = "equivalence"
    FORWARD_ENTAILMENT = "forward_entailment"
    REVERSE_ENTAILMENT = "reverse_entailment"
    NEGATION = "negation"
    ALTERNATION = "alternation"
    COVER = "cover"
    INDEPENDENCE = "independence"

    def __repr__(self):
        return f"EntailmentRelation.{self.name}"


#: Canonical on-disk text for each relation ("Neutral" is the conventional
#: surface name of Independence in the dataset files).
RELATION_TEXT = {
    EntailmentRelation.EQUIVALENCE: "Equivalence",
    EntailmentRelation.FORWARD_ENTAILMENT: "FE",
    EntailmentRelation.REVERSE_ENTAILMENT: "RE",
    EntailmentRelation.NEGATION: "Negation",
    EntailmentRelation.ALTERNATION: "Alternation",
    EntailmentRelation.COVER: "Cover",
    EntailmentRelation.INDEPENDENCE: "Neutral",
}

_RELATION_ALIASES = {
    "equivalence": EntailmentRelation.EQUIVALENCE,
    "equiv": EntailmentRelation.EQUIVALENCE,
    "fe": EntailmentRelation.FORWARD_ENTAILMENT,
    "forward entailment": EntailmentRelation.FORWARD_ENTAILMENT,
    "forward_entailment": EntailmentRelation.FORWARD_ENTAILMENT,
    "re": EntailmentRelation.REVERSE_ENTAILMENT,
    "reverse entailment": EntailmentRelation.REVERSE_ENTAILMENT,
    "reverse_entailment": EntailmentRelation.REVERSE_ENTAILMENT,
    "negation": EntailmentRelation.NEGATION,
    "neg": EntailmentRelation.NEGATION,
    "alternation": EntailmentRelation.ALTERNATION,
    "cover": EntailmentRelation.COVER,
    "independence": EntailmentRelation.INDEPENDENCE,
    "neutral": EntailmentRelation.INDEPENDENCE,
}


@dataclass(frozen=True)
class AmbiguousLabel:
    """An unresolved two-way annotator label.

    Only the two combinations observed in the released data are
    constructible: Negation|Alternation and Cover|FE.
    """

    alternatives: tuple[EntailmentRelation, EntailmentRelation]

    _ALLOWED = (
        (EntailmentRelation.NEGATION, EntailmentRelation.ALTERNATION),
        (EntailmentRelation.COVER, EntailmentRelation.FORWARD_ENTAILMENT),
    )

    def __post_init__(self):
        if tuple(self.alternatives) not in self._ALLOWED:
            raise LabelParseError(
                f"unsupported ambiguous label combination: {self.alternatives}"
            )

    @property
    def text(self) -> str:
        return "|".join(RELATION_TEXT[r] for r in self.alternatives)


NEGATION_OR_ALTERNATION = AmbiguousLabel(
    (EntailmentRelation.NEGATION, EntailmentRelation.ALTERNATION)
)
COVER_OR_FE = AmbiguousLabel(
    (EntailmentRelation.COVER, EntailmentRelation.FORWARD_ENTAILMENT)
)

#: A gold label is a single relation or an explicit ambiguous label.
GoldLabel = Union[EntailmentRelation, AmbiguousLabel]


def parse_gold_label(text: str) -> GoldLabel:
    """Parse gold-label text (canonical or released-data spelling)."""
    key = text.strip()
    if "|" in key:
        parts = [p.strip().lower() for p in key.split("|")]
        try:
            alts = tuple(_RELATION_ALIASES[p] for p in parts)
        except KeyError:
            raise LabelParseError(f"unknown gold label: {text!r}") from None
        return AmbiguousLabel(alts)  # validates the combination
    rel = _RELATION_ALIASES.get(key.lower())
    if rel is None:
        raise LabelParseError(f"unknown gold label: {text!r}")
    return rel


def format_gold_label(label: GoldLabel) -> str:
    if isinstance(label, AmbiguousLabel):
        return label.text
    return RELATION_TEXT[label]


class CompressedLabel(enum.Enum):
    """The four-way space the scorer accepts."""

    FORWARD_ENTAILMENT = "forward_entailment"
    REVERSE_ENTAILMENT = "reverse_entailment"
    CONTRADICTION = "contradiction"
    NEUTRAL = "neutral"

    def __repr__(self):
        return f"CompressedLabel.{self.name}"


COMPRESSED_TEXT = {
    CompressedLabel.FORWARD_ENTAILMENT: "FE",
    CompressedLabel.REVERSE_ENTAILMENT: "RE",
    CompressedLabel.CONTRADICTION: "Contradiction",
    CompressedLabel.NEUTRAL: "Neutral",
}

_COMPRESSED_ALIASES = {
    "fe": CompressedLabel.FORWARD_ENTAILMENT,
    "forward entailment": CompressedLabel.FORWARD_ENTAILMENT,
    "forward_entailment": CompressedLabel.FORWARD_ENTAILMENT,
    "re": CompressedLabel.REVERSE_ENTAILMENT,
    "reverse entailment": CompressedLabel.REVERSE_ENTAILMENT,
    "reverse_entailment": CompressedLabel.REVERSE_ENTAILMENT,
    "contradiction": CompressedLabel.CONTRADICTION,
    "neutral": CompressedLabel.NEUTRAL,
}


def parse_compressed_label(text: str) -> CompressedLabel:
    label = _COMPRESSED_ALIASES.get(text.strip().lower())
    if label is None:
        raise LabelParseError(f"unknown compressed label: {text!r}")
    return label


class Excluded(enum.Enum):
    """Sentinel for records removed by label compression."""

    EXCLUDED = "excluded"

    def __repr__(self):
        return "EXCLUDED"


EXCLUDED = Excluded.EXCLUDED


class SeedLabel(enum.Enum):
    """The three-way label carried by the original seed pairs."""

    ENTAILMENT = "Entailment"
    NEUTRAL = "Neutral"
    CONTRADICTION = "Contradiction"

    def __repr__(self):
        return f"SeedLabel.{self.name}"


def parse_seed_label(text: str) -> SeedLabel:
    for label in SeedLabel:
        if label.value.lower() == text.strip().lower():
            return label
    raise LabelParseError(f"unknown seed label: {text!r}")
