import pytest

from entailkit.errors import LabelParseError
from entailkit.labels import (
    AmbiguousLabel,
    COVER_OR_FE,
    CompressedLabel,
    EntailmentRelation,
    NEGATION_OR_ALTERNATION,
    SeedLabel,
    format_gold_label,
    parse_compressed_label,
    parse_gold_label,
    parse_seed_label,
)


def test_exactly_seven_relations():
    assert len(EntailmentRelation) == 7


def test_exactly_four_compressed_labels():
    assert len(CompressedLabel) == 4


@pytest.mark.parametrize(
    "text,relation",
    [
        ("FE", EntailmentRelation.FORWARD_ENTAILMENT),
        ("Forward Entailment", EntailmentRelation.FORWARD_ENTAILMENT),
        ("RE", EntailmentRelation.REVERSE_ENTAILMENT),
        ("Neutral", EntailmentRelation.INDEPENDENCE),
        ("independence", EntailmentRelation.INDEPENDENCE),
        ("Negation", EntailmentRelation.NEGATION),
        ("neg", EntailmentRelation.NEGATION),
        ("Alternation", EntailmentRelation.ALTERNATION),
        ("Cover", EntailmentRelation.COVER),
        ("Equivalence", EntailmentRelation.EQUIVALENCE),
    ],
)
def test_parse_relation_aliases(text, relation):
    assert parse_gold_label(text) is relation


def test_parse_ambiguous_labels():
    assert parse_gold_label("Negation|Alternation") == NEGATION_OR_ALTERNATION
    assert parse_gold_label("Cover|FE") == COVER_OR_FE


def test_only_observed_ambiguous_combinations_constructible():
    with pytest.raises(LabelParseError):
        AmbiguousLabel((EntailmentRelation.FORWARD_ENTAILMENT, EntailmentRelation.COVER))
    with pytest.raises(LabelParseError):
        parse_gold_label("FE|RE")


def test_gold_label_round_trip():
    for relation in EntailmentRelation:
        assert parse_gold_label(format_gold_label(relation)) is relation
    for ambiguous in (NEGATION_OR_ALTERNATION, COVER_OR_FE):
        assert parse_gold_label(format_gold_label(ambiguous)) == ambiguous


def test_unknown_labels_raise():
    with pytest.raises(LabelParseError):
        parse_gold_label("Paradox")
    with pytest.raises(LabelParseError):
        parse_compressed_label("Alternation")  # not in the compressed space
    with pytest.raises(LabelParseError):
        parse_seed_label("Unknown")


def test_seed_labels():
    assert parse_seed_label("entailment") is SeedLabel.ENTAILMENT
    assert parse_seed_label("Contradiction") is SeedLabel.CONTRADICTION
