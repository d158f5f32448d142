import pytest

from entailkit.errors import InadmissibleModifier, SlotMissing
from entailkit.lexicon import Slot, load_default_lexicon
from entailkit.modify import (
    ModificationRequest,
    Target,
    apply_modifier,
    combo_code,
    enumerate_combinations,
    generate_variants,
)
from entailkit.parsing import parse_sentence, svo_signature

LEX = load_default_lexicon()


def mod(surface):
    return LEX.by_surface(surface)


@pytest.mark.parametrize(
    "text,slot,surface,expected",
    [
        # the published worked examples
        ("an old man is sitting in a field", Slot.SUBJECT, "every", "every old man is sitting in a field"),
        ("a man is sitting in a field", Slot.VERB, "elegantly", "a man is elegantly sitting in a field"),
        ("an old man is sitting in a field", Slot.OBJECT, "every", "an old man is sitting in every field"),
        ("A deer is jumping over a fence", Slot.VERB, "not", "A deer is not jumping over a fence"),
        # article-repair corners
        ("a man is sitting in a field", Slot.SUBJECT, "every one of", "every one of the man is sitting in a field"),
        ("a man is sitting in a field", Slot.SUBJECT, "at least", "at least one man is sitting in a field"),
        ("Two dogs are playing by a tree", Slot.SUBJECT, "at least", "at least Two dogs are playing by a tree"),
        ("a man is sitting in a field", Slot.SUBJECT, "not", "not a man is sitting in a field"),
        ("an old man is sitting in a field", Slot.SUBJECT, "an abnormal", "an abnormal old man is sitting in a field"),
        ("a man is sitting in a field", Slot.SUBJECT, "green", "a green man is sitting in a field"),
        ("A classroom is full of students", Slot.OBJECT, "every", "A classroom is full of every students"),
        ("A classroom is full of students", Slot.VERB, "never", "A classroom is never full of students"),
        ("A deer isn't jumping over the fence", Slot.VERB, "always", "A deer isn't always jumping over the fence"),
    ],
)
def test_apply_modifier_surfaces(text, slot, surface, expected):
    out = apply_modifier(parse_sentence(text), slot, mod(surface))
    assert out.render() == expected


def test_inadmissible_modifier_rejected():
    sentence = parse_sentence("a man is sitting in a field")
    with pytest.raises(InadmissibleModifier):
        apply_modifier(sentence, Slot.VERB, mod("every"))
    with pytest.raises(InadmissibleModifier):
        apply_modifier(sentence, Slot.SUBJECT, mod("abnormally"))


def test_missing_object_slot():
    sentence = parse_sentence("A classroom is empty")
    with pytest.raises(SlotMissing):
        apply_modifier(sentence, Slot.OBJECT, mod("every"))


def test_token_preservation_single_contiguous_edit():
    sentence = parse_sentence("an old man is sitting in a field")
    out = apply_modifier(sentence, Slot.OBJECT, mod("every"))
    # 'a' replaced by 'every' at the object; everything else kept in order
    assert out.tokens == ("an", "old", "man", "is", "sitting", "in", "every", "field")


def test_modified_sentences_reparse_with_same_heads():
    for text in ("an old man is sitting in a field", "A classroom is full of students"):
        sentence = parse_sentence(text)
        for slot in (Slot.SUBJECT, Slot.VERB, Slot.OBJECT):
            for entry in LEX.modifiers_for_slot(slot):
                out = apply_modifier(sentence, slot, entry)
                assert svo_signature(out) == svo_signature(sentence)
                assert parse_sentence(out.render()) == out


def test_generate_variants_three_combinations():
    premise = parse_sentence("an old man is sitting in a field")
    hypothesis = parse_sentence("a man is sitting in a field")
    request = ModificationRequest(Slot.SUBJECT, mod("every"))
    pairs = generate_variants(premise, hypothesis, request)
    assert len(pairs) == 3
    assert [(p.premise_modified, p.hypothesis_modified) for p in pairs] == [
        (True, False),
        (False, True),
        (True, True),
    ]
    assert pairs[0].premise.render() == "every old man is sitting in a field"
    assert pairs[1].hypothesis.render() == "every man is sitting in a field"


def test_generate_variants_skips_impossible_side():
    premise = parse_sentence("A classroom is full of students")
    hypothesis = parse_sentence("A classroom is empty")
    request = ModificationRequest(Slot.OBJECT, mod("every"))
    pairs = generate_variants(premise, hypothesis, request)
    assert [(p.premise_modified, p.hypothesis_modified) for p in pairs] == [(True, False)]


def test_generate_variants_identity_request():
    premise = parse_sentence("a man is sitting in a field")
    hypothesis = parse_sentence("a man is running in a field")
    pairs = generate_variants(premise, hypothesis, ())
    assert len(pairs) == 1
    assert pairs[0].premise is premise and not pairs[0].premise_modified


def test_single_target_requests():
    premise = parse_sentence("a man is sitting in a field")
    hypothesis = parse_sentence("a man is running in a field")
    request = ModificationRequest(Slot.SUBJECT, mod("no"), Target.PREMISE_ONLY)
    pairs = generate_variants(premise, hypothesis, request)
    assert len(pairs) == 1 and pairs[0].premise_modified and not pairs[0].hypothesis_modified


def test_enumerate_combinations_counts():
    premise = parse_sentence("an old man is sitting in a field")
    hypothesis = parse_sentence("a man is sitting in a field")
    combos = enumerate_combinations(premise, hypothesis, LEX)
    singles = [c for c in combos if len(c) == 1]
    by_slot = {}
    for (req,) in singles:
        by_slot[req.slot] = by_slot.get(req.slot, 0) + 1
    assert by_slot == {Slot.SUBJECT: 18, Slot.VERB: 5, Slot.OBJECT: 18}
    doubles = [c for c in combos if len(c) == 2]
    so = [c for c in doubles if {r.slot for r in c} == {Slot.SUBJECT, Slot.OBJECT}]
    vo = [c for c in doubles if {r.slot for r in c} == {Slot.VERB, Slot.OBJECT}]
    # same-type pairing: 4^2 + 4^2 + 3^2 + 7^2 = 90; verb pairs: 2*4 + 1*3 = 11
    assert len(so) == 90
    assert len(vo) == 11
    for combo in doubles:
        assert combo[0].modifier.modifier_type is combo[1].modifier.modifier_type


def test_enumerate_combinations_skips_object_when_absent():
    no_object = parse_sentence("A classroom is empty")
    combos = enumerate_combinations(no_object, no_object, LEX)
    slots = {frozenset(r.slot for r in combo) for combo in combos}
    assert slots == {frozenset({Slot.SUBJECT}), frozenset({Slot.VERB})}


def test_enumeration_is_deterministic():
    premise = parse_sentence("A boy is hitting a baseball")
    hypothesis = parse_sentence("A child is hitting a baseball")
    first = enumerate_combinations(premise, hypothesis, LEX)
    second = enumerate_combinations(premise, hypothesis, LEX)
    assert [combo_code(c) for c in first] == [combo_code(c) for c in second]
