from importlib import resources

from entailkit.lexicon import (
    ModifierType,
    Slot,
    dump_lexicon,
    load_default_lexicon,
    modifiers_for_slot,
    parse_lexicon,
)


def test_default_inventory_sizes():
    lexicon = load_default_lexicon()
    by_type = {}
    for entry in lexicon:
        by_type.setdefault(entry.modifier_type, []).append(entry.surface)
    assert by_type[ModifierType.UNIVERSAL] == ["every", "always", "never", "every one of"]
    assert by_type[ModifierType.EXISTENTIAL] == ["some", "at least", "exactly one", "all but one"]
    assert by_type[ModifierType.NEGATION] == ["not every", "no", "not"]
    assert by_type[ModifierType.ADJECTIVE] == [
        "green", "happy", "sad", "good", "bad", "an abnormal", "an elegant",
    ]
    assert by_type[ModifierType.ADVERB] == ["abnormally", "elegantly"]


def test_verb_slot_admits_exactly_five():
    surfaces = [e.surface for e in modifiers_for_slot(Slot.VERB)]
    assert surfaces == ["always", "never", "not", "abnormally", "elegantly"]


def test_subject_and_object_admit_eighteen():
    lexicon = load_default_lexicon()
    subject = [e.surface for e in lexicon.modifiers_for_slot(Slot.SUBJECT)]
    obj = [e.surface for e in lexicon.modifiers_for_slot(Slot.OBJECT)]
    assert len(subject) == 18
    assert subject == obj
    admitted_types = {e.modifier_type for e in lexicon.modifiers_for_slot(Slot.SUBJECT)}
    assert admitted_types == {
        ModifierType.UNIVERSAL,
        ModifierType.EXISTENTIAL,
        ModifierType.NEGATION,
        ModifierType.ADJECTIVE,
    }


def test_lexicon_round_trips_byte_identically():
    raw = resources.files("entailkit.data").joinpath("modifiers.tsv").read_text("utf-8")
    assert dump_lexicon(parse_lexicon(raw)) == raw


def test_entries_in_lexicon_order():
    lexicon = load_default_lexicon()
    assert lexicon.entries[0].surface == "every"
    assert lexicon.entries[-1].surface == "elegantly"
    assert len(lexicon) == 20
