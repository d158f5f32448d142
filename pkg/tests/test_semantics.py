import pytest

from entailkit.errors import InterpretationError, OracleBudgetError
from entailkit.labels import EntailmentRelation as R
from entailkit.lexicon import Slot, load_default_lexicon
from entailkit.modify import apply_modifier
from entailkit.parsing import parse_sentence
from entailkit.seeds import load_seeds, seed_label_to_relation
from entailkit.semantics import (
    Body,
    ObjectConstraint,
    OccasionQ,
    Polarity,
    QuantifiedProposition,
    Quantifier,
    Restrictor,
    annotate_pair,
    derive_axioms,
    enumerate_models,
    interpret,
)
from entailkit.labels import SeedLabel
from entailkit.truthsets import classify_relation

LEX = load_default_lexicon()


def prop(q, noun="man", body="runs"):
    return QuantifiedProposition(q, Restrictor(noun), Body(body))


# -- interpretation ----------------------------------------------------------

def test_interpret_plain_definite():
    lf = interpret(parse_sentence("every man is sitting in a field"))
    assert lf.quantifier is Quantifier.EVERY
    assert lf.restrictor == Restrictor("man")
    assert lf.body.frame == "sitting+in"
    assert lf.body.obj == ObjectConstraint(Quantifier.DEFINITE, "field")


def test_interpret_not_every():
    lf = interpret(parse_sentence("not every man is sitting in a field"))
    assert lf.quantifier is Quantifier.NOT_EVERY
    assert lf.polarity is Polarity.POSITIVE


@pytest.mark.parametrize(
    "text,quant",
    [
        ("every one of the man is sitting in a field", Quantifier.EVERY),
        ("always man is sitting in a field", Quantifier.EVERY),
        ("never man is sitting in a field", Quantifier.NO),
        ("some man is sitting in a field", Quantifier.AT_LEAST_ONE),
        ("at least one man is sitting in a field", Quantifier.AT_LEAST_ONE),
        ("exactly one man is sitting in a field", Quantifier.EXACTLY_ONE),
        ("all but one man is sitting in a field", Quantifier.ALL_BUT_ONE),
        ("no man is sitting in a field", Quantifier.NO),
        ("not a man is sitting in a field", Quantifier.NO),
        ("a man is sitting in a field", Quantifier.DEFINITE),
    ],
)
def test_interpret_subject_quantifiers(text, quant):
    assert interpret(parse_sentence(text)).quantifier is quant


def test_interpret_negated_auxiliary_is_wide_negation():
    lf = interpret(parse_sentence("A deer isn't jumping over the fence"))
    assert lf.polarity is Polarity.NEGATED
    assert lf.body.frame == "jumping+over"


def test_interpret_verb_not_flips_polarity():
    lf = interpret(parse_sentence("A deer is not jumping over a fence"))
    assert lf.polarity is Polarity.NEGATED
    lf2 = interpret(parse_sentence("A deer isn't not jumping over a fence"))
    assert lf2.polarity is Polarity.POSITIVE  # two flips cancel


def test_interpret_occasion_quantifiers():
    assert interpret(parse_sentence("a man is always sitting in a field")).body.occasions is OccasionQ.EVERY
    assert interpret(parse_sentence("a man is never sitting in a field")).body.occasions is OccasionQ.NEVER
    assert interpret(parse_sentence("a man is sitting in a field")).body.occasions is OccasionQ.SOME


def test_interpret_adjectives_and_adverbs():
    lf = interpret(parse_sentence("an old man is elegantly sitting in a field"))
    assert lf.restrictor.adjectives == ("old",)
    assert lf.body.adverbs == ("elegantly",)


def test_interpret_copular_frames():
    full = interpret(parse_sentence("A classroom is full of students"))
    empty = interpret(parse_sentence("A classroom is empty"))
    assert full.body.frame == "be+full+of"
    assert full.body.obj.noun == "students"
    assert empty.body.frame == "be+empty"
    assert empty.body.obj is None


# -- the finite-model oracle -------------------------------------------------

def test_no_vs_some_disjoint_and_exhaustive():
    x, y = enumerate_models((prop(Quantifier.NO), prop(Quantifier.AT_LEAST_ONE)), 3)
    assert x.members.isdisjoint(y.members)
    assert x.members | y.members == x.universe
    assert classify_relation(x, y) is R.NEGATION


def test_identical_propositions_identical_truth_sets():
    x, y = enumerate_models((prop(Quantifier.EVERY), prop(Quantifier.EVERY)), 3)
    assert x.members == y.members
    assert classify_relation(x, y) is R.EQUIVALENCE


def test_every_strictly_inside_some():
    x, y = enumerate_models((prop(Quantifier.EVERY), prop(Quantifier.AT_LEAST_ONE)), 3)
    assert x.members < y.members
    assert classify_relation(x, y) is R.FORWARD_ENTAILMENT


def test_no_inside_not_every():
    x, y = enumerate_models((prop(Quantifier.NO), prop(Quantifier.NOT_EVERY)), 3)
    assert classify_relation(x, y) is R.FORWARD_ENTAILMENT


def test_every_vs_not_every_negation():
    x, y = enumerate_models((prop(Quantifier.EVERY), prop(Quantifier.NOT_EVERY)), 3)
    assert classify_relation(x, y) is R.NEGATION


def test_oracle_budget_bounds():
    pair = (prop(Quantifier.EVERY), prop(Quantifier.NO))
    with pytest.raises(OracleBudgetError):
        enumerate_models(pair, 0)
    with pytest.raises(OracleBudgetError):
        enumerate_models(pair, 6)


def test_unsatisfiable_presuppositions_raise():
    # pinning forces a singleton subject that must carry two disjoint
    # adjectives at once
    from entailkit.semantics import PairAxioms

    p = QuantifiedProposition(
        Quantifier.DEFINITE, Restrictor("pool", ("empty",)), Body("holds")
    )
    h = QuantifiedProposition(
        Quantifier.DEFINITE, Restrictor("pool", ("full",)), Body("holds")
    )
    axioms = PairAxioms(
        adj_disjoints=(("s:empty", "s:full"),), pins=(("s:pool", 1),)
    )
    with pytest.raises(InterpretationError):
        enumerate_models((p, h), 3, axioms)


# -- annotation --------------------------------------------------------------

def table4_rows():
    P = parse_sentence("an old man is sitting in a field")
    H = parse_sentence("a man is sitting in a field")
    every = LEX.by_surface("every")
    eleg = LEX.by_surface("elegantly")
    return [
        (P, H, R.FORWARD_ENTAILMENT),
        (apply_modifier(P, Slot.SUBJECT, every), H, R.FORWARD_ENTAILMENT),
        (P, apply_modifier(H, Slot.SUBJECT, every), R.REVERSE_ENTAILMENT),
        (
            apply_modifier(P, Slot.VERB, eleg),
            apply_modifier(H, Slot.VERB, eleg),
            R.FORWARD_ENTAILMENT,
        ),
        (apply_modifier(P, Slot.OBJECT, every), H, R.FORWARD_ENTAILMENT),
        (P, apply_modifier(H, Slot.OBJECT, every), R.INDEPENDENCE),
    ]


def test_worked_example_rows():
    for premise, hypothesis, expected in table4_rows():
        assert annotate_pair(premise, hypothesis, R.FORWARD_ENTAILMENT) is expected


def test_mirrored_universal_pair_is_negation():
    premise = parse_sentence("every turtle is following the fish")
    hypothesis = parse_sentence("every fish is following the turtle")
    assert annotate_pair(premise, hypothesis, R.NEGATION) is R.NEGATION


def test_seed_relation_mapping_rederives():
    """Audit the frozen seed mapping: the oracle must agree on every seed."""
    for seed in load_seeds():
        premise = parse_sentence(seed.premise)
        hypothesis = parse_sentence(seed.hypothesis)
        assert annotate_pair(premise, hypothesis, seed.relation) is seed.relation


def test_seed_label_to_relation_table():
    assert seed_label_to_relation(SeedLabel.ENTAILMENT, 1) is R.FORWARD_ENTAILMENT
    assert seed_label_to_relation(SeedLabel.NEUTRAL, 7) is R.INDEPENDENCE
    assert seed_label_to_relation(SeedLabel.CONTRADICTION, 13) is R.NEGATION
    assert seed_label_to_relation(SeedLabel.CONTRADICTION, 12) is R.ALTERNATION
    from entailkit.errors import ConfigError

    with pytest.raises(ConfigError):
        seed_label_to_relation(SeedLabel.ENTAILMENT, 13)  # wrong label for seed
    with pytest.raises(ConfigError):
        seed_label_to_relation(SeedLabel.ENTAILMENT, 99)


def test_negated_verb_pair_is_negation():
    premise = parse_sentence("A deer is jumping over a fence")
    hypothesis = parse_sentence("A deer isn't jumping over the fence")
    assert annotate_pair(premise, hypothesis, R.NEGATION) is R.NEGATION


def test_hit_entails_not_missing():
    # compositional consequence of the strike-scene convention
    premise = parse_sentence("A child is hitting a baseball")
    hypothesis = apply_modifier(
        parse_sentence("A child is missing a baseball"), Slot.VERB, LEX.by_surface("not")
    )
    axioms = derive_axioms(
        interpret(parse_sentence("A child is hitting a baseball")),
        interpret(parse_sentence("A child is missing a baseball")),
        R.ALTERNATION,
    )
    assert annotate_pair(premise, hypothesis, R.ALTERNATION, axioms=axioms) is R.FORWARD_ENTAILMENT


def test_bare_vs_never_is_cover():
    # with non-coreferent definites, "a man is sitting" and "a man is never
    # sitting" can both hold (two men) but cannot both fail (men exist)
    premise = parse_sentence("a man is sitting in a field")
    hypothesis = apply_modifier(premise, Slot.VERB, LEX.by_surface("never"))
    assert annotate_pair(premise, hypothesis, R.INDEPENDENCE) is R.COVER


def test_bare_vs_always_is_reverse_entailment():
    premise = parse_sentence("a man is sitting in a field")
    hypothesis = apply_modifier(premise, Slot.VERB, LEX.by_surface("always"))
    assert annotate_pair(premise, hypothesis, R.INDEPENDENCE) is R.REVERSE_ENTAILMENT


def test_oracle_stability_full_corpus(corpus):
    """Annotation is budget-insensitive: identical labels at 3 and 4 entities."""
    from entailkit.pipeline import build_dataset

    records3, _ = corpus
    records4, _ = build_dataset(max_entities=4)
    assert [r.id for r in records3] == [r.id for r in records4]
    mismatches = [
        (a.id, a.gold_label, b.gold_label)
        for a, b in zip(records3, records4)
        if a.gold_label != b.gold_label
    ]
    assert mismatches == []
