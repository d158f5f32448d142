import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entailkit.errors import UniverseMismatch
from entailkit.labels import EntailmentRelation as R
from entailkit.truthsets import (
    TruthSet,
    classify_relation,
    dump_join_table,
    generate_join_table,
    join_relations,
    load_join_table,
    parse_join_table,
    relation_from_flags,
)

U4 = frozenset(range(4))


def ts(*members, universe=U4):
    return TruthSet(frozenset(universe), frozenset(members))


def test_identical_sets_are_equivalence():
    assert classify_relation(ts(0, 1), ts(0, 1)) is R.EQUIVALENCE


def test_strict_subset_is_forward_entailment():
    assert classify_relation(ts(0), ts(0, 1)) is R.FORWARD_ENTAILMENT
    assert classify_relation(ts(0, 1), ts(0)) is R.REVERSE_ENTAILMENT


def test_disjoint_exhaustive_is_negation():
    assert classify_relation(ts(0, 1), ts(2, 3)) is R.NEGATION


def test_disjoint_nonexhaustive_is_alternation():
    assert classify_relation(ts(0), ts(1)) is R.ALTERNATION


def test_overlapping_exhaustive_is_cover():
    assert classify_relation(ts(0, 1, 2), ts(2, 3)) is R.COVER


def test_everything_else_is_independence():
    assert classify_relation(ts(0, 1), ts(1, 2)) is R.INDEPENDENCE


def test_priority_makes_degenerate_sets_single_valued():
    # empty vs full is both disjoint+exhaustive and a strict subset; the
    # priority order resolves it to forward entailment
    assert classify_relation(ts(), ts(0, 1, 2, 3)) is R.FORWARD_ENTAILMENT
    assert classify_relation(ts(), ts()) is R.EQUIVALENCE


def test_universe_mismatch():
    with pytest.raises(UniverseMismatch):
        classify_relation(ts(0), ts(0, universe=frozenset(range(3))))


@st.composite
def set_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    universe = frozenset(range(n))
    x = frozenset(draw(st.sets(st.integers(0, n - 1))))
    y = frozenset(draw(st.sets(st.integers(0, n - 1))))
    return TruthSet(universe, x), TruthSet(universe, y)


@given(set_pairs())
@settings(max_examples=300)
def test_classification_total_and_symmetric(pair):
    x, y = pair
    forward = classify_relation(x, y)
    backward = classify_relation(y, x)
    if forward is R.FORWARD_ENTAILMENT:
        assert backward is R.REVERSE_ENTAILMENT
    elif forward is R.REVERSE_ENTAILMENT:
        assert backward is R.FORWARD_ENTAILMENT
    else:
        assert backward is forward  # the other five relations are symmetric


@given(st.tuples(st.booleans(), st.booleans(), st.booleans(), st.booleans()))
def test_flags_always_classify(flags):
    assert relation_from_flags(*flags) in R


def test_join_identity_and_examples():
    for r in R:
        assert join_relations(R.EQUIVALENCE, r) == frozenset({r})
        assert join_relations(r, R.EQUIVALENCE) == frozenset({r})
    assert join_relations(R.FORWARD_ENTAILMENT, R.FORWARD_ENTAILMENT) == frozenset(
        {R.FORWARD_ENTAILMENT}
    )
    assert join_relations(R.NEGATION, R.NEGATION) == frozenset({R.EQUIVALENCE})


def test_bundled_table_matches_regeneration():
    assert load_join_table() == generate_join_table()


def test_join_table_round_trips():
    table = generate_join_table()
    assert parse_join_table(dump_join_table(table)) == table
    assert len(table) == 49


def test_join_soundness_small_universes():
    # exhaustive soundness check over universes of size 1..3 (the acceptance
    # suite covers size 4)
    table = load_join_table()
    for n in range(1, 4):
        universe = frozenset(range(n))
        subsets = [
            frozenset(c)
            for size in range(n + 1)
            for c in itertools.combinations(range(n), size)
        ]
        for x, y, z in itertools.product(subsets, repeat=3):
            tx, ty, tz = (TruthSet(universe, s) for s in (x, y, z))
            assert classify_relation(tx, tz) in table[
                (classify_relation(tx, ty), classify_relation(ty, tz))
            ]
