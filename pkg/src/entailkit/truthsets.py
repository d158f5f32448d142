"""Truth sets over finite world universes and the seven-relation algebra.

A proposition's truth set is the set of worlds where it holds; two
propositions are classified by comparing their truth sets inside a shared
universe. Equivalence is tested first and the two entailment directions use
strict containment so the conditions are mutually exclusive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources

from .errors import ConfigError, UniverseMismatch
from .labels import EntailmentRelation, RELATION_TEXT, parse_gold_label


@dataclass(frozen=True)
class TruthSet:
    """Worlds where a proposition holds, inside a finite shared universe."""

    universe: frozenset
    members: frozenset

    def __post_init__(self):
        if not self.members <= self.universe:
            raise ValueError("truth-set members must lie inside the universe")


def relation_from_flags(tt: bool, tf: bool, ft: bool, ff: bool) -> EntailmentRelation:
    """Classify from the realizability of the four truth-value combinations.

    tt/tf/ft/ff say whether some world makes (premise, hypothesis) true/true,
    true/false, false/true, false/false. The checks follow the fixed priority
    order, so exactly one relation is returned.
    """
    if not tf and not ft:
        return EntailmentRelation.EQUIVALENCE
    if not tf:
        return EntailmentRelation.FORWARD_ENTAILMENT
    if not ft:
        return EntailmentRelation.REVERSE_ENTAILMENT
    if not tt and not ff:
        return EntailmentRelation.NEGATION
    if not tt:
        return EntailmentRelation.ALTERNATION
    if not ff:
        return EntailmentRelation.COVER
    return EntailmentRelation.INDEPENDENCE


def classify_relation(x: TruthSet, y: TruthSet) -> EntailmentRelation:
    """Classify the relation of premise set ``x`` to hypothesis set ``y``."""
    if x.universe != y.universe:
        raise UniverseMismatch("truth sets come from different universes")
    return relation_from_flags(
        tt=bool(x.members & y.members),
        tf=bool(x.members - y.members),
        ft=bool(y.members - x.members),
        ff=bool(x.universe - (x.members | y.members)),
    )


JoinTable = dict[tuple[EntailmentRelation, EntailmentRelation], frozenset[EntailmentRelation]]

_RELATION_ORDER = list(EntailmentRelation)


def generate_join_table(max_universe: int = 4) -> JoinTable:
    """Join table by exhaustive enumeration of set triples.

    For every universe of size 1..max_universe and every triple of subsets
    (X, Y, Z), records classify(X, Z) under the pair
    (classify(X, Y), classify(Y, Z)).
    """
    table: dict[tuple, set] = {}
    for n in range(1, max_universe + 1):
        universe = frozenset(range(n))
        subsets = [
            frozenset(c)
            for size in range(n + 1)
            for c in itertools.combinations(range(n), size)
        ]
        sets = [TruthSet(universe, s) for s in subsets]
        pair_rel = {
            (a.members, b.members): classify_relation(a, b)
            for a in sets
            for b in sets
        }
        for x in sets:
            for y in sets:
                r1 = pair_rel[(x.members, y.members)]
                for z in sets:
                    key = (r1, pair_rel[(y.members, z.members)])
                    table.setdefault(key, set()).add(pair_rel[(x.members, z.members)])
    return {k: frozenset(v) for k, v in table.items()}


def dump_join_table(table: JoinTable) -> str:
    lines = ["# premise-relation hypothesis-relation -> possible composed relations"]
    for r1 in _RELATION_ORDER:
        for r2 in _RELATION_ORDER:
            rels = table.get((r1, r2), frozenset())
            joined = "|".join(RELATION_TEXT[r] for r in _RELATION_ORDER if r in rels)
            lines.append(f"{RELATION_TEXT[r1]} {RELATION_TEXT[r2]} -> {joined}")
    return "\n".join(lines) + "\n"


def parse_join_table(text: str) -> JoinTable:
    table: JoinTable = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            left, right = line.split("->")
            r1_text, r2_text = left.split()
            rels = frozenset(
                parse_gold_label(part) for part in right.strip().split("|") if part
            )
            table[(parse_gold_label(r1_text), parse_gold_label(r2_text))] = rels
        except Exception as exc:
            raise ConfigError(f"join table line {lineno}: {exc}") from exc
    return table


_JOIN_CACHE: JoinTable | None = None


def load_join_table() -> JoinTable:
    global _JOIN_CACHE
    if _JOIN_CACHE is None:
        text = resources.files("entailkit.data").joinpath("join_table.txt").read_text("utf-8")
        _JOIN_CACHE = parse_join_table(text)
    return _JOIN_CACHE


def join_relations(r1: EntailmentRelation, r2: EntailmentRelation) -> frozenset[EntailmentRelation]:
    """Relations possible for R(x,z) given R(x,y)=r1 and R(y,z)=r2."""
    return load_join_table()[(r1, r2)]
