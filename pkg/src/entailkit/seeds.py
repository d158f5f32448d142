"""The fifteen seed pairs and their frozen gold-relation mapping.

The three-way seed labels map into the seven-relation space as: Entailment ->
ForwardEntailment, Neutral -> Independence, and Contradiction -> Negation or
Alternation per seed. The Contradiction split is frozen in ``seeds.json``
after being derived once with the finite-model oracle (the bundled table is
audited by a test that re-derives every value).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import ConfigError
from .labels import EntailmentRelation, SeedLabel, parse_gold_label, parse_seed_label


@dataclass(frozen=True)
class SeedPair:
    seed_id: int
    premise: str
    hypothesis: str
    seed_label: SeedLabel
    relation: EntailmentRelation


_EXPECTED_BY_LABEL = {
    SeedLabel.ENTAILMENT: {EntailmentRelation.FORWARD_ENTAILMENT},
    SeedLabel.NEUTRAL: {EntailmentRelation.INDEPENDENCE},
    SeedLabel.CONTRADICTION: {EntailmentRelation.NEGATION, EntailmentRelation.ALTERNATION},
}

_SEEDS_CACHE: list[SeedPair] | None = None


def load_seeds() -> list[SeedPair]:
    global _SEEDS_CACHE
    if _SEEDS_CACHE is None:
        text = resources.files("entailkit.data").joinpath("seeds.json").read_text("utf-8")
        raw = json.loads(text)
        seeds = []
        for entry in raw:
            label = parse_seed_label(entry["seed_label"])
            relation = parse_gold_label(entry["relation"])
            if not isinstance(relation, EntailmentRelation):
                raise ConfigError(f"seed {entry['seed_id']}: ambiguous relation not allowed")
            if relation not in _EXPECTED_BY_LABEL[label]:
                raise ConfigError(
                    f"seed {entry['seed_id']}: relation {relation} inconsistent with {label}"
                )
            seeds.append(
                SeedPair(
                    seed_id=int(entry["seed_id"]),
                    premise=entry["premise"],
                    hypothesis=entry["hypothesis"],
                    seed_label=label,
                    relation=relation,
                )
            )
        if [s.seed_id for s in seeds] != list(range(1, 16)):
            raise ConfigError("seed table must hold seeds 1..15 in order")
        _SEEDS_CACHE = seeds
    return _SEEDS_CACHE


def seed_by_id(seed_id: int) -> SeedPair:
    seeds = load_seeds()
    if not 1 <= seed_id <= len(seeds):
        raise ConfigError(f"unknown seed id {seed_id}")
    return seeds[seed_id - 1]


def seed_label_to_relation(seed_label: SeedLabel, seed_id: int) -> EntailmentRelation:
    """Gold relation of the unmodified pair for one seed."""
    seed = seed_by_id(seed_id)
    if seed.seed_label is not seed_label:
        raise ConfigError(
            f"seed {seed_id} carries label {seed.seed_label}, not {seed_label}"
        )
    return seed.relation
