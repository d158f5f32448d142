"""Modifier application and pair-combination expansion.

Each seed pair expands over the slot sets {S, V, O, S+O, V+O}; a two-slot
combination pairs modifiers of the same type. Every single-slot edit yields
the three pair combinations (P',H), (P,H'), (P',H').
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import InadmissibleModifier, SlotMissing
from .lexicon import Lexicon, ModifierEntry, ModifierType, Slot, SLOT_ORDER
from .parsing import ARTICLES, SvoSentence, parse_svo

NUMBER_WORDS = ("one", "two")


class Target(enum.Enum):
    PREMISE_ONLY = "premise"
    HYPOTHESIS_ONLY = "hypothesis"
    BOTH = "both"


@dataclass(frozen=True)
class ModificationRequest:
    slot: Slot
    modifier: ModifierEntry
    target: Target = Target.BOTH

    def __post_init__(self):
        if self.slot not in self.modifier.slots:
            raise InadmissibleModifier(
                f"{self.modifier.surface!r} is not admissible at {self.slot.value}"
            )


@dataclass(frozen=True)
class GeneratedPair:
    premise: SvoSentence
    hypothesis: SvoSentence
    premise_modified: bool
    hypothesis_modified: bool
    slots: frozenset[Slot]
    modifiers: tuple[ModifierEntry, ...]


def _np_segment(span_indices: list[int], tokens, entry: ModifierEntry) -> list[tuple[str, object]]:
    """Plan a noun-phrase rewrite as ('old', index) / ('new', token) items."""
    has_article = bool(span_indices) and tokens[span_indices[0]] in ARTICLES + NUMBER_WORDS
    old = [("old", i) for i in span_indices]
    new = [("new", t) for t in entry.tokens]
    rule = entry.np_rule
    if rule in ("replace", "replace_art"):
        return new + (old[1:] if has_article else old)
    if rule == "replace_the":
        return new + [("new", "the")] + (old[1:] if has_article else old)
    if rule == "numeral":
        if has_article and tokens[span_indices[0]] in NUMBER_WORDS:
            return new + old
        return new + [("new", "one")] + (old[1:] if has_article else old)
    if rule == "prefix":
        return new + old
    if rule == "adjective":
        if has_article:
            return old[:1] + new + old[1:]
        return new + old
    raise InadmissibleModifier(f"unknown np rule {rule!r}")  # pragma: no cover


def apply_modifier(
    sentence: SvoSentence, slot: Slot, modifier: ModifierEntry, lexicon: Lexicon | None = None
) -> SvoSentence:
    """Insert ``modifier`` at ``slot`` with article repair; spans re-derived."""
    if slot not in modifier.slots:
        raise InadmissibleModifier(
            f"{modifier.surface!r} is not admissible at {slot.value}"
        )
    tokens = list(sentence.tokens)
    raw = list(sentence.raw_tokens)

    if slot is Slot.VERB:
        at = sentence.verb[0] + 1  # right after the auxiliary
        surface = list(modifier.tokens)
        new_tokens = tokens[:at] + surface + tokens[at:]
        new_raw = raw[:at] + surface + raw[at:]
    else:
        if slot is Slot.SUBJECT:
            span = sentence.subject
        else:
            if sentence.obj is None:
                raise SlotMissing("sentence has no object slot")
            span = sentence.obj
        start, end = span
        items = _np_segment(list(range(start, end)), tokens, modifier)
        seg_tokens = [tokens[v] if k == "old" else v for k, v in items]
        seg_raw = [raw[v] if k == "old" else v for k, v in items]
        new_tokens = tokens[:start] + seg_tokens + tokens[end:]
        new_raw = raw[:start] + seg_raw + raw[end:]

    return parse_svo(tuple(new_tokens), tuple(new_raw), lexicon)


def _apply_all(
    sentence: SvoSentence,
    requests: tuple[ModificationRequest, ...],
    lexicon: Lexicon | None,
) -> SvoSentence | None:
    """Apply every request to one side; None when any slot is unavailable."""
    out = sentence
    for req in requests:
        try:
            out = apply_modifier(out, req.slot, req.modifier, lexicon)
        except (SlotMissing, InadmissibleModifier):
            return None
    return out


def generate_variants(
    premise: SvoSentence,
    hypothesis: SvoSentence,
    request: ModificationRequest | tuple[ModificationRequest, ...],
    lexicon: Lexicon | None = None,
) -> list[GeneratedPair]:
    """Expand one modification into pair combinations.

    With target=BOTH this yields (P',H), (P,H'), (P',H'); a side where the
    edit is impossible (missing slot) is skipped, so at minimum one pair is
    produced when either side accepts the modifier.
    """
    requests = request if isinstance(request, tuple) else (request,)
    if not requests:
        return [
            GeneratedPair(premise, hypothesis, False, False, frozenset(), ())
        ]
    target = requests[0].target
    slots = frozenset(r.slot for r in requests)
    mods = tuple(r.modifier for r in requests)

    p_mod = _apply_all(premise, requests, lexicon)
    h_mod = _apply_all(hypothesis, requests, lexicon)

    pairs: list[GeneratedPair] = []
    if target in (Target.PREMISE_ONLY, Target.BOTH) and p_mod is not None:
        pairs.append(GeneratedPair(p_mod, hypothesis, True, False, slots, mods))
    if target in (Target.HYPOTHESIS_ONLY, Target.BOTH) and h_mod is not None:
        pairs.append(GeneratedPair(premise, h_mod, False, True, slots, mods))
    if target is Target.BOTH and p_mod is not None and h_mod is not None:
        pairs.append(GeneratedPair(p_mod, h_mod, True, True, slots, mods))
    return pairs


SLOT_SETS = (
    (Slot.SUBJECT,),
    (Slot.VERB,),
    (Slot.OBJECT,),
    (Slot.SUBJECT, Slot.OBJECT),
    (Slot.VERB, Slot.OBJECT),
)


def enumerate_combinations(
    premise: SvoSentence, hypothesis: SvoSentence, lexicon: Lexicon
) -> list[tuple[ModificationRequest, ...]]:
    """All modification combos for one seed, in stable lexicon order.

    Two-slot combos use the same modifier type at both slots (full surface
    cross product within the type). Slot sets touching an object are skipped
    only when neither side has an object.
    """
    has_object = premise.obj is not None or hypothesis.obj is not None
    combos: list[tuple[ModificationRequest, ...]] = []
    for slot_set in SLOT_SETS:
        if Slot.OBJECT in slot_set and not has_object:
            continue
        per_slot = [lexicon.modifiers_for_slot(slot) for slot in slot_set]
        if len(slot_set) == 1:
            for entry in per_slot[0]:
                combos.append((ModificationRequest(slot_set[0], entry),))
        else:
            for first, second in itertools.product(*per_slot):
                if first.modifier_type is not second.modifier_type:
                    continue
                combos.append(
                    (
                        ModificationRequest(slot_set[0], first),
                        ModificationRequest(slot_set[1], second),
                    )
                )
    return combos


def combo_code(requests: tuple[ModificationRequest, ...]) -> str:
    """Stable identifier fragment, e.g. ``S-every`` or ``SO-every+some``."""
    ordered = sorted(requests, key=lambda r: SLOT_ORDER.index(r.slot))
    slot_part = "".join(r.slot.code for r in ordered)
    mod_part = "+".join(r.modifier.slug for r in ordered)
    return f"{slot_part}-{mod_part}"
