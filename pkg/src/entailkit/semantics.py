"""Set-theoretic interpretation and the finite-model oracle.

Sentences are read as quantified propositions over small entity sorts
(subjects, verb-attached objects, and occasions when a temporal quantifier is
present). A world assigns extensions to every atomic predicate; the oracle
sweeps universes of size 1..maxEntities, keeps only worlds satisfying both
sentences' presuppositions, and classifies the premise/hypothesis truth sets
with the relation algebra.

Worlds are enumerated as canonical equivalence classes (profile counts), not
raw assignments: two assignments that give every relevant predicate the same
membership pattern make both sentences agree, so the quotient preserves every
relation test.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InterpretationError, OracleBudgetError
from .labels import EntailmentRelation
from .parsing import ARTICLES, SvoSentence, load_pos_lexicon
from .truthsets import TruthSet, relation_from_flags


class Quantifier(enum.Enum):
    EVERY = "every"
    SOME = "some"
    NO = "no"
    NOT_EVERY = "not_every"
    EXACTLY_ONE = "exactly_one"
    ALL_BUT_ONE = "all_but_one"
    AT_LEAST_ONE = "at_least_one"
    DEFINITE = "definite"

    def __repr__(self):
        return f"Quantifier.{self.name}"


class OccasionQ(enum.Enum):
    SOME = "some"    # bare progressive: holds at some occasion
    EVERY = "every"  # always
    NEVER = "never"  # never


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATED = "negated"


@dataclass(frozen=True)
class Restrictor:
    noun: str
    adjectives: tuple[str, ...] = ()


@dataclass(frozen=True)
class ObjectConstraint:
    quantifier: Quantifier
    noun: str
    adjectives: tuple[str, ...] = ()


@dataclass(frozen=True)
class Body:
    frame: str
    adverbs: tuple[str, ...] = ()
    occasions: OccasionQ = OccasionQ.SOME
    obj: ObjectConstraint | None = None


@dataclass(frozen=True)
class QuantifiedProposition:
    quantifier: Quantifier
    restrictor: Restrictor
    body: Body
    polarity: Polarity = Polarity.POSITIVE


def eval_quant(q: Quantifier, big_n: int, small_n: int) -> bool:
    """Truth of a quantified statement from |R| and |R ∩ B|."""
    if q is Quantifier.EVERY:
        return small_n == big_n
    if q in (Quantifier.SOME, Quantifier.AT_LEAST_ONE, Quantifier.DEFINITE):
        return small_n >= 1
    if q is Quantifier.NO:
        return small_n == 0
    if q is Quantifier.NOT_EVERY:
        return not (big_n > 0 and small_n == big_n)
    if q is Quantifier.EXACTLY_ONE:
        return small_n == 1
    if q is Quantifier.ALL_BUT_ONE:
        return small_n == big_n - 1
    raise InterpretationError(f"unknown quantifier {q}")


def quant_presupposes_nonempty(q: Quantifier) -> bool:
    """Nonempty-restrictor presupposition: universals, definites, all-but-one."""
    return q in (Quantifier.EVERY, Quantifier.ALL_BUT_ONE, Quantifier.DEFINITE)


def _eval_occasions(q: OccasionQ, true_count: int, total: int) -> bool:
    if q is OccasionQ.SOME:
        return true_count >= 1
    if q is OccasionQ.EVERY:
        return true_count == total
    return true_count == 0


# ---------------------------------------------------------------------------
# surface -> logical form

_NP_QUANTS: dict[tuple[str, ...], Quantifier] = {
    ("every", "one", "of"): Quantifier.EVERY,
    ("all", "but", "one"): Quantifier.ALL_BUT_ONE,
    ("not", "every"): Quantifier.NOT_EVERY,
    ("at", "least"): Quantifier.AT_LEAST_ONE,
    ("exactly", "one"): Quantifier.EXACTLY_ONE,
    ("every",): Quantifier.EVERY,
    ("always",): Quantifier.EVERY,
    ("never",): Quantifier.NO,
    ("some",): Quantifier.AT_LEAST_ONE,
    ("no",): Quantifier.NO,
    ("not",): Quantifier.NO,  # "not a man" reads as a negated existential
}

_NP_QUANT_ORDER = sorted(_NP_QUANTS, key=len, reverse=True)
_SKIPPABLE = ARTICLES + ("one", "two")


def _interpret_np(np_tokens: tuple[str, ...]) -> tuple[Quantifier, str, tuple[str, ...]]:
    pos = load_pos_lexicon()
    toks = list(np_tokens)
    quant = None
    for phrase in _NP_QUANT_ORDER:
        if tuple(toks[: len(phrase)]) == phrase:
            quant = _NP_QUANTS[phrase]
            toks = toks[len(phrase) :]
            break
    while toks and toks[0] in _SKIPPABLE:
        toks = toks[1:]
    if quant is None:
        quant = Quantifier.DEFINITE
    if not toks or pos.get(toks[-1]) != "noun":
        raise InterpretationError(f"no head noun in {' '.join(np_tokens)!r}")
    return quant, toks[-1], tuple(toks[:-1])


def interpret(sentence: SvoSentence) -> QuantifiedProposition:
    """Map a parsed sentence to its quantified set-theoretic reading."""
    pos = load_pos_lexicon()

    s_quant, s_noun, s_adjs = _interpret_np(sentence.subject_tokens())

    verb_toks = sentence.verb_tokens()
    aux = verb_toks[0]
    flips = 1 if aux.endswith("n't") else 0
    occasions = OccasionQ.SOME
    adverbs: list[str] = []
    participle = None
    for tok in verb_toks[1:]:
        if tok == "always":
            occasions = OccasionQ.EVERY
        elif tok == "never":
            occasions = OccasionQ.NEVER
        elif tok == "not":
            flips += 1
        elif pos.get(tok) == "adv":
            adverbs.append(tok)
        elif pos.get(tok) == "verb":
            participle = tok
        else:
            raise InterpretationError(f"unmapped verb-group token {tok!r}")
    polarity = Polarity.NEGATED if flips % 2 else Polarity.POSITIVE

    residue_end = sentence.obj[0] if sentence.obj else len(sentence.tokens)
    residue = sentence.tokens[sentence.verb[1] : residue_end]
    frame = "+".join([participle or "be", *residue])

    obj = None
    if sentence.obj is not None:
        o_quant, o_noun, o_adjs = _interpret_np(sentence.object_tokens())
        obj = ObjectConstraint(o_quant, o_noun, o_adjs)

    return QuantifiedProposition(
        quantifier=s_quant,
        restrictor=Restrictor(s_noun, tuple(s_adjs)),
        body=Body(frame=frame, adverbs=tuple(adverbs), occasions=occasions, obj=obj),
        polarity=polarity,
    )


# ---------------------------------------------------------------------------
# pair-level lexical axioms

@dataclass(frozen=True)
class PairAxioms:
    """Lexical relations between the two sentences' atoms, plus the scene
    conventions that stand in for annotator coreference assumptions."""

    noun_subsets: tuple[tuple[str, str], ...] = ()   # sort-scoped (sub, super)
    adj_disjoints: tuple[tuple[str, str], ...] = ()  # sort-scoped (a, b)
    frame_axiom: str | None = None  # cell_disjoint | body_implies | body_disjoint | converse
    functional: bool = False        # at most one object per subject/occasion in a frame
    pins: tuple[tuple[str, int], ...] = ()  # sort-scoped noun -> exact extension size
    # reference restrictors for body-level axioms: (noun, adjs) per side
    body_refs: tuple = ()


def derive_axioms(
    p: QuantifiedProposition, h: QuantifiedProposition, relation: EntailmentRelation
) -> PairAxioms:
    """Axioms implied by the seed relation and the pair's structural diff.

    The seed relation pins down the lexical relation between premise-only and
    hypothesis-only predicates; the structural shape decides where it lands.
    """
    if relation is EntailmentRelation.FORWARD_ENTAILMENT:
        return _entailment_axioms(p, h, swap=False)
    if relation is EntailmentRelation.REVERSE_ENTAILMENT:
        return _entailment_axioms(h, p, swap=True)
    if relation is EntailmentRelation.NEGATION:
        if (
            p.body.obj is not None
            and h.body.obj is not None
            and p.restrictor.noun == h.body.obj.noun
            and h.restrictor.noun == p.body.obj.noun
            and p.body.frame == h.body.frame
        ):
            return PairAxioms(frame_axiom="converse")
        return PairAxioms()  # polarity difference carries the contradiction
    if relation is EntailmentRelation.ALTERNATION:
        pins = tuple(
            sorted({("s:" + p.restrictor.noun, 1), ("s:" + h.restrictor.noun, 1)})
        )
        if (
            p.body.obj is not None
            and h.body.obj is not None
            and p.body.obj.noun == h.body.obj.noun
            and set(p.body.obj.adjectives) != set(h.body.obj.adjectives)
            and p.body.frame == h.body.frame
        ):
            p_only = [a for a in p.body.obj.adjectives if a not in h.body.obj.adjectives]
            h_only = [a for a in h.body.obj.adjectives if a not in p.body.obj.adjectives]
            pairs = tuple(
                ("o:" + a, "o:" + b) for a in p_only for b in h_only
            )
            return PairAxioms(adj_disjoints=pairs, functional=True, pins=pins)
        if p.body.obj is not None and h.body.obj is not None:
            return PairAxioms(frame_axiom="cell_disjoint", functional=True, pins=pins)
        return PairAxioms(
            frame_axiom="body_disjoint",
            pins=pins,
            body_refs=(_body_ref(p), _body_ref(h)),
        )
    return PairAxioms()


def _body_ref(prop: QuantifiedProposition):
    if prop.body.obj is None:
        return None
    return (prop.body.obj.noun, tuple(prop.body.obj.adjectives))


def _entailment_axioms(narrow: QuantifiedProposition, wide: QuantifiedProposition, swap: bool) -> PairAxioms:
    """narrow's predicates sit inside wide's; swap marks the RE direction."""
    noun_subsets = []
    frame_axiom = None
    body_refs = ()
    if narrow.restrictor.noun != wide.restrictor.noun:
        noun_subsets.append(("s:" + narrow.restrictor.noun, "s:" + wide.restrictor.noun))
    if narrow.body.frame != wide.body.frame:
        frame_axiom = "body_implies_rev" if swap else "body_implies"
        body_refs = (_body_ref(narrow), _body_ref(wide)) if not swap else (_body_ref(wide), _body_ref(narrow))
    elif (
        narrow.body.obj is not None
        and wide.body.obj is not None
        and narrow.body.obj.noun != wide.body.obj.noun
    ):
        noun_subsets.append(("o:" + narrow.body.obj.noun, "o:" + wide.body.obj.noun))
    return PairAxioms(
        noun_subsets=tuple(noun_subsets), frame_axiom=frame_axiom, body_refs=body_refs
    )


# ---------------------------------------------------------------------------
# the factored finite-model enumeration

@lru_cache(maxsize=None)
def _compositions(total: int, bins: int) -> tuple[tuple[int, ...], ...]:
    """All length-``bins`` tuples of nonnegative ints summing to ``total``."""
    if bins == 0:
        return ((),) if total == 0 else ()
    if bins == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, bins - 1):
            out.append((first, *rest))
    return tuple(out)


def _atom_profiles(atoms: list[str], subsets, disjoints) -> list[tuple[str, ...]]:
    """All extension patterns for one entity, as frozen atom-membership sets,
    filtered by subset/disjointness axioms over atoms of this sort."""
    profiles = []
    for bits in itertools.product((0, 1), repeat=len(atoms)):
        member = {a for a, b in zip(atoms, bits) if b}
        if any(sub in member and sup not in member for sub, sup in subsets):
            continue
        if any(a in member and b in member for a, b in disjoints):
            continue
        profiles.append(tuple(sorted(member)))
    return profiles


def _np_atoms(prefix: str, noun: str, adjs: tuple[str, ...]) -> frozenset[str]:
    return frozenset([prefix + noun, *(prefix + a for a in adjs)])


class _PairOracle:
    """Enumerates quotient worlds for one premise/hypothesis pair."""

    def __init__(self, p: QuantifiedProposition, h: QuantifiedProposition, axioms: PairAxioms):
        self.p = p
        self.h = h
        self.ax = axioms

        scoped = lambda pairs, pref: [
            (a, b) for a, b in pairs if a.startswith(pref) and b.startswith(pref)
        ]
        self.s_subsets = scoped(axioms.noun_subsets, "s:")
        self.o_subsets = scoped(axioms.noun_subsets, "o:")
        self.s_disjoints = scoped(axioms.adj_disjoints, "s:")
        self.o_disjoints = scoped(axioms.adj_disjoints, "o:")
        self.s_pins = [(a, n) for a, n in axioms.pins if a.startswith("s:")]

        self.p_restr = _np_atoms("s:", p.restrictor.noun, p.restrictor.adjectives)
        self.h_restr = _np_atoms("s:", h.restrictor.noun, h.restrictor.adjectives)
        self.subject_atoms = sorted(self.p_restr | self.h_restr)

        self.p_obj = p.body.obj
        self.h_obj = h.body.obj
        self.has_objects = self.p_obj is not None or self.h_obj is not None
        self.p_obj_restr = (
            _np_atoms("o:", self.p_obj.noun, self.p_obj.adjectives) if self.p_obj else frozenset()
        )
        self.h_obj_restr = (
            _np_atoms("o:", self.h_obj.noun, self.h_obj.adjectives) if self.h_obj else frozenset()
        )
        self.object_atoms = sorted(self.p_obj_restr | self.h_obj_restr)

        # body-axiom reference restrictors (the seed pair's own object NPs)
        refs = axioms.body_refs or (_body_ref(p), _body_ref(h))
        self.p_ref = _np_atoms("o:", *refs[0]) if refs and refs[0] else frozenset()
        self.h_ref = _np_atoms("o:", *refs[1]) if refs and refs[1] else frozenset()

        self.shared_frame = p.body.frame == h.body.frame
        self.occasions_active = (
            p.body.occasions is not OccasionQ.SOME or h.body.occasions is not OccasionQ.SOME
        )
        self.adverb_atoms = sorted(set(p.body.adverbs) | set(h.body.adverbs))

        self._build_subject_sigs()
        self._build_object_sigs()
        self._build_cell_values()

    # -- profile signatures ------------------------------------------------

    def _build_subject_sigs(self):
        sigs = {}
        for prof in _atom_profiles(self.subject_atoms, self.s_subsets, self.s_disjoints):
            member = set(prof)
            rp = self.p_restr <= member
            rh = self.h_restr <= member
            pin_bits = tuple(atom in member for atom, _ in self.s_pins)
            sigs[(rp, rh, pin_bits)] = None
        self.subject_sigs = sorted(sigs)

    def _build_object_sigs(self):
        if not self.object_atoms:
            self.object_sigs = [(False, False, False, False)]
            return
        sigs = {}
        for prof in _atom_profiles(self.object_atoms, self.o_subsets, self.o_disjoints):
            member = set(prof)
            rp = bool(self.p_obj) and self.p_obj_restr <= member
            rh = bool(self.h_obj) and self.h_obj_restr <= member
            refp = bool(self.p_ref) and self.p_ref <= member
            refh = bool(self.h_ref) and self.h_ref <= member
            sigs[(rp, rh, refp, refh)] = None
        self.object_sigs = sorted(sigs)

    def _build_cell_values(self):
        """Joint values of the binary frame bits per (subject, object, occasion)."""
        p_bin = self.p_obj is not None
        h_bin = self.h_obj is not None
        values = []
        for fp, fh in itertools.product((0, 1), repeat=2):
            if self.shared_frame and p_bin and h_bin and fp != fh:
                continue
            if self.ax.frame_axiom == "cell_disjoint" and fp and fh:
                continue
            if not p_bin:
                fp = 0
            if not h_bin:
                fh = 0
            values.append((fp, fh))
        self.cell_values = sorted(set(values))

    # -- per-(subject, occasion) achievable body values ---------------------

    def _body_value_set(self, obj_counts: dict) -> list[tuple[bool, bool]]:
        """Achievable (premise-body, hypothesis-body) truth pairs for one
        subject at one occasion, given the object-sort configuration."""
        p_bin = self.p_obj is not None
        h_bin = self.h_obj is not None

        n_op = sum(c for sig, c in obj_counts.items() if sig[0])
        n_oh = sum(c for sig, c in obj_counts.items() if sig[1])

        # unary frame bits for object-less sides (shared when frames match)
        unary_sides = [side for side, is_bin in (("p", p_bin), ("h", h_bin)) if not is_bin]
        unary_space = (
            [dict(zip(unary_sides, bits)) for bits in itertools.product((0, 1), repeat=len(unary_sides))]
            if unary_sides
            else [{}]
        )
        if len(unary_sides) == 2 and self.shared_frame:
            unary_space = [u for u in unary_space if u["p"] == u["h"]]

        adv_space = [
            dict(zip(self.adverb_atoms, bits))
            for bits in itertools.product((0, 1), repeat=len(self.adverb_atoms))
        ]

        sig_list = [sig for sig, c in obj_counts.items() if c > 0]
        per_sig_rows = [
            _compositions(obj_counts[sig], len(self.cell_values)) for sig in sig_list
        ]

        out = set()
        for row in itertools.product(*per_sig_rows):
            n_p = n_h = 0
            e_p = e_h = False
            active_targets = 0
            for sig, dist in zip(sig_list, row):
                for (fp, fh), cnt in zip(self.cell_values, dist):
                    if not cnt:
                        continue
                    if fp and sig[0]:
                        n_p += cnt
                    if fh and sig[1]:
                        n_h += cnt
                    if fp and sig[2]:
                        e_p = True
                    if fh and sig[3]:
                        e_h = True
                    if fp or fh:
                        active_targets += cnt
            if self.ax.functional and active_targets > 1:
                continue
            if self.ax.frame_axiom == "body_implies" and e_p and not e_h:
                continue
            if self.ax.frame_axiom == "body_implies_rev" and e_h and not e_p:
                continue

            for unary in unary_space:
                if self.ax.frame_axiom == "body_disjoint":
                    left = e_p if p_bin else bool(unary.get("p"))
                    right = e_h if h_bin else bool(unary.get("h"))
                    if left and right:
                        continue
                for advs in adv_space:
                    adv_p = all(advs[a] for a in self.p.body.adverbs)
                    adv_h = all(advs[a] for a in self.h.body.adverbs)
                    val_p = adv_p and (
                        eval_quant(self.p_obj.quantifier, n_op, n_p) if p_bin else bool(unary["p"])
                    )
                    val_h = adv_h and (
                        eval_quant(self.h_obj.quantifier, n_oh, n_h) if h_bin else bool(unary["h"])
                    )
                    out.add((val_p, val_h))
            if len(out) == 4:
                return sorted(out)
        return sorted(out)

    def _occasion_values(self, body_set: list, n_t: int) -> list[tuple[bool, bool]]:
        if not self.occasions_active:
            return body_set
        out = set()
        for dist in _compositions(n_t, len(body_set)):
            cnt_p = sum(c for (vp, _), c in zip(body_set, dist) if vp)
            cnt_h = sum(c for (_, vh), c in zip(body_set, dist) if vh)
            out.add(
                (
                    _eval_occasions(self.p.body.occasions, cnt_p, n_t),
                    _eval_occasions(self.h.body.occasions, cnt_h, n_t),
                )
            )
            if len(out) == 4:
                break
        return sorted(out)

    # -- full sweep ----------------------------------------------------------

    def sweep(self, max_entities: int, collect=None) -> tuple[bool, bool, bool, bool]:
        flags = [False, False, False, False]  # tt, tf, ft, ff
        worlds = 0
        early = collect is None

        obj_presup_p = bool(self.p_obj) and quant_presupposes_nonempty(self.p_obj.quantifier)
        obj_presup_h = bool(self.h_obj) and quant_presupposes_nonempty(self.h_obj.quantifier)

        size_range = range(1, max_entities + 1)
        n_o_range = size_range if self.has_objects else (0,)
        n_t_range = size_range if self.occasions_active else (1,)

        for n_o in n_o_range:
            obj_bins = self.object_sigs if self.has_objects else []
            obj_configs = (
                [dict(zip(obj_bins, dist)) for dist in _compositions(n_o, len(obj_bins))]
                if self.has_objects
                else [{}]
            )
            for obj_counts in obj_configs:
                n_op = sum(c for sig, c in obj_counts.items() if sig[0])
                n_oh = sum(c for sig, c in obj_counts.items() if sig[1])
                if obj_presup_p and n_op == 0:
                    continue
                if obj_presup_h and n_oh == 0:
                    continue
                body_set = self._body_value_set(obj_counts)
                if not body_set:
                    continue
                for n_t in n_t_range:
                    a2 = self._occasion_values(body_set, n_t)
                    buckets = []
                    for sig in self.subject_sigs:
                        rp, rh, pin_bits = sig
                        if rp or rh:
                            buckets.extend((sig, b) for b in a2)
                        else:
                            buckets.append((sig, None))
                    for n_s in size_range:
                        for dist in _compositions(n_s, len(buckets)):
                            counts = {b: c for b, c in zip(buckets, dist) if c}
                            if any(
                                sum(
                                    c
                                    for (sig, _), c in counts.items()
                                    if sig[2][pin_idx]
                                )
                                != pin_n
                                for pin_idx, (_, pin_n) in enumerate(self.s_pins)
                            ):
                                continue
                            big_p = sum(c for (sig, _), c in counts.items() if sig[0])
                            big_h = sum(c for (sig, _), c in counts.items() if sig[1])
                            if quant_presupposes_nonempty(self.p.quantifier) and big_p == 0:
                                continue
                            if quant_presupposes_nonempty(self.h.quantifier) and big_h == 0:
                                continue
                            small_p = sum(
                                c for (sig, b), c in counts.items() if sig[0] and b and b[0]
                            )
                            small_h = sum(
                                c for (sig, b), c in counts.items() if sig[1] and b and b[1]
                            )
                            t_p = eval_quant(self.p.quantifier, big_p, small_p)
                            t_h = eval_quant(self.h.quantifier, big_h, small_h)
                            if self.p.polarity is Polarity.NEGATED:
                                t_p = not t_p
                            if self.h.polarity is Polarity.NEGATED:
                                t_h = not t_h
                            worlds += 1
                            flags[_flag_index(t_p, t_h)] = True
                            if collect is not None:
                                key = (
                                    n_s,
                                    n_o,
                                    n_t,
                                    tuple(sorted(obj_counts.items())),
                                    tuple(sorted(counts.items())),
                                )
                                collect(key, t_p, t_h)
                            if early and all(flags):
                                return tuple(flags)
        if worlds == 0:
            raise InterpretationError(
                "no admissible worlds: the pair's presuppositions are unsatisfiable"
            )
        return tuple(flags)


def _flag_index(t_p: bool, t_h: bool) -> int:
    return {(True, True): 0, (True, False): 1, (False, True): 2, (False, False): 3}[(t_p, t_h)]


# ---------------------------------------------------------------------------
# converse-frame scene (mirrored subject/object with one event direction)

def _converse_sweep(
    p: QuantifiedProposition, h: QuantifiedProposition, max_entities: int, collect=None
):
    """Scene with two singleton participants and one directed event per
    occasion: the premise frame holds one way round iff the hypothesis frame
    does not (exclusive and exhaustive by convention)."""
    flags = [False, False, False, False]
    early = collect is None

    occ_active = p.body.occasions is not OccasionQ.SOME or h.body.occasions is not OccasionQ.SOME
    nt_range = range(1, max_entities + 1) if occ_active else (1,)

    a_adjs = sorted(set(p.restrictor.adjectives) | set(h.body.obj.adjectives))
    b_adjs = sorted(set(h.restrictor.adjectives) | set(p.body.obj.adjectives))
    advs = sorted(set(p.body.adverbs) | set(h.body.adverbs))

    for n_t in nt_range:
        per_t_bits = 1 + len(advs)
        total_bits = len(a_adjs) + len(b_adjs) + n_t * per_t_bits
        for assignment in itertools.product((0, 1), repeat=total_bits):
            pos_i = 0
            a_bits = dict(zip(a_adjs, assignment[: len(a_adjs)]))
            pos_i += len(a_adjs)
            b_bits = dict(zip(b_adjs, assignment[pos_i : pos_i + len(b_adjs)]))
            pos_i += len(b_adjs)
            direction = []
            adv_bits = []
            for _ in range(n_t):
                chunk = assignment[pos_i : pos_i + per_t_bits]
                direction.append(chunk[0])
                adv_bits.append(dict(zip(advs, chunk[1:])))
                pos_i += per_t_bits

            def side_truth(prop, self_bits, other_bits, forward):
                n_subj = 1 if all(self_bits[a] for a in prop.restrictor.adjectives) else 0
                n_obj = 1 if all(other_bits[a] for a in prop.body.obj.adjectives) else 0
                if quant_presupposes_nonempty(prop.quantifier) and n_subj == 0:
                    return None
                if quant_presupposes_nonempty(prop.body.obj.quantifier) and n_obj == 0:
                    return None
                hits = 0
                for t in range(n_t):
                    held = direction[t] if forward else 1 - direction[t]
                    manner = all(adv_bits[t][a] for a in prop.body.adverbs)
                    event = bool(held) and manner
                    if eval_quant(prop.body.obj.quantifier, n_obj, 1 if (event and n_obj) else 0):
                        hits += 1
                body = _eval_occasions(prop.body.occasions, hits, n_t)
                truth = eval_quant(prop.quantifier, n_subj, 1 if (n_subj and body) else 0)
                if prop.polarity is Polarity.NEGATED:
                    truth = not truth
                return truth

            t_p = side_truth(p, a_bits, b_bits, forward=True)
            t_h = side_truth(h, b_bits, a_bits, forward=False)
            if t_p is None or t_h is None:
                continue
            flags[_flag_index(t_p, t_h)] = True
            if collect is not None:
                collect(("conv", n_t, assignment), t_p, t_h)
            if early and all(flags):
                return tuple(flags)
    if not any(flags):
        raise InterpretationError(
            "no admissible worlds: the pair's presuppositions are unsatisfiable"
        )
    return tuple(flags)


# ---------------------------------------------------------------------------
# public oracle entry points

def _check_budget(max_entities: int):
    if not 1 <= max_entities <= 5:
        raise OracleBudgetError(f"maxEntities must be in 1..5, got {max_entities}")


def pair_truth_flags(
    p: QuantifiedProposition,
    h: QuantifiedProposition,
    axioms: PairAxioms | None = None,
    max_entities: int = 3,
    collect=None,
) -> tuple[bool, bool, bool, bool]:
    """Realizability of the four (premise, hypothesis) truth combinations."""
    _check_budget(max_entities)
    axioms = axioms or PairAxioms()
    if axioms.frame_axiom == "converse":
        return _converse_sweep(p, h, max_entities, collect)
    return _PairOracle(p, h, axioms).sweep(max_entities, collect)


def enumerate_models(
    propositions: tuple[QuantifiedProposition, QuantifiedProposition],
    max_entities: int = 3,
    axioms: PairAxioms | None = None,
) -> tuple[TruthSet, TruthSet]:
    """Materialized truth sets over the shared presupposition-filtered
    universe of quotient worlds of size 1..max_entities per sort."""
    _check_budget(max_entities)
    p, h = propositions
    universe = []
    p_members = []
    h_members = []

    def collect(key, t_p, t_h):
        universe.append(key)
        if t_p:
            p_members.append(key)
        if t_h:
            h_members.append(key)

    pair_truth_flags(p, h, axioms, max_entities, collect=collect)
    uni = frozenset(universe)
    return TruthSet(uni, frozenset(p_members)), TruthSet(uni, frozenset(h_members))


def classify_pair(
    p: QuantifiedProposition,
    h: QuantifiedProposition,
    axioms: PairAxioms | None = None,
    max_entities: int = 3,
) -> EntailmentRelation:
    return relation_from_flags(*pair_truth_flags(p, h, axioms, max_entities))


_ANNOTATE_CACHE: dict = {}


def annotate_pair(
    premise: SvoSentence,
    hypothesis: SvoSentence,
    seed_relation: EntailmentRelation,
    axioms: PairAxioms | None = None,
    max_entities: int = 3,
) -> EntailmentRelation:
    """Interpret both sentences, enumerate models, classify the truth sets.

    ``seed_relation`` supplies the lexical relation between predicates that
    differ across the pair (wired in via :func:`derive_axioms` unless explicit
    axioms are given).
    """
    p_lf = interpret(premise)
    h_lf = interpret(hypothesis)
    if axioms is None:
        axioms = derive_axioms(p_lf, h_lf, seed_relation)
    key = (p_lf, h_lf, axioms, max_entities)
    hit = _ANNOTATE_CACHE.get(key)
    if hit is None:
        hit = classify_pair(p_lf, h_lf, axioms, max_entities)
        _ANNOTATE_CACHE[key] = hit
    return hit
