"""Deterministic shallow SVO parser over the closed seed-corpus grammar.

Coverage is exactly the vocabulary of the seed sentences plus the modifier
lexicon; anything else raises :class:`ParseOutOfCoverage` rather than
guessing. POS assignments come from the bundled ``pos_lexicon.tsv``
(``word<TAB>tag`` per line, UTF-8).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources

from .errors import ConfigError, EmptyInput, ParseOutOfCoverage
from .lexicon import Lexicon, load_default_lexicon

ARTICLES = ("a", "an", "the")
NUMERALS = ("one", "two")


@dataclass(frozen=True)
class SvoSentence:
    """A tokenized sentence with subject/verb/object spans.

    ``tokens`` are lowercase-normalized for matching; ``raw_tokens`` keep the
    original casing so rendering round-trips. Spans are half-open token
    index ranges ordered subject < verb < object.
    """

    tokens: tuple[str, ...]
    raw_tokens: tuple[str, ...]
    subject: tuple[int, int]
    verb: tuple[int, int]
    obj: tuple[int, int] | None = None
    object_preposition: int | None = None

    def render(self) -> str:
        return " ".join(self.raw_tokens)

    def subject_tokens(self) -> tuple[str, ...]:
        return self.tokens[self.subject[0] : self.subject[1]]

    def verb_tokens(self) -> tuple[str, ...]:
        return self.tokens[self.verb[0] : self.verb[1]]

    def object_tokens(self) -> tuple[str, ...] | None:
        if self.obj is None:
            return None
        return self.tokens[self.obj[0] : self.obj[1]]

    def with_tokens(self, tokens, raw_tokens) -> "SvoSentence":
        return replace(self, tokens=tuple(tokens), raw_tokens=tuple(raw_tokens))


def tokenize(raw: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Whitespace tokenization; contractions stay single tokens.

    Returns (lowercase tokens, original-case tokens).
    """
    if not raw or not raw.strip():
        raise EmptyInput("empty input sentence")
    raw_tokens = tuple(raw.split())
    return tuple(t.lower() for t in raw_tokens), raw_tokens


_POS_CACHE: dict[str, str] | None = None


def load_pos_lexicon() -> dict[str, str]:
    global _POS_CACHE
    if _POS_CACHE is None:
        text = resources.files("entailkit.data").joinpath("pos_lexicon.tsv").read_text("utf-8")
        table = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ConfigError(f"pos lexicon line {lineno}: expected word<TAB>tag")
            table[parts[0]] = parts[1]
        _POS_CACHE = table
    return _POS_CACHE


class _Parser:
    def __init__(self, tokens: tuple[str, ...], lexicon: Lexicon):
        self.tokens = tokens
        self.pos = load_pos_lexicon()
        self.quant_phrases = lexicon.np_quantifier_surfaces()
        self.i = 0

    def tag(self, idx: int) -> str:
        word = self.tokens[idx]
        tag = self.pos.get(word)
        if tag is None:
            raise ParseOutOfCoverage(f"unknown word {word!r}")
        return tag

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    def match_quant_phrase(self) -> bool:
        for phrase in self.quant_phrases:
            end = self.i + len(phrase)
            if tuple(self.tokens[self.i : end]) == phrase:
                self.i = end
                return True
        return False

    def starts_quant_phrase(self) -> bool:
        return any(
            tuple(self.tokens[self.i : self.i + len(p)]) == p for p in self.quant_phrases
        )

    def parse_np(self) -> tuple[int, int]:
        start = self.i
        had_quant = self.match_quant_phrase()
        if not self.at_end() and self.tokens[self.i] in ARTICLES + NUMERALS:
            self.i += 1
        # attributive run: adjectives and noun modifiers up to the head noun
        run_start = self.i
        last_noun = None
        while not self.at_end() and self.tag(self.i) in ("adj", "noun"):
            if self.tag(self.i) == "noun":
                last_noun = self.i
            self.i += 1
        if last_noun is None:
            raise ParseOutOfCoverage(
                f"no head noun in noun phrase starting at token {start}"
            )
        self.i = last_noun + 1
        if self.i == run_start and not had_quant:
            raise ParseOutOfCoverage("empty noun phrase")
        return (start, self.i)

    def looks_like_np(self) -> bool:
        if self.at_end():
            return False
        word = self.tokens[self.i]
        if word in ARTICLES + NUMERALS:
            return True
        if any(tuple(self.tokens[self.i : self.i + len(p)]) == p for p in self.quant_phrases):
            return True
        return self.tag(self.i) in ("adj", "noun")


def parse_svo(
    tokens: tuple[str, ...],
    raw_tokens: tuple[str, ...] | None = None,
    lexicon: Lexicon | None = None,
) -> SvoSentence:
    """Recover subject/verb/object spans from one declarative clause."""
    tokens = tuple(tokens)
    if raw_tokens is None:
        raw_tokens = tokens
    p = _Parser(tokens, lexicon or load_default_lexicon())

    subject = p.parse_np()

    # subject-attached prepositional phrases ("A girl with a black bag ...")
    while not p.at_end() and p.tag(p.i) == "prep":
        p.i += 1
        p.parse_np()

    if p.at_end() or p.tag(p.i) != "aux":
        raise ParseOutOfCoverage("no verb found")
    verb_start = p.i
    p.i += 1
    while not p.at_end() and p.tag(p.i) in ("adv", "neg"):
        p.i += 1
    while not p.at_end() and p.tag(p.i) == "verb":
        p.i += 1
    verb = (verb_start, p.i)

    # predicate adjectives are middle tokens unless they open a bare noun phrase
    while not p.at_end() and p.tag(p.i) == "adj":
        j = p.i
        while j < len(tokens) and p.tag(j) == "adj":
            j += 1
        if j < len(tokens) and p.tag(j) == "noun":
            break
        p.i = j

    phrases: list[tuple[int | None, tuple[int, int]]] = []
    while not p.at_end():
        tag = p.tag(p.i)
        if tag == "aux":
            raise ParseOutOfCoverage("multiple clauses")
        # quantifier phrases win over prepositional readings ("at least one ...")
        if p.starts_quant_phrase():
            phrases.append((None, p.parse_np()))
        elif tag == "prep":
            prep_idx = p.i
            p.i += 1
            phrases.append((prep_idx, p.parse_np()))
        elif p.looks_like_np():
            phrases.append((None, p.parse_np()))
        else:
            raise ParseOutOfCoverage(
                f"unexpected token {tokens[p.i]!r} after the verb phrase"
            )

    obj = None
    object_preposition = None
    if phrases:
        object_preposition, obj = phrases[-1]

    return SvoSentence(
        tokens=tokens,
        raw_tokens=tuple(raw_tokens),
        subject=subject,
        verb=verb,
        obj=obj,
        object_preposition=object_preposition,
    )


def parse_sentence(raw: str, lexicon: Lexicon | None = None) -> SvoSentence:
    tokens, raw_tokens = tokenize(raw)
    return parse_svo(tokens, raw_tokens, lexicon)


def svo_signature(s: SvoSentence) -> tuple:
    """Slot-structure fingerprint: head words per slot, stable under insertions."""
    pos = load_pos_lexicon()
    verb_toks = s.verb_tokens()
    participles = [t for t in verb_toks if pos.get(t) == "verb"]
    verb_head = participles[-1] if participles else verb_toks[0]
    return (
        s.tokens[s.subject[1] - 1],
        verb_head,
        s.tokens[s.obj[1] - 1] if s.obj else None,
        s.tokens[s.object_preposition] if s.object_preposition is not None else None,
    )
