"""Modifier lexicon: surfaces, types, slot admissibility, rewrite rules.

The default lexicon is loaded from ``data/modifiers.tsv`` and must round-trip
through :func:`dump_lexicon` byte-identically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources

from .errors import ConfigError


class Slot(enum.Enum):
    SUBJECT = "subject"
    VERB = "verb"
    OBJECT = "object"

    @property
    def code(self) -> str:
        return {"subject": "S", "verb": "V", "object": "O"}[self.value]

    def __repr__(self):
        return f"Slot.{self.name}"


SLOT_ORDER = (Slot.SUBJECT, Slot.VERB, Slot.OBJECT)


class ModifierType(enum.Enum):
    UNIVERSAL = "universal"
    EXISTENTIAL = "existential"
    NEGATION = "negation"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"

    def __repr__(self):
        return f"ModifierType.{self.name}"


#: How a noun-phrase modifier interacts with the slot's article.
#: replace      article -> surface            ("an old man" -> "every old man")
#: replace_the  article -> surface + "the"    ("a man" -> "every one of the man")
#: numeral      keep a number word, else article -> surface + "one"
#:              ("two dogs" -> "at least two dogs", "a man" -> "at least one man")
#: prefix       keep the article, surface goes in front  ("not a man")
#: adjective    insert after the article      ("a man" -> "a green man")
#: replace_art  surface carries its own article, article dropped
#:              ("an old man" -> "an abnormal old man")
NP_RULES = ("replace", "replace_the", "numeral", "prefix", "adjective", "replace_art")


@dataclass(frozen=True)
class ModifierEntry:
    surface: str
    modifier_type: ModifierType
    slots: frozenset[Slot]
    np_rule: str

    def __post_init__(self):
        if self.np_rule not in NP_RULES:
            raise ConfigError(f"unknown np_rule {self.np_rule!r} for {self.surface!r}")

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.surface.split())

    @property
    def slug(self) -> str:
        return self.surface.replace(" ", "_")


class Lexicon:
    """Ordered modifier inventory with slot-admissibility lookups."""

    def __init__(self, entries: list[ModifierEntry]):
        self.entries = list(entries)
        seen = set()
        for entry in self.entries:
            if entry.surface in seen:
                raise ConfigError(f"duplicate lexicon surface {entry.surface!r}")
            seen.add(entry.surface)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def by_surface(self, surface: str) -> ModifierEntry:
        for entry in self.entries:
            if entry.surface == surface:
                return entry
        raise ConfigError(f"no lexicon entry for surface {surface!r}")

    def modifiers_for_slot(self, slot: Slot) -> list[ModifierEntry]:
        """Entries admissible at ``slot``, in lexicon order."""
        return [e for e in self.entries if slot in e.slots]

    def np_quantifier_surfaces(self) -> list[tuple[str, ...]]:
        """Token sequences that may lead a noun phrase, longest first."""
        phrases = {
            e.tokens
            for e in self.entries
            if e.modifier_type
            in (ModifierType.UNIVERSAL, ModifierType.EXISTENTIAL, ModifierType.NEGATION)
        }
        return sorted(phrases, key=lambda t: (-len(t), t))


def _slots_from_code(code: str) -> frozenset[Slot]:
    mapping = {"S": Slot.SUBJECT, "V": Slot.VERB, "O": Slot.OBJECT}
    try:
        return frozenset(mapping[c] for c in code)
    except KeyError:
        raise ConfigError(f"bad slot code {code!r}") from None


def _slot_code(slots: frozenset[Slot]) -> str:
    return "".join(s.code for s in SLOT_ORDER if s in slots)


def parse_lexicon(text: str) -> Lexicon:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ConfigError(f"lexicon line {lineno}: expected 4 tab-separated fields")
        surface, type_text, slot_code, np_rule = parts
        try:
            mtype = ModifierType(type_text)
        except ValueError:
            raise ConfigError(f"lexicon line {lineno}: unknown type {type_text!r}") from None
        entries.append(
            ModifierEntry(surface, mtype, _slots_from_code(slot_code), np_rule)
        )
    return Lexicon(entries)


def dump_lexicon(lexicon: Lexicon) -> str:
    lines = [_HEADER]
    for e in lexicon.entries:
        lines.append(
            "\t".join([e.surface, e.modifier_type.value, _slot_code(e.slots), e.np_rule])
        )
    return "\n".join(lines) + "\n"


_HEADER = "# surface\ttype\tslots\tnp_rule"


def load_default_lexicon() -> Lexicon:
    text = resources.files("entailkit.data").joinpath("modifiers.tsv").read_text("utf-8")
    lexicon = parse_lexicon(text)
    _check_default(lexicon)
    return lexicon


def _check_default(lexicon: Lexicon):
    """Sanity-check the bundled table against the documented inventory."""
    expected = {
        ModifierType.UNIVERSAL: ["every", "always", "never", "every one of"],
        ModifierType.EXISTENTIAL: ["some", "at least", "exactly one", "all but one"],
        ModifierType.NEGATION: ["not every", "no", "not"],
        ModifierType.ADJECTIVE: ["green", "happy", "sad", "good", "bad", "an abnormal", "an elegant"],
        ModifierType.ADVERB: ["abnormally", "elegantly"],
    }
    for mtype, surfaces in expected.items():
        got = [e.surface for e in lexicon.entries if e.modifier_type is mtype]
        if got != surfaces:
            raise ConfigError(f"default lexicon {mtype.value} entries are {got}, expected {surfaces}")
    verb_surfaces = [e.surface for e in lexicon.modifiers_for_slot(Slot.VERB)]
    if verb_surfaces != ["always", "never", "not", "abnormally", "elegantly"]:
        raise ConfigError(f"verb-slot surfaces are {verb_surfaces}")


def modifiers_for_slot(slot: Slot, lexicon: Lexicon | None = None) -> list[ModifierEntry]:
    """Table entries admissible at ``slot`` from the default lexicon."""
    return (lexicon or load_default_lexicon()).modifiers_for_slot(slot)
