"""Exception hierarchy shared across the package."""


class EntailkitError(Exception):
    """Base class for all data and usage errors raised by this package."""


class ConfigError(EntailkitError):
    """A bundled configuration file is missing, malformed, or inconsistent."""


class EmptyInput(EntailkitError):
    """Tokenizer received an empty or whitespace-only string."""


class ParseOutOfCoverage(EntailkitError):
    """Sentence falls outside the closed grammar of the seed corpus."""


class SlotMissing(EntailkitError):
    """Requested SVO slot is absent from the sentence (e.g. no object)."""


class InadmissibleModifier(EntailkitError):
    """Modifier is not admissible at the requested slot."""


class InterpretationError(EntailkitError):
    """Sentence cannot be mapped to a quantified proposition."""


class OracleBudgetError(EntailkitError):
    """Finite-model oracle asked for an out-of-range entity budget."""


class UniverseMismatch(EntailkitError):
    """Truth sets being compared do not share a world universe."""


class LabelParseError(EntailkitError):
    """Unknown gold-label text."""


class AlignmentError(EntailkitError):
    """Gold records and predictions do not line up (length or ids)."""


class FoldConfigError(EntailkitError):
    """Invalid fold count for cross-validation splitting."""


class MissingReversePrediction(EntailkitError):
    """Neutral forward prediction lacks the reverse-direction prediction."""


class IngestError(EntailkitError):
    """One or more rows of an input file failed validation.

    ``rows`` holds (line_number, message) pairs for every offending row.
    """

    def __init__(self, message, rows=None):
        super().__init__(message)
        self.rows = list(rows or [])

    def report(self):
        lines = [str(self)]
        lines += [f"  line {lineno}: {msg}" for lineno, msg in self.rows]
        return "\n".join(lines)
