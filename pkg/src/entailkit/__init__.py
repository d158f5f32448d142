"""Compositional NLI dataset forge, natural-logic annotator, and evaluation
harness."""

from .errors import EntailkitError
from .labels import (
    AmbiguousLabel,
    CompressedLabel,
    EXCLUDED,
    EntailmentRelation,
    GoldLabel,
    SeedLabel,
    format_gold_label,
    parse_gold_label,
)
from .lexicon import Lexicon, ModifierEntry, ModifierType, Slot, load_default_lexicon, modifiers_for_slot
from .parsing import SvoSentence, parse_sentence, parse_svo, tokenize
from .modify import (
    GeneratedPair,
    ModificationRequest,
    Target,
    apply_modifier,
    enumerate_combinations,
    generate_variants,
)
from .semantics import (
    Body,
    ObjectConstraint,
    PairAxioms,
    Polarity,
    QuantifiedProposition,
    Quantifier,
    Restrictor,
    annotate_pair,
    derive_axioms,
    enumerate_models,
    interpret,
)
from .truthsets import TruthSet, classify_relation, join_relations
from .records import DatasetRecord, read_records, write_records
from .seeds import SeedPair, load_seeds, seed_label_to_relation
from .pipeline import CorpusManifest, build_dataset, compute_stats, ingest_dataset
from .evaluation import (
    MetricReport,
    PredictionRecord,
    compress_gold_label,
    derive_four_way,
    make_folds,
    score,
    score_records,
    slice_report,
)

__version__ = "0.1.0"
