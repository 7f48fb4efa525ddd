"""Bilingual lexicon induction from unaligned parallel texts.

Partition each text into K contiguous pieces, represent every word by the
K-bit vector of pieces it occurs in, and score cross-language word pairs
by mutual information over the piece co-occurrence table, filtered by a
t-score significance threshold. Ships with keyword-in-context concordance
and dotplot companions and a ``kvec`` command-line tool.
"""

from .concord import ConcordanceLine, kwic
from .corpus import Corpus, build_corpus, read_corpus, tokenize
from .dotplot import (
    DensityImage,
    DotplotConfig,
    dotplot_assoc,
    dotplot_exact,
    render_dotplot,
    render_pgm,
)
from .errors import IngestError, KvecError, ParameterError, UnknownWordError
from .kvec import (
    AssocScore,
    Contingency,
    KVec,
    assoc_score,
    build_kvec,
    contingency,
    default_k,
    mi_identical,
    mutual_information,
    piece_of,
    t_score,
)
from .lexicon import (
    BandConfig,
    LexiconEntry,
    band_word_ids,
    candidate_pairs,
    evaluate_against_gold,
    extract_lexicon,
    load_gold,
    score_pair,
)

__version__ = "0.1.0"

__all__ = [
    "AssocScore",
    "BandConfig",
    "ConcordanceLine",
    "Contingency",
    "Corpus",
    "DensityImage",
    "DotplotConfig",
    "IngestError",
    "KVec",
    "KvecError",
    "LexiconEntry",
    "ParameterError",
    "UnknownWordError",
    "assoc_score",
    "band_word_ids",
    "build_corpus",
    "build_kvec",
    "candidate_pairs",
    "contingency",
    "default_k",
    "dotplot_assoc",
    "dotplot_exact",
    "evaluate_against_gold",
    "extract_lexicon",
    "kwic",
    "load_gold",
    "mi_identical",
    "mutual_information",
    "piece_of",
    "read_corpus",
    "render_dotplot",
    "render_pgm",
    "score_pair",
    "t_score",
    "tokenize",
]
