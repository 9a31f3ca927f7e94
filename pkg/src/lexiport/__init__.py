"""lexiport: translate, human-validate, and psychometrically evaluate
category-based word dictionaries."""

from .lexicon import (Dictionary, TermEntry, GRIEVANCE_CATEGORIES,
                      filter_by_goodness, parse_dictionary,
                      parse_grievance_csv, parse_liwc_dic,
                      serialize_dictionary)
from .matcher import Matcher, build_matcher
from .scoring import (CategoryScores, ItemMatrix, ScoreMatrix,
                      score_corpus, score_document, score_tokens,
                      word_occurrence_matrix)
from .stats import (AgreementResult, CorrelationResult, PairedRatings,
                    ReliabilityResult, agreement_report, average_alpha,
                    bonferroni_threshold, correlate_dictionaries,
                    cronbach_alpha, gwet_ac1, pearson, top_k_correlations)
from .stemming import stem, stem_words
from .tokenizer import tokenize

__version__ = "0.1.0"

__all__ = [
    "Dictionary", "TermEntry", "GRIEVANCE_CATEGORIES",
    "filter_by_goodness", "parse_dictionary", "parse_grievance_csv",
    "parse_liwc_dic", "serialize_dictionary",
    "Matcher", "build_matcher",
    "CategoryScores", "ItemMatrix", "ScoreMatrix", "score_corpus",
    "score_document", "score_tokens", "word_occurrence_matrix",
    "AgreementResult", "CorrelationResult", "PairedRatings",
    "ReliabilityResult", "agreement_report", "average_alpha",
    "bonferroni_threshold", "correlate_dictionaries", "cronbach_alpha",
    "gwet_ac1", "pearson", "top_k_correlations",
    "stem", "stem_words", "tokenize",
    "__version__",
]
