"""Sentiment lexicon of Unicode pictograph symbols.

Builds a ranked symbol sentiment lexicon from a sentiment-annotated
short-text corpus and provides the statistics around it: Laplace-smoothed
sentiment distributions, annotator-agreement measures over coincidence
matrices, Welch's t-test, rank correlations, regression, power-law
fitting, and SVG/CSV/HTML reports.
"""

__version__ = "0.1.0"

from .agreement import (
    CoincidenceMatrix,
    accuracy,
    alpha_interval,
    coincidence_from_pairs,
    f1_neg_pos,
)
from .corpus import (
    AnnotatedText,
    AnnotationPair,
    SentimentLabel,
    derive_pairs,
    parse_corpus,
    split_by_language,
    split_by_symbol_presence,
    write_corpus,
)
from .errors import DomainError, EncodingError, LexirankError, ParseError
from .estimator import EmojiSentimentVectorizer
from .report import (
    BarGeometry,
    LanguageComparison,
    export_lexicon_csv,
    language_report,
    read_lexicon_csv,
    render_lexicon_html,
    render_sentiment_bar,
    render_sentiment_map,
)
from .sentiment import (
    LexiconEntry,
    RankedLexicon,
    SentimentCounts,
    SentimentDistribution,
    build_lexicon,
    laplace_distribution,
    mean_entry_score,
    partition_stats,
    score_histogram,
)
from .stats import (
    RegressionFit,
    SampleSummary,
    WelchResult,
    correlation_significant,
    ols_fit,
    pearson,
    power_law_mle,
    spearman,
    student_t_sf,
    welch_t_test,
)
from .symbols import (
    SoRangeTable,
    SymbolOccurrence,
    build_inventory,
    extract_occurrences,
    inventory_diff,
    is_symbol_other,
    read_counts_csv,
)

__all__ = [
    "AnnotatedText",
    "AnnotationPair",
    "BarGeometry",
    "CoincidenceMatrix",
    "DomainError",
    "EmojiSentimentVectorizer",
    "EncodingError",
    "LanguageComparison",
    "LexiconEntry",
    "LexirankError",
    "ParseError",
    "RankedLexicon",
    "RegressionFit",
    "SampleSummary",
    "SentimentCounts",
    "SentimentDistribution",
    "SentimentLabel",
    "SoRangeTable",
    "SymbolOccurrence",
    "WelchResult",
    "accuracy",
    "alpha_interval",
    "build_inventory",
    "build_lexicon",
    "coincidence_from_pairs",
    "correlation_significant",
    "derive_pairs",
    "export_lexicon_csv",
    "extract_occurrences",
    "f1_neg_pos",
    "inventory_diff",
    "is_symbol_other",
    "language_report",
    "laplace_distribution",
    "mean_entry_score",
    "ols_fit",
    "parse_corpus",
    "partition_stats",
    "pearson",
    "power_law_mle",
    "read_counts_csv",
    "read_lexicon_csv",
    "render_lexicon_html",
    "render_sentiment_bar",
    "render_sentiment_map",
    "score_histogram",
    "spearman",
    "split_by_language",
    "split_by_symbol_presence",
    "student_t_sf",
    "welch_t_test",
    "write_corpus",
]
