"""Scikit-learn style wrapper around lexicon construction.

EmojiSentimentVectorizer learns a symbol sentiment lexicon from labeled
texts (fit) and maps texts to sentiment features derived from their
known symbols (transform), so the lexicon composes with sklearn
pipelines.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .corpus import parse_label
from .errors import DomainError
from .sentiment import (
    LexiconAccumulator,
    SentimentCounts,
    laplace_distribution,
)
from .symbols import SoRangeTable, default_table

FEATURE_NAMES = ("negativity", "neutrality", "positivity", "sentiment_score")


def check_texts(X: Iterable) -> list[str]:
    """Validate an iterable of texts, materializing it to a list."""
    texts = list(X)
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise DomainError(f"text at index {i} is not a string: {type(t).__name__}")
    return texts


def check_labels(y: Iterable, n_expected: int) -> list[int]:
    """Validate labels as -1/0/+1 integers matching the text count."""
    labels = [int(parse_label(v)) for v in y]
    if len(labels) != n_expected:
        raise DomainError(f"got {len(labels)} labels for {n_expected} texts")
    return labels


class EmojiSentimentVectorizer(BaseEstimator, TransformerMixin):
    """Learn per-symbol sentiment distributions; featurize texts with them.

    Parameters
    ----------
    min_occurrences : int, default=5
        Symbols seen fewer times than this across the fit corpus are
        dropped from the learned lexicon.
    range_table : str or None, default=None
        Path to a codepoint range table defining which codepoints count
        as symbols; None uses the bundled table.

    Attributes
    ----------
    lexicon_ : RankedLexicon
        The learned ranked lexicon.
    feature_names_ : tuple of str
        Names of the transform output columns.

    transform pools the raw class counts of every known symbol occurrence
    in a text and smooths them, yielding columns (negativity, neutrality,
    positivity, score); a text with no known symbols gets the uniform
    prior (1/3, 1/3, 1/3, 0).
    """

    def __init__(self, min_occurrences: int = 5, range_table: str | None = None):
        self.min_occurrences = min_occurrences
        self.range_table = range_table

    def _table(self) -> SoRangeTable:
        if self.range_table is None:
            return default_table()
        return SoRangeTable.from_file(self.range_table)

    def fit(self, X: Iterable[str], y: Sequence[int]):
        """Build the lexicon from texts X and their sentiment labels y."""
        if self.min_occurrences < 1:
            raise DomainError("min_occurrences must be >= 1")
        texts = check_texts(X)
        labels = check_labels(y, len(texts))
        acc = LexiconAccumulator(self._table())
        for text, label in zip(texts, labels):
            acc.add(text, label)
        self.lexicon_ = acc.finish(self.min_occurrences)
        self._counts_by_codepoint_ = {e.codepoint: e.counts for e in self.lexicon_.entries}
        self.feature_names_ = FEATURE_NAMES
        self.n_features_out_ = len(FEATURE_NAMES)
        return self

    def transform(self, X: Iterable[str]) -> np.ndarray:
        """Map texts to (n_texts, 4) pooled sentiment features."""
        check_is_fitted(self, "lexicon_")
        texts = check_texts(X)
        out = np.empty((len(texts), len(FEATURE_NAMES)), dtype=float)
        for i, text in enumerate(texts):
            pooled = SentimentCounts()
            for ch in text:
                counts = self._counts_by_codepoint_.get(ord(ch))
                if counts is not None:
                    pooled = pooled + counts
            d = laplace_distribution(pooled)
            out[i] = (d.p_neg, d.p_neut, d.p_pos, d.score)
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "lexicon_")
        return np.asarray(FEATURE_NAMES, dtype=object)
