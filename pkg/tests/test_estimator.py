import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from lexirank.errors import DomainError
from lexirank.estimator import EmojiSentimentVectorizer

TEXTS = [
    "great день ☀☀",
    "☀ morning",
    "sad \U0001F62D",
    "\U0001F62D \U0001F62D terrible",
    "plain text",
    "ok ☁",
]
LABELS = [1, 1, -1, -1, 0, 0]


def fitted(min_occurrences=1):
    return EmojiSentimentVectorizer(min_occurrences=min_occurrences).fit(TEXTS, LABELS)


class TestFit:
    def test_fit_returns_self_and_learns_lexicon(self):
        vec = EmojiSentimentVectorizer(min_occurrences=1)
        assert vec.fit(TEXTS, LABELS) is vec
        assert len(vec.lexicon_) == 3
        ranked = {e.codepoint: e for e in vec.lexicon_.entries}
        assert ranked[0x2600].counts.n_pos == 3
        assert ranked[0x1F62D].counts.n_neg == 3

    def test_min_occurrences_filters(self):
        vec = fitted(min_occurrences=3)
        assert {e.codepoint for e in vec.lexicon_.entries} == {0x2600, 0x1F62D}

    def test_label_validation(self):
        with pytest.raises(DomainError):
            EmojiSentimentVectorizer().fit(["x"], [2])

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            EmojiSentimentVectorizer().fit(["x", "y"], [1])

    def test_non_string_text(self):
        with pytest.raises(DomainError):
            EmojiSentimentVectorizer().fit([42], [1])


class TestTransform:
    def test_output_shape_and_names(self):
        vec = fitted()
        out = vec.transform(["☀", "nothing"])
        assert out.shape == (2, 4)
        assert list(vec.get_feature_names_out()) == [
            "negativity", "neutrality", "positivity", "sentiment_score",
        ]

    def test_unknown_text_gets_uniform_prior(self):
        out = fitted().transform(["no symbols at all"])
        np.testing.assert_allclose(out[0], [1 / 3, 1 / 3, 1 / 3, 0.0])

    def test_known_symbol_pools_counts(self):
        vec = fitted()
        (row,) = vec.transform(["☀"])
        # lexicon counts for U+2600 are (0, 0, 3): p = (1/6, 1/6, 4/6)
        np.testing.assert_allclose(row, [1 / 6, 1 / 6, 4 / 6, 0.5])

    def test_rows_are_distributions(self):
        out = fitted().transform(TEXTS)
        np.testing.assert_allclose(out[:, :3].sum(axis=1), 1.0)
        np.testing.assert_allclose(out[:, 3], out[:, 2] - out[:, 0])

    def test_transform_before_fit_raises(self):
        with pytest.raises(NotFittedError):
            EmojiSentimentVectorizer().transform(["x"])


class TestSklearnProtocol:
    def test_get_params_round_trip(self):
        vec = EmojiSentimentVectorizer(min_occurrences=7)
        assert vec.get_params() == {"min_occurrences": 7, "range_table": None}
        vec.set_params(min_occurrences=2)
        assert vec.min_occurrences == 2

    def test_clone(self):
        vec = fitted(min_occurrences=2)
        fresh = clone(vec)
        assert fresh.min_occurrences == 2
        assert not hasattr(fresh, "lexicon_")

    def test_works_in_pipeline(self):
        pipe = make_pipeline(EmojiSentimentVectorizer(min_occurrences=1))
        out = pipe.fit_transform(TEXTS, LABELS)
        assert out.shape == (len(TEXTS), 4)

    def test_fit_transform_equals_fit_then_transform(self):
        a = EmojiSentimentVectorizer(min_occurrences=1).fit_transform(TEXTS, LABELS)
        b = fitted().transform(TEXTS)
        np.testing.assert_array_equal(a, b)
