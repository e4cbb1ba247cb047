"""Sentiment distributions and lexicon construction.

A symbol's sentiment is estimated from the labels of the texts it
occurs in. Raw per-class counts are smoothed with the Laplace estimate
p_c = (N(c) + 1) / (N + 3), the score is the distribution mean
p_pos - p_neg, and the spread is reported as SD and SEM = SD / sqrt(N).
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .corpus import AnnotatedText, SentimentLabel
from .errors import DomainError
from .symbols import SoRangeTable, default_table, position_denominator

# Class cardinality of the sentiment variable; also the Laplace smoothing
# constant in the denominator N + k.
NUM_CLASSES = 3

LABEL_VALUES = (-1, 0, 1)


@dataclass(frozen=True, slots=True)
class SentimentCounts:
    """Raw occurrence counts per sentiment class."""

    n_neg: int = 0
    n_neut: int = 0
    n_pos: int = 0

    def __post_init__(self):
        if min(self.n_neg, self.n_neut, self.n_pos) < 0:
            raise DomainError("sentiment counts must be non-negative")

    @property
    def total(self) -> int:
        return self.n_neg + self.n_neut + self.n_pos

    def __add__(self, other: "SentimentCounts") -> "SentimentCounts":
        return SentimentCounts(
            self.n_neg + other.n_neg,
            self.n_neut + other.n_neut,
            self.n_pos + other.n_pos,
        )

    def incremented(self, label: SentimentLabel | int, by: int = 1) -> "SentimentCounts":
        if label == -1:
            return SentimentCounts(self.n_neg + by, self.n_neut, self.n_pos)
        if label == 0:
            return SentimentCounts(self.n_neg, self.n_neut + by, self.n_pos)
        if label == 1:
            return SentimentCounts(self.n_neg, self.n_neut, self.n_pos + by)
        raise DomainError(f"invalid label {label!r}")

    @classmethod
    def from_labels(cls, labels: Iterable[SentimentLabel | int]) -> "SentimentCounts":
        n = [0, 0, 0]
        for label in labels:
            n[int(label) + 1] += 1
        return cls(n[0], n[1], n[2])


@dataclass(frozen=True, slots=True)
class SentimentDistribution:
    """Laplace-smoothed class probabilities with mean, SD and SEM.

    ``sem`` is None when the source count is zero; the smoothed
    probabilities still exist (uniform prior) but a standard error does
    not.
    """

    p_neg: float
    p_neut: float
    p_pos: float
    score: float
    sd: float
    sem: float | None
    n: int

    @property
    def subjectivity(self) -> float:
        return self.p_neg + self.p_pos


def laplace_distribution(counts: SentimentCounts) -> SentimentDistribution:
    """Smoothed distribution for a count triple; N = 0 yields the uniform prior."""
    n = counts.total
    denom = n + NUM_CLASSES
    p_neg = (counts.n_neg + 1) / denom
    p_neut = (counts.n_neut + 1) / denom
    p_pos = (counts.n_pos + 1) / denom
    score = p_pos - p_neg
    sd = math.sqrt(
        p_neg * (-1 - score) ** 2 + p_neut * score**2 + p_pos * (1 - score) ** 2
    )
    sem = sd / math.sqrt(n) if n >= 1 else None
    return SentimentDistribution(p_neg, p_neut, p_pos, score, sd, sem, n)


@dataclass(frozen=True, slots=True)
class LexiconEntry:
    """One symbol in a ranked lexicon."""

    codepoint: int
    counts: SentimentCounts
    distribution: SentimentDistribution
    mean_position: float
    rank: int

    @property
    def occurrences(self) -> int:
        return self.counts.total


@dataclass(frozen=True)
class RankedLexicon:
    """Symbols ranked 1..len by descending occurrence count."""

    entries: tuple[LexiconEntry, ...]
    min_occurrences: int = 1

    def __post_init__(self):
        prev_n = None
        for i, entry in enumerate(self.entries, start=1):
            if entry.rank != i:
                raise DomainError(f"ranks must be contiguous from 1; entry {i} has rank {entry.rank}")
            if entry.occurrences < self.min_occurrences:
                raise DomainError(
                    f"entry {i} has {entry.occurrences} occurrences, "
                    f"below threshold {self.min_occurrences}"
                )
            if prev_n is not None and entry.occurrences > prev_n:
                raise DomainError("occurrences must be non-increasing with rank")
            prev_n = entry.occurrences

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def total_occurrences(self) -> int:
        return sum(e.occurrences for e in self.entries)

    def cdf(self, rank: int) -> int:
        """Cumulative occurrences of all entries with rank <= rank."""
        if not 1 <= rank <= len(self.entries):
            raise DomainError(f"rank {rank} out of range 1..{len(self.entries)}")
        return sum(e.occurrences for e in self.entries[:rank])

    def midpoint_rank(self) -> int:
        """The rank splitting the lexicon into halves of closest-to-equal
        cumulative occurrences; ties break toward the smaller rank."""
        if not self.entries:
            raise DomainError("midpoint rank of an empty lexicon is undefined")
        half = self.total_occurrences / 2
        best_rank, best_gap = 1, None
        running = 0
        for entry in self.entries:
            running += entry.occurrences
            gap = abs(running - half)
            if best_gap is None or gap < best_gap:
                best_rank, best_gap = entry.rank, gap
        return best_rank


class LexiconAccumulator:
    """Streaming per-symbol aggregation of counts and positions.

    Positions are accumulated as exact rationals so that merging shard
    accumulators is order-independent and the final means are identical
    however the corpus was split (pointwise count sums and position sums
    form a commutative monoid).
    """

    def __init__(self, table: SoRangeTable | None = None):
        self.table = table if table is not None else default_table()
        # codepoint -> [n_neg, n_neut, n_pos, position_sum]
        self._acc: dict[int, list] = {}

    def add(self, text: str, label: SentimentLabel | int) -> None:
        label_index = int(label) + 1
        if label_index not in (0, 1, 2):
            raise DomainError(f"invalid label {label!r}")
        denom = position_denominator(len(text))
        table = self.table
        for index, ch in enumerate(text):
            cp = ord(ch)
            if cp in table:
                cell = self._acc.get(cp)
                if cell is None:
                    cell = [0, 0, 0, Fraction(0)]
                    self._acc[cp] = cell
                cell[label_index] += 1
                cell[3] += Fraction(index, denom)

    def add_record(self, record: AnnotatedText) -> None:
        self.add(record.text, record.label)

    def merge(self, other: "LexiconAccumulator") -> None:
        for cp, cell in other._acc.items():
            mine = self._acc.get(cp)
            if mine is None:
                self._acc[cp] = [cell[0], cell[1], cell[2], cell[3]]
            else:
                mine[0] += cell[0]
                mine[1] += cell[1]
                mine[2] += cell[2]
                mine[3] += cell[3]

    def finish(self, min_occurrences: int = 1) -> RankedLexicon:
        if min_occurrences < 1:
            raise DomainError("min_occurrences must be >= 1")
        selected = []
        for cp, (n_neg, n_neut, n_pos, pos_sum) in self._acc.items():
            n = n_neg + n_neut + n_pos
            if n >= min_occurrences:
                selected.append((cp, SentimentCounts(n_neg, n_neut, n_pos), pos_sum))
        # rank by occurrences descending; ties by ascending codepoint
        selected.sort(key=lambda item: (-item[1].total, item[0]))
        entries = tuple(
            LexiconEntry(
                codepoint=cp,
                counts=counts,
                distribution=laplace_distribution(counts),
                mean_position=float(pos_sum / counts.total),
                rank=rank,
            )
            for rank, (cp, counts, pos_sum) in enumerate(selected, start=1)
        )
        return RankedLexicon(entries=entries, min_occurrences=min_occurrences)


def build_lexicon(
    corpus: Iterable[AnnotatedText],
    min_occurrences: int = 5,
    table: SoRangeTable | None = None,
) -> RankedLexicon:
    """Accumulate a ranked symbol lexicon from an annotated corpus.

    Every symbol occurrence (not just the first per text) contributes one
    count to the class of the containing text's label. Symbols with fewer
    than ``min_occurrences`` total occurrences are dropped.
    """
    acc = LexiconAccumulator(table)
    for record in corpus:
        acc.add_record(record)
    return acc.finish(min_occurrences)


def partition_stats(
    lexicon: RankedLexicon, rank: int
) -> tuple[SentimentDistribution, SentimentDistribution]:
    """Occurrence-weighted sentiment summaries of ranks <= rank and > rank.

    Raw counts of each half are pooled before smoothing, so each summary
    is the distribution of a single aggregate count triple.
    """
    if not 1 <= rank < len(lexicon.entries):
        raise DomainError(f"split rank {rank} out of range 1..{len(lexicon.entries) - 1}")
    first = SentimentCounts()
    second = SentimentCounts()
    for entry in lexicon.entries:
        if entry.rank <= rank:
            first = first + entry.counts
        else:
            second = second + entry.counts
    return laplace_distribution(first), laplace_distribution(second)


def score_histogram(lexicon: RankedLexicon, bin_width: float = 0.05) -> list[tuple[float, int]]:
    """Histogram of entry scores over [-1, 1) in fixed-width bins.

    Returns (bin_start, count) for every bin, zeros included; counts sum
    to the lexicon size.
    """
    if not 0 < bin_width <= 2:
        raise DomainError(f"bin width must be in (0, 2], got {bin_width}")
    n_bins = math.ceil(2 / bin_width - 1e-9)
    counts = [0] * n_bins
    for entry in lexicon.entries:
        i = int((entry.distribution.score + 1) / bin_width)
        counts[min(i, n_bins - 1)] += 1
    return [(-1 + i * bin_width, counts[i]) for i in range(n_bins)]


def mean_entry_score(lexicon: RankedLexicon) -> float:
    """Unweighted mean of the entries' sentiment scores."""
    if not lexicon.entries:
        raise DomainError("mean score of an empty lexicon is undefined")
    return sum(e.distribution.score for e in lexicon.entries) / len(lexicon.entries)


def mean_occurrence_position(
    corpus: Iterable[AnnotatedText], table: SoRangeTable | None = None
) -> float | None:
    """Mean normalized position over all symbol occurrences in the corpus."""
    if table is None:
        table = default_table()
    total = Fraction(0)
    count = 0
    for record in corpus:
        denom = position_denominator(len(record.text))
        for index, ch in enumerate(record.text):
            if ord(ch) in table:
                total += Fraction(index, denom)
                count += 1
    if count == 0:
        return None
    return float(total / count)
