"""Annotator agreement over coincidence matrices.

A coincidence matrix tabulates every pairable label value: each pair of
annotations of one unit enters twice, once as (c, c') and once as
(c', c), so the matrix is symmetric and its grand total is twice the
number of pairs. All measures keep integer arithmetic until the final
division.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import BinaryIO

from .corpus import AnnotationPair
from .errors import DomainError

LABELS = (-1, 0, 1)
_INDEX = {-1: 0, 0: 1, 1: 2}

# squared interval difference |c - c'|^2 between label values: disagreeing
# across the full negative/positive span costs 4x a one-step disagreement
_DELTA_SQ = tuple(
    tuple((a - b) ** 2 for b in LABELS) for a in LABELS
)


@dataclass(frozen=True)
class CoincidenceMatrix:
    """Symmetric 3x3 tabulation of pairable sentiment labels."""

    cells: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(self.cells) != 3 or any(len(row) != 3 for row in self.cells):
            raise DomainError("coincidence matrix must be 3x3")
        for i in range(3):
            for j in range(3):
                if self.cells[i][j] < 0:
                    raise DomainError("coincidence counts must be non-negative")
                if self.cells[i][j] != self.cells[j][i]:
                    raise DomainError("coincidence matrix must be symmetric")
        if self.total % 2 != 0:
            raise DomainError("coincidence grand total must be even")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CoincidenceMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    def cell(self, c: int, c_prime: int) -> int:
        return self.cells[_INDEX[c]][_INDEX[c_prime]]

    def margin(self, c: int) -> int:
        return sum(self.cells[_INDEX[c]])

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.cells)


def coincidence_from_pairs(pairs: Iterable[AnnotationPair]) -> CoincidenceMatrix:
    """Tabulate annotation pairs; each pair enters the matrix twice."""
    cells = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    for pair in pairs:
        i = _INDEX[int(pair.label_a)]
        j = _INDEX[int(pair.label_b)]
        cells[i][j] += 1
        cells[j][i] += 1
    return CoincidenceMatrix.from_rows(cells)


def _disagreement_numerators(m: CoincidenceMatrix) -> tuple[int, int]:
    observed = 0
    expected = 0
    for i in range(3):
        margin_i = sum(m.cells[i])
        for j in range(3):
            observed += m.cells[i][j] * _DELTA_SQ[i][j]
            expected += margin_i * sum(m.cells[j]) * _DELTA_SQ[i][j]
    return observed, expected


def alpha_interval(m: CoincidenceMatrix) -> float:
    """Chance-corrected agreement 1 - Do/De with the interval metric.

    Do = (1/N) sum N(c,c') d^2(c,c'),
    De = (1/(N(N-1))) sum N(c) N(c') d^2(c,c'), d(c,c') = |c - c'|.
    """
    n = m.total
    if n < 4:
        raise DomainError(f"need a grand total of at least 4, got {n}")
    observed, expected = _disagreement_numerators(m)
    if expected == 0:
        raise DomainError("all mass in one label: expected disagreement is 0, agreement undefined")
    # 1 - (observed/N) / (expected/(N(N-1))) with exact integer arithmetic
    return float(1 - Fraction(observed * (n - 1), expected))


def accuracy(m: CoincidenceMatrix) -> float:
    """Fraction of the diagonal: the joint probability of agreement."""
    n = m.total
    if n == 0:
        raise DomainError("accuracy of an empty matrix is undefined")
    diagonal = sum(m.cells[i][i] for i in range(3))
    return float(Fraction(diagonal, n))


def f1_neg_pos(m: CoincidenceMatrix) -> float:
    """Mean of the degenerate per-class F-scores N(c,c)/N(c) for the
    negative and positive classes, ignoring the neutral one."""
    margin_neg = m.margin(-1)
    margin_pos = m.margin(1)
    if margin_neg == 0 or margin_pos == 0:
        raise DomainError("need non-empty negative and positive margins")
    f_neg = Fraction(m.cell(-1, -1), margin_neg)
    f_pos = Fraction(m.cell(1, 1), margin_pos)
    return float((f_neg + f_pos) / 2)


def write_matrix_csv(m: CoincidenceMatrix, dest: BinaryIO) -> None:
    """Audit export: header row/column of label values plus the 3x3 cells."""
    text_stream = io.TextIOWrapper(dest, encoding="utf-8", newline="")
    try:
        writer = csv.writer(text_stream)
        writer.writerow(["label", "-1", "0", "1"])
        for label, row in zip(LABELS, m.cells):
            writer.writerow([label, *row])
    finally:
        text_stream.flush()
        text_stream.detach()
