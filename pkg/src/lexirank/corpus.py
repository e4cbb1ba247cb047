"""Annotated-corpus parsing, pairing, and partitioning.

The corpus format is UTF-8 CSV with the header
``text_id,language,annotator_id,label,text`` (comma delimiter,
double-quote quoting with doubled-quote escape). Labels are -1, 0 or 1.
"""

from __future__ import annotations

import csv
import io
import os
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from typing import BinaryIO

from .errors import DomainError, EncodingError, ParseError

CORPUS_HEADER = ("text_id", "language", "annotator_id", "label", "text")


class SentimentLabel(IntEnum):
    """Ordered 3-valued sentiment class: negative < neutral < positive."""

    NEGATIVE = -1
    NEUTRAL = 0
    POSITIVE = 1


def parse_label(value: int | str) -> SentimentLabel:
    """Coerce -1/0/1 (or their string forms) into a SentimentLabel."""
    try:
        return SentimentLabel(int(value))
    except ValueError:
        raise DomainError(f"sentiment label must be one of -1, 0, 1; got {value!r}") from None


@dataclass(frozen=True, slots=True)
class AnnotatedText:
    """One corpus record: a text with a single annotator's label."""

    text_id: str
    language: str
    annotator_id: str
    label: SentimentLabel
    text: str

    def __post_init__(self):
        if not self.text_id:
            raise DomainError("text_id must be non-empty")
        if not self.language:
            raise DomainError("language must be non-empty")
        if not self.annotator_id:
            raise DomainError("annotator_id must be non-empty")


PAIR_MODES = ("inter", "self", "all")


@dataclass(frozen=True, slots=True)
class AnnotationPair:
    """Two labels given to the same text, unordered.

    Construction canonicalizes label order, so swapping the two labels
    yields an equal pair.
    """

    text_id: str
    label_a: SentimentLabel
    label_b: SentimentLabel
    same_annotator: bool

    def __post_init__(self):
        if self.label_b < self.label_a:
            a, b = self.label_a, self.label_b
            object.__setattr__(self, "label_a", b)
            object.__setattr__(self, "label_b", a)


def parse_corpus(source: BinaryIO | str | os.PathLike) -> Iterator[AnnotatedText]:
    """Yield corpus records from a UTF-8 CSV byte stream or file path.

    Raises ParseError (malformed CSV, bad header, wrong field count),
    EncodingError (invalid UTF-8) or DomainError (label outside
    {-1, 0, 1}), each carrying the 1-based line number where possible.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            yield from parse_corpus(f)
        return

    text_stream = io.TextIOWrapper(source, encoding="utf-8", newline="")
    reader = csv.reader(text_stream)
    try:
        try:
            header = next(reader, None)
        except UnicodeDecodeError as exc:
            raise EncodingError(str(exc), line=1) from exc
        if header is None:
            raise ParseError("empty file, expected corpus header", line=1)
        if tuple(h.strip() for h in header) != CORPUS_HEADER:
            raise ParseError(
                f"expected header {','.join(CORPUS_HEADER)!r}, got {','.join(header)!r}",
                line=1,
            )
        while True:
            try:
                row = next(reader, None)
            except UnicodeDecodeError as exc:
                raise EncodingError(str(exc), line=reader.line_num + 1) from exc
            except csv.Error as exc:
                raise ParseError(str(exc), line=reader.line_num) from exc
            if row is None:
                break
            if not row:
                continue
            if len(row) != len(CORPUS_HEADER):
                raise ParseError(
                    f"expected {len(CORPUS_HEADER)} fields, got {len(row)}",
                    line=reader.line_num,
                )
            text_id, language, annotator_id, label_field, text = row
            if label_field.strip() not in ("-1", "0", "1"):
                raise DomainError(
                    f"line {reader.line_num}: sentiment label must be one of -1, 0, 1; "
                    f"got {label_field!r}"
                )
            yield AnnotatedText(
                text_id=text_id,
                language=language.strip().lower(),
                annotator_id=annotator_id,
                label=SentimentLabel(int(label_field)),
                text=text,
            )
    finally:
        # leave the caller's byte stream open
        text_stream.detach()


def write_corpus(records: Iterable[AnnotatedText], dest: BinaryIO) -> None:
    """Serialize records to corpus CSV; inverse of parse_corpus."""
    text_stream = io.TextIOWrapper(dest, encoding="utf-8", newline="")
    try:
        writer = csv.writer(text_stream)
        writer.writerow(CORPUS_HEADER)
        for r in records:
            writer.writerow([r.text_id, r.language, r.annotator_id, int(r.label), r.text])
    finally:
        text_stream.flush()
        text_stream.detach()


def derive_pairs(corpus: Iterable[AnnotatedText], mode: str = "inter") -> list[AnnotationPair]:
    """All unordered label pairs among repeated annotations of each text.

    Texts annotated k times contribute all k(k-1)/2 pairs. ``inter``
    keeps pairs from distinct annotators, ``self`` pairs from one
    annotator, ``all`` both.
    """
    if mode not in PAIR_MODES:
        raise DomainError(f"pair mode must be one of {PAIR_MODES}, got {mode!r}")
    by_text: dict[str, list[tuple[str, SentimentLabel]]] = {}
    for record in corpus:
        by_text.setdefault(record.text_id, []).append((record.annotator_id, record.label))

    pairs = []
    for text_id, annotations in by_text.items():
        for (annot_a, label_a), (annot_b, label_b) in combinations(annotations, 2):
            same = annot_a == annot_b
            if mode == "inter" and same:
                continue
            if mode == "self" and not same:
                continue
            pairs.append(AnnotationPair(text_id, label_a, label_b, same))
    return pairs


def split_by_symbol_presence(
    corpus: Iterable[AnnotatedText], classifier: Callable[[int], bool]
) -> tuple[list[AnnotatedText], list[AnnotatedText]]:
    """Partition records by whether any codepoint satisfies the classifier."""
    with_symbols: list[AnnotatedText] = []
    without: list[AnnotatedText] = []
    for record in corpus:
        if any(classifier(ord(ch)) for ch in record.text):
            with_symbols.append(record)
        else:
            without.append(record)
    return with_symbols, without


def split_by_language(corpus: Iterable[AnnotatedText]) -> dict[str, list[AnnotatedText]]:
    """Group records by language, preserving order within each group."""
    groups: dict[str, list[AnnotatedText]] = {}
    for record in corpus:
        groups.setdefault(record.language, []).append(record)
    return groups
