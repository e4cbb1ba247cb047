"""Unicode pictograph classification and extraction.

A codepoint counts as a pictograph symbol when its Unicode general
category is So (Symbol, Other). Category membership comes from a bundled
range table for Unicode 8.0.0 (``data/so_ranges.txt``); the environment
variable ``LEXIRANK_UNICODE_TABLE`` overrides the bundled file. Only
single codepoints are classified: flag pairs, keycap sequences and other
multi-codepoint constructs are out of scope.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from collections.abc import Iterable
from dataclasses import dataclass
from importlib import resources

from .errors import EncodingError, ParseError

ENV_TABLE = "LEXIRANK_UNICODE_TABLE"

MAX_CODEPOINT = 0x10FFFF


def parse_codepoint(text: str) -> int:
    """Parse ``U+XXXX`` hex notation into a codepoint."""
    t = text.strip()
    if not t.upper().startswith("U+"):
        raise ParseError(f"expected U+XXXX codepoint notation, got {text!r}")
    try:
        cp = int(t[2:], 16)
    except ValueError:
        raise ParseError(f"invalid codepoint {text!r}") from None
    if not 0 <= cp <= MAX_CODEPOINT:
        raise ParseError(f"codepoint out of range: {text!r}")
    return cp


def format_codepoint(cp: int) -> str:
    return f"U+{cp:04X}"


class SoRangeTable:
    """Sorted inclusive codepoint intervals with bisect membership tests."""

    def __init__(self, intervals: Iterable[tuple[int, int]]):
        ivs = sorted(intervals)
        prev_hi = -1
        for lo, hi in ivs:
            if lo > hi:
                raise ParseError(f"empty interval {format_codepoint(lo)}..{format_codepoint(hi)}")
            if lo <= prev_hi:
                raise ParseError(f"overlapping interval at {format_codepoint(lo)}")
            prev_hi = hi
        self.intervals: tuple[tuple[int, int], ...] = tuple(ivs)
        self._starts = [lo for lo, _ in self.intervals]

    def __contains__(self, cp: int) -> bool:
        i = bisect_right(self._starts, cp) - 1
        return i >= 0 and cp <= self.intervals[i][1]

    def __len__(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def codepoints(self):
        """Iterate every codepoint covered by the table."""
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "SoRangeTable":
        intervals = []
        for n, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ".." not in line:
                raise ParseError("expected U+XXXX..U+YYYY interval", line=n)
            lo_s, hi_s = line.split("..", 1)
            intervals.append((parse_codepoint(lo_s), parse_codepoint(hi_s)))
        return cls(intervals)

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "SoRangeTable":
        with open(path, encoding="utf-8") as f:
            return cls.from_lines(f)


_default_table: SoRangeTable | None = None


def default_table() -> SoRangeTable:
    """The bundled Unicode 8.0 So table, or the ``LEXIRANK_UNICODE_TABLE`` override."""
    global _default_table
    override = os.environ.get(ENV_TABLE)
    if override:
        return SoRangeTable.from_file(override)
    if _default_table is None:
        text = resources.files("lexirank.data").joinpath("so_ranges.txt").read_text("utf-8")
        _default_table = SoRangeTable.from_lines(text.splitlines())
    return _default_table


def is_symbol_other(cp: int, table: SoRangeTable | None = None) -> bool:
    """True when the codepoint has general category So."""
    if not 0 <= cp <= MAX_CODEPOINT:
        raise ValueError(f"not a Unicode scalar value: {cp!r}")
    return cp in (table if table is not None else default_table())


@dataclass(frozen=True, slots=True)
class SymbolOccurrence:
    """One pictograph occurrence in a text.

    ``index`` is the 0-based codepoint offset; ``position`` normalizes it
    to [0, 1] as index / max(L - 1, 1) for a text of L codepoints, so the
    first codepoint sits at 0 and the last at 1.
    """

    codepoint: int
    index: int
    position: float


def position_denominator(text_length: int) -> int:
    return max(text_length - 1, 1)


def extract_occurrences(text: str, table: SoRangeTable | None = None) -> list[SymbolOccurrence]:
    """All So codepoint occurrences in text order, with normalized positions."""
    if table is None:
        table = default_table()
    denom = position_denominator(len(text))
    return [
        SymbolOccurrence(ord(ch), i, i / denom)
        for i, ch in enumerate(text)
        if ord(ch) in table
    ]


def contains_symbol(text: str, table: SoRangeTable | None = None) -> bool:
    if table is None:
        table = default_table()
    return any(ord(ch) in table for ch in text)


def build_inventory(texts: Iterable[str], table: SoRangeTable | None = None) -> dict[int, int]:
    """Per-codepoint occurrence counts over a collection of texts."""
    if table is None:
        table = default_table()
    counts: dict[int, int] = {}
    for text in texts:
        for ch in text:
            cp = ord(ch)
            if cp in table:
                counts[cp] = counts.get(cp, 0) + 1
    return counts


def inventory_diff(
    a: dict[int, int], b: dict[int, int]
) -> tuple[set[int], set[int], set[int]]:
    """Split two inventories' keys into (common, only_a, only_b)."""
    ka, kb = set(a), set(b)
    return ka & kb, ka - kb, kb - ka


def read_counts_csv(path: str | os.PathLike) -> dict[int, int]:
    """Read an external per-codepoint census: CSV ``codepoint,count`` rows.

    Codepoints use U+XXXX notation; a header row is required.
    """
    import csv

    counts: dict[int, int] = {}
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader, None)
            if header is None or [h.strip().lower() for h in header[:2]] != ["codepoint", "count"]:
                raise ParseError("expected header 'codepoint,count'", line=1)
            for row in reader:
                if not row:
                    continue
                if len(row) < 2:
                    raise ParseError("expected two fields", line=reader.line_num)
                cp = parse_codepoint(row[0])
                try:
                    n = int(row[1])
                except ValueError:
                    raise ParseError(f"invalid count {row[1]!r}", line=reader.line_num) from None
                if n < 0:
                    raise ParseError(f"negative count {n}", line=reader.line_num)
                counts[cp] = counts.get(cp, 0) + n
        except UnicodeDecodeError as exc:
            raise EncodingError(str(exc)) from exc
    return counts
