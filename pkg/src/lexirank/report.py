"""Rendering and export: sentiment bars, the sentiment map, lexicon CSV
and HTML, and the per-language comparison table.

All renderers are pure functions of their inputs and emit byte-identical
output for identical input. Colors: negativity #d7191c, neutrality
#ffdf00, positivity #1a9641, interpolated linearly with the yellow
anchor at score 0.
"""

from __future__ import annotations

import csv
import html
import io
import os
from collections.abc import Iterable
from dataclasses import dataclass
from math import log10
from typing import BinaryIO

from .corpus import AnnotatedText, split_by_language
from .errors import DomainError, ParseError
from .sentiment import (
    LexiconEntry,
    RankedLexicon,
    SentimentCounts,
    build_lexicon,
    laplace_distribution,
)
from .stats import correlation_significant, pearson, spearman
from .symbols import SoRangeTable, default_table, format_codepoint, parse_codepoint

COLOR_NEGATIVE = "#d7191c"
COLOR_NEUTRAL = "#ffdf00"
COLOR_POSITIVE = "#1a9641"
COLOR_BAND = "#808080"

CONFIDENCE_Z = 1.96

LEXICON_HEADER = (
    "emoji",
    "codepoint",
    "occurrences",
    "position",
    "n_neg",
    "n_neut",
    "n_pos",
    "p_neg",
    "p_neut",
    "p_pos",
    "score",
    "sd",
    "sem",
)


def _hex_to_rgb(color: str) -> tuple[int, int, int]:
    return int(color[1:3], 16), int(color[3:5], 16), int(color[5:7], 16)


def _blend(a: str, b: str, t: float) -> str:
    ra, ga, ba = _hex_to_rgb(a)
    rb, gb, bb = _hex_to_rgb(b)
    return "#{:02x}{:02x}{:02x}".format(
        round(ra + (rb - ra) * t),
        round(ga + (gb - ga) * t),
        round(ba + (bb - ba) * t),
    )


def score_color(score: float) -> str:
    """Red at -1 through yellow at 0 to green at +1, piecewise linear."""
    s = max(-1.0, min(1.0, score))
    if s <= 0:
        return _blend(COLOR_NEGATIVE, COLOR_NEUTRAL, s + 1)
    return _blend(COLOR_NEUTRAL, COLOR_POSITIVE, s)


@dataclass(frozen=True, slots=True)
class BarGeometry:
    """Layout of one sentiment bar.

    ``boundaries`` are the cumulative (p_neg, p_neg + p_neut) fractions
    splitting [0, 1] into the three colored segments; ``marker`` is the
    score-space confidence interval, clipped to [-1, +1].
    """

    width_px: int
    height_px: int
    boundaries: tuple[float, float]
    marker: tuple[float, float]


def bar_geometry(entry: LexiconEntry, width: int = 400, height: int = 40) -> BarGeometry:
    if entry.occurrences < 1:
        raise DomainError("sentiment bar needs at least one occurrence")
    d = entry.distribution
    half_band = CONFIDENCE_Z * (d.sem if d.sem is not None else 0.0)
    lo = max(-1.0, d.score - half_band)
    hi = min(1.0, d.score + half_band)
    return BarGeometry(
        width_px=width,
        height_px=height,
        boundaries=(d.p_neg, d.p_neg + d.p_neut),
        marker=(lo, hi),
    )


def render_sentiment_bar(entry: LexiconEntry, width: int = 400, height: int = 40) -> str:
    """A tri-color bar over the score range -1..+1 with a grey band
    covering the 95% confidence interval of the score."""
    geo = bar_geometry(entry, width, height)
    x1 = round(width * geo.boundaries[0])
    x2 = round(width * geo.boundaries[1])
    band_x = (geo.marker[0] + 1) / 2 * width
    band_w = (geo.marker[1] - geo.marker[0]) / 2 * width
    band_y = height * 0.25
    band_h = height * 0.5
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">\n',
        f'<rect x="0" y="0" width="{x1}" height="{height}" fill="{COLOR_NEGATIVE}"/>\n',
        f'<rect x="{x1}" y="0" width="{x2 - x1}" height="{height}" fill="{COLOR_NEUTRAL}"/>\n',
        f'<rect x="{x2}" y="0" width="{width - x2}" height="{height}" fill="{COLOR_POSITIVE}"/>\n',
        f'<rect x="{band_x:.2f}" y="{band_y:.2f}" width="{band_w:.2f}" height="{band_h:.2f}" '
        f'fill="{COLOR_BAND}" fill-opacity="0.9"/>\n',
        "</svg>\n",
    ]
    return "".join(parts)


def render_sentiment_map(
    lexicon: RankedLexicon,
    width: int = 1000,
    height: int = 700,
    min_radius: float = 2.0,
    radius_scale: float = 3.0,
) -> str:
    """Scatter of entries at (score, neutrality), radius proportional to
    log10 of the occurrences with a minimum radius clamp."""
    if not lexicon.entries:
        raise DomainError("cannot render an empty lexicon")
    margin = 50
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin

    def x_px(score: float) -> float:
        return margin + (score + 1) / 2 * plot_w

    def y_px(p_neut: float) -> float:
        return margin + (1 - p_neut) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">\n',
        f'<rect x="{margin}" y="{margin}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#000000"/>\n',
        # zero-score guide
        f'<line x1="{x_px(0):.2f}" y1="{margin}" x2="{x_px(0):.2f}" y2="{margin + plot_h}" '
        f'stroke="#cccccc"/>\n',
    ]
    for label, score in (("-1", -1.0), ("0", 0.0), ("+1", 1.0)):
        parts.append(
            f'<text x="{x_px(score):.2f}" y="{height - margin + 20}" '
            f'text-anchor="middle" font-size="14">{label}</text>\n'
        )
    for label, p0 in (("0", 0.0), ("1", 1.0)):
        parts.append(
            f'<text x="{margin - 10}" y="{y_px(p0):.2f}" '
            f'text-anchor="end" font-size="14">{label}</text>\n'
        )
    for entry in lexicon.entries:
        d = entry.distribution
        radius = max(min_radius, radius_scale * log10(max(entry.occurrences, 1)))
        parts.append(
            f'<circle cx="{x_px(d.score):.2f}" cy="{y_px(d.p_neut):.2f}" r="{radius:.2f}" '
            f'fill="{score_color(d.score)}" fill-opacity="0.75"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def _format4(value: float) -> str:
    return f"{value:.4f}"


def export_lexicon_csv(lexicon: RankedLexicon) -> bytes:
    """Lexicon as UTF-8 CSV, one row per entry in rank order.

    Probabilities, score, position, SD and SEM carry 4 decimals; the
    export round-trips through read_lexicon_csv at that precision.
    """
    buf = io.BytesIO()
    text_stream = io.TextIOWrapper(buf, encoding="utf-8", newline="")
    writer = csv.writer(text_stream)
    writer.writerow(LEXICON_HEADER)
    for entry in lexicon.entries:
        d = entry.distribution
        writer.writerow(
            [
                chr(entry.codepoint),
                format_codepoint(entry.codepoint),
                entry.occurrences,
                _format4(entry.mean_position),
                entry.counts.n_neg,
                entry.counts.n_neut,
                entry.counts.n_pos,
                _format4(d.p_neg),
                _format4(d.p_neut),
                _format4(d.p_pos),
                _format4(d.score),
                _format4(d.sd),
                _format4(d.sem) if d.sem is not None else "",
            ]
        )
    text_stream.flush()
    text_stream.detach()
    return buf.getvalue()


def read_lexicon_csv(source: BinaryIO | str | os.PathLike) -> RankedLexicon:
    """Rebuild a RankedLexicon from an export_lexicon_csv file.

    Ranks come from row order; distributions are recomputed from the
    stored counts (which reproduces the exported 4-decimal columns).
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            return read_lexicon_csv(f)

    text_stream = io.TextIOWrapper(source, encoding="utf-8", newline="")
    try:
        reader = csv.reader(text_stream)
        header = next(reader, None)
        if header is None or tuple(header) != LEXICON_HEADER:
            raise ParseError(f"expected lexicon header {','.join(LEXICON_HEADER)!r}", line=1)
        entries = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(LEXICON_HEADER):
                raise ParseError(
                    f"expected {len(LEXICON_HEADER)} fields, got {len(row)}",
                    line=reader.line_num,
                )
            try:
                counts = SentimentCounts(int(row[4]), int(row[5]), int(row[6]))
                occurrences = int(row[2])
                position = float(row[3])
            except ValueError as exc:
                raise ParseError(str(exc), line=reader.line_num) from None
            if counts.total != occurrences:
                raise ParseError(
                    f"occurrences {occurrences} != count sum {counts.total}",
                    line=reader.line_num,
                )
            entries.append(
                LexiconEntry(
                    codepoint=parse_codepoint(row[1]),
                    counts=counts,
                    distribution=laplace_distribution(counts),
                    mean_position=position,
                    rank=len(entries) + 1,
                )
            )
    finally:
        text_stream.detach()
    min_occurrences = min((e.occurrences for e in entries), default=1)
    return RankedLexicon(entries=tuple(entries), min_occurrences=min_occurrences)


def render_lexicon_html(lexicon: RankedLexicon, title: str = "Symbol sentiment ranking") -> str:
    """Static HTML ranking table; no scripts, viewer fonts render the glyphs."""
    rows = []
    for entry in lexicon.entries:
        d = entry.distribution
        rows.append(
            "<tr>"
            f"<td>{entry.rank}</td>"
            f"<td>{html.escape(chr(entry.codepoint))}</td>"
            f"<td>{format_codepoint(entry.codepoint)}</td>"
            f"<td>{entry.occurrences}</td>"
            f"<td>{_format4(entry.mean_position)}</td>"
            f"<td>{_format4(d.p_neg)}</td>"
            f"<td>{_format4(d.p_neut)}</td>"
            f"<td>{_format4(d.p_pos)}</td>"
            f"<td>{_format4(d.score)}</td>"
            "</tr>"
        )
    body = "\n".join(rows)
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>{html.escape(title)}</title>
<style>
table {{ border-collapse: collapse; font-family: sans-serif; }}
td, th {{ border: 1px solid #999; padding: 2px 8px; text-align: right; }}
th {{ background: #eee; }}
</style>
</head>
<body>
<h1>{html.escape(title)}</h1>
<table>
<tr><th>rank</th><th>symbol</th><th>codepoint</th><th>occurrences</th><th>position</th>
<th>negativity</th><th>neutrality</th><th>positivity</th><th>score</th></tr>
{body}
</table>
</body>
</html>
"""


@dataclass(frozen=True, slots=True)
class LanguageComparison:
    """One row of the per-language comparison table.

    Correlations are None when fewer than 4 symbols are shared with the
    reference lexicon (or when scores are constant so the coefficient is
    undefined).
    """

    language: str
    texts_with_symbols: int
    distinct_symbols: int
    pearson_r: float | None
    pearson_significant: bool | None
    spearman_rho: float | None
    spearman_significant: bool | None


def language_report(
    corpus: Iterable[AnnotatedText],
    reference: RankedLexicon,
    min_occurrences: int = 5,
    level: float = 0.01,
    table: SoRangeTable | None = None,
) -> list[LanguageComparison]:
    """Per-language symbol usage and score correlation with a reference.

    For each language: the count of its texts containing symbols, the
    distinct symbols above the occurrence cutoff, and Pearson/Spearman
    correlations of its per-symbol scores against the reference lexicon
    over the shared symbol set, with significance at ``level``.
    """
    if table is None:
        table = default_table()
    reference_scores = {e.codepoint: e.distribution.score for e in reference.entries}
    rows = []
    for language, records in split_by_language(corpus).items():
        with_symbols = sum(
            1 for r in records if any(ord(ch) in table for ch in r.text)
        )
        lang_lexicon = build_lexicon(records, min_occurrences=min_occurrences, table=table)
        lang_scores = {e.codepoint: e.distribution.score for e in lang_lexicon.entries}
        shared = sorted(set(lang_scores) & set(reference_scores))
        r = rho = None
        r_sig = rho_sig = None
        if len(shared) >= 4:
            x = [lang_scores[cp] for cp in shared]
            y = [reference_scores[cp] for cp in shared]
            try:
                r = pearson(x, y)
                rho = spearman(x, y)
            except DomainError:
                r = rho = None
            else:
                r_sig, _ = correlation_significant(r, len(shared), level)
                rho_sig, _ = correlation_significant(rho, len(shared), level)
        rows.append(
            LanguageComparison(
                language=language,
                texts_with_symbols=with_symbols,
                distinct_symbols=len(lang_lexicon),
                pearson_r=r,
                pearson_significant=r_sig,
                spearman_rho=rho,
                spearman_significant=rho_sig,
            )
        )
    rows.sort(key=lambda row: (-row.distinct_symbols, row.language))
    return rows
