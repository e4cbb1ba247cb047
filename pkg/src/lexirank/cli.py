"""Command-line front end.

Subcommands wire the pipeline together: build a lexicon from an
annotated corpus, compare subsets, measure annotator agreement, analyze
symbol positions, compare languages, correlate against an external
census, and render reports.

Reports print measures with 3 decimals and probabilities with 4.
Exit codes: 0 success, 1 domain/analysis error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import __version__
from .agreement import (
    accuracy,
    alpha_interval,
    coincidence_from_pairs,
    f1_neg_pos,
    write_matrix_csv,
)
from .corpus import (
    PAIR_MODES,
    derive_pairs,
    parse_corpus,
    split_by_symbol_presence,
)
from .errors import DomainError, LexirankError, ParseError
from .report import (
    export_lexicon_csv,
    language_report,
    read_lexicon_csv,
    render_lexicon_html,
    render_sentiment_bar,
    render_sentiment_map,
)
from .sentiment import (
    LexiconAccumulator,
    SentimentCounts,
    build_lexicon,
    laplace_distribution,
    mean_entry_score,
    mean_occurrence_position,
    score_histogram,
)
from .stats import SampleSummary, correlation_significant, ols_fit, pearson, spearman, welch_t_test
from .symbols import default_table, format_codepoint, inventory_diff, read_counts_csv


def _fmt_score(value: float | None) -> str:
    return "n/a" if value is None else f"{value:+.3f}"


def _fmt_prob(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def _starred(value: float | None, significant: bool | None) -> str:
    if value is None:
        return "n/a"
    return f"{value:.3f}" + ("*" if significant else "")


class Report:
    """Scalar lines and aligned tables, rendered as text or CSV in the
    order they were added; consecutive scalars form one block."""

    def __init__(self):
        self._blocks: list[tuple[str, object]] = []

    def add_scalar(self, key: str, value) -> None:
        if self._blocks and self._blocks[-1][0] == "scalars":
            self._blocks[-1][1].append((key, str(value)))
        else:
            self._blocks.append(("scalars", [(key, str(value))]))

    def add_table(self, header: list[str], rows: list[list[str]]) -> None:
        self._blocks.append(("table", (header, rows)))

    def print(self, fmt: str, out=None) -> None:
        out = out if out is not None else sys.stdout
        writer = csv.writer(out) if fmt == "csv" else None
        for i, (kind, payload) in enumerate(self._blocks):
            if i > 0:
                out.write("\n")
            if kind == "scalars":
                if writer:
                    writer.writerow(["field", "value"])
                    writer.writerows(payload)
                else:
                    for key, value in payload:
                        out.write(f"{key}: {value}\n")
                continue
            header, rows = payload
            if writer:
                writer.writerow(header)
                writer.writerows(rows)
                continue
            widths = [
                max(len(str(header[c])), *(len(str(r[c])) for r in rows)) if rows else len(header[c])
                for c in range(len(header))
            ]
            out.write("  ".join(h.ljust(widths[c]) for c, h in enumerate(header)).rstrip() + "\n")
            for row in rows:
                out.write(
                    "  ".join(str(v).ljust(widths[c]) for c, v in enumerate(row)).rstrip() + "\n"
                )


def _build_sharded(input_path: str, min_occurrences: int, shards: int):
    """Accumulate the lexicon over round-robin shards and merge them.

    The merged result is identical for any shard count; sharding exists
    so that the canonical-order guarantee is testable.
    """
    table = default_table()
    accs = [LexiconAccumulator(table) for _ in range(shards)]
    for i, record in enumerate(parse_corpus(input_path)):
        accs[i % shards].add_record(record)
    merged = accs[0]
    for acc in accs[1:]:
        merged.merge(acc)
    return merged.finish(min_occurrences)


def _parse_size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x", 1)
        size = (int(w), int(h))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WIDTHxHEIGHT, got {text!r}") from None
    if min(size) < 1:
        raise argparse.ArgumentTypeError(f"dimensions must be positive, got {text!r}")
    return size


def _write_renders(lexicon, args) -> None:
    if args.map:
        map_w, map_h = args.map_size
        svg = render_sentiment_map(lexicon, width=map_w, height=map_h)
        Path(args.map).write_bytes(svg.encode("utf-8"))
    if args.html:
        Path(args.html).write_bytes(render_lexicon_html(lexicon).encode("utf-8"))
    if args.bars:
        bar_w, bar_h = args.bar_size
        directory = Path(args.bars)
        directory.mkdir(parents=True, exist_ok=True)
        for entry in lexicon.entries:
            name = f"{format_codepoint(entry.codepoint).replace('+', '')}.svg"
            svg = render_sentiment_bar(entry, width=bar_w, height=bar_h)
            (directory / name).write_bytes(svg.encode("utf-8"))


def cmd_build(args) -> int:
    if args.shards < 1:
        raise DomainError("--shards must be >= 1")
    lexicon = _build_sharded(args.input, args.min_occurrences, args.shards)
    Path(args.output).write_bytes(export_lexicon_csv(lexicon))
    _write_renders(lexicon, args)
    print(f"wrote {len(lexicon)} entries to {args.output}", file=sys.stderr)
    return 0


def _subset_summary(name: str, counts: SentimentCounts):
    d = laplace_distribution(counts)
    return [
        name,
        str(counts.total),
        str(counts.n_neg),
        str(counts.n_neut),
        str(counts.n_pos),
        _fmt_score(d.score),
        f"{d.sd:.3f}",
        _fmt_prob(d.sem),
    ], d


def cmd_split_stats(args) -> int:
    table = default_table()
    with_symbols, without = split_by_symbol_presence(
        parse_corpus(args.input), table.__contains__
    )
    report = Report()
    rows = []
    summaries = []
    for name, subset in (("with", with_symbols), ("without", without)):
        counts = SentimentCounts.from_labels(r.label for r in subset)
        row, dist = _subset_summary(name, counts)
        rows.append(row)
        summaries.append((counts.total, dist))
    report.add_table(
        ["subset", "texts", "negative", "neutral", "positive", "mean", "sd", "sem"], rows
    )
    (n_a, d_a), (n_b, d_b) = summaries
    if n_a >= 2 and n_b >= 2 and not (d_a.sd == 0 and d_b.sd == 0):
        result = welch_t_test(
            SampleSummary(d_a.score, d_a.sd, n_a), SampleSummary(d_b.score, d_b.sd, n_b)
        )
        report.add_scalar("welch_t", f"{result.t:.3f}")
        report.add_scalar("welch_dof", result.dof)
        report.add_scalar("welch_p", _fmt_prob(result.p_two_tailed))
    else:
        report.add_scalar("welch_t", "not applicable")
    report.print(args.format)
    return 0


def cmd_agreement(args) -> int:
    table = default_table()
    with_symbols, without = split_by_symbol_presence(
        parse_corpus(args.input), table.__contains__
    )
    report = Report()
    report.add_scalar("pair_mode", args.pair_mode)
    rows = []
    for name, subset in (("with", with_symbols), ("without", without)):
        pairs = derive_pairs(subset, mode=args.pair_mode)
        if not pairs:
            rows.append([name, "0", "n/a", "n/a", "n/a"])
            continue
        matrix = coincidence_from_pairs(pairs)

        def measure(fn):
            try:
                return f"{fn(matrix):.3f}"
            except DomainError:
                return "n/a"

        rows.append(
            [
                name,
                str(len(pairs)),
                measure(alpha_interval),
                measure(accuracy),
                measure(f1_neg_pos),
            ]
        )
        if args.output:
            directory = Path(args.output)
            directory.mkdir(parents=True, exist_ok=True)
            with open(directory / f"coincidence_{name}_symbols.csv", "wb") as f:
                write_matrix_csv(matrix, f)
    report.add_table(["subset", "pairs", "alpha", "accuracy", "f1_neg_pos"], rows)
    report.print(args.format)
    return 0


def cmd_positions(args) -> int:
    records = list(parse_corpus(args.input))
    table = default_table()
    report = Report()
    mean_pos = mean_occurrence_position(records, table)
    report.add_scalar(
        "mean_occurrence_position", "n/a" if mean_pos is None else f"{mean_pos:.3f}"
    )
    acc = LexiconAccumulator(table)
    for record in records:
        acc.add_record(record)
    lexicon = acc.finish(args.min_occurrences)
    report.add_scalar("lexicon_entries", len(lexicon))
    if len(lexicon) >= 2:
        x = [e.mean_position for e in lexicon.entries]
        rows = []
        for component, values in (
            ("negativity", [e.distribution.p_neg for e in lexicon.entries]),
            ("neutrality", [e.distribution.p_neut for e in lexicon.entries]),
            ("positivity", [e.distribution.p_pos for e in lexicon.entries]),
        ):
            try:
                fit = ols_fit(x, values)
            except DomainError:
                rows.append([component, "n/a", "n/a", "n/a"])
            else:
                rows.append(
                    [component, f"{fit.slope:.3f}", f"{fit.intercept:.3f}", f"{fit.r_squared:.3f}"]
                )
        report.add_table(["component", "slope", "intercept", "r_squared"], rows)
    else:
        report.add_scalar("regressions", "not applicable (fewer than 2 entries)")
    report.print(args.format)
    return 0


def cmd_compare_langs(args) -> int:
    records = list(parse_corpus(args.input))
    table = default_table()
    reference = build_lexicon(records, min_occurrences=args.min_occurrences, table=table)
    report = Report()
    report.add_scalar("reference_entries", len(reference))
    rows = [
        [
            row.language,
            str(row.texts_with_symbols),
            str(row.distinct_symbols),
            _starred(row.pearson_r, row.pearson_significant),
            _starred(row.spearman_rho, row.spearman_significant),
        ]
        for row in language_report(
            records, reference, min_occurrences=args.min_occurrences,
            level=args.level, table=table,
        )
    ]
    report.add_table(
        ["language", "texts_with_symbols", "distinct_symbols", "pearson", "spearman"], rows
    )
    report.print(args.format)
    return 0


def cmd_correlate_counts(args) -> int:
    lexicon = read_lexicon_csv(args.input)
    external = read_counts_csv(args.counts)
    ours = {e.codepoint: e.occurrences for e in lexicon.entries}
    common, only_ours, only_external = inventory_diff(ours, external)
    report = Report()
    report.add_scalar("lexicon_symbols", len(ours))
    report.add_scalar("external_symbols", len(external))
    report.add_scalar("common", len(common))
    report.add_scalar("only_lexicon", len(only_ours))
    report.add_scalar("only_external", len(only_external))
    if len(common) >= 4:
        shared = sorted(common)
        x = [float(ours[cp]) for cp in shared]
        y = [float(external[cp]) for cp in shared]
        try:
            r = pearson(x, y)
            rho = spearman(x, y)
        except DomainError:
            report.add_scalar("pearson", "n/a")
            report.add_scalar("spearman", "n/a")
        else:
            r_sig, r_p = correlation_significant(r, len(shared), args.level)
            rho_sig, rho_p = correlation_significant(rho, len(shared), args.level)
            report.add_scalar("pearson", _starred(r, r_sig))
            report.add_scalar("pearson_p", _fmt_prob(r_p))
            report.add_scalar("spearman", _starred(rho, rho_sig))
            report.add_scalar("spearman_p", _fmt_prob(rho_p))
    else:
        report.add_scalar("pearson", "n/a")
        report.add_scalar("spearman", "n/a")
    report.print(args.format)
    return 0


def cmd_render(args) -> int:
    lexicon = read_lexicon_csv(args.input)
    _write_renders(lexicon, args)
    if args.histogram:
        bins = score_histogram(lexicon, args.bins)
        with open(args.histogram, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["bin_start", "count"])
            for start, count in bins:
                writer.writerow([f"{start:.4f}", count])
        print(f"mean_entry_score: {mean_entry_score(lexicon):+.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexirank",
        description="Symbol sentiment lexicon construction and analysis",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "csv"), default="text",
                       help="report format (default: text)")

    def add_render_flags(p):
        p.add_argument("--map", help="write a sentiment map SVG to this path")
        p.add_argument("--bars", help="write per-symbol sentiment bar SVGs into this directory")
        p.add_argument("--html", help="write a static HTML ranking page to this path")
        p.add_argument("--map-size", type=_parse_size, default=(1000, 700),
                       metavar="WxH", help="sentiment map dimensions (default 1000x700)")
        p.add_argument("--bar-size", type=_parse_size, default=(400, 40),
                       metavar="WxH", help="sentiment bar dimensions (default 400x40)")

    p = sub.add_parser("build", help="build a lexicon CSV from an annotated corpus")
    p.add_argument("--input", required=True, help="corpus CSV")
    p.add_argument("--output", required=True, help="lexicon CSV to write")
    p.add_argument("--min-occurrences", type=int, default=5)
    p.add_argument("--shards", type=int, default=1,
                   help="number of internal accumulation shards (output is identical)")
    add_render_flags(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("split-stats", help="sentiment of texts with vs without symbols")
    p.add_argument("--input", required=True, help="corpus CSV")
    add_format(p)
    p.set_defaults(fn=cmd_split_stats)

    p = sub.add_parser("agreement", help="annotator agreement on texts with vs without symbols")
    p.add_argument("--input", required=True, help="corpus CSV")
    p.add_argument("--pair-mode", choices=PAIR_MODES, default="inter")
    p.add_argument("--output", help="directory for coincidence matrix CSVs")
    add_format(p)
    p.set_defaults(fn=cmd_agreement)

    p = sub.add_parser("positions", help="symbol positions and component regressions")
    p.add_argument("--input", required=True, help="corpus CSV")
    p.add_argument("--min-occurrences", type=int, default=5)
    add_format(p)
    p.set_defaults(fn=cmd_positions)

    p = sub.add_parser("compare-langs", help="per-language score correlation with the full lexicon")
    p.add_argument("--input", required=True, help="corpus CSV")
    p.add_argument("--min-occurrences", type=int, default=5)
    p.add_argument("--level", type=float, default=0.01, help="significance level (default 0.01)")
    add_format(p)
    p.set_defaults(fn=cmd_compare_langs)

    p = sub.add_parser("correlate-counts", help="correlate lexicon occurrences with an external census")
    p.add_argument("--input", required=True, help="lexicon CSV")
    p.add_argument("--counts", required=True, help="external counts CSV (codepoint,count)")
    p.add_argument("--level", type=float, default=0.01)
    add_format(p)
    p.set_defaults(fn=cmd_correlate_counts)

    p = sub.add_parser("render", help="render SVG/HTML/histogram artifacts from a lexicon CSV")
    p.add_argument("--input", required=True, help="lexicon CSV")
    add_render_flags(p)
    p.add_argument("--histogram", help="score histogram CSV path")
    p.add_argument("--bins", type=float, default=0.05, help="histogram bin width (default 0.05)")
    p.set_defaults(fn=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LexirankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
