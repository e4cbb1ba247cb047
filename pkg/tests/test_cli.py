import csv
import io

import pytest

from lexirank.cli import main
from lexirank.corpus import AnnotatedText, SentimentLabel
from lexirank.report import read_lexicon_csv

from conftest import make_record, synthetic_corpus, write_corpus_file


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def toy_corpus(tmp_path):
    records = [
        make_record("t1", "en", "a1", 1, "nice ☀"),
        make_record("t2", "en", "a2", 1, "☀☀"),
        make_record("t3", "en", "a1", -1, "bah \U0001F62D"),
        make_record("t4", "en", "a2", 0, "plain"),
    ]
    return write_corpus_file(tmp_path / "corpus.csv", records)


class TestBuild:
    def test_two_text_toy_corpus_single_row(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv",
            [
                make_record("t1", text="☀ nice", label=1),
                make_record("t2", text="☀☀", label=1),
            ],
        )
        out_path = tmp_path / "lexicon.csv"
        code, _, err = run(
            capsys, "build", "--input", str(corpus), "--output", str(out_path),
            "--min-occurrences", "1",
        )
        assert code == 0
        assert "1 entries" in err
        lexicon = read_lexicon_csv(out_path)
        assert len(lexicon) == 1
        assert lexicon[0].occurrences == 3

    def test_missing_input_exits_2(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "build", "--input", str(tmp_path / "absent.csv"),
            "--output", str(tmp_path / "out.csv"),
        )
        assert code == 2
        assert "error" in err

    def test_bad_label_exits_1(self, tmp_path, capsys):
        corpus = tmp_path / "c.csv"
        corpus.write_bytes(b"text_id,language,annotator_id,label,text\nt1,en,a1,2,x\n")
        code, _, err = run(
            capsys, "build", "--input", str(corpus), "--output", str(tmp_path / "o.csv")
        )
        assert code == 1
        assert "line 2" in err

    def test_malformed_row_exits_2(self, tmp_path, capsys):
        corpus = tmp_path / "c.csv"
        corpus.write_bytes(b"text_id,language,annotator_id,label,text\nt1,en,a1,1\n")
        code, _, _ = run(
            capsys, "build", "--input", str(corpus), "--output", str(tmp_path / "o.csv")
        )
        assert code == 2

    def test_optional_renders(self, tmp_path, toy_corpus, capsys):
        out = tmp_path / "lex.csv"
        code, _, _ = run(
            capsys, "build", "--input", str(toy_corpus), "--output", str(out),
            "--min-occurrences", "1",
            "--map", str(tmp_path / "map.svg"),
            "--bars", str(tmp_path / "bars"),
            "--html", str(tmp_path / "page.html"),
        )
        assert code == 0
        assert (tmp_path / "map.svg").read_bytes().startswith(b"<?xml")
        assert (tmp_path / "page.html").exists()
        assert sorted(p.name for p in (tmp_path / "bars").iterdir()) == [
            "U1F62D.svg", "U2600.svg",
        ]

    def test_deterministic_across_runs_and_shards(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=200, seed=3)
        )
        outputs = []
        for i, shards in enumerate((1, 1, 4)):
            out = tmp_path / f"lex{i}.csv"
            svg = tmp_path / f"map{i}.svg"
            code, _, _ = run(
                capsys, "build", "--input", str(corpus), "--output", str(out),
                "--min-occurrences", "1", "--shards", str(shards), "--map", str(svg),
            )
            assert code == 0
            outputs.append((out.read_bytes(), svg.read_bytes()))
        assert outputs[0] == outputs[1] == outputs[2]


class TestSplitStats:
    def test_reports_both_subsets_and_welch(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=300, seed=1)
        )
        code, out, _ = run(capsys, "split-stats", "--input", str(corpus))
        assert code == 0
        assert "welch_t" in out
        assert "with" in out and "without" in out

    def test_no_symbol_texts_not_applicable(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv",
            [make_record("t1", text="plain", label=1), make_record("t2", text="words", label=0)],
        )
        code, out, _ = run(capsys, "split-stats", "--input", str(corpus))
        assert code == 0
        assert "not applicable" in out

    def test_csv_mirror_parses(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=100, seed=2)
        )
        code, out, _ = run(capsys, "split-stats", "--input", str(corpus), "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert ["field", "value"] in rows
        assert any(r and r[0] == "subset" for r in rows)


class TestAgreement:
    def test_perfect_single_pair(self, tmp_path, capsys):
        records = [
            make_record("t1", annotator="a1", label=1, text="hi ☀"),
            make_record("t1", annotator="a2", label=1, text="hi ☀"),
        ]
        corpus = write_corpus_file(tmp_path / "c.csv", records)
        code, out, _ = run(capsys, "agreement", "--input", str(corpus))
        assert code == 0
        with_row = [line for line in out.splitlines() if line.startswith("with")][0]
        # a single agreeing pair: accuracy and f1 defined (1.000), alpha needs spread
        assert "1.000" in with_row

    def test_writes_matrix_csvs(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=200, seed=5, twice_fraction=0.5)
        )
        out_dir = tmp_path / "matrices"
        code, out, _ = run(
            capsys, "agreement", "--input", str(corpus), "--output", str(out_dir)
        )
        assert code == 0
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == ["coincidence_with_symbols.csv", "coincidence_without_symbols.csv"]

    def test_pair_mode_flag(self, tmp_path, capsys):
        records = [
            make_record("t1", annotator="a1", label=1),
            make_record("t1", annotator="a1", label=0),
        ]
        corpus = write_corpus_file(tmp_path / "c.csv", records)
        code, out, _ = run(capsys, "agreement", "--input", str(corpus), "--pair-mode", "self")
        assert code == 0
        without_row = [line for line in out.splitlines() if line.startswith("without")][0]
        assert without_row.split()[1] == "1"

    def test_no_pairs_reports_empty(self, tmp_path, capsys):
        corpus = write_corpus_file(tmp_path / "c.csv", [make_record("t1")])
        code, out, _ = run(capsys, "agreement", "--input", str(corpus))
        assert code == 0
        assert "n/a" in out


class TestPositions:
    def test_all_symbols_at_end(self, tmp_path, capsys):
        records = [make_record(f"t{i}", text="abc ☀", label=1) for i in range(6)]
        corpus = write_corpus_file(tmp_path / "c.csv", records)
        code, out, _ = run(
            capsys, "positions", "--input", str(corpus), "--min-occurrences", "1"
        )
        assert code == 0
        assert "mean_occurrence_position: 1.000" in out

    def test_reports_three_component_fits(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=400, seed=11)
        )
        code, out, _ = run(
            capsys, "positions", "--input", str(corpus), "--min-occurrences", "1"
        )
        assert code == 0
        for component in ("negativity", "neutrality", "positivity"):
            assert component in out

    def test_single_entry_not_applicable(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", [make_record("t1", text="☀", label=1)]
        )
        code, out, _ = run(
            capsys, "positions", "--input", str(corpus), "--min-occurrences", "1"
        )
        assert code == 0
        assert "not applicable" in out


class TestCompareLangs:
    def test_single_language_self_correlates(self, tmp_path, capsys):
        records = []
        i = 0
        for cp, label in zip((0x2600, 0x2601, 0x2614, 0x26A1, 0x2708), (1, 1, 0, -1, 0)):
            for k in range(3):
                lab = label if k < 2 else 0
                records.append(
                    AnnotatedText(f"t{i}", "en", "a1", SentimentLabel(lab), f"x {chr(cp)}")
                )
                i += 1
        corpus = write_corpus_file(tmp_path / "c.csv", records)
        code, out, _ = run(
            capsys, "compare-langs", "--input", str(corpus), "--min-occurrences", "1"
        )
        assert code == 0
        en_row = [line for line in out.splitlines() if line.startswith("en")][0]
        assert "1.000*" in en_row

    def test_multiple_languages_listed(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=600, seed=13)
        )
        code, out, _ = run(
            capsys, "compare-langs", "--input", str(corpus), "--min-occurrences", "1"
        )
        assert code == 0
        for lang in ("en", "es", "de"):
            assert any(line.startswith(lang) for line in out.splitlines())


class TestCorrelateCounts:
    def build_lexicon_csv(self, tmp_path, capsys):
        corpus = write_corpus_file(
            tmp_path / "c.csv", synthetic_corpus(n_rows=300, seed=17)
        )
        out = tmp_path / "lex.csv"
        code, _, _ = run(
            capsys, "build", "--input", str(corpus), "--output", str(out),
            "--min-occurrences", "1",
        )
        assert code == 0
        return out

    def test_identical_counts_correlate_perfectly(self, tmp_path, capsys):
        lex_path = self.build_lexicon_csv(tmp_path, capsys)
        lexicon = read_lexicon_csv(lex_path)
        counts_path = tmp_path / "counts.csv"
        lines = ["codepoint,count"] + [
            f"U+{e.codepoint:04X},{e.occurrences}" for e in lexicon.entries
        ]
        counts_path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(
            capsys, "correlate-counts", "--input", str(lex_path), "--counts", str(counts_path)
        )
        assert code == 0
        assert f"common: {len(lexicon)}" in out
        assert "pearson: 1.000*" in out
        assert "spearman: 1.000*" in out

    def test_too_few_shared_symbols(self, tmp_path, capsys):
        lex_path = self.build_lexicon_csv(tmp_path, capsys)
        counts_path = tmp_path / "counts.csv"
        counts_path.write_text("codepoint,count\nU+2600,5\n")
        code, out, _ = run(
            capsys, "correlate-counts", "--input", str(lex_path), "--counts", str(counts_path)
        )
        assert code == 0
        assert "pearson: n/a" in out


class TestRender:
    def test_size_flags_override_defaults(self, tmp_path, toy_corpus, capsys):
        lex_path = tmp_path / "lex.csv"
        run(capsys, "build", "--input", str(toy_corpus), "--output", str(lex_path),
            "--min-occurrences", "1")
        code, _, _ = run(
            capsys, "render", "--input", str(lex_path),
            "--map", str(tmp_path / "m.svg"), "--map-size", "500x300",
            "--bars", str(tmp_path / "bars"), "--bar-size", "200x20",
        )
        assert code == 0
        assert b'width="500" height="300"' in (tmp_path / "m.svg").read_bytes()
        bar = next((tmp_path / "bars").iterdir()).read_bytes()
        assert b'width="200" height="20"' in bar

    def test_renders_from_lexicon_csv(self, tmp_path, toy_corpus, capsys):
        lex_path = tmp_path / "lex.csv"
        run(capsys, "build", "--input", str(toy_corpus), "--output", str(lex_path),
            "--min-occurrences", "1")
        code, out, _ = run(
            capsys, "render", "--input", str(lex_path),
            "--map", str(tmp_path / "m.svg"),
            "--html", str(tmp_path / "p.html"),
            "--histogram", str(tmp_path / "h.csv"),
            "--bins", "0.1",
        )
        assert code == 0
        assert (tmp_path / "m.svg").exists()
        assert (tmp_path / "p.html").exists()
        hist_rows = list(csv.reader(io.StringIO((tmp_path / "h.csv").read_text())))
        assert hist_rows[0] == ["bin_start", "count"]
        assert len(hist_rows) == 21
        assert "mean_entry_score" in out
