"""Command-line behaviour: formats, determinism, exit codes."""

import hashlib

import numpy as np
import pytest

from kvec.cli import main
from helpers import bijective_bitext, parse_pgm


@pytest.fixture
def small_bitext(tmp_path):
    """A 6400-token aligned pair with 7 planted translation pairs."""
    src_words, tgt_words, gold, _ = bijective_bitext(n_pairs=7, k=80)
    src = tmp_path / "src.txt"
    tgt = tmp_path / "tgt.txt"
    src.write_text(" ".join(src_words), encoding="utf-8")
    tgt.write_text(" ".join(tgt_words), encoding="utf-8")
    return str(src), str(tgt), gold


class TestLexiconCommand:
    def test_emits_header_comment_and_ranked_rows(self, small_bitext, capsys):
        src, tgt, gold = small_bitext
        assert main(["lexicon", src, tgt]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "# k=80"
        assert lines[1] == "mi\tt\ta\tfreq_src\tfreq_tgt\tsrc\ttgt"
        rows = [line.split("\t") for line in lines[2:]]
        assert {(r[5], r[6]) for r in rows} == gold
        mis = [float(r[0]) for r in rows]
        assert mis == sorted(mis, reverse=True)

    def test_top_flag_truncates(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        assert main(["lexicon", src, tgt, "--top", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2 + 5
        mis = [float(line.split("\t")[0]) for line in lines[2:]]
        assert all(x >= y for x, y in zip(mis, mis[1:]))

    def test_huge_threshold_leaves_header_only(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        assert main(["lexicon", src, tgt, "--t-threshold", "1e9"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["# k=80", "mi\tt\ta\tfreq_src\tfreq_tgt\tsrc\ttgt"]

    def test_pieces_flag_overrides_default_k(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        assert main(["lexicon", src, tgt, "--pieces", "64"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "# k=64"

    def test_default_k_echo_is_sqrt_of_smaller_corpus(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text(" ".join(["x"] * 100), encoding="utf-8")
        b.write_text(" ".join(["y"] * 400), encoding="utf-8")
        assert main(["lexicon", str(a), str(b), "--min-freq", "1", "--max-freq", "500"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "# k=10"

    def test_byte_identical_reruns(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        main(["lexicon", src, tgt])
        first = capsys.readouterr().out
        main(["lexicon", src, tgt])
        assert capsys.readouterr().out == first

    def test_output_file(self, small_bitext, tmp_path):
        src, tgt, _ = small_bitext
        out = tmp_path / "lex.tsv"
        assert main(["lexicon", src, tgt, "-o", str(out)]) == 0
        assert out.read_text(encoding="utf-8").startswith("# k=80\n")

    def test_scores_print_with_four_decimals(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        main(["lexicon", src, tgt])
        row = capsys.readouterr().out.splitlines()[2].split("\t")
        assert len(row[0].split(".")[1]) == 4
        assert len(row[1].split(".")[1]) == 4

    def test_missing_file_exits_2_naming_path(self, tmp_path, capsys):
        tgt = tmp_path / "t.txt"
        tgt.write_text("a b c", encoding="utf-8")
        code = main(["lexicon", str(tmp_path / "nope.txt"), str(tgt)])
        assert code == 2
        captured = capsys.readouterr()
        assert "nope.txt" in captured.err
        assert captured.out == ""  # diagnostics never leak into the data stream

    def test_bad_band_flag_exits_2(self, small_bitext, capsys):
        src, tgt, _ = small_bitext
        assert main(["lexicon", src, tgt, "--min-freq", "0"]) == 2
        assert capsys.readouterr().err.startswith("kvec: error:")

    def test_unknown_flag_is_usage_error(self, small_bitext):
        src, tgt, _ = small_bitext
        with pytest.raises(SystemExit) as exc:
            main(["lexicon", src, tgt, "--frobnicate"])
        assert exc.value.code == 2


class TestConcordCommand:
    @pytest.fixture
    def text_file(self, tmp_path):
        path = tmp_path / "doc.txt"
        path.write_text(
            "the net held the catch and the net sank", encoding="utf-8"
        )
        return str(path)

    def test_one_line_per_occurrence_sorted(self, text_file, capsys):
        assert main(["concord", text_file, "net", "--width", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        offsets = [int(line.split("\t")[0]) for line in lines]
        assert offsets == sorted(offsets)
        assert lines[0] == "1\tthe NET held the"

    def test_absent_word_empty_output_exit_zero(self, text_file, capsys):
        assert main(["concord", text_file, "whale"]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""

    def test_mark_flag_wraps_instead_of_uppercasing(self, text_file, capsys):
        assert main(["concord", text_file, "catch", "--width", "1", "--mark"]) == 0
        assert capsys.readouterr().out == "4\tthe [catch] and\n"

    def test_fold_case_folds_query_too(self, tmp_path, capsys):
        path = tmp_path / "f.txt"
        path.write_text("Fisheries and fisheries", encoding="utf-8")
        assert main(["concord", str(path), "Fisheries", "--fold-case"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 2

    def test_keyword_at_offset_zero_has_no_left_context(self, text_file, capsys):
        assert main(["concord", text_file, "the", "--width", "2"]) == 0
        first = capsys.readouterr().out.splitlines()[0]
        assert first == "0\tTHE net held"


class TestDotplotCommand:
    def test_self_plot_symmetric_and_deterministic(self, tmp_path):
        doc = tmp_path / "d.txt"
        doc.write_text("a b c a b c a b c d", encoding="utf-8")
        out1, out2 = tmp_path / "p1.pgm", tmp_path / "p2.pgm"
        assert main(["dotplot", str(doc), str(doc), "--size", "20", "-o", str(out1)]) == 0
        assert main(["dotplot", str(doc), str(doc), "--size", "20", "-o", str(out2)]) == 0
        d1, d2 = out1.read_bytes(), out2.read_bytes()
        assert hashlib.sha256(d1).hexdigest() == hashlib.sha256(d2).hexdigest()
        _, _, _, pixels = parse_pgm(d1)
        assert np.array_equal(pixels, pixels.T)
        assert np.all(np.diag(pixels) > 0)

    def test_size_one_saturates_on_any_match(self, tmp_path):
        doc = tmp_path / "d.txt"
        doc.write_text("only", encoding="utf-8")
        out = tmp_path / "p.pgm"
        assert main(["dotplot", str(doc), str(doc), "--size", "1", "-o", str(out)]) == 0
        assert out.read_bytes() == b"P5\n1 1\n255\n\xff"

    def test_writes_pgm_to_stdout_without_output_flag(self, tmp_path, capsysbinary):
        doc = tmp_path / "d.txt"
        doc.write_text("x y x", encoding="utf-8")
        assert main(["dotplot", str(doc), str(doc), "--size", "6"]) == 0
        data = capsysbinary.readouterr().out
        assert data.startswith(b"P5\n6 6\n255\n")
        assert len(data) == len(b"P5\n6 6\n255\n") + 36

    def test_assoc_mode_lights_cross_quadrant(self, small_bitext, tmp_path):
        src, tgt, _ = small_bitext
        plain, relaxed = tmp_path / "e.pgm", tmp_path / "a.pgm"
        size = "40"
        assert main(["dotplot", src, tgt, "--size", size, "-o", str(plain)]) == 0
        assert (
            main(["dotplot", src, tgt, "--size", size, "--assoc", "-o", str(relaxed)])
            == 0
        )
        _, _, _, px_plain = parse_pgm(plain.read_bytes())
        _, _, _, px_relaxed = parse_pgm(relaxed.read_bytes())
        # Disjoint vocabularies: no cross-quadrant light without association.
        assert not px_plain[:20, 20:].any()
        assert px_relaxed[:20, 20:].any()

    def test_gamma_flag_must_be_positive(self, tmp_path, capsys):
        doc = tmp_path / "d.txt"
        doc.write_text("z", encoding="utf-8")
        assert main(["dotplot", str(doc), str(doc), "--gamma", "0"]) == 2
        assert "gamma" in capsys.readouterr().err
