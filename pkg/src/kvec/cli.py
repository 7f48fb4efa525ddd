"""Command-line front end: lexicon extraction, concordances and dotplots.

Output on stdout (or the chosen file) is data only and is byte-identical
across runs for identical inputs and flags; all diagnostics go to stderr.
Exit status: 0 on success, 2 for usage or input errors, 1 for internal
errors.
"""

import argparse
import sys
from dataclasses import replace

from .concord import kwic
from .corpus import read_corpus
from .dotplot import DotplotConfig, render_dotplot, render_pgm
from .errors import KvecError
from .lexicon import (
    DEFAULT_MAX_FREQ,
    DEFAULT_MIN_FREQ,
    DEFAULT_T_THRESHOLD,
    BandConfig,
    extract_lexicon,
    resolve_k,
)

LEXICON_HEADER = "mi\tt\ta\tfreq_src\tfreq_tgt\tsrc\ttgt"


def _add_band_flags(parser, top_default):
    parser.add_argument(
        "--pieces", type=int, default=None, metavar="K",
        help="piece count (default: floor of the square root of the smaller corpus)",
    )
    parser.add_argument(
        "--min-freq", type=int, default=DEFAULT_MIN_FREQ, metavar="N",
        help="lowest word frequency considered (default: %(default)s)",
    )
    parser.add_argument(
        "--max-freq", type=int, default=DEFAULT_MAX_FREQ, metavar="N",
        help="highest word frequency considered (default: %(default)s)",
    )
    parser.add_argument(
        "--t-threshold", type=float, default=DEFAULT_T_THRESHOLD, metavar="T",
        help="minimum t-score for a pair to be kept (default: %(default)s)",
    )
    parser.add_argument(
        "--top", type=int, default=top_default, metavar="N",
        help="keep only the N best pairs (default: %(default)s)",
    )


def _band_config(args) -> BandConfig:
    return BandConfig(
        min_freq=args.min_freq,
        max_freq=args.max_freq,
        t_threshold=args.t_threshold,
        k=args.pieces,
        top_n=args.top,
    )


def _write_text(path, text: str):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _write_bytes(path, blobs):
    if path is None:
        for blob in blobs:
            sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            for blob in blobs:
                handle.write(blob)


def run_lexicon(args) -> int:
    src = read_corpus(args.source, fold_case=args.fold_case)
    tgt = read_corpus(args.target, fold_case=args.fold_case)
    cfg = _band_config(args)
    k = resolve_k(src, tgt, cfg)
    entries = extract_lexicon(src, tgt, replace(cfg, k=k))
    lines = [f"# k={k}", LEXICON_HEADER]
    for e in entries:
        lines.append(
            f"{e.mi_bits:.4f}\t{e.t:.4f}\t{e.a}\t{e.freq_src}\t{e.freq_tgt}"
            f"\t{e.src_word}\t{e.tgt_word}"
        )
    _write_text(args.output, "".join(line + "\n" for line in lines))
    return 0


def run_concord(args) -> int:
    corpus = read_corpus(args.source, fold_case=args.fold_case)
    word = args.word.lower() if args.fold_case else args.word
    out = []
    for line in kwic(corpus, word, width=args.width):
        keyword = f"[{line.keyword}]" if args.mark else line.keyword.upper()
        middle = " ".join(part for part in (line.left, keyword, line.right) if part)
        out.append(f"{line.offset}\t{middle}\n")
    _write_text(args.output, "".join(out))
    return 0


def run_dotplot(args) -> int:
    src = read_corpus(args.source, fold_case=args.fold_case)
    tgt = read_corpus(args.target, fold_case=args.fold_case)
    if args.assoc:
        cfg = _band_config(args)
        pairs = {
            (e.src_word, e.tgt_word)
            for e in extract_lexicon(src, tgt, replace(cfg, k=resolve_k(src, tgt, cfg)))
        }
        plot_cfg = DotplotConfig(
            grid=args.size, mode="assoc", gamma=args.gamma, assoc_lexicon=pairs
        )
    else:
        plot_cfg = DotplotConfig(grid=args.size, mode="exact", gamma=args.gamma)
    img = render_dotplot(src, tgt, plot_cfg)

    class _Collector:
        def __init__(self):
            self.blobs = []

        def write(self, blob):
            self.blobs.append(blob)

    sink = _Collector()
    render_pgm(img, sink)
    _write_bytes(args.output, sink.blobs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kvec",
        description="Induce a bilingual lexicon from unaligned parallel texts "
        "by comparing per-word piece-presence vectors; inspect the texts via "
        "concordances and dotplots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lex = sub.add_parser(
        "lexicon", help="extract a ranked candidate translation lexicon (TSV)"
    )
    p_lex.add_argument("source", help="source-language text file")
    p_lex.add_argument("target", help="target-language text file")
    _add_band_flags(p_lex, top_default=30)
    p_lex.add_argument("--fold-case", action="store_true", help="lower-case all text")
    p_lex.add_argument("-o", "--output", default=None, help="write TSV here instead of stdout")
    p_lex.set_defaults(func=run_lexicon)

    p_con = sub.add_parser(
        "concord", help="keyword-in-context concordance for one word"
    )
    p_con.add_argument("source", help="text file")
    p_con.add_argument("word", help="surface form to look up")
    p_con.add_argument(
        "--width", type=int, default=10, metavar="N",
        help="context tokens per side (default: %(default)s)",
    )
    p_con.add_argument("--fold-case", action="store_true", help="lower-case text and query")
    p_con.add_argument(
        "--mark", action="store_true",
        help="mark the keyword as [word] instead of uppercasing it",
    )
    p_con.add_argument("-o", "--output", default=None, help="write lines here instead of stdout")
    p_con.set_defaults(func=run_concord)

    p_dot = sub.add_parser(
        "dotplot", help="render a similarity dotplot of the two texts as binary PGM"
    )
    p_dot.add_argument("source", help="source-language text file")
    p_dot.add_argument("target", help="target-language text file")
    p_dot.add_argument(
        "--size", type=int, default=512, metavar="PX",
        help="output image side length (default: %(default)s)",
    )
    p_dot.add_argument(
        "--gamma", type=float, default=1.0,
        help="tone-mapping exponent for cell counts (default: %(default)s)",
    )
    p_dot.add_argument(
        "--assoc", action="store_true",
        help="relax equality: also dot cross-language pairs from an extracted lexicon",
    )
    _add_band_flags(p_dot, top_default=None)
    p_dot.add_argument("--fold-case", action="store_true", help="lower-case all text")
    p_dot.add_argument("-o", "--output", default=None, help="write PGM here instead of stdout")
    p_dot.set_defaults(func=run_dotplot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KvecError as exc:
        print(f"kvec: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        name = exc.filename if exc.filename else "output"
        print(f"kvec: error: cannot access {name}: {exc.strerror}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"kvec: internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
