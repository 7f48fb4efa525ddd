"""Candidate pair generation, scoring and ranked lexicon extraction.

The search space is restricted to words in a frequency band (default 3-10
occurrences): rarer words could not reach significance anyway and more
frequent ones explode the pair count. Every band pair whose t-score clears
the threshold is kept, ranked by mutual information.
"""

from dataclasses import dataclass

from .corpus import Corpus
from .errors import ParameterError
from .kvec import (
    AssocScore,
    Contingency,
    KVec,
    assoc_score,
    build_kvec,
    contingency,
    default_k,
)

# 1.65 is the one-sided t threshold for 95% confidence.
DEFAULT_MIN_FREQ = 3
DEFAULT_MAX_FREQ = 10
DEFAULT_T_THRESHOLD = 1.65


@dataclass(frozen=True)
class BandConfig:
    """Extraction parameters: frequency band, significance cut, piece count.

    ``k=None`` selects the default piece count (floor of the square root of
    the smaller corpus). ``max_freq=None`` lifts the upper frequency bound;
    ``top_n=None`` emits every significant pair.
    """

    min_freq: int = DEFAULT_MIN_FREQ
    max_freq: int | None = DEFAULT_MAX_FREQ
    t_threshold: float = DEFAULT_T_THRESHOLD
    k: int | None = None
    top_n: int | None = None

    def __post_init__(self):
        if self.min_freq < 1:
            raise ParameterError("min_freq must be at least 1")
        if self.max_freq is not None and self.max_freq < self.min_freq:
            raise ParameterError("max_freq must be >= min_freq")
        if self.t_threshold < 0:
            raise ParameterError("t_threshold must be non-negative")
        if self.k is not None and self.k < 1:
            raise ParameterError("piece count must be positive")
        if self.top_n is not None and self.top_n < 1:
            raise ParameterError("top_n must be positive")


@dataclass(frozen=True)
class LexiconEntry:
    """One ranked candidate translation pair."""

    src_word: str
    tgt_word: str
    mi_bits: float
    t: float
    a: int
    b: int
    c: int
    d: int
    freq_src: int
    freq_tgt: int


def band_word_ids(corpus: Corpus, cfg: BandConfig) -> list[int]:
    """Word ids whose frequency lies inside the band, ascending."""
    upper = corpus.token_count if cfg.max_freq is None else cfg.max_freq
    return [
        w
        for w in range(corpus.vocab_size)
        if cfg.min_freq <= len(corpus.positions[w]) <= upper
    ]


def candidate_pairs(src: Corpus, tgt: Corpus, cfg: BandConfig):
    """Yield the full cross product of band words, ascending id order."""
    tgt_ids = band_word_ids(tgt, cfg)
    for ws in band_word_ids(src, cfg):
        for wt in tgt_ids:
            yield ws, wt


def resolve_k(src: Corpus, tgt: Corpus, cfg: BandConfig) -> int:
    """The piece count to use, validated against both corpus sizes."""
    if src.token_count == 0 or tgt.token_count == 0:
        raise ParameterError("cannot extract a lexicon from an empty corpus")
    k = cfg.k
    if k is None:
        k = default_k(src.token_count, tgt.token_count)
    if k > min(src.token_count, tgt.token_count):
        raise ParameterError(
            f"piece count {k} exceeds the smaller corpus size "
            f"{min(src.token_count, tgt.token_count)}"
        )
    return k


def score_pair(
    src: Corpus, tgt: Corpus, pair: tuple[int, int], k: int
) -> tuple[AssocScore, Contingency]:
    """Build both presence vectors and score one cross-language pair."""
    vf = build_kvec(src, pair[0], k)
    vp = build_kvec(tgt, pair[1], k)
    table = contingency(vf, vp)
    return assoc_score(table), table


def _piece_buckets(vectors: dict[int, KVec], k: int) -> list[list[int]]:
    """For each piece, the words (ascending) present in it."""
    buckets: list[list[int]] = [[] for _ in range(k)]
    for word in sorted(vectors):
        for p in vectors[word].piece_indices():
            buckets[p].append(word)
    return buckets


def extract_lexicon(src: Corpus, tgt: Corpus, cfg: BandConfig) -> list[LexiconEntry]:
    """Score all band pairs and return the significant ones, ranked.

    Ordering is total: MI descending, then t descending, then the surface
    pair ascending, so equal inputs always give byte-identical output.
    Pairs sharing no piece are skipped up front (their MI is -inf, so they
    could never survive the filter); an inverted piece index keeps the scan
    proportional to the pairs that actually co-occur.
    """
    k = resolve_k(src, tgt, cfg)
    src_vecs = {w: build_kvec(src, w, k) for w in band_word_ids(src, cfg)}
    tgt_vecs = {w: build_kvec(tgt, w, k) for w in band_word_ids(tgt, cfg)}
    tgt_by_piece = _piece_buckets(tgt_vecs, k)

    entries = []
    for ws in sorted(src_vecs):
        vf = src_vecs[ws]
        mates = {wt for p in vf.piece_indices() for wt in tgt_by_piece[p]}
        for wt in sorted(mates):
            table = contingency(vf, tgt_vecs[wt])
            score = assoc_score(table)
            if not score.t >= cfg.t_threshold:
                continue
            entries.append(
                LexiconEntry(
                    src_word=src.surface_of(ws),
                    tgt_word=tgt.surface_of(wt),
                    mi_bits=score.mi_bits,
                    t=score.t,
                    a=table.a,
                    b=table.b,
                    c=table.c,
                    d=table.d,
                    freq_src=src.frequency(ws),
                    freq_tgt=tgt.frequency(wt),
                )
            )

    entries.sort(key=lambda e: (-e.mi_bits, -e.t, e.src_word, e.tgt_word))
    if cfg.top_n is not None:
        del entries[cfg.top_n:]
    return entries


def evaluate_against_gold(entries, gold, n: int) -> float:
    """Precision of the top-n entries against a known-good pair set."""
    if n < 1:
        raise ParameterError("cutoff must be at least 1")
    if not entries:
        return 0.0
    top = entries[:n]
    hits = sum(1 for e in top if (e.src_word, e.tgt_word) in gold)
    return hits / min(n, len(entries))


def load_gold(path) -> set[tuple[str, str]]:
    """Read a gold lexicon: UTF-8 TSV, src<TAB>tgt, '#' lines are comments."""
    pairs = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise ParameterError(
                    f"{path}:{lineno}: expected two tab-separated columns"
                )
            pairs.add((cols[0], cols[1]))
    return pairs
