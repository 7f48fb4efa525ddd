"""The scoring core: piece partitioning, presence vectors, MI and t-scores.

A text of n tokens is cut into k contiguous, near-equal pieces. Each word
gets a k-bit vector with bit p set when the word occurs anywhere in piece p.
Two words' vectors are compared through the 2x2 table of piece counts
(both / only first / only second / neither), from which mutual information
measures association strength and a t-score screens out associations
supported by too few pieces.

All functions here are pure over immutable inputs and safe to call
concurrently. Bit vectors are arbitrary-precision ints, so k is unbounded
in practice (2**20 and beyond works fine); popcounts are cached.
"""

import math
from dataclasses import dataclass

from .corpus import Corpus
from .errors import ParameterError


def piece_of(offset: int, n: int, k: int) -> int:
    """Map a token offset to its piece index in [0, k).

    Pieces are contiguous spans of floor(n/k) or ceil(n/k) tokens:
    piece = floor(offset * k / n). Monotone in offset, and every piece
    receives at least one offset.
    """
    if k < 1 or k > n:
        raise ParameterError(f"piece count {k} not in [1, {n}]")
    if not 0 <= offset < n:
        raise ParameterError(f"offset {offset} not in [0, {n})")
    return offset * k // n


def default_k(n_src: int, n_tgt: int) -> int:
    """Piece count for a corpus pair: floor(sqrt()) of the smaller size."""
    if n_src < 1 or n_tgt < 1:
        raise ParameterError("corpus sizes must be positive")
    return max(1, math.isqrt(min(n_src, n_tgt)))


@dataclass(frozen=True)
class KVec:
    """k-bit presence vector for one word, with cached popcount."""

    bits: int
    k: int
    ones: int

    @classmethod
    def from_bits(cls, bits: int, k: int) -> "KVec":
        if bits < 0 or bits >> k:
            raise ParameterError(f"bit vector does not fit in {k} bits")
        return cls(bits, k, bits.bit_count())

    @classmethod
    def from_pieces(cls, pieces, k: int) -> "KVec":
        """Build from an iterable of set piece indices."""
        bits = 0
        for p in pieces:
            if not 0 <= p < k:
                raise ParameterError(f"piece index {p} not in [0, {k})")
            bits |= 1 << p
        return cls(bits, k, bits.bit_count())

    def piece_indices(self) -> list[int]:
        return [p for p in range(self.k) if (self.bits >> p) & 1]


def build_kvec(corpus: Corpus, word: int, k: int) -> KVec:
    """Presence vector of a word: bit p set iff some occurrence is in piece p."""
    n = corpus.token_count
    bits = 0
    for offset in corpus.positions[word]:
        bits |= 1 << piece_of(offset, n, k)
    return KVec(bits, k, bits.bit_count())


@dataclass(frozen=True)
class Contingency:
    """Piece counts for a word pair: both, only-first, only-second, neither."""

    a: int
    b: int
    c: int
    d: int

    @property
    def k(self) -> int:
        return self.a + self.b + self.c + self.d


def contingency(vf: KVec, vp: KVec) -> Contingency:
    """2x2 piece co-occurrence table via bitwise AND and popcount."""
    if vf.k != vp.k:
        raise ParameterError(f"mismatched piece counts: {vf.k} != {vp.k}")
    a = (vf.bits & vp.bits).bit_count()
    b = vf.ones - a
    c = vp.ones - a
    return Contingency(a, b, c, vf.k - a - b - c)


def mutual_information(table: Contingency) -> float:
    """Association strength in bits: log2 of joint over product of marginals.

    With probabilities taken over pieces this is log2(a*k / ((a+b)*(a+c))).
    Returns -inf when a = 0 (co-occurrence infinitely less likely than
    chance). Undefined when either word occurs nowhere.
    """
    a, k = table.a, table.k
    row, col = a + table.b, a + table.c
    if row == 0 or col == 0:
        raise ParameterError("mutual information undefined for an absent word")
    if a == 0:
        return float("-inf")
    return math.log2((a * k) / (row * col))


def t_score(table: Contingency) -> float:
    """Significance of the association: (joint - chance) / sqrt(joint / k).

    NaN when a = 0; such a pair can never pass a significance threshold.
    """
    a, k = table.a, table.k
    if a == 0:
        return float("nan")
    p_joint = a / k
    p_src = (a + table.b) / k
    p_tgt = (a + table.c) / k
    return (p_joint - p_src * p_tgt) / math.sqrt(p_joint / k)


def mi_identical(n: int, k: int) -> float:
    """MI of two identical vectors with n set bits: log2(k / n).

    The best attainable score at a given support: a word pair confined to
    the same single piece scores log2(k), to the same two pieces log2(k/2),
    and a word present in every piece scores 0.
    """
    if not 1 <= n <= k:
        raise ParameterError(f"ones count {n} not in [1, {k}]")
    return math.log2(k / n)


@dataclass(frozen=True)
class AssocScore:
    """MI (bits) and t-score for one pair, with the piece probabilities."""

    mi_bits: float
    t: float
    p_joint: float
    p_src: float
    p_tgt: float


def assoc_score(table: Contingency) -> AssocScore:
    """Score one contingency table: MI, t, and the underlying probabilities."""
    k = table.k
    return AssocScore(
        mi_bits=mutual_information(table),
        t=t_score(table),
        p_joint=table.a / k,
        p_src=(table.a + table.b) / k,
        p_tgt=(table.a + table.c) / k,
    )
