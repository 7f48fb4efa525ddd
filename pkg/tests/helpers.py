"""Shared test fixtures: synthetic bitexts and independent oracles.

Everything here is deliberately naive (per-piece scans, O(M^2) dot loops)
so the production paths are checked against arithmetic that shares no code
with them.
"""

import numpy as np

from kvec import Contingency, build_corpus


def corpus_of(surfaces):
    return build_corpus(list(surfaces))


def naive_contingency(pieces_f, pieces_p, k):
    """Per-piece scan over two membership sets; the slow reference."""
    a = b = c = d = 0
    for p in range(k):
        in_f, in_p = p in pieces_f, p in pieces_p
        if in_f and in_p:
            a += 1
        elif in_f:
            b += 1
        elif in_p:
            c += 1
        else:
            d += 1
    return Contingency(a, b, c, d)


def bijective_bitext(n_pairs=20, k=210, slots_per_pair=10):
    """Aligned parallel surfaces with n_pairs true translation pairs.

    Pair i occupies its own reserved pieces (3 to 10 of them, cycling), at
    identical offsets on both sides, so true pairs have identical presence
    vectors and distinct pairs share no piece. Filler words repeat far
    beyond any sane frequency band. Sized so the default piece count for
    the pair of texts is exactly k.
    """
    assert n_pairs * slots_per_pair <= k
    n = k * k
    src = [f"efill{i % 7}" for i in range(n)]
    tgt = [f"ffill{i % 7}" for i in range(n)]
    gold = set()
    freqs = {}
    for i in range(n_pairs):
        n_occ = 3 + (i % 8)
        w, v = f"alpha{i:02d}", f"beta{i:02d}"
        for j in range(n_occ):
            piece = slots_per_pair * i + j
            offset = piece * k + 7  # n == k*k, so piece_of(offset) == offset // k
            src[offset] = w
            tgt[offset] = v
        gold.add((w, v))
        freqs[(w, v)] = n_occ
    return src, tgt, gold, freqs


def dense_bitext(n_pairs=20, reps=10):
    """A bitext where every position holds a band word, aligned one-to-one."""
    length = n_pairs * reps
    src = [f"alpha{t % n_pairs:02d}" for t in range(length)]
    tgt = [f"beta{t % n_pairs:02d}" for t in range(length)]
    gold = {(f"alpha{i:02d}", f"beta{i:02d}") for i in range(n_pairs)}
    return src, tgt, gold


def brute_dot_cells(src_surfaces, tgt_surfaces, side, pairs=None):
    """O(M^2) dot binning over the concatenated sequence.

    A dot sits at (i, j) when the surfaces match, or - given an association
    pair set - when (surface_i, surface_j) is an associated cross-language
    pair in either orientation.
    """
    seq = list(src_surfaces) + list(tgt_surfaces)
    ns, m = len(src_surfaces), len(seq)
    pairs = pairs or set()
    cells = np.zeros((side, side), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            hit = seq[i] == seq[j]
            if not hit and i < ns <= j:
                hit = (seq[i], seq[j]) in pairs
            if not hit and j < ns <= i:
                hit = (seq[j], seq[i]) in pairs
            if hit:
                cells[i * side // m, j * side // m] += 1
    return cells


def parse_pgm(data: bytes):
    """Minimal binary PGM reader: returns (width, height, maxval, pixels)."""
    parts = data.split(b"\n", 3)
    assert parts[0] == b"P5"
    width, height = (int(x) for x in parts[1].split())
    maxval = int(parts[2])
    pixels = np.frombuffer(parts[3], dtype=np.uint8).reshape(height, width)
    return width, height, maxval, pixels
