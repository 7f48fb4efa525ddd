"""Dotplots of a concatenated text pair, down-sampled to a density image.

The two token streams are concatenated into one sequence of M positions.
Conceptually a dot sits at (i, j) whenever the tokens at i and j match;
in relaxed mode a cross-language dot also appears when the pair of words
is in a supplied association lexicon. M^2 dots cannot be rasterized
directly, so dots are binned into a side x side grid of counts and the
counts are tone-mapped to 8-bit gray. Parallel structure shows up as
diagonal bands.
"""

from dataclasses import dataclass, field

import numpy as np

from .corpus import Corpus
from .errors import ParameterError, UnknownWordError

_CHUNK_ROWS = 2048


@dataclass(frozen=True)
class DotplotConfig:
    """Rendering parameters; ``assoc_lexicon`` is required in assoc mode."""

    grid: int = 512
    mode: str = "exact"
    gamma: float = 1.0
    assoc_lexicon: set | frozenset | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.grid < 1:
            raise ParameterError("grid side must be at least 1")
        if self.gamma <= 0:
            raise ParameterError("gamma must be positive")
        if self.mode not in ("exact", "assoc"):
            raise ParameterError(f"unknown dotplot mode {self.mode!r}")


@dataclass(frozen=True)
class DensityImage:
    """Binned dot counts and their 8-bit rendering, row-major, origin top-left."""

    side: int
    cells: np.ndarray
    rendered: np.ndarray


def _render(cells: np.ndarray, gamma: float) -> np.ndarray:
    """Tone-map counts to bytes: floor(255 * (count/max)^gamma).

    Monotone in the counts, and any nonzero cell stays visible (at least 1)
    even when the dynamic range would otherwise floor it to black.
    """
    peak = int(cells.max()) if cells.size else 0
    if peak == 0:
        return np.zeros(cells.shape, dtype=np.uint8)
    levels = np.floor(255.0 * (cells / peak) ** gamma)
    levels = np.where(cells > 0, np.maximum(levels, 1), 0)
    return levels.astype(np.uint8)


def _cell_of(coords: np.ndarray, side: int, m: int) -> np.ndarray:
    return coords * side // m


def _surface_hists(src: Corpus, tgt: Corpus, side: int) -> dict[str, np.ndarray]:
    """Per-surface histogram of cell indices over the concatenated sequence."""
    m = src.token_count + tgt.token_count
    hists: dict[str, np.ndarray] = {}
    for corpus, base in ((src, 0), (tgt, src.token_count)):
        for word, surface in enumerate(corpus.surfaces):
            coords = np.asarray(corpus.positions[word], dtype=np.int64) + base
            h = np.bincount(_cell_of(coords, side, m), minlength=side)
            if surface in hists:
                hists[surface] = hists[surface] + h
            else:
                hists[surface] = h
    return hists


def _identity_cells(src: Corpus, tgt: Corpus, side: int) -> np.ndarray:
    """Bin every equal-token dot: sum over words of the outer product of
    the word's cell histogram with itself, accumulated as H^T H in chunks.

    All intermediate values are integers below 2**53, so the float64
    accumulation is exact and independent of summation order.
    """
    hists = list(_surface_hists(src, tgt, side).values())
    cells = np.zeros((side, side), dtype=np.float64)
    for start in range(0, len(hists), _CHUNK_ROWS):
        block = np.array(hists[start:start + _CHUNK_ROWS], dtype=np.float64)
        cells += block.T @ block
    return np.rint(cells).astype(np.int64)


def _check_nonempty(src: Corpus, tgt: Corpus):
    if src.token_count + tgt.token_count < 1:
        raise ParameterError("nothing to plot: both corpora are empty")


def dotplot_exact(src: Corpus, tgt: Corpus, cfg: DotplotConfig) -> DensityImage:
    """Dot at (i, j) whenever positions i and j carry the same surface."""
    _check_nonempty(src, tgt)
    cells = _identity_cells(src, tgt, cfg.grid)
    return DensityImage(cfg.grid, cells, _render(cells, cfg.gamma))


def dotplot_assoc(
    src: Corpus, tgt: Corpus, lexicon, cfg: DotplotConfig
) -> DensityImage:
    """Exact dots plus cross-language dots for associated word pairs.

    Within-language quadrants keep the identity criterion; a lexicon pair
    (w, v) additionally lights (i, j) for every source occurrence i of w
    against every target occurrence j of v, plus the mirrored cell. Pairs
    with equal surfaces add nothing the identity pass did not already
    count, so an empty or identity lexicon reproduces the exact plot.
    """
    _check_nonempty(src, tgt)
    side = cfg.grid
    m = src.token_count + tgt.token_count
    cells = _identity_cells(src, tgt, side)
    for w, v in lexicon:
        if w not in src.vocab:
            raise UnknownWordError(f"association pair names unknown source word {w!r}")
        if v not in tgt.vocab:
            raise UnknownWordError(f"association pair names unknown target word {v!r}")
        if w == v:
            continue
        src_coords = np.asarray(src.positions[src.vocab[w]], dtype=np.int64)
        tgt_coords = (
            np.asarray(tgt.positions[tgt.vocab[v]], dtype=np.int64)
            + src.token_count
        )
        hw = np.bincount(_cell_of(src_coords, side, m), minlength=side)
        hv = np.bincount(_cell_of(tgt_coords, side, m), minlength=side)
        rows, cols = hw.nonzero()[0], hv.nonzero()[0]
        block = np.outer(hw[rows], hv[cols])
        cells[np.ix_(rows, cols)] += block
        cells[np.ix_(cols, rows)] += block.T
    return DensityImage(side, cells, _render(cells, cfg.gamma))


def render_dotplot(src: Corpus, tgt: Corpus, cfg: DotplotConfig) -> DensityImage:
    """Dispatch on ``cfg.mode``; assoc mode requires ``cfg.assoc_lexicon``."""
    if cfg.mode == "assoc":
        if cfg.assoc_lexicon is None:
            raise ParameterError("assoc mode needs an association lexicon")
        return dotplot_assoc(src, tgt, cfg.assoc_lexicon, cfg)
    return dotplot_exact(src, tgt, cfg)


def render_pgm(img: DensityImage, sink) -> None:
    """Write the image as binary PGM (P5, maxval 255) to a byte sink."""
    sink.write(f"P5\n{img.side} {img.side}\n255\n".encode("ascii"))
    sink.write(np.ascontiguousarray(img.rendered).tobytes())
