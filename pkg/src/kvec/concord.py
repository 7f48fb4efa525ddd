"""Keyword-in-context concordance listings.

One line per occurrence of the queried word, in text order, each carrying
its token offset and up to ``width`` tokens of context either side. Useful
for inspecting why a candidate pair scored the way it did.
"""

from dataclasses import dataclass

from .corpus import Corpus
from .errors import ParameterError


@dataclass(frozen=True)
class ConcordanceLine:
    offset: int
    left: str
    keyword: str
    right: str


def kwic(corpus: Corpus, word: str, width: int = 10) -> list[ConcordanceLine]:
    """Concordance lines for a surface, ascending offset order.

    Contexts are truncated at the corpus boundaries and joined with single
    spaces. An unknown word yields an empty list.
    """
    if width < 0:
        raise ParameterError("context width must be non-negative")
    word_id = corpus.vocab.get(word)
    if word_id is None:
        return []
    surfaces = corpus.surfaces
    tokens = corpus.tokens
    lines = []
    for offset in corpus.positions[word_id]:
        left = tokens[max(0, offset - width):offset]
        right = tokens[offset + 1:offset + 1 + width]
        lines.append(
            ConcordanceLine(
                offset=offset,
                left=" ".join(surfaces[t] for t in left),
                keyword=surfaces[tokens[offset]],
                right=" ".join(surfaces[t] for t in right),
            )
        )
    return lines
