"""Text ingestion: tokenization, vocabulary and the per-word position index.

A corpus is one language's token stream. Tokens are maximal runs of
letters/digits; every other non-whitespace character is a token of its own,
so punctuation and apostrophes come out standalone ("l'hon" -> l, ', hon).
Whitespace only separates. This reproduces the spacing conventions of
Hansard-style concordance listings.
"""

from dataclasses import dataclass, field

from .errors import IngestError, UnknownWordError

# Hansard-era files are frequently Latin-1 rather than UTF-8; trying UTF-8
# first keeps modern files exact while still ingesting legacy accents.
_ENCODINGS = ("utf-8", "latin-1")


def decode_text(data: bytes) -> str:
    """Decode raw bytes, UTF-8 first with a Latin-1 fallback."""
    first_failure = None
    for encoding in _ENCODINGS:
        try:
            return data.decode(encoding)
        except UnicodeDecodeError as exc:
            if first_failure is None:
                first_failure = exc
    raise IngestError(
        f"input is not decodable text (first bad byte at offset "
        f"{first_failure.start})"
    )


def tokenize(data: bytes | str, fold_case: bool = False) -> list[str]:
    """Split raw text into surface tokens.

    Maximal alphanumeric runs stay together; any other non-whitespace
    character becomes a single-character token. With fold_case the text is
    lower-cased before splitting. Joining the result with single spaces
    loses only the original whitespace.
    """
    text = decode_text(data) if isinstance(data, (bytes, bytearray)) else data
    if fold_case:
        text = text.lower()
    tokens = []
    run_start = None
    for i, ch in enumerate(text):
        if ch.isalnum():
            if run_start is None:
                run_start = i
            continue
        if run_start is not None:
            tokens.append(text[run_start:i])
            run_start = None
        if not ch.isspace():
            tokens.append(ch)
    if run_start is not None:
        tokens.append(text[run_start:])
    return tokens


@dataclass(frozen=True)
class Corpus:
    """Immutable token sequence plus vocabulary and position index.

    ``tokens`` holds dense 0-based word ids in text order. ``surfaces[i]``
    is the surface for id ``i`` and ``vocab`` the inverse map. For each id,
    ``positions`` lists the token offsets where it occurs, strictly
    increasing. Safe for unsynchronized shared reads once built.
    """

    tokens: list[int]
    vocab: dict[str, int]
    surfaces: list[str]
    positions: list[list[int]] = field(repr=False)

    @property
    def token_count(self) -> int:
        return len(self.tokens)

    @property
    def vocab_size(self) -> int:
        return len(self.surfaces)

    def frequency(self, word: int) -> int:
        """Number of occurrences of the given word id."""
        if not 0 <= word < len(self.positions):
            raise UnknownWordError(f"word id {word} not in corpus")
        return len(self.positions[word])

    def id_of(self, surface: str) -> int:
        try:
            return self.vocab[surface]
        except KeyError:
            raise UnknownWordError(f"word {surface!r} not in corpus") from None

    def surface_of(self, word: int) -> str:
        if not 0 <= word < len(self.surfaces):
            raise UnknownWordError(f"word id {word} not in corpus")
        return self.surfaces[word]


def build_corpus(surfaces) -> Corpus:
    """Index a token sequence: ids by first appearance, sorted positions."""
    tokens: list[int] = []
    vocab: dict[str, int] = {}
    surface_list: list[str] = []
    positions: list[list[int]] = []
    for offset, surface in enumerate(surfaces):
        word = vocab.get(surface)
        if word is None:
            word = len(surface_list)
            vocab[surface] = word
            surface_list.append(surface)
            positions.append([])
        tokens.append(word)
        positions[word].append(offset)
    return Corpus(tokens, vocab, surface_list, positions)


def read_corpus(path, fold_case: bool = False) -> Corpus:
    """Tokenize and index one plain-text file."""
    with open(path, "rb") as handle:
        data = handle.read()
    return build_corpus(tokenize(data, fold_case=fold_case))
