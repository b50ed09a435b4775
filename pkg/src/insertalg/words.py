"""Alphabets and words of the free monoid.

Words are plain immutable ``str`` values whose characters are letters of an
:class:`Alphabet`; the empty word is ``""`` and is rendered as ``1``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterator

from .errors import InvalidAlphabet, PositionOutOfRange, UnknownLetter

Word = str
EMPTY_WORD_TEXT = "1"


class Alphabet:
    """An ordered finite set of single-character letters."""

    def __init__(self, letters: str):
        if not isinstance(letters, str) or not letters:
            raise InvalidAlphabet("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise InvalidAlphabet(f"repeated letters in alphabet {letters!r}")
        bad = [ch for ch in letters if ch.isspace() or ch in "*+-()^/1" or ch.isdigit()]
        if bad:
            raise InvalidAlphabet(f"letters {bad!r} clash with the polynomial text syntax")
        self.letters = letters

    @cached_property
    def _rank(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.letters)}

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter: str) -> bool:
        return letter in self._rank

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({self.letters!r})"

    def check(self, word: Word) -> Word:
        rank = self._rank
        for ch in word:
            if ch not in rank:
                raise UnknownLetter(ch, self.letters)
        return word

    def sort_key(self, word: Word) -> tuple[int, tuple[int, ...]]:
        """Length first, then lexicographic in alphabet order."""
        rank = self._rank
        return (len(word), tuple(rank[ch] for ch in word))

    def words(self, length: int) -> Iterator[Word]:
        """All words of exactly ``length`` letters, in canonical order."""
        for letters in product(self.letters, repeat=length):
            yield "".join(letters)

    def words_upto(self, max_length: int, min_length: int = 0) -> Iterator[Word]:
        for n in range(min_length, max_length + 1):
            yield from self.words(n)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Read a word; ``"1"`` and ``""`` both denote the empty word."""
    if text == EMPTY_WORD_TEXT:
        return ""
    return alphabet.check(text)


def format_word(word: Word) -> str:
    return word if word else EMPTY_WORD_TEXT


def concat(u: Word, v: Word) -> Word:
    return u + v


def insert_at(x: Word, y: Word, i: int) -> Word:
    """Splice ``x`` into ``y`` after its first ``i`` letters."""
    if not 0 <= i <= len(y):
        raise PositionOutOfRange(f"position {i} outside 0..{len(y)}")
    return y[:i] + x + y[i:]
