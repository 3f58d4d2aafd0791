"""Word validation and the canonical answer/guess lists.

The bundled word file is plain UTF-8 text, one five-letter word per line,
with the 2,315 possible secret words first and the remaining accepted
guesses after them (12,972 lines total).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from importlib.resources import files
from typing import IO, Iterable

ALPHABET = string.ascii_lowercase
WORD_LENGTH = 5
ANSWER_COUNT = 2315
GUESS_COUNT = 12972

_LETTERS = frozenset(ALPHABET)


class MalformedWord(ValueError):
    """A line is not a five-letter a-z word."""

    def __init__(self, line_no: int, text: str):
        super().__init__(f"line {line_no}: {text!r} is not a 5-letter a-z word")
        self.line_no = line_no
        self.text = text


class WrongCount(ValueError):
    """Strict loading found a total other than the canonical 12,972."""


def validate_word(text: str, line_no: int = 0) -> str:
    """Normalize to lowercase and check length/alphabet. Returns the word."""
    word = text.strip().lower()
    if len(word) != WORD_LENGTH or not set(word) <= _LETTERS:
        raise MalformedWord(line_no, text)
    return word


@dataclass(frozen=True)
class WordLists:
    """Secret-word pool (answers) and legal-guess pool (guesses).

    answers is a prefix of guesses: the file's first 2,315 entries.
    """

    answers: tuple[str, ...]
    guesses: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.answers)) != len(self.answers):
            raise ValueError("duplicate words in answers")
        if len(set(self.guesses)) != len(self.guesses):
            raise ValueError("duplicate words in guesses")

    @property
    def guess_set(self) -> frozenset[str]:
        return frozenset(self.guesses)


def load_word_lists(
    source: IO[str] | Iterable[str], strict: bool = True
) -> WordLists:
    """Parse newline-separated words into (answers, guesses).

    The first 2,315 valid lines become the answer pool; all lines become
    the guess pool, order preserved.  In strict mode the total must be
    exactly 12,972 (the canonical file), otherwise WrongCount is raised.
    """
    words = []
    for line_no, line in enumerate(source, start=1):
        if not line.strip():
            continue
        words.append(validate_word(line, line_no))
    if strict and len(words) != GUESS_COUNT:
        raise WrongCount(f"expected {GUESS_COUNT} words, found {len(words)}")
    n_answers = min(ANSWER_COUNT, len(words))
    return WordLists(answers=tuple(words[:n_answers]), guesses=tuple(words))


def load_bundled_lists() -> WordLists:
    """Load the word file shipped with the package."""
    text = files("wordlab.data").joinpath("wordle_words.txt").read_text("utf-8")
    return load_word_lists(text.splitlines())
