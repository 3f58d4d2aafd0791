"""Deterministic Wordle game: guess scoring and game-state progression.

Feedback uses the live game's two-pass rule for duplicate letters: greens
are marked first and consume their secret letters, then yellows are
assigned left to right while unconsumed copies remain.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field, replace

from .words import WordLists

MAX_ROUNDS = 6


class TileColor(enum.Enum):
    GRAY = "gray"
    YELLOW = "yellow"
    GREEN = "green"


Feedback = tuple[TileColor, TileColor, TileColor, TileColor, TileColor]

ALL_GREEN: Feedback = (TileColor.GREEN,) * 5


class IllegalGuess(ValueError):
    """Guess word is not in the legal-guess list."""


class GameOver(RuntimeError):
    """A guess was submitted to a finished game."""


def score_guess(guess: str, secret: str) -> Feedback:
    """Color each tile of *guess* against *secret*.

    Pass 1 marks greens and consumes those secret letters; pass 2 marks
    yellows left to right while unconsumed copies of the letter remain.
    """
    tiles = [TileColor.GRAY] * 5
    remaining = Counter(secret)
    for i, (g, s) in enumerate(zip(guess, secret)):
        if g == s:
            tiles[i] = TileColor.GREEN
            remaining[g] -= 1
    for i, g in enumerate(guess):
        if tiles[i] is TileColor.GREEN:
            continue
        if remaining[g] > 0:
            tiles[i] = TileColor.YELLOW
            remaining[g] -= 1
    return tuple(tiles)  # type: ignore[return-value]


def green_count(fb: Feedback) -> int:
    return sum(1 for t in fb if t is TileColor.GREEN)


def yellow_count(fb: Feedback) -> int:
    return sum(1 for t in fb if t is TileColor.YELLOW)


class Status(enum.Enum):
    IN_PROGRESS = "in_progress"
    WON = "won"
    LOST = "lost"


@dataclass(frozen=True)
class GameState:
    """One game against a fixed secret; advanced functionally."""

    secret: str
    history: tuple[tuple[str, Feedback], ...] = field(default_factory=tuple)
    status: Status = Status.IN_PROGRESS

    @property
    def round(self) -> int:
        return len(self.history)


def try_word(
    state: GameState, guess: str, legal: WordLists | None = None
) -> tuple[Feedback, GameState]:
    """Score *guess*, append it to the history and update the status.

    With *legal* given, the guess must be in its guess list (the real
    game rejects non-words); pass None to relax this for tests.
    """
    if state.status is not Status.IN_PROGRESS:
        raise GameOver(f"game already {state.status.value}")
    if legal is not None and guess not in legal.guess_set:
        raise IllegalGuess(f"{guess!r} is not an accepted guess word")
    fb = score_guess(guess, state.secret)
    history = state.history + ((guess, fb),)
    if fb == ALL_GREEN:
        status = Status.WON
    elif len(history) >= MAX_ROUNDS:
        status = Status.LOST
    else:
        status = Status.IN_PROGRESS
    return fb, replace(state, history=history, status=status)
