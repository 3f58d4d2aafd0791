"""Guess scoring against an independent oracle, plus game-state rules."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordlab.engine import (
    ALL_GREEN,
    MAX_ROUNDS,
    Feedback,
    GameOver,
    GameState,
    IllegalGuess,
    Status,
    TileColor,
    green_count,
    score_guess,
    try_word,
    yellow_count,
)

G, Y, X = TileColor.GREEN, TileColor.YELLOW, TileColor.GRAY


def oracle_score(guess: str, secret: str) -> Feedback:
    """Index-bookkeeping restatement of the two-pass rule.

    Greens pair identical positions; each remaining guess letter then
    claims the leftmost unclaimed secret position holding that letter.
    Written with explicit position sets, no Counter, so a shared
    arithmetic slip with the implementation is unlikely.
    """
    tiles = [X] * 5
    unclaimed = [i for i in range(5) if guess[i] != secret[i]]
    for i in range(5):
        if guess[i] == secret[i]:
            tiles[i] = G
    for i in range(5):
        if tiles[i] is G:
            continue
        match = next((j for j in unclaimed if secret[j] == guess[i]), None)
        if match is not None:
            tiles[i] = Y
            unclaimed.remove(match)
    return tuple(tiles)


words5 = st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=5, max_size=5)


def test_exact_match_is_all_green():
    assert score_guess("crane", "crane") == ALL_GREEN


def test_disjoint_words_all_gray():
    assert score_guess("crane", "fitly") == (X,) * 5


def test_single_yellow():
    assert score_guess("crane", "motor") == (X, Y, X, X, X)


@pytest.mark.parametrize(
    "guess,secret,expected",
    [
        # A surplus copy of a secret letter grays out once consumed.
        ("geese", "those", (X, X, X, G, G)),
        ("babes", "abbey", (Y, Y, G, G, X)),
        ("speed", "abide", (X, X, Y, X, Y)),
        ("speed", "erase", (Y, X, Y, Y, X)),
        ("allee", "bagel", (Y, Y, X, G, X)),
        ("araba", "banal", (Y, X, Y, Y, X)),
    ],
)
def test_duplicate_letter_cases(guess, secret, expected):
    assert score_guess(guess, secret) == expected
    assert oracle_score(guess, secret) == expected


def test_oracle_equivalence_random_pairs(lists):
    rng = random.Random(20_240_815)
    for _ in range(5_000):
        guess = rng.choice(lists.guesses)
        secret = rng.choice(lists.answers)
        assert score_guess(guess, secret) == oracle_score(guess, secret)


@given(words5, words5)
@settings(max_examples=300)
def test_oracle_equivalence_hypothesis(guess, secret):
    assert score_guess(guess, secret) == oracle_score(guess, secret)


@given(words5, words5)
@settings(max_examples=300)
def test_feedback_invariants(guess, secret):
    fb = score_guess(guess, secret)
    assert len(fb) == 5
    for i, tile in enumerate(fb):
        if tile is G:
            assert guess[i] == secret[i]
        else:
            assert guess[i] != secret[i] or tile is Y
    # Colored tiles per letter never exceed that letter's count in the
    # secret (each colored tile consumes one copy).
    for c in set(guess):
        colored = sum(
            1 for i in range(5) if guess[i] == c and fb[i] is not X
        )
        assert colored <= secret.count(c)
    assert green_count(fb) + yellow_count(fb) <= 5


@given(words5)
@settings(max_examples=100)
def test_self_score_is_all_green(word):
    assert score_guess(word, word) == ALL_GREEN


def test_try_word_progression():
    state = GameState(secret="crane")
    fb, state = try_word(state, "slate")
    assert state.round == 1 and state.status is Status.IN_PROGRESS
    fb, state = try_word(state, "crane")
    assert fb == ALL_GREEN and state.status is Status.WON
    with pytest.raises(GameOver):
        try_word(state, "crane")


def test_try_word_loss_after_six_rounds():
    state = GameState(secret="crane")
    for _ in range(MAX_ROUNDS):
        fb, state = try_word(state, "fitly")
    assert state.status is Status.LOST
    assert state.round == MAX_ROUNDS
    with pytest.raises(GameOver):
        try_word(state, "fitly")


def test_try_word_rejects_illegal_guess(lists):
    state = GameState(secret="crane")
    with pytest.raises(IllegalGuess):
        try_word(state, "zzzzz", legal=lists)
    fb, state = try_word(state, "slate", legal=lists)
    assert state.round == 1
