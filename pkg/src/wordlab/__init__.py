"""Wordle strategy laboratory.

Positional letter statistics over the answer corpus, greedy opener-
sequence search under two scoring objectives, five guess-generation
strategies sharing a constraint-knowledge accumulator, and a tabular
Q-learning agent that learns when to use which strategy.  A small HTTP
service exposes the trained policy as a move advisor for live play.
"""

from .words import WordLists, load_bundled_lists, load_word_lists

__all__ = ["WordLists", "load_bundled_lists", "load_word_lists"]
