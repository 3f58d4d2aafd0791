"""Positional letter statistics over the answer corpus.

Each of the five positions gets a categorical distribution over a-z
(a bag-of-letters per position).  Words are scored two ways: the sum of
their positional letter probabilities ("green probability", the chance
mass of hitting greens) and the log-likelihood of the letter sequence
under the smoothed distributions.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .words import ALPHABET, WORD_LENGTH

LAPLACE_PSEUDOCOUNT = 1


class EmptyCorpus(ValueError):
    """Frequency table requested for an empty word list."""


def _letter_index(word: str) -> list[int]:
    return [ord(c) - 97 for c in word]


@dataclass(frozen=True)
class FrequencyTable:
    """Raw per-position letter probabilities: probs[i, L] = count / N."""

    probs: np.ndarray  # (5, 26), rows sum to 1
    counts: np.ndarray  # (5, 26) integer letter counts
    source_count: int

    def prob(self, position: int, letter: str) -> float:
        return float(self.probs[position, ord(letter) - 97])


@dataclass(frozen=True)
class SmoothedTable:
    """Laplace-smoothed variant: probs[i, L] = (count + 1) / (N + 26).

    Every entry is strictly positive, so logs are always finite.
    """

    probs: np.ndarray
    source_count: int

    def prob(self, position: int, letter: str) -> float:
        return float(self.probs[position, ord(letter) - 97])


def build_frequency_table(answers: list[str] | tuple[str, ...]) -> FrequencyTable:
    """Count letters per position over *answers* and normalize columns."""
    if not answers:
        raise EmptyCorpus("cannot build a frequency table from no words")
    counts = np.zeros((WORD_LENGTH, 26), dtype=np.int64)
    for word in answers:
        for i, k in enumerate(_letter_index(word)):
            counts[i, k] += 1
    n = len(answers)
    return FrequencyTable(probs=counts / n, counts=counts, source_count=n)


def smooth(table: FrequencyTable) -> SmoothedTable:
    """Add-one smoothing on counts, renormalized: (c + 1) / (N + 26)."""
    n = table.source_count
    probs = (table.counts + LAPLACE_PSEUDOCOUNT) / (n + 26 * LAPLACE_PSEUDOCOUNT)
    return SmoothedTable(probs=probs, source_count=n)


def green_probability(word: str, table: FrequencyTable | SmoothedTable) -> float:
    """Sum of the five positional probabilities of the word's letters.

    Repeated letters contribute once per position; the value lies in
    [0, 5].
    """
    return float(table.probs[np.arange(WORD_LENGTH), _letter_index(word)].sum())


def word_log_likelihood(word: str, table: SmoothedTable) -> float:
    """Natural-log likelihood of the word under the smoothed table (<= 0)."""
    return float(
        np.log(table.probs[np.arange(WORD_LENGTH), _letter_index(word)]).sum()
    )


def sequence_green_probability(
    seq: list[str] | tuple[str, ...], table: FrequencyTable | SmoothedTable
) -> float:
    """Total green probability of a guess sequence: plain per-word sum."""
    return sum(green_probability(w, table) for w in seq)


def log_likelihood_floor(source_count: int) -> float:
    """Lower bound of word_log_likelihood: all-zero-count letters."""
    return WORD_LENGTH * math.log(
        LAPLACE_PSEUDOCOUNT / (source_count + 26 * LAPLACE_PSEUDOCOUNT)
    )


def table_to_csv(table: FrequencyTable | SmoothedTable) -> str:
    """Render as CSV: 26 letter rows ('a'-'z') by 5 position columns."""
    out = io.StringIO()
    out.write("letter,pos1,pos2,pos3,pos4,pos5\n")
    for k, letter in enumerate(ALPHABET):
        cells = ",".join(f"{table.probs[i, k]:.12e}" for i in range(WORD_LENGTH))
        out.write(f"{letter},{cells}\n")
    return out.getvalue()
