"""Greedy construction of N-word opener sequences.

The next word always maximizes the objective (summed green probability
or summed log-likelihood) among candidates that re-use at most r letters
from the words already chosen, where r is the smallest rung of the
repeat ladder that leaves any candidate standing.  Re-used letters may
additionally be barred from reappearing at a position they already
occupied.

Two search modes: `greedy_sequence` grows from the global argmax (or a
caller-chosen start), `search_all_starts` grows one sequence from every
candidate and reports them all, which yields the per-sequence efficiency
distribution and the best sequence over all starts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .letter_stats import FrequencyTable, SmoothedTable
from .words import WORD_LENGTH


class Objective(enum.Enum):
    TGLP = "tglp"  # summed green probability
    LOG_LIKELIHOOD = "ll"  # summed log-likelihood


class EmptyCandidates(ValueError):
    """Ranking or search requested over an empty candidate list."""


@dataclass(frozen=True)
class RepeatPolicy:
    """Constraint ladder for letter re-use between sequence words.

    ladder: re-use allowances tried in order; each step settles on the
        first rung admitting any candidate.
    forbid_same_position_repeat: a re-used letter may not sit at a
        position where it already appeared in the sequence.
    count_distinct: count re-used letters once each instead of once per
        position (alternative reading of "one repeat").
    """

    ladder: tuple[int, ...] = (0, 1, 2, 3, 4, 5)
    forbid_same_position_repeat: bool = True
    count_distinct: bool = False

    def __post_init__(self):
        if not self.ladder or list(self.ladder) != sorted(set(self.ladder)):
            raise ValueError("ladder must be strictly increasing")
        if self.ladder[0] != 0:
            raise ValueError("ladder must start at 0")


@dataclass(frozen=True)
class SearchResult:
    sequence: tuple[str, ...]
    objective: Objective
    per_word_scores: tuple[float, ...]
    ladder_levels: tuple[int, ...]  # rung used to admit each word (first is 0)
    exhausted: bool = False  # True if the pool ran dry before reaching n

    @property
    def objective_value(self) -> float:
        return sum(self.per_word_scores)

    @property
    def letters_used(self) -> frozenset[str]:
        return frozenset("".join(self.sequence))

    @property
    def mean_contribution_per_letter(self) -> float:
        return self.objective_value / len(self.letters_used)


def _scores(
    objective: Objective, table: FrequencyTable | SmoothedTable, W: np.ndarray
) -> np.ndarray:
    cell = table.probs[np.arange(WORD_LENGTH)[None, :], W]
    if objective is Objective.TGLP:
        return cell.sum(axis=1)
    return np.log(cell).sum(axis=1)


def _word_matrix(candidates: tuple[str, ...] | list[str]) -> np.ndarray:
    return np.frombuffer(
        "".join(candidates).encode("ascii"), dtype=np.uint8
    ).reshape(len(candidates), WORD_LENGTH).astype(np.int64) - 97


def rank_by_green_probability(
    table: FrequencyTable, candidates: list[str] | tuple[str, ...]
) -> list[tuple[str, float]]:
    """All candidates with their green probability, best first.

    Ties keep candidate-list order (stable sort), so the ranking is
    deterministic for a fixed input file.
    """
    if not candidates:
        raise EmptyCandidates("no candidates to rank")
    W = _word_matrix(candidates)
    scores = _scores(Objective.TGLP, table, W)
    order = np.argsort(-scores, kind="stable")
    return [(candidates[i], float(scores[i])) for i in order]


class _GreedyScan:
    """Vectorized eligibility scan shared by both search modes."""

    def __init__(self, candidates, objective, table, policy):
        if not candidates:
            raise EmptyCandidates("no candidates to search")
        self.words = tuple(candidates)
        self.policy = policy
        self.objective = objective
        self.W = _word_matrix(self.words)
        self.scores = _scores(objective, table, self.W)
        if policy.count_distinct:
            # (M, 26) presence matrix, only needed for distinct counting
            self.presence = np.zeros((len(self.words), 26), dtype=bool)
            self.presence[np.arange(len(self.words))[:, None], self.W] = True

    def argmax(self) -> int:
        return int(np.argmax(self.scores))

    def build(self, start: int, n: int) -> SearchResult:
        seq = [start]
        levels = [0]
        used = np.zeros(26, dtype=bool)
        pos_used = np.zeros((WORD_LENGTH, 26), dtype=bool)
        taken = np.zeros(len(self.words), dtype=bool)

        def admit(idx: int):
            taken[idx] = True
            used[self.W[idx]] = True
            pos_used[np.arange(WORD_LENGTH), self.W[idx]] = True

        admit(start)
        exhausted = False
        for _ in range(n - 1):
            if self.policy.count_distinct:
                overlap = (self.presence & used[None, :]).sum(axis=1)
            else:
                overlap = used[self.W].sum(axis=1)
            blocked = taken.copy()
            if self.policy.forbid_same_position_repeat:
                blocked |= pos_used[np.arange(WORD_LENGTH)[None, :], self.W].any(
                    axis=1
                )
            pick = None
            for rung in self.policy.ladder:
                eligible = ~blocked & (overlap <= rung)
                if eligible.any():
                    masked = np.where(eligible, self.scores, -np.inf)
                    pick = int(np.argmax(masked))
                    levels.append(rung)
                    break
            if pick is None:
                exhausted = True
                break
            seq.append(pick)
            admit(pick)
        return SearchResult(
            sequence=tuple(self.words[i] for i in seq),
            objective=self.objective,
            per_word_scores=tuple(float(self.scores[i]) for i in seq),
            ladder_levels=tuple(levels),
            exhausted=exhausted,
        )


def greedy_sequence(
    n: int,
    objective: Objective,
    table: FrequencyTable | SmoothedTable,
    candidates: list[str] | tuple[str, ...],
    policy: RepeatPolicy = RepeatPolicy(),
) -> SearchResult:
    """Grow an n-word sequence from the objective argmax."""
    if not 1 <= n <= 6:
        raise ValueError("sequence length must be 1..6")
    scan = _GreedyScan(candidates, objective, table, policy)
    return scan.build(scan.argmax(), n)


def search_all_starts(
    n: int,
    objective: Objective,
    table: FrequencyTable | SmoothedTable,
    candidates: list[str] | tuple[str, ...],
    policy: RepeatPolicy = RepeatPolicy(),
) -> tuple[SearchResult, list[SearchResult]]:
    """Grow one greedy sequence from every candidate.

    Returns (best sequence by objective value, all results in candidate
    order).  The per-result efficiency values form the distribution of
    mean contribution per unique letter across starting words.
    """
    scan = _GreedyScan(candidates, objective, table, policy)
    results = [scan.build(i, n) for i in range(len(scan.words))]
    best = max(results, key=lambda r: r.objective_value)
    return best, results


def per_letter_contribution(result: SearchResult) -> float:
    """Objective value divided by the number of unique letters used."""
    return result.mean_contribution_per_letter


def unique_letter_profile(
    candidates: list[str] | tuple[str, ...], table: FrequencyTable
) -> list[tuple[str, int, float]]:
    """(word, unique-letter count, green probability) per candidate."""
    W = _word_matrix(candidates)
    scores = _scores(Objective.TGLP, table, W)
    return [
        (w, len(set(w)), float(scores[i])) for i, w in enumerate(candidates)
    ]
