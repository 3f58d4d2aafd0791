"""Tabular Q-learning over (greens, yellows) states and the five actions.

State space: (greens, yellows) of a guess's feedback with g + y <= 5,
21 states including the (0, 0) start.  "last" mode encodes the most
recent feedback; "best" keeps the running maxima of each count (capped
back to g + y <= 5).  Rewards per guess: +2 per yellow, +5 per green,
+25 for winning, -15 for losing.

Training uses Watkins one-step updates with the bootstrap term dropped
on terminal transitions.  Episodes are fully determined by (seed, hp,
mode, pool); the candidate filters run vectorized but draw through the
same rng calls as strategies.next_guess, so both paths replay the
identical trajectory from one seed.
"""

from __future__ import annotations

import enum
import math
import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import t as t_dist

from .engine import ALL_GREEN, MAX_ROUNDS, green_count, score_guess, yellow_count
from .strategies import (
    ACTION_ORDER,
    ActionKind,
    Knowledge,
    PoolEmpty,
    PROBS1_WORDS,
    PROBS2_WORDS,
    update_knowledge,
)
from .words import WordLists

StateKey = tuple[int, int]

N_ACTIONS = len(ACTION_ORDER)

ALL_STATES: tuple[StateKey, ...] = tuple(
    (g, y) for g in range(6) for y in range(6 - g)
)


class StateMode(enum.Enum):
    LAST = "last"
    BEST = "best"


@dataclass(frozen=True)
class Hyperparams:
    epsilon: float = 0.02
    alpha: float = 0.02
    discount: float = 0.05
    episodes: int = 10_000
    reward_yellow: float = 2.0
    reward_green: float = 5.0
    reward_win: float = 25.0
    reward_lose: float = -15.0

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must be in [0, 1]")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must be in (0, 1]")
        if not 0.0 <= self.discount < 1.0:
            raise ValueError("discount must be in [0, 1)")
        if self.episodes < 1:
            raise ValueError("episodes must be >= 1")


# Preset exploration settings used across the experiments.
EPSILON_EXPLOIT = 0.02
EPSILON_MODERATE = 0.3
EPSILON_EXPLORE = 0.5


QTable = dict[StateKey, list[float]]


def new_qtable() -> QTable:
    return {s: [0.0] * N_ACTIONS for s in ALL_STATES}


class Outcome(enum.Enum):
    NON_TERMINAL = "non_terminal"
    WIN = "win"
    LOSE = "lose"


def step_reward(fb, outcome: Outcome, hp: Hyperparams) -> float:
    """Shaped per-guess reward plus the terminal bonus when applicable."""
    r = hp.reward_yellow * yellow_count(fb) + hp.reward_green * green_count(fb)
    if outcome is Outcome.WIN:
        r += hp.reward_win
    elif outcome is Outcome.LOSE:
        r += hp.reward_lose
    return r


def encode_state(mode: StateMode, counts: list[tuple[int, int]]) -> StateKey:
    """Map the per-guess (greens, yellows) counts so far to a state key.

    "last" takes the most recent pair; "best" takes the running maximum
    of each count, trimming yellows so greens + yellows <= 5 keeps the
    state space identical between modes.
    """
    if not counts:
        return (0, 0)
    if mode is StateMode.LAST:
        return counts[-1]
    bg = max(g for g, _ in counts)
    by = max(y for _, y in counts)
    return (bg, min(by, 5 - bg))


def q_update(
    q: QTable,
    s: StateKey,
    a: ActionKind,
    r: float,
    s_next: StateKey,
    terminal: bool,
    hp: Hyperparams,
) -> None:
    """One Watkins step; the bootstrap term is dropped when terminal."""
    ai = ACTION_ORDER.index(a)
    target = r if terminal else r + hp.discount * max(q[s_next])
    q[s][ai] += hp.alpha * (target - q[s][ai])


def greedy_action(q: QTable, s: StateKey) -> ActionKind:
    """Argmax over actions, ties broken by fixed action order."""
    row = q[s]
    best = 0
    for i in range(1, N_ACTIONS):
        if row[i] > row[best]:
            best = i
    return ACTION_ORDER[best]


def select_action(
    q: QTable, s: StateKey, epsilon: float, rng: random.Random
) -> ActionKind:
    if rng.random() < epsilon:
        return ACTION_ORDER[rng.randrange(N_ACTIONS)]
    return greedy_action(q, s)


@dataclass
class EpisodeLog:
    secret: str
    transitions: list[tuple[StateKey, ActionKind, float, StateKey]]
    total_reward: float
    rounds: int
    won: bool


class CandidateIndex:
    """Vectorized candidate filtering over a fixed pool.

    Boolean masks computed from a Knowledge instance select the same
    words, in the same order, as strategies.candidates_smart and
    candidates_exclude - an equivalence the test suite pins down.
    """

    def __init__(self, pool: tuple[str, ...]):
        self.pool = pool
        self.position = {w: i for i, w in enumerate(pool)}
        m = len(pool)
        self.letters = (
            np.frombuffer("".join(pool).encode("ascii"), dtype=np.uint8)
            .reshape(m, 5)
            .astype(np.int64)
            - 97
        )
        self.presence = np.zeros((m, 26), dtype=bool)
        self.presence[np.arange(m)[:, None], self.letters] = True

    def smart_mask(self, k: Knowledge) -> np.ndarray:
        mask = np.ones(len(self.pool), dtype=bool)
        for i, c in k.greens.items():
            mask &= self.letters[:, i] == ord(c) - 97
        for c, banned in k.yellows.items():
            ci = ord(c) - 97
            mask &= self.presence[:, ci]
            for i in banned:
                mask &= self.letters[:, i] != ci
        return mask & self._absent_ok(k)

    def exclude_mask(self, k: Knowledge) -> np.ndarray:
        return self._absent_ok(k)

    def _absent_ok(self, k: Knowledge) -> np.ndarray:
        if not k.absents:
            return np.ones(len(self.pool), dtype=bool)
        cols = [ord(c) - 97 for c in k.absents]
        return ~self.presence[:, cols].any(axis=1)


def _draw(
    mask: np.ndarray | None,
    guessed_mask: np.ndarray,
    rng: random.Random,
) -> int | None:
    live = np.flatnonzero(~guessed_mask if mask is None else (mask & ~guessed_mask))
    if live.size == 0:
        return None
    return int(live[rng.randrange(live.size)])


def run_episode(
    lists: WordLists,
    q: QTable,
    hp: Hyperparams,
    mode: StateMode,
    rng: random.Random,
    index: CandidateIndex,
    learn: bool = True,
    policy: "PolicyMatrix | None" = None,
) -> EpisodeLog:
    """Play one game, updating q in place unless learning is disabled.

    The secret is drawn uniformly from the answer pool; guesses come
    from the configured candidate pool.  With *policy* given, actions
    follow its per-state argmax instead of epsilon-greedy control.
    """
    secret = lists.answers[rng.randrange(len(lists.answers))]
    know = Knowledge()
    guessed_mask = np.zeros(len(index.pool), dtype=bool)
    word_at = index.pool
    smart = np.ones(len(index.pool), dtype=bool)
    excl = np.ones(len(index.pool), dtype=bool)
    c1 = c2 = 0
    s: StateKey = (0, 0)
    counts: list[tuple[int, int]] = []
    transitions = []
    total = 0.0
    won = False

    for rnd in range(MAX_ROUNDS):
        if policy is not None:
            action = policy.best_action(s)
        else:
            action = select_action(q, s, hp.epsilon, rng)

        if action is ActionKind.PROBS1 and c1 < len(PROBS1_WORDS):
            guess = PROBS1_WORDS[c1]
            c1 += 1
        elif action is ActionKind.PROBS2 and c2 < len(PROBS2_WORDS):
            guess = PROBS2_WORDS[c2]
            c2 += 1
        else:
            if action is ActionKind.SMART:
                pick = _draw(smart, guessed_mask, rng)
            elif action is ActionKind.EXCLUDE:
                pick = _draw(excl, guessed_mask, rng)
            else:
                pick = _draw(None, guessed_mask, rng)
            if pick is None:
                pick = _draw(None, guessed_mask, rng)
            if pick is None:
                raise PoolEmpty("no unguessed word left in the pool")
            guess = word_at[pick]

        # Preset probs words may sit outside a restricted pool; only
        # pool members need the repeat-guess mask.
        pos = index.position.get(guess)
        if pos is not None:
            guessed_mask[pos] = True

        fb = score_guess(guess, secret)
        know = update_knowledge(know, guess, fb)
        smart &= index.smart_mask(know)
        excl &= index.exclude_mask(know)

        g, y = green_count(fb), yellow_count(fb)
        counts.append((g, y))
        won = fb == ALL_GREEN
        terminal = won or rnd == MAX_ROUNDS - 1
        outcome = (
            Outcome.WIN if won else Outcome.LOSE if terminal else Outcome.NON_TERMINAL
        )
        r = step_reward(fb, outcome, hp)
        total += r
        s_next = encode_state(mode, counts)
        transitions.append((s, action, r, s_next))
        if learn:
            q_update(q, s, action, r, s_next, terminal, hp)
        if terminal:
            return EpisodeLog(secret, transitions, total, rnd + 1, won)
        s = s_next
    raise AssertionError("unreachable: loop always terminates by round 6")


@dataclass
class TrainingReport:
    episodes: int
    wins: int
    mode: str
    epsilon: float
    seed: int
    per_round_wins: dict[int, int]
    game_lengths: dict[int, int]
    reward_histogram: dict[int, int]
    rolling: list[tuple[int, int]]  # (episode, cumulative wins) every 100

    @property
    def win_rate(self) -> float:
        return self.wins / self.episodes


def train(
    lists: WordLists,
    hp: Hyperparams,
    mode: StateMode,
    seed: int,
    pool: tuple[str, ...] | None = None,
) -> tuple[QTable, TrainingReport]:
    """Run hp.episodes training episodes accumulating one Q table.

    The candidate pool for the filter actions defaults to the full
    guess list; pass lists.answers to restrict play to possible secrets.
    """
    rng = random.Random(seed)
    pool = lists.guesses if pool is None else pool
    index = CandidateIndex(tuple(pool))
    q = new_qtable()
    wins = 0
    per_round: Counter = Counter()
    lengths: Counter = Counter()
    rewards: Counter = Counter()
    rolling = []
    for ep in range(1, hp.episodes + 1):
        log = run_episode(lists, q, hp, mode, rng, index)
        if log.won:
            wins += 1
            per_round[log.rounds] += 1
        lengths[log.rounds] += 1
        rewards[round(log.total_reward)] += 1
        if ep % 100 == 0:
            rolling.append((ep, wins))
    report = TrainingReport(
        episodes=hp.episodes,
        wins=wins,
        mode=mode.value,
        epsilon=hp.epsilon,
        seed=seed,
        per_round_wins=dict(sorted(per_round.items())),
        game_lengths=dict(sorted(lengths.items())),
        reward_histogram=dict(sorted(rewards.items())),
        rolling=rolling,
    )
    return q, report


@dataclass(frozen=True)
class PolicyMatrix:
    """Averaged Q values, min-max rescaled to [0, 1] within each row."""

    rows: dict[StateKey, tuple[float, ...]]
    n_runs_averaged: int

    def best_action(self, s: StateKey) -> ActionKind:
        row = self.rows[s]
        best = 0
        for i in range(1, N_ACTIONS):
            if row[i] > row[best]:
                best = i
        return ACTION_ORDER[best]


def average_normalized_policy(runs: list[QTable]) -> PolicyMatrix:
    """Per-state mean across runs, then per-row min-max to [0, 1].

    Rows with all-equal values map to all zeros ("no preference").
    """
    if not runs:
        raise ValueError("need at least one run to average")
    rows = {}
    for s in ALL_STATES:
        mean = [
            sum(q[s][i] for q in runs) / len(runs) for i in range(N_ACTIONS)
        ]
        lo, hi = min(mean), max(mean)
        if hi - lo == 0.0:
            rows[s] = (0.0,) * N_ACTIONS
        else:
            rows[s] = tuple((v - lo) / (hi - lo) for v in mean)
    return PolicyMatrix(rows=rows, n_runs_averaged=len(runs))


def _state_key_str(s: StateKey) -> str:
    return f"{s[0]},{s[1]}"


def _parse_state_key(text: str) -> StateKey:
    g, y = text.split(",")
    return (int(g), int(y))


def qtable_to_dict(q: QTable) -> dict:
    """JSON-ready form: states keyed "g,y", actions by name."""
    return {
        "states": {
            _state_key_str(s): {
                a.value: q[s][i] for i, a in enumerate(ACTION_ORDER)
            }
            for s in ALL_STATES
        }
    }


def qtable_from_dict(data: dict) -> QTable:
    q = new_qtable()
    for key, row in data["states"].items():
        s = _parse_state_key(key)
        q[s] = [float(row[a.value]) for a in ACTION_ORDER]
    return q


def policy_to_dict(p: PolicyMatrix) -> dict:
    return {
        "n_runs_averaged": p.n_runs_averaged,
        "states": {
            _state_key_str(s): {
                a.value: p.rows[s][i] for i, a in enumerate(ACTION_ORDER)
            }
            for s in ALL_STATES
        },
    }


def policy_from_dict(data: dict) -> PolicyMatrix:
    rows = {}
    for key, row in data["states"].items():
        s = _parse_state_key(key)
        rows[s] = tuple(float(row[a.value]) for a in ACTION_ORDER)
    missing = set(ALL_STATES) - set(rows)
    if missing:
        raise ValueError(f"policy is missing states: {sorted(missing)}")
    return PolicyMatrix(rows=rows, n_runs_averaged=int(data["n_runs_averaged"]))


def report_to_dict(r: TrainingReport) -> dict:
    return {
        "episodes": r.episodes,
        "wins": r.wins,
        "win_rate": r.win_rate,
        "mode": r.mode,
        "epsilon": r.epsilon,
        "seed": r.seed,
        "per_round_wins": {str(k): v for k, v in r.per_round_wins.items()},
        "game_lengths": {str(k): v for k, v in r.game_lengths.items()},
        "reward_histogram": {str(k): v for k, v in r.reward_histogram.items()},
        "rolling_wins": [[ep, w] for ep, w in r.rolling],
    }


class DegenerateSample(ValueError):
    """Welch test asked for fewer than two points or two flat samples."""


def welch_t_test(a: list[float], b: list[float]) -> tuple[float, float, float]:
    """Two-sided Welch t-test: (t, Welch-Satterthwaite dof, p)."""
    n1, n2 = len(a), len(b)
    if n1 < 2 or n2 < 2:
        raise DegenerateSample("need at least two observations per sample")
    m1 = sum(a) / n1
    m2 = sum(b) / n2
    v1 = sum((x - m1) ** 2 for x in a) / (n1 - 1)
    v2 = sum((x - m2) ** 2 for x in b) / (n2 - 1)
    if v1 == 0.0 and v2 == 0.0:
        raise DegenerateSample("both samples have zero variance")
    se2 = v1 / n1 + v2 / n2
    t = (m1 - m2) / math.sqrt(se2)
    dof = se2**2 / (
        (v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1)
    )
    p = 2.0 * float(t_dist.sf(abs(t), dof))
    return t, dof, p
