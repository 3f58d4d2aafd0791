"""The five guess-generation actions and the constraint knowledge they share.

Knowledge accumulates what feedback has revealed: pinned (green)
positions, letters known present but barred from certain positions
(yellow), and letters known absent.  A gray tile only marks its letter
absent when no other tile of the same guess colors that letter - the
live game grays out surplus copies of a letter the secret does contain,
and treating those as absent would wrongly eliminate the secret.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace

from .engine import Feedback, TileColor

# Fixed opener lists: the five-word sequences found by the two scoring
# methods (log-likelihood and green-probability maximization).
PROBS1_WORDS = ("bowne", "slaty", "prick", "faugh", "meved")
PROBS2_WORDS = ("looie", "saury", "chant", "bided", "primp")


class ActionKind(enum.Enum):
    RANDOM = "random"
    PROBS1 = "probs1"
    PROBS2 = "probs2"
    SMART = "smart"
    EXCLUDE = "exclude"


ACTION_ORDER = (
    ActionKind.RANDOM,
    ActionKind.PROBS1,
    ActionKind.PROBS2,
    ActionKind.SMART,
    ActionKind.EXCLUDE,
)


class Contradiction(ValueError):
    """Feedback is inconsistent with previously accumulated knowledge."""


class PoolEmpty(RuntimeError):
    """No legal guess remains anywhere (unreachable in normal play)."""


@dataclass(frozen=True)
class Knowledge:
    greens: dict[int, str] = field(default_factory=dict)
    yellows: dict[str, frozenset[int]] = field(default_factory=dict)
    absents: frozenset[str] = field(default_factory=frozenset)

    def is_empty(self) -> bool:
        return not (self.greens or self.yellows or self.absents)


def update_knowledge(k: Knowledge, guess: str, fb: Feedback) -> Knowledge:
    """Fold one guess/feedback pair into the accumulated constraints."""
    greens = dict(k.greens)
    yellows = {c: set(p) for c, p in k.yellows.items()}
    absents = set(k.absents)
    colored = {guess[i] for i in range(5) if fb[i] is not TileColor.GRAY}
    for i, (c, tile) in enumerate(zip(guess, fb)):
        if tile is TileColor.GREEN:
            if greens.get(i, c) != c:
                raise Contradiction(f"position {i} already green {greens[i]!r}")
            greens[i] = c
        elif tile is TileColor.YELLOW:
            yellows.setdefault(c, set()).add(i)
        elif c not in colored:
            absents.add(c)
    if absents & (set(greens.values()) | set(yellows)):
        raise Contradiction("a letter is marked both absent and present")
    for c, banned in yellows.items():
        if len(banned) == 5 and c not in greens.values():
            raise Contradiction(f"letter {c!r} present but barred everywhere")
    return Knowledge(
        greens=greens,
        yellows={c: frozenset(p) for c, p in yellows.items()},
        absents=frozenset(absents),
    )


def _smart_ok(k: Knowledge, word: str) -> bool:
    for i, c in k.greens.items():
        if word[i] != c:
            return False
    for c, banned in k.yellows.items():
        if c not in word:
            return False
        for i in banned:
            if word[i] == c:
                return False
    return not any(c in k.absents for c in word)


def candidates_smart(k: Knowledge, pool: list[str] | tuple[str, ...]) -> list[str]:
    """Words consistent with every constraint (greens, yellows, absents)."""
    return [w for w in pool if _smart_ok(k, w)]


def candidates_exclude(k: Knowledge, pool: list[str] | tuple[str, ...]) -> list[str]:
    """Words containing no known-absent letter; greens/yellows ignored."""
    return [w for w in pool if not any(c in k.absents for c in w)]


@dataclass(frozen=True)
class GuessContext:
    """Per-game guessing state: candidate pool, opener cursors, knowledge.

    The pool is fixed for the game; filters are applied per guess.  The
    rng is owned by the caller so whole trajectories replay bit-for-bit
    from a seed.
    """

    pool: tuple[str, ...]
    knowledge: Knowledge = field(default_factory=Knowledge)
    guessed: frozenset[str] = field(default_factory=frozenset)
    probs1_cursor: int = 0
    probs2_cursor: int = 0

    def observe(self, guess: str, fb: Feedback) -> "GuessContext":
        return replace(
            self,
            knowledge=update_knowledge(self.knowledge, guess, fb),
            guessed=self.guessed | {guess},
        )


def next_guess(
    action: ActionKind, ctx: GuessContext, rng: random.Random
) -> tuple[str, GuessContext]:
    """Produce a guess word for *action* and the advanced context.

    probs1/probs2 walk their fixed lists and fall back to a random
    remaining word once exhausted; the filter actions draw uniformly
    from their candidate set, degrading to the unfiltered pool when the
    filter leaves nothing.
    """
    if action is ActionKind.PROBS1 and ctx.probs1_cursor < len(PROBS1_WORDS):
        word = PROBS1_WORDS[ctx.probs1_cursor]
        return word, replace(ctx, probs1_cursor=ctx.probs1_cursor + 1)
    if action is ActionKind.PROBS2 and ctx.probs2_cursor < len(PROBS2_WORDS):
        word = PROBS2_WORDS[ctx.probs2_cursor]
        return word, replace(ctx, probs2_cursor=ctx.probs2_cursor + 1)

    if action is ActionKind.SMART:
        cands = candidates_smart(ctx.knowledge, ctx.pool)
    elif action is ActionKind.EXCLUDE:
        cands = candidates_exclude(ctx.knowledge, ctx.pool)
    else:  # RANDOM and exhausted PROBS lists
        cands = ctx.pool
    live = [w for w in cands if w not in ctx.guessed]
    if not live:
        live = [w for w in ctx.pool if w not in ctx.guessed]
    if not live:
        raise PoolEmpty("every word in the pool has been guessed")
    return rng.choice(live), ctx
