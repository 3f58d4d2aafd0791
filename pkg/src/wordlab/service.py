"""Session-based HTTP advisor for live play.

A session tracks one real game from the player's side: each reported
(guess, tile colors) pair updates the accumulated Knowledge, re-encodes
the (greens, yellows) state from the last feedback, and asks the loaded
policy for the best action, materialized into a concrete word.  The
service never knows the secret; everything derives from the colors the
player reports.

Policies come from the q-learn JSON format.  Two ship bundled: the
published strategy matrix ("default": openers at (0, 0), exclude on
yellow-only states, smart once a green is known) and an averaged
trained artifact ("trained").
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from importlib.resources import files

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .engine import Feedback, TileColor
from .letter_stats import build_frequency_table
from .qlearn import (
    ALL_STATES,
    PolicyMatrix,
    StateKey,
    StateMode,
    encode_state,
    policy_from_dict,
)
from .seq_search import rank_by_green_probability
from .strategies import (
    ACTION_ORDER,
    ActionKind,
    Contradiction,
    GuessContext,
    PROBS1_WORDS,
    PROBS2_WORDS,
    candidates_smart,
    next_guess,
)
from .words import WordLists, load_bundled_lists

TOP_CANDIDATES = 10


def reference_policy() -> PolicyMatrix:
    """The published strategy as a policy matrix.

    Openers at (0, 0); exclude-only filtering while only yellows are
    known (except the all-yellow state, where every letter is known
    present and full filtering is strictly better); smart filtering as
    soon as any green is pinned.
    """
    rows: dict[StateKey, tuple[float, ...]] = {}
    for g, y in ALL_STATES:
        vals = {a: 0.0 for a in ACTION_ORDER}
        if g == 0 and y == 0:
            vals[ActionKind.PROBS1] = 1.0
            vals[ActionKind.PROBS2] = 0.95
        elif g == 0 and y < 5:
            vals[ActionKind.EXCLUDE] = 1.0
        else:
            vals[ActionKind.SMART] = 1.0
        rows[(g, y)] = tuple(vals[a] for a in ACTION_ORDER)
    return PolicyMatrix(rows=rows, n_runs_averaged=0)


def _bundled_trained_policy() -> PolicyMatrix | None:
    res = files("wordlab.data").joinpath("policy_trained.json")
    if not res.is_file():
        return None
    return policy_from_dict(json.loads(res.read_text(encoding="utf-8")))


@dataclass
class Session:
    id: str
    policy_id: str
    policy: PolicyMatrix
    ctx: GuessContext
    rng: random.Random
    state: StateKey = (0, 0)
    history: list[dict] = field(default_factory=list)
    counts: list[tuple[int, int]] = field(default_factory=list)
    recommendation: dict | None = None
    won: bool = False
    created: str = ""
    updated: str = ""


class CreateBody(BaseModel):
    policy_id: str = "default"
    seed: int | None = None


class FeedbackBody(BaseModel):
    guess: str
    colors: list[str]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _parse_colors(colors: list[str]) -> Feedback:
    if len(colors) != 5:
        raise HTTPException(400, detail="InvalidColors: need exactly 5 tiles")
    try:
        return tuple(TileColor(c) for c in colors)
    except ValueError:
        raise HTTPException(
            400, detail="InvalidColors: tiles must be green/yellow/gray"
        )


def build_app(
    policies: dict[str, PolicyMatrix] | None = None,
    lists: WordLists | None = None,
    base_seed: int = 0,
) -> FastAPI:
    lists = lists or load_bundled_lists()
    table = build_frequency_table(lists.answers)
    if policies is None:
        policies = {"default": reference_policy()}
        trained = _bundled_trained_policy()
        if trained is not None:
            policies["trained"] = trained
    sessions: dict[str, Session] = {}
    counter = {"n": 0}

    app = FastAPI(title="wordlab advisor")

    def _recommend(sess: Session) -> dict:
        action = sess.policy.best_action(sess.state)
        ctx = sess.ctx
        # Skip opener-list words the player already used so repeated
        # consulting at the same state walks the list forward.
        c1, c2 = ctx.probs1_cursor, ctx.probs2_cursor
        while c1 < len(PROBS1_WORDS) and PROBS1_WORDS[c1] in ctx.guessed:
            c1 += 1
        while c2 < len(PROBS2_WORDS) and PROBS2_WORDS[c2] in ctx.guessed:
            c2 += 1
        ctx = replace(ctx, probs1_cursor=c1, probs2_cursor=c2)
        word, ctx = next_guess(action, ctx, sess.rng)
        sess.ctx = ctx
        cands = [
            w for w in candidates_smart(ctx.knowledge, ctx.pool)
            if w not in ctx.guessed
        ]
        top = (
            [w for w, _ in rank_by_green_probability(table, cands)[:TOP_CANDIDATES]]
            if cands
            else []
        )
        rec = {
            "state": {"greens": sess.state[0], "yellows": sess.state[1]},
            "action": action.value,
            "word": word,
            "candidates_remaining": len(cands),
            "top_candidates": top,
        }
        sess.recommendation = rec
        return rec

    @app.get("/policies")
    def get_policies() -> list[dict]:
        return [
            {"policy_id": pid, "n_runs_averaged": p.n_runs_averaged}
            for pid, p in sorted(policies.items())
        ]

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateBody) -> dict:
        if body.policy_id not in policies:
            raise HTTPException(404, detail=f"UnknownPolicy: {body.policy_id}")
        counter["n"] += 1
        sid = f"s{counter['n']:06d}"
        seed = body.seed if body.seed is not None else base_seed + counter["n"]
        sess = Session(
            id=sid,
            policy_id=body.policy_id,
            policy=policies[body.policy_id],
            ctx=GuessContext(pool=lists.answers),
            rng=random.Random(seed),
            created=_now(),
            updated=_now(),
        )
        sessions[sid] = sess
        rec = _recommend(sess)
        return {"session_id": sid, "recommendation": rec}

    def _get(sid: str) -> Session:
        sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(404, detail=f"UnknownSession: {sid}")
        return sess

    @app.post("/sessions/{sid}/feedback")
    def submit_feedback(sid: str, body: FeedbackBody) -> dict:
        sess = _get(sid)
        if sess.won or len(sess.history) >= 6:
            raise HTTPException(409, detail="SessionComplete")
        guess = body.guess.lower()
        if guess not in lists.guess_set:
            raise HTTPException(400, detail=f"IllegalGuess: {body.guess!r}")
        fb = _parse_colors(body.colors)
        try:
            sess.ctx = sess.ctx.observe(guess, fb)
        except Contradiction as exc:
            raise HTTPException(409, detail=f"Contradiction: {exc}")
        g = sum(1 for t in fb if t is TileColor.GREEN)
        y = sum(1 for t in fb if t is TileColor.YELLOW)
        sess.counts.append((g, y))
        sess.state = encode_state(StateMode.LAST, sess.counts)
        sess.history.append({"guess": guess, "colors": list(body.colors)})
        sess.updated = _now()
        if g == 5:
            sess.won = True
            sess.recommendation = None
            return {
                "state": {"greens": 5, "yellows": 0},
                "action": None,
                "word": None,
                "candidates_remaining": 0,
                "top_candidates": [],
                "won": True,
            }
        rec = _recommend(sess)
        return {**rec, "won": False}

    @app.get("/sessions/{sid}")
    def get_session(sid: str) -> dict:
        sess = _get(sid)
        return {
            "session_id": sess.id,
            "policy_id": sess.policy_id,
            "state": {"greens": sess.state[0], "yellows": sess.state[1]},
            "history": sess.history,
            "recommendation": sess.recommendation,
            "won": sess.won,
            "created": sess.created,
            "updated": sess.updated,
        }

    return app
