"""Command-line entry point: one subcommand per experiment.

stats    frequency table and per-word scores
search   greedy opener sequences for N = 1..5 under both objectives
train    Q-learning runs, one Q table and report per seed
evaluate fixed-policy win-rate measurement
policy   average + row-normalize Q tables into a policy matrix
serve    start the advisor HTTP service

Outputs are deterministic: identical config and seeds give
byte-identical files.  Every file carries the producing config, so no
timestamps appear anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .letter_stats import (
    build_frequency_table,
    green_probability,
    smooth,
    table_to_csv,
    word_log_likelihood,
)
from .qlearn import (
    Hyperparams,
    PolicyMatrix,
    StateMode,
    average_normalized_policy,
    policy_from_dict,
    policy_to_dict,
    qtable_from_dict,
    qtable_to_dict,
    report_to_dict,
    train,
)
from .seq_search import Objective, RepeatPolicy, greedy_sequence
from .strategies import ACTION_ORDER
from .words import load_bundled_lists, load_word_lists

SEARCH_NS = (1, 2, 3, 4, 5)


def _load_lists(words: str | None):
    if words is None:
        return load_bundled_lists()
    with open(words, encoding="utf-8") as fh:
        return load_word_lists(fh)


def _config_lines(args: dict) -> str:
    return "".join(f"# {k}={v}\n" for k, v in sorted(args.items()))


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _write_json(path: Path, payload: dict) -> None:
    _write(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _pool(lists, name: str) -> tuple[str, ...]:
    return lists.answers if name == "answers" else lists.guesses


def cmd_stats(args) -> int:
    lists = _load_lists(args.words)
    out = Path(args.out)
    config = {"command": "stats", "words": args.words or "bundled"}
    table = build_frequency_table(lists.answers)
    smoothed = smooth(table)
    _write(
        out / "frequency_table.csv",
        _config_lines(config) + table_to_csv(table),
    )
    rows = ["word,unique_letters,green_probability,log_likelihood\n"]
    for w in lists.guesses:
        gp = green_probability(w, table)
        ll = word_log_likelihood(w, smoothed)
        rows.append(f"{w},{len(set(w))},{gp:.12e},{ll:.12e}\n")
    _write(out / "word_scores.csv", _config_lines(config) + "".join(rows))
    print(f"stats: wrote frequency_table.csv and word_scores.csv to {out}")
    return 0


def cmd_search(args) -> int:
    lists = _load_lists(args.words)
    out = Path(args.out)
    table = build_frequency_table(lists.answers)
    smoothed = smooth(table)
    policy = RepeatPolicy(
        forbid_same_position_repeat=not args.allow_same_position_repeat,
        count_distinct=args.count_distinct,
    )
    objectives = (
        [Objective(args.objective)] if args.objective else list(Objective)
    )
    ns = [args.n] if args.n else list(SEARCH_NS)
    config = {
        "command": "search",
        "words": args.words or "bundled",
        "objective": args.objective or "both",
        "n": args.n or "1-5",
        "allow_same_position_repeat": args.allow_same_position_repeat,
        "count_distinct": args.count_distinct,
    }

    results: dict[str, dict] = {"config": config, "results": {}}
    eff_rows = [
        "objective,n,sequence,unique_letters,objective_value,"
        "per_letter_contribution\n"
    ]
    for obj in objectives:
        score_table = smoothed if obj is Objective.LOG_LIKELIHOOD else table
        results["results"][obj.value] = {}
        for n in ns:
            r = greedy_sequence(n, obj, score_table, lists.guesses, policy)
            results["results"][obj.value][str(n)] = {
                "sequence": list(r.sequence),
                "per_word_scores": list(r.per_word_scores),
                "ladder_levels": list(r.ladder_levels),
                "objective_value": r.objective_value,
                "unique_letters": len(r.letters_used),
                "per_letter_contribution": r.mean_contribution_per_letter,
            }
            eff_rows.append(
                f"{obj.value},{n},{' '.join(r.sequence)},"
                f"{len(r.letters_used)},{r.objective_value:.12e},"
                f"{r.mean_contribution_per_letter:.12e}\n"
            )
    _write_json(out / "search_results.json", results)
    _write(out / "sequence_efficiency.csv", _config_lines(config) + "".join(eff_rows))

    uniq_rows = ["word,unique_letters,green_probability\n"]
    for w in lists.guesses:
        uniq_rows.append(f"{w},{len(set(w))},{green_probability(w, table):.12e}\n")
    _write(
        out / "tglp_by_unique_letters.csv",
        _config_lines(config) + "".join(uniq_rows),
    )
    print(f"search: wrote search_results.json and CSVs to {out}")
    return 0


def _hyperparams(args) -> Hyperparams:
    return Hyperparams(
        epsilon=args.epsilon,
        alpha=args.alpha,
        discount=args.discount,
        episodes=args.episodes,
    )


def cmd_train(args) -> int:
    lists = _load_lists(args.words)
    out = Path(args.out)
    hp = _hyperparams(args)
    mode = StateMode(args.mode)
    seeds = args.seed or [1]
    pool = _pool(lists, args.pool)
    for seed in seeds:
        q, report = train(lists, hp, mode, seed, pool=pool)
        config = {
            "command": "train",
            "words": args.words or "bundled",
            "mode": mode.value,
            "epsilon": hp.epsilon,
            "alpha": hp.alpha,
            "discount": hp.discount,
            "episodes": hp.episodes,
            "pool": args.pool,
            "seed": seed,
        }
        _write_json(out / f"qtable_seed{seed}.json", {"config": config, **qtable_to_dict(q)})
        _write_json(out / f"report_seed{seed}.json", {"config": config, **report_to_dict(report)})
        head = _config_lines(config)
        _write(
            out / f"reward_histogram_seed{seed}.csv",
            head
            + "total_reward,episodes\n"
            + "".join(f"{k},{v}\n" for k, v in report.reward_histogram.items()),
        )
        _write(
            out / f"game_lengths_seed{seed}.csv",
            head
            + "rounds,episodes\n"
            + "".join(f"{k},{v}\n" for k, v in report.game_lengths.items()),
        )
        _write(
            out / f"rolling_wins_seed{seed}.csv",
            head
            + "episode,cumulative_wins\n"
            + "".join(f"{ep},{w}\n" for ep, w in report.rolling),
        )
        print(
            f"train: seed={seed} mode={mode.value} epsilon={hp.epsilon} "
            f"pool={args.pool} wins={report.wins}/{report.episodes} "
            f"({report.win_rate:.1%})"
        )
    return 0


def cmd_evaluate(args) -> int:
    import random

    from .qlearn import CandidateIndex, new_qtable, run_episode

    lists = _load_lists(args.words)
    out = Path(args.out)
    policy = policy_from_dict(json.loads(Path(args.policy).read_text()))
    hp = _hyperparams(args)
    mode = StateMode(args.mode)
    pool = _pool(lists, args.pool)
    index = CandidateIndex(tuple(pool))
    seeds = args.seed or [1]
    per_seed = {}
    for seed in seeds:
        rng = random.Random(seed)
        q = new_qtable()
        wins = 0
        for _ in range(hp.episodes):
            log = run_episode(
                lists, q, hp, mode, rng, index, learn=False, policy=policy
            )
            wins += log.won
        per_seed[str(seed)] = {
            "wins": wins,
            "episodes": hp.episodes,
            "win_rate": wins / hp.episodes,
        }
        print(
            f"evaluate: seed={seed} wins={wins}/{hp.episodes} "
            f"({wins / hp.episodes:.1%})"
        )
    config = {
        "command": "evaluate",
        "policy": args.policy,
        "words": args.words or "bundled",
        "mode": mode.value,
        "episodes": hp.episodes,
        "pool": args.pool,
        "seeds": seeds,
    }
    _write_json(out / "evaluation.json", {"config": config, "per_seed": per_seed})
    return 0


def cmd_policy(args) -> int:
    out = Path(args.out)
    runs = []
    for path in args.runs:
        data = json.loads(Path(path).read_text())
        runs.append(qtable_from_dict(data))
    matrix = average_normalized_policy(runs)
    config = {"command": "policy", "runs": list(args.runs)}
    _write_json(out / "policy.json", {"config": config, **policy_to_dict(matrix)})
    head = _config_lines(config)
    rows = ["greens,yellows," + ",".join(a.value for a in ACTION_ORDER) + "\n"]
    for (g, y), vals in sorted(matrix.rows.items()):
        cells = ",".join(f"{v:.12e}" for v in vals)
        rows.append(f"{g},{y},{cells}\n")
    _write(out / "policy_heatmap.csv", head + "".join(rows))
    print(f"policy: averaged {len(runs)} runs into {out / 'policy.json'}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_app

    policies = {}
    for path in args.policy or []:
        p = Path(path)
        policies[p.stem] = policy_from_dict(json.loads(p.read_text()))
    app = build_app(policies=policies or None)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordlab",
        description="Wordle opener search and Q-learning strategy laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--words", help="word-list file (default: bundled)")
        p.add_argument("--out", default="out", help="output directory")

    p = sub.add_parser("stats", help="frequency table and per-word scores")
    add_common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("search", help="greedy opener-sequence search")
    add_common(p)
    p.add_argument("--objective", choices=[o.value for o in Objective])
    p.add_argument("--n", type=int, choices=SEARCH_NS)
    p.add_argument("--allow-same-position-repeat", action="store_true")
    p.add_argument("--count-distinct", action="store_true")
    p.set_defaults(func=cmd_search)

    def add_rl(p):
        p.add_argument("--mode", choices=["last", "best"], default="last")
        p.add_argument("--epsilon", type=float, default=0.02)
        p.add_argument("--alpha", type=float, default=0.02)
        p.add_argument("--discount", type=float, default=0.05)
        p.add_argument("--episodes", type=int, default=10_000)
        p.add_argument("--seed", type=int, action="append")
        p.add_argument("--pool", choices=["answers", "all"], default="answers")

    p = sub.add_parser("train", help="Q-learning training runs")
    add_common(p)
    add_rl(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="fixed-policy win rate")
    add_common(p)
    add_rl(p)
    p.add_argument("--policy", required=True, help="policy JSON to evaluate")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("policy", help="average and normalize Q tables")
    p.add_argument("--runs", nargs="+", required=True, help="qtable JSON files")
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_policy)

    p = sub.add_parser("serve", help="start the advisor HTTP service")
    p.add_argument("--policy", action="append", help="policy JSON to load")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
