"""Greedy opener-sequence searches under both objectives.

Two parts:
  1. the default greedy chains for N = 1..5 (CLI `search`), written to
     results/search/;
  2. the all-starts distribution at N = 3: one greedy sequence grown
     from every possible starting word, ranked by objective value and
     by per-unique-letter contribution.  The top of the efficiency
     ranking is where short high-value sequences surface that the
     single greedy chain never visits.
"""

from __future__ import annotations

import csv
from pathlib import Path

from wordlab.cli import main
from wordlab.letter_stats import build_frequency_table, smooth
from wordlab.seq_search import Objective, search_all_starts
from wordlab.words import load_bundled_lists

TOP = 10
OUT = Path("results/search")


def all_starts_report() -> None:
    lists = load_bundled_lists()
    table = build_frequency_table(lists.answers)
    smoothed = smooth(table)
    OUT.mkdir(parents=True, exist_ok=True)
    for objective in Objective:
        score_table = smoothed if objective is Objective.LOG_LIKELIHOOD else table
        best, results = search_all_starts(3, objective, score_table, lists.guesses)
        by_value = sorted(results, key=lambda r: -r.objective_value)[:TOP]
        by_eff = sorted(results, key=lambda r: -r.mean_contribution_per_letter)[:TOP]
        path = OUT / f"all_starts_n3_{objective.value}.csv"
        with path.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["rank_by", "sequence", "objective_value", "per_letter"])
            for r in by_value:
                w.writerow(["value", " ".join(r.sequence),
                            f"{r.objective_value:.6f}",
                            f"{r.mean_contribution_per_letter:.6f}"])
            for r in by_eff:
                w.writerow(["efficiency", " ".join(r.sequence),
                            f"{r.objective_value:.6f}",
                            f"{r.mean_contribution_per_letter:.6f}"])
        print(f"{objective.value}: best by value {' '.join(best.sequence)}; "
              f"top efficiency {' '.join(by_eff[0].sequence)} -> {path}")


if __name__ == "__main__":
    rc = main(["search", "--out", str(OUT)])
    all_starts_report()
    raise SystemExit(rc)
