"""Last vs best state encoding: 3 seeds each, Welch t-test on wins.

Trains both encodings at epsilon 0.3 on the full guess pool and prints
the per-seed win counts with the two-sided test on the two triples.
"""

from __future__ import annotations

from wordlab.qlearn import Hyperparams, StateMode, train, welch_t_test
from wordlab.words import load_bundled_lists

SEEDS = (1, 2, 3)

if __name__ == "__main__":
    lists = load_bundled_lists()
    hp = Hyperparams(epsilon=0.3)
    wins: dict[StateMode, list[float]] = {}
    for mode in StateMode:
        wins[mode] = []
        for seed in SEEDS:
            _, report = train(lists, hp, mode, seed, pool=lists.guesses)
            wins[mode].append(float(report.wins))
            print(f"{mode.value}: seed={seed} wins={report.wins}/{hp.episodes}")
    t, dof, p = welch_t_test(wins[StateMode.LAST], wins[StateMode.BEST])
    print(
        f"last mean {sum(wins[StateMode.LAST]) / len(SEEDS):.1f} vs "
        f"best mean {sum(wins[StateMode.BEST]) / len(SEEDS):.1f}: "
        f"t={t:.3f} dof={dof:.2f} p={p:.4f}"
    )
