"""Q-learning training battery at the three exploration levels.

Three seeds per epsilon in {0.02, 0.3, 0.5}, state mode last, candidate
pool = all 12,972 legal guesses.  Each run writes its Q table, report,
and histogram CSVs under results/training/eps<value>/.
"""

from wordlab.cli import main

EPSILONS = ("0.02", "0.3", "0.5")

if __name__ == "__main__":
    rc = 0
    for eps in EPSILONS:
        rc |= main([
            "train",
            "--mode", "last",
            "--epsilon", eps,
            "--pool", "all",
            "--seed", "1", "--seed", "2", "--seed", "3",
            "--out", f"results/training/eps{eps}",
        ])
    raise SystemExit(rc)
