"""Positional letter statistics over the bundled corpus.

Writes the 5x26 frequency table and per-word scores (green probability,
log-likelihood) for all 12,972 guess words to results/stats/.
"""

from wordlab.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["stats", "--out", "results/stats"]))
