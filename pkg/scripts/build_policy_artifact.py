"""Regenerate the bundled trained policy artifact.

Three seeds at epsilon 0.3, state mode last, full guess pool; the Q
tables are averaged and row-normalized into
src/wordlab/data/policy_trained.json, which the advisor service ships
as the "trained" policy.  Deterministic: reruns are byte-identical.
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

from wordlab.cli import main

TARGET = Path(__file__).resolve().parents[1] / "src/wordlab/data/policy_trained.json"
CONFIG = {
    "command": "train+policy",
    "epsilon": 0.3,
    "alpha": 0.02,
    "discount": 0.05,
    "episodes": 10_000,
    "mode": "last",
    "pool": "all",
    "seeds": [1, 2, 3],
}

if __name__ == "__main__":
    with tempfile.TemporaryDirectory() as tmp:
        rc = main([
            "train",
            "--mode", "last",
            "--epsilon", "0.3",
            "--pool", "all",
            "--seed", "1", "--seed", "2", "--seed", "3",
            "--out", tmp,
        ])
        rc |= main([
            "policy",
            "--runs",
            f"{tmp}/qtable_seed1.json",
            f"{tmp}/qtable_seed2.json",
            f"{tmp}/qtable_seed3.json",
            "--out", tmp,
        ])
        if rc == 0:
            data = json.loads(Path(f"{tmp}/policy.json").read_text())
            data["config"] = CONFIG  # replace run-local paths with settings
            TARGET.write_text(
                json.dumps(data, sort_keys=True, indent=2) + "\n", encoding="utf-8"
            )
            print(f"wrote {TARGET}")
    raise SystemExit(rc)
