#!/usr/bin/env python3
"""Write data/example_db.csv: 40 smooth synthetic reflectances, wide CSV, 400..700 nm every 10 nm."""
import sys

import numpy as np


def main(path):
    rng = np.random.default_rng(7)
    wl = np.arange(400, 701, 10)
    lines = ["id," + ",".join(str(w) for w in wl)]
    for n in range(40):
        base = rng.uniform(0.02, 0.1)
        peaks = rng.integers(1, 3)
        r = np.full(wl.shape, base)
        for _ in range(peaks):
            mu = rng.uniform(420, 680)
            sigma = rng.uniform(20, 80)
            r += rng.uniform(0.2, 0.8) * np.exp(-0.5 * ((wl - mu) / sigma) ** 2)
        r = np.clip(r, 0.0, 1.0)
        lines.append(f"S{n:03d}," + ",".join(f"{v:.4f}" for v in r))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/example_db.csv")
