#!/usr/bin/env python3
"""Generate the bundled season-style election instances.

Each instance is a racing season: drivers are candidates, every race is a
complete ranking. Finishing order follows car pace plus driver form plus
per-race noise; a retirement drops a driver to the back of that race.
Output uses the `list` format (one vote per line, best first).
"""
import argparse
import pathlib

import numpy as np

SIZES = [6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20]


def season(rng, n_drivers, n_races):
    teams = (n_drivers + 1) // 2
    car = np.sort(rng.normal(0.0, 1.0, teams))
    pace = np.array([car[d // 2] for d in range(n_drivers)]) + rng.normal(0.0, 0.3, n_drivers)
    labels = [f"D{d:02d}" for d in range(n_drivers)]
    races = []
    for _ in range(n_races):
        perf = pace + rng.normal(0.0, 1.0, n_drivers)
        retired = rng.random(n_drivers) < 0.2
        perf[retired] += 50.0 + rng.random(retired.sum())
        races.append([labels[d] for d in np.argsort(perf)])
    return races


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/seasons")
    ap.add_argument("--seed", type=int, default=1950)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    for i, n in enumerate(SIZES):
        races = season(rng, n, int(rng.integers(10, 18)))
        path = out / f"season_{i:02d}_n{n:02d}.txt"
        with path.open("w") as f:
            f.write(f"# synthetic season {i}: {n} drivers, {len(races)} races\n")
            for r in races:
                f.write(",".join(r) + "\n")


if __name__ == "__main__":
    main()
