"""Regenerate src/robust_scale/data/mad_factors.json.

MAD factors are calibrated with the package's own Monte-Carlo engine:
10**6 repetitions for every n in 2..100, 2*10**5 repetitions on a grid of
odd/even pairs in 101..1000 that feeds the large-n prediction equation.

    python scripts/build_mad_factors.py [--workers K]
"""

import argparse
import json
from pathlib import Path

from robust_scale.fitting import fit_inverse_poly
from robust_scale.montecarlo import SimulationConfig, run_study

SEED = 20220925
SMALL_REPS = 1_000_000
GRID_REPS = 200_000
GRID = sorted({m + d for m in range(110, 201, 10) for d in (-1, 0)}
              | {m + d for m in range(250, 1001, 50) for d in (-1, 0)})
TARGET = Path(__file__).resolve().parents[1] / "src/robust_scale/data/mad_factors.json"


def calibrate(ns, reps, workers):
    config = SimulationConfig(ns, reps, SEED, ("mad",), workers)
    rows = run_study(config, "factors", progress=lambda m: print(m, flush=True))
    return {r.n: {"factor": round(r.factor, 6), "se": float(f"{r.se:.3g}")} for r in rows}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    table = calibrate(range(2, 101), SMALL_REPS, args.workers)
    grid = calibrate(GRID, GRID_REPS, args.workers)
    points = [(n, row["factor"]) for n, row in grid.items()]
    odd = fit_inverse_poly(points, "odd")
    even = fit_inverse_poly(points, "even")
    asset = {
        "description": "Finite-sample MAD bias-correction factors, Monte-Carlo calibrated",
        "recipe": {
            "seed": SEED,
            "table_reps": SMALL_REPS,
            "grid_reps": GRID_REPS,
            "command": "scripts/build_mad_factors.py",
        },
        "table": {str(n): row for n, row in table.items()},
        "tail": {
            "alpha_odd": round(odd.alpha, 4),
            "beta_odd": round(odd.beta, 3),
            "alpha_even": round(even.alpha, 4),
            "beta_even": round(even.beta, 3),
        },
        "grid": {str(n): row for n, row in grid.items()},
    }
    TARGET.write_text(json.dumps(asset, indent=1) + "\n")
    print(f"wrote {TARGET}")


if __name__ == "__main__":
    main()
