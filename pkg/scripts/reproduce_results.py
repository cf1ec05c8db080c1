"""Run the full benchmark grid and write one JSON report per cell.

For each starting word and pool configuration this simulates every solution
word once with the positional rank-one strategy, then adds the random-guess
control. Reports land in --out (default reports/).

Usage: python scripts/reproduce_results.py [--out DIR] [--seeds N] [--jobs N]
"""

import argparse
import time
from pathlib import Path

from rank1wordle.embedding import Encoding
from rank1wordle.simulator import (
    SimulationConfig,
    config_echo,
    run_simulation,
    write_report,
)
from rank1wordle.strategy import Strategy, StrategyKind
from rank1wordle.words import load_guesses, load_solutions

STARTING_WORDS = ("SOARE", "ALERT", "SORES", "BARES", "SLATE")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("reports"))
    parser.add_argument("--seeds", type=int, default=1, help="seeds per cell")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    args = parser.parse_args()

    guesses = load_guesses()
    solutions = load_solutions(guesses)
    args.out.mkdir(parents=True, exist_ok=True)

    runs = [
        (word, pool, Strategy(kind=StrategyKind.RANK1_LSI, encoding=Encoding.POSITIONAL))
        for word in STARTING_WORDS
        for pool in (guesses, solutions)
    ]
    runs += [(None, pool, Strategy(kind=StrategyKind.RANDOM)) for pool in (guesses, solutions)]

    for word, pool, strategy in runs:
        for seed in range(args.seeds):
            cfg = SimulationConfig(
                strategy=strategy,
                secrets=solutions,
                pool=pool,
                first_guess=word,
                seed=seed,
                parallelism=args.jobs,
            )
            started = time.perf_counter()
            summary, records = run_simulation(cfg)
            elapsed = time.perf_counter() - started
            name = f"{strategy.kind.value}_{word or 'none'}_{pool.source_label}_s{seed}.json"
            write_report(summary, records, args.out / name, config=config_echo(cfg))
            print(
                f"{name}: avg={summary.avg_guesses_wins:.3f} "
                f"win={summary.win_rate:.2%} ({elapsed:.1f}s)"
            )


if __name__ == "__main__":
    main()
