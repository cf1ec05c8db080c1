"""Batch simulation over many secrets, aggregation, and JSON reports.

Per-game random streams are derived from (run seed, secret index), so a
run is byte-identical no matter how many worker processes execute it.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .embedding import Encoding
from .spectral import RankedCandidate, dominant_left_singular_vector, rank_candidates
from .embedding import build_matrix
from .strategy import (
    DEFAULT_MAX_GUESSES,
    GameRecord,
    Strategy,
    UnsolvableSecretError,
    play_game,
)
from .words import Lexicon, as_word


@dataclass(frozen=True)
class SimulationConfig:
    strategy: Strategy
    secrets: Lexicon
    pool: Lexicon
    first_guess: Optional[str] = None
    max_guesses: int = DEFAULT_MAX_GUESSES
    seed: int = 0
    parallelism: int = 1

    def __post_init__(self) -> None:
        if self.max_guesses < 1:
            raise ValueError("max_guesses must be at least 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.first_guess is not None:
            # any well-formed word is allowed as an opener, even when it is
            # not a member of the candidate pool (e.g. a guess-list word
            # opening a solutions-pool run)
            as_word(self.first_guess)


@dataclass(frozen=True)
class SimulationSummary:
    games: int
    wins: int
    win_rate: float
    avg_guesses_wins: float  # over winning games only
    histogram: tuple[int, ...]  # counts for 1..max_guesses, then losses


def _game_seed(seed: int, index: int) -> int:
    # splitmix64-style mix so per-game streams are decorrelated and
    # independent of scheduling
    x = (seed * 0x9E3779B97F4A7C15 + index + 1) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 31)


def _play_one(cfg: SimulationConfig, index: int, secret: str) -> GameRecord:
    rng = random.Random(_game_seed(cfg.seed, index))
    try:
        return play_game(
            cfg.strategy,
            secret,
            cfg.pool.words,
            first_guess=cfg.first_guess,
            max_guesses=cfg.max_guesses,
            rng=rng,
        )
    except UnsolvableSecretError:
        return GameRecord(
            secret=secret,
            guesses=(),
            feedbacks=(),
            solved=False,
            num_guesses=0,
            unsolvable=True,
        )


_worker_cfg: Optional[SimulationConfig] = None


def _init_worker(cfg: SimulationConfig) -> None:
    global _worker_cfg
    _worker_cfg = cfg


def _worker_play(args: tuple[int, str]) -> GameRecord:
    index, secret = args
    assert _worker_cfg is not None
    return _play_one(_worker_cfg, index, secret)


def summarize(records: Sequence[GameRecord], max_guesses: int) -> SimulationSummary:
    histogram = [0] * (max_guesses + 1)
    for rec in records:
        if rec.solved:
            histogram[rec.num_guesses - 1] += 1
        else:
            histogram[max_guesses] += 1
    wins = sum(histogram[:max_guesses])
    games = len(records)
    total = sum(rec.num_guesses for rec in records if rec.solved)
    return SimulationSummary(
        games=games,
        wins=wins,
        win_rate=wins / games if games else 0.0,
        avg_guesses_wins=total / wins if wins else 0.0,
        histogram=tuple(histogram),
    )


def run_simulation(cfg: SimulationConfig) -> tuple[SimulationSummary, list[GameRecord]]:
    """One game per secret, in secrets order."""
    if len(cfg.secrets) == 0:
        raise ValueError("secrets lexicon is empty")
    tasks = list(enumerate(cfg.secrets))
    if cfg.parallelism == 1:
        records = [_play_one(cfg, i, s) for i, s in tasks]
    else:
        with ProcessPoolExecutor(
            max_workers=cfg.parallelism, initializer=_init_worker, initargs=(cfg,)
        ) as pool:
            records = list(pool.map(_worker_play, tasks, chunksize=32))
    return summarize(records, cfg.max_guesses), records


def derive_starting_words(
    guesses: Lexicon, solutions: Lexicon, top_k: int = 10
) -> dict[tuple[str, Encoding], list[RankedCandidate]]:
    """Rank every word of each lexicon under each encoding.

    Returns the top-k ranked words for all four (lexicon, encoding)
    combinations, keyed by (source label, encoding).
    """
    table: dict[tuple[str, Encoding], list[RankedCandidate]] = {}
    for lexicon in (guesses, solutions):
        for encoding in (Encoding.FREQUENCY, Encoding.POSITIONAL):
            matrix = build_matrix(lexicon.words, encoding)
            u1 = dominant_left_singular_vector(matrix)
            ranked = rank_candidates(matrix, u1)
            table[(lexicon.source_label, encoding)] = ranked[:top_k]
    return table


def config_echo(cfg: SimulationConfig) -> dict:
    return {
        "strategy": cfg.strategy.kind.value,
        "encoding": cfg.strategy.encoding.value if cfg.strategy.encoding else None,
        "first_guess": cfg.first_guess,
        "pool_label": cfg.pool.source_label,
        "secrets_label": cfg.secrets.source_label,
        "seed": cfg.seed,
        "max_guesses": cfg.max_guesses,
    }


def report_document(
    summary: SimulationSummary,
    records: Sequence[GameRecord],
    config: dict,
    include_games: bool = True,
) -> dict:
    doc = {
        "config": config,
        "summary": {
            "games": summary.games,
            "wins": summary.wins,
            "win_rate": summary.win_rate,
            "avg_guesses_wins": summary.avg_guesses_wins,
            "histogram": list(summary.histogram),
        },
    }
    if include_games:
        doc["games"] = [
            {
                "secret": rec.secret,
                "guesses": list(rec.guesses),
                "feedbacks": [fb.to_string() for fb in rec.feedbacks],
                "solved": rec.solved,
                "ties_encountered": rec.ties_encountered,
            }
            for rec in records
        ]
    return doc


def write_report(
    summary: SimulationSummary,
    records: Sequence[GameRecord],
    path: str | Path,
    config: Optional[dict] = None,
    include_games: bool = True,
) -> None:
    doc = report_document(summary, records, config or {}, include_games=include_games)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
