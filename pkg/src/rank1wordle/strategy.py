"""Guess selection policies and the hard-mode solve loop.

The rank-one policy encodes the current candidate pool as a matrix,
computes the dominant left singular vector, and guesses the pool word
whose column makes the smallest angle with it; exact ties (within 1e-9
radians) are broken uniformly at random. The random policy picks
uniformly from the pool and serves as the uninformed control.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .embedding import Encoding, EmptyPoolError, build_matrix
from .game import Feedback, filter_candidates, score_guess
from .spectral import dominant_left_singular_vector, rank_candidates

TIE_TOLERANCE = 1e-9  # radians
DEFAULT_MAX_GUESSES = 6


class StrategyKind(Enum):
    RANK1_LSI = "rank1-lsi"
    RANDOM = "random"


@dataclass(frozen=True)
class Strategy:
    kind: StrategyKind
    encoding: Optional[Encoding] = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if (self.kind is StrategyKind.RANK1_LSI) != (self.encoding is not None):
            raise ValueError("encoding must be given exactly for the rank1-lsi strategy")


@dataclass(frozen=True)
class Suggestion:
    word: str
    theta: Optional[float]  # radians; None for the random strategy
    pool_size: int
    tied_count: int


@dataclass(frozen=True)
class GameRecord:
    secret: str
    guesses: tuple[str, ...]
    feedbacks: tuple[Feedback, ...]
    solved: bool
    num_guesses: int
    ties_encountered: int = 0
    unsolvable: bool = False


class UnsolvableSecretError(ValueError):
    """The secret is not in the starting pool, so filtering can never find it."""


def suggest(strategy: Strategy, pool: Sequence[str], rng: random.Random) -> Suggestion:
    """Pick the next guess from ``pool`` under ``strategy``."""
    if len(pool) == 0:
        raise EmptyPoolError("cannot suggest from an empty pool")
    if len(pool) == 1:
        theta = 0.0 if strategy.kind is StrategyKind.RANK1_LSI else None
        return Suggestion(word=pool[0], theta=theta, pool_size=1, tied_count=1)

    if strategy.kind is StrategyKind.RANDOM:
        return Suggestion(
            word=pool[rng.randrange(len(pool))],
            theta=None,
            pool_size=len(pool),
            tied_count=len(pool),
        )

    matrix = build_matrix(pool, strategy.encoding)
    u1 = dominant_left_singular_vector(matrix)
    ranked = rank_candidates(matrix, u1)
    best_theta = ranked[0].theta
    tied = [rc for rc in ranked if rc.theta <= best_theta + TIE_TOLERANCE]
    pick = tied[0] if len(tied) == 1 else tied[rng.randrange(len(tied))]
    return Suggestion(
        word=pick.word,
        theta=pick.theta,
        pool_size=len(pool),
        tied_count=len(tied),
    )


def play_game(
    strategy: Strategy,
    secret: str,
    pool0: Sequence[str],
    first_guess: Optional[str] = None,
    max_guesses: int = DEFAULT_MAX_GUESSES,
    rng: Optional[random.Random] = None,
) -> GameRecord:
    """Play one full hard-mode game against ``secret``.

    The candidate pool starts at ``pool0`` and is consistency-filtered after
    every guess, so each suggestion automatically honors all revealed
    information. Raises UnsolvableSecretError when the secret is not in the
    starting pool.
    """
    if secret not in set(pool0):
        raise UnsolvableSecretError(f"secret {secret} is not in the starting pool")
    if rng is None:
        rng = random.Random(strategy.rng_seed)

    pool = list(pool0)
    guesses: list[str] = []
    feedbacks: list[Feedback] = []
    ties = 0
    solved = False
    for turn in range(1, max_guesses + 1):
        if turn == 1 and first_guess is not None:
            guess = first_guess
        else:
            suggestion = suggest(strategy, pool, rng)
            guess = suggestion.word
            if suggestion.tied_count > 1:
                ties += 1
        feedback = score_guess(secret, guess)
        guesses.append(guess)
        feedbacks.append(feedback)
        if feedback.is_win:
            solved = True
            break
        pool = filter_candidates(pool, [(guess, feedback)])

    return GameRecord(
        secret=secret,
        guesses=tuple(guesses),
        feedbacks=tuple(feedbacks),
        solved=solved,
        num_guesses=len(guesses),
        ties_encountered=ties,
    )
