"""Wordle feedback scoring and candidate filtering.

Scoring uses the two-pass rule of the deployed game: exact-position
matches are marked green first and consume their secret letter; the
remaining guess positions are scanned left to right and marked yellow
while unconsumed copies of the letter remain, gray otherwise. A candidate
word is "consistent" with an observed (guess, feedback) pair when it
would have produced exactly that coloring as the secret.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .words import WORD_LENGTH


class Color(Enum):
    GREEN = "G"
    YELLOW = "Y"
    GRAY = "B"


@dataclass(frozen=True)
class Feedback:
    """The five per-position colors returned for one guess."""

    colors: tuple[Color, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != WORD_LENGTH:
            raise ValueError(f"feedback must have {WORD_LENGTH} colors")

    @classmethod
    def from_string(cls, pattern: str) -> "Feedback":
        """Parse the wire encoding, e.g. ``"GGBBY"`` (B = gray)."""
        try:
            return cls(tuple(Color(c) for c in pattern.upper()))
        except ValueError:
            raise ValueError(f"bad feedback string {pattern!r}, want 5 of G/Y/B") from None

    def to_string(self) -> str:
        return "".join(c.value for c in self.colors)

    @property
    def is_win(self) -> bool:
        return all(c is Color.GREEN for c in self.colors)


ALL_GREEN = "G" * WORD_LENGTH

# (guess word, feedback) pairs, oldest first
HistoryEntry = tuple[str, Feedback]


@lru_cache(maxsize=1 << 20)
def _pattern(secret: str, guess: str) -> str:
    greens = [g == s for g, s in zip(guess, secret)]
    remaining: dict[str, int] = {}
    for s, green in zip(secret, greens):
        if not green:
            remaining[s] = remaining.get(s, 0) + 1
    out = []
    for g, green in zip(guess, greens):
        if green:
            out.append("G")
        elif remaining.get(g, 0) > 0:
            out.append("Y")
            remaining[g] -= 1
        else:
            out.append("B")
    return "".join(out)


def score_guess(secret: str, guess: str) -> Feedback:
    """Color ``guess`` against ``secret`` under the two-pass rule."""
    return Feedback.from_string(_pattern(secret, guess))


def is_consistent(candidate: str, guess: str, observed: Feedback) -> bool:
    """Would ``candidate``, as the secret, have produced ``observed``?"""
    return _pattern(candidate, guess) == observed.to_string()


_VECTOR_THRESHOLD = 200


def filter_candidates(pool: Iterable[str], history: Sequence[HistoryEntry]) -> list[str]:
    """Words of ``pool``, in order, consistent with every history entry."""
    words = list(pool)
    if not history:
        return words
    if len(words) >= _VECTOR_THRESHOLD:
        return _filter_vectorized(words, history)
    patterns = [(guess, fb.to_string()) for guess, fb in history]
    return [w for w in words if all(_pattern(w, g) == p for g, p in patterns)]


def _filter_vectorized(words: list[str], history: Sequence[HistoryEntry]) -> list[str]:
    # Exact-feedback consistency decomposes into two conditions: the green
    # positions must match exactly (and non-green positions must differ),
    # and for each guessed letter the candidate's letter count must yield
    # the observed number of green+yellow credits, which the two-pass rule
    # fixes at min(count in guess, count in candidate).
    n = len(words)
    codes = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
    codes = codes.reshape(n, WORD_LENGTH) - ord("A")
    counts = np.zeros((n, 26), dtype=np.uint8)
    np.add.at(counts, (np.arange(n)[:, None], codes), 1)

    mask = np.ones(n, dtype=bool)
    for guess, feedback in history:
        pattern = feedback.to_string()
        for i, (g, c) in enumerate(zip(guess, pattern)):
            col = codes[:, i] == (ord(g) - ord("A"))
            mask &= col if c == "G" else ~col
        for letter in set(guess):
            in_guess = sum(1 for g in guess if g == letter)
            credited = sum(
                1 for g, c in zip(guess, pattern) if g == letter and c in "GY"
            )
            letter_counts = counts[:, ord(letter) - ord("A")]
            if credited == in_guess:
                mask &= letter_counts >= credited
            else:
                mask &= letter_counts == credited
    return [words[i] for i in np.nonzero(mask)[0]]
