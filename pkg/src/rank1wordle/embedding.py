"""Nonnegative vector encodings of words and column-per-word matrices.

Two encodings: a 26-dim letter-count vector (anagrams collide) and a
130-dim 0/1 vector with one 26-letter block per word position (injective
over 5-letter words). Row index for letter i (1-based) at position j is
26*(j-1) + i in 1-based terms; the arrays below are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .words import WORD_LENGTH

ALPHABET_SIZE = 26


class Encoding(Enum):
    FREQUENCY = "frequency"
    POSITIONAL = "positional"

    @property
    def dim(self) -> int:
        return ALPHABET_SIZE if self is Encoding.FREQUENCY else ALPHABET_SIZE * WORD_LENGTH


class EmptyPoolError(ValueError):
    """No words to encode; the caller filtered everything out."""


def encode_frequency(word: str) -> np.ndarray:
    """26-dim letter-count vector; entries sum to 5."""
    v = np.zeros(ALPHABET_SIZE)
    for ch in word:
        v[ord(ch) - ord("A")] += 1.0
    return v


def encode_positional(word: str) -> np.ndarray:
    """130-dim 0/1 vector; exactly one 1 per 26-row positional block."""
    v = np.zeros(ALPHABET_SIZE * WORD_LENGTH)
    for j, ch in enumerate(word):
        v[ALPHABET_SIZE * j + (ord(ch) - ord("A"))] = 1.0
    return v


def encode(word: str, encoding: Encoding) -> np.ndarray:
    if encoding is Encoding.FREQUENCY:
        return encode_frequency(word)
    return encode_positional(word)


@dataclass(frozen=True)
class WordMatrix:
    """Column-per-word nonnegative matrix; column order is input order."""

    array: np.ndarray  # shape (dim, n)
    words: tuple[str, ...]
    encoding: Encoding

    @property
    def dim(self) -> int:
        return self.array.shape[0]

    @property
    def n_words(self) -> int:
        return self.array.shape[1]

    def column(self, k: int) -> np.ndarray:
        return self.array[:, k]


def build_matrix(words: Sequence[str], encoding: Encoding) -> WordMatrix:
    """Assemble the dim x n matrix whose k-th column encodes words[k]."""
    n = len(words)
    if n == 0:
        raise EmptyPoolError("cannot build a matrix from an empty word list")
    codes = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
    codes = codes.reshape(n, WORD_LENGTH) - ord("A")
    cols = np.repeat(np.arange(n), WORD_LENGTH)
    array = np.zeros((encoding.dim, n))
    if encoding is Encoding.POSITIONAL:
        rows = (ALPHABET_SIZE * np.arange(WORD_LENGTH)[None, :] + codes).ravel()
        array[rows, cols] = 1.0
    else:
        np.add.at(array, (codes.ravel(), cols), 1.0)
    return WordMatrix(array=array, words=tuple(words), encoding=encoding)
