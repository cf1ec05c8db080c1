"""Word validation and lexicon loading.

Two word lists ship with the package: the full list of acceptable guesses
and the list of published solutions. Both are plain text, one five-letter
word per line; file order is preserved because matrix column order and
tie-breaking must be reproducible run to run.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator

WORD_LENGTH = 5

DATA_DIR_ENV = "RANK1WORDLE_DATA_DIR"

GUESSES_FILENAME = "guesses.txt"
SOLUTIONS_FILENAME = "solutions.txt"


class WordFormatError(ValueError):
    """A token is not exactly five letters A-Z."""


class DuplicateWordError(ValueError):
    """A word list contains the same word twice."""


def as_word(text: str) -> str:
    """Normalize ``text`` to an uppercase 5-letter word or raise WordFormatError."""
    word = text.strip().upper()
    if len(word) != WORD_LENGTH or not word.isascii() or not word.isalpha():
        raise WordFormatError(f"not a 5-letter A-Z word: {text!r}")
    return word


@dataclass(frozen=True)
class Lexicon:
    """An ordered, duplicate-free word list. Immutable after construction."""

    words: tuple[str, ...]
    source_label: str = ""
    _index: frozenset[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", frozenset(self.words))

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, i: int) -> str:
        return self.words[i]


def contains(lexicon: Lexicon, word: str) -> bool:
    return word in lexicon


def load_lexicon(path: str | os.PathLike, source_label: str | None = None) -> Lexicon:
    """Load a word list from ``path``.

    One word per line, LF or CRLF, lowercase permitted on disk. The whole
    file is rejected on the first invalid or duplicated token, with the
    offending line number in the error message.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    words: list[str] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            word = as_word(line)
        except WordFormatError as exc:
            raise WordFormatError(f"{path}:{lineno}: {exc}") from None
        if word in seen:
            raise DuplicateWordError(f"{path}:{lineno}: duplicate word {word}")
        seen.add(word)
        words.append(word)
    label = source_label if source_label is not None else path.stem
    return Lexicon(words=tuple(words), source_label=label)


def _data_path(filename: str) -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override) / filename
    return Path(str(resources.files("rank1wordle").joinpath("data", filename)))


def load_guesses() -> Lexicon:
    """The bundled acceptable-guess list."""
    return load_lexicon(_data_path(GUESSES_FILENAME), source_label="guesses")


def load_solutions(guesses: Lexicon | None = None) -> Lexicon:
    """The bundled published-solutions list.

    Warns (does not fail) if any solution is missing from the guess list,
    so a drifted pair of source files is still usable.
    """
    solutions = load_lexicon(_data_path(SOLUTIONS_FILENAME), source_label="solutions")
    check_against = guesses if guesses is not None else load_guesses()
    missing = [w for w in solutions if w not in check_against]
    if missing:
        warnings.warn(
            f"{len(missing)} solution words are not in the guess list "
            f"(first: {missing[0]})",
            stacklevel=2,
        )
    return solutions
