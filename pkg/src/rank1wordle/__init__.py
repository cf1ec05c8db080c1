"""Wordle strategy via rank-one matrix approximation and angular ranking."""

from .embedding import Encoding, WordMatrix, build_matrix, encode_frequency, encode_positional
from .game import Color, Feedback, filter_candidates, is_consistent, score_guess
from .spectral import (
    DominantVector,
    RankedCandidate,
    angle_to,
    dominant_left_singular_vector,
    rank_candidates,
)
from .strategy import GameRecord, Strategy, StrategyKind, Suggestion, play_game, suggest
from .simulator import (
    SimulationConfig,
    SimulationSummary,
    derive_starting_words,
    run_simulation,
    write_report,
)
from .words import Lexicon, load_guesses, load_lexicon, load_solutions

__all__ = [
    "Color",
    "DominantVector",
    "Encoding",
    "Feedback",
    "GameRecord",
    "Lexicon",
    "RankedCandidate",
    "SimulationConfig",
    "SimulationSummary",
    "Strategy",
    "StrategyKind",
    "Suggestion",
    "WordMatrix",
    "angle_to",
    "build_matrix",
    "derive_starting_words",
    "dominant_left_singular_vector",
    "encode_frequency",
    "encode_positional",
    "filter_candidates",
    "is_consistent",
    "load_guesses",
    "load_lexicon",
    "load_solutions",
    "play_game",
    "rank_candidates",
    "run_simulation",
    "score_guess",
    "suggest",
    "write_report",
]
