"""Print the top-ranked starting words for every (lexicon, encoding) pair.

Usage: python scripts/starting_words.py [--top K]
"""

import argparse
import math

from rank1wordle.simulator import derive_starting_words
from rank1wordle.words import load_guesses, load_solutions


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--top", type=int, default=10, help="words per table")
    args = parser.parse_args()

    guesses = load_guesses()
    solutions = load_solutions(guesses)
    tables = derive_starting_words(guesses, solutions, top_k=args.top)
    for (label, encoding), ranked in sorted(
        tables.items(), key=lambda item: (item[0][0], item[0][1].value)
    ):
        print(f"\n{label} / {encoding.value}")
        for rank, candidate in enumerate(ranked, start=1):
            degrees = math.degrees(candidate.theta)
            repeat_free = "" if len(set(candidate.word)) == 5 else "  (repeats)"
            print(f"  {rank:2d}. {candidate.word}  {degrees:7.3f} deg{repeat_free}")


if __name__ == "__main__":
    main()
