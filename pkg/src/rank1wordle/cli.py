"""Command-line interface: batch simulation, one-shot suggestions,
ranking inspection, and the assistant service.

Angles are printed in degrees (one decimal, half-up rounding); all
internal computation stays in radians.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Optional

from .embedding import Encoding, build_matrix
from .game import Feedback, filter_candidates
from .simulator import SimulationConfig, config_echo, run_simulation, write_report
from .spectral import dominant_left_singular_vector, rank_candidates
from .strategy import Strategy, StrategyKind, suggest
from .words import Lexicon, as_word, load_guesses, load_lexicon, load_solutions

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_EMPTY_POOL = 3


def format_degrees(radians: float) -> str:
    degrees = Decimal(repr(math.degrees(radians)))
    return str(degrees.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def _load_named_lexicon(name: str) -> Lexicon:
    if name == "guesses":
        return load_guesses()
    if name == "solutions":
        return load_solutions()
    return load_lexicon(Path(name))


def _parse_encoding(name: str) -> Encoding:
    return Encoding(name)


def parse_history(text: str) -> list[tuple[str, Feedback]]:
    """Parse the wire format ``WORD:GYBBB,WORD:GGYBB`` (may be empty)."""
    entries: list[tuple[str, Feedback]] = []
    if not text.strip():
        return entries
    for part in text.split(","):
        try:
            word_text, fb_text = part.split(":")
        except ValueError:
            raise ValueError(f"bad history entry {part!r}, want WORD:FEEDBACK") from None
        entries.append((as_word(word_text), Feedback.from_string(fb_text)))
    return entries


def _cmd_simulate(args: argparse.Namespace) -> int:
    encoding = _parse_encoding(args.encoding)
    kind = StrategyKind(args.strategy)
    strategy = Strategy(
        kind=kind,
        encoding=encoding if kind is StrategyKind.RANK1_LSI else None,
        rng_seed=args.seed,
    )
    cfg = SimulationConfig(
        strategy=strategy,
        secrets=_load_named_lexicon(args.secrets),
        pool=_load_named_lexicon(args.pool),
        first_guess=as_word(args.first_guess) if args.first_guess else None,
        max_guesses=args.max_guesses,
        seed=args.seed,
        parallelism=args.jobs,
    )
    summary, records = run_simulation(cfg)
    if args.out:
        write_report(summary, records, args.out, config=config_echo(cfg))
    print(f"avg={summary.avg_guesses_wins:.2f} win={100.0 * summary.win_rate:.1f}%")
    return EXIT_OK


def _cmd_suggest(args: argparse.Namespace) -> int:
    history = parse_history(args.history)
    pool = _load_named_lexicon(args.pool)
    remaining = filter_candidates(pool.words, history)
    if not remaining:
        print("no candidates remain: contradictory history?", file=sys.stderr)
        return EXIT_EMPTY_POOL
    strategy = Strategy(
        kind=StrategyKind.RANK1_LSI,
        encoding=_parse_encoding(args.encoding),
        rng_seed=args.seed,
    )
    suggestion = suggest(strategy, remaining, random.Random(args.seed))
    print(f"{suggestion.word} {format_degrees(suggestion.theta)}° pool={len(remaining)}")
    return EXIT_OK


def _cmd_rank(args: argparse.Namespace) -> int:
    lexicon = load_lexicon(Path(args.words))
    matrix = build_matrix(lexicon.words, _parse_encoding(args.encoding))
    u1 = dominant_left_singular_vector(matrix)
    ranked = rank_candidates(matrix, u1)
    for rc in ranked[: args.top]:
        print(f"{rc.word} {format_degrees(rc.theta)}°")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        default_encoding=_parse_encoding(args.encoding),
        default_pool=args.pool,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rank1wordle")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="batch-run a strategy over many secrets")
    sim.add_argument("--strategy", choices=[k.value for k in StrategyKind], default="rank1-lsi")
    sim.add_argument("--encoding", choices=[e.value for e in Encoding], default="positional")
    sim.add_argument("--first-guess", default=None)
    sim.add_argument("--pool", default="guesses", help="guesses, solutions, or a file path")
    sim.add_argument("--secrets", default="solutions", help="solutions or a file path")
    sim.add_argument("--max-guesses", type=int, default=6)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--jobs", type=int, default=1)
    sim.add_argument("--out", default=None, help="write a JSON report here")
    sim.set_defaults(func=_cmd_simulate)

    sug = sub.add_parser("suggest", help="suggest the next guess for a game in progress")
    sug.add_argument("--history", default="", help='e.g. "SLATE:GYBBB,CRONY:BBGYB"')
    sug.add_argument("--encoding", choices=[e.value for e in Encoding], default="positional")
    sug.add_argument("--pool", default="guesses")
    sug.add_argument("--seed", type=int, default=0)
    sug.set_defaults(func=_cmd_suggest)

    rank = sub.add_parser("rank", help="rank a word list by angle to its dominant vector")
    rank.add_argument("--words", required=True)
    rank.add_argument("--encoding", choices=[e.value for e in Encoding], default="positional")
    rank.add_argument("--top", type=int, default=10)
    rank.set_defaults(func=_cmd_rank)

    serve = sub.add_parser("serve", help="run the assistant HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--pool", default="solutions")
    serve.add_argument("--encoding", choices=[e.value for e in Encoding], default="positional")
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
