"""Command-line interface for resolving and evaluating annotated discourses."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .constants import DEFAULT_HOOK, DEFAULT_WORKERS, EXIT_FAULT, EXIT_OK, EXIT_PARSE_ERROR
from .errors import FocusDrtError, ParseError
from .evaluation import evaluate, load_gold
from .hooks import HOOKS
from .loader import BUNDLED_CORPUS, load_discourse
from .logging import setup_logging
from .render import RENDER_MODES, format_bindings, render_drs, trace_to_jsonl
from .resolver import RuleConfig, resolve_discourse

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def rule_config(args: argparse.Namespace) -> RuleConfig:
    """Build the rule switches from parsed command-line flags."""
    return RuleConfig(
        recency=not args.no_recency,
        af_df_distinction=not args.no_af_df_distinction,
        hook=args.hook,
        relative_agent_main_first=args.relative_agent_main_first,
    )


def resolve_file(
    path: Path, cfg: RuleConfig, trace: bool = False, drs_mode: Optional[str] = None
) -> str:
    """Resolve one annotation file and return what `resolve` prints."""
    discourse = load_discourse(path)
    resolution = resolve_discourse(discourse, cfg)
    logger.debug(f"Settings: {cfg}")

    output = []
    if trace:
        output.append(trace_to_jsonl(resolution))
    if drs_mode is not None:
        output.append(render_drs(resolution.drs, drs_mode))
    if not output:
        output.append(format_bindings(resolution))
    return "".join(output)


def evaluate_gold(gold: Path, cfg: RuleConfig, workers: int, as_json: bool) -> str:
    """Score the resolver on a gold file and return the printed report."""
    corpus = load_gold(gold)
    logger.info(f"Evaluating {gold} with settings {cfg}")
    report = evaluate(corpus, cfg, workers)
    return report.to_json() if as_json else report.format_table()


def _add_rule_flags(parser: argparse.ArgumentParser, default_level: str) -> None:
    parser.add_argument(
        "--no-recency",
        action="store_true",
        help="Disable the recency rule for subject pronouns",
    )
    parser.add_argument(
        "--no-af-df-distinction",
        action="store_true",
        help="Use a single focus track for every pronoun",
    )
    parser.add_argument(
        "--relative-agent-main-first",
        action="store_true",
        help="Try main-clause referents first for agent pronouns in relative clauses",
    )
    parser.add_argument(
        "--hook",
        default=DEFAULT_HOOK,
        choices=sorted(HOOKS),
        help=f"Ratification hook (default: {DEFAULT_HOOK})",
    )
    parser.add_argument(
        "--log-level",
        default=default_level,
        choices=LOG_LEVELS,
        help=f"Set the logging level (default: {default_level})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="focusdrt",
        description=f"Resolve anaphora in annotated discourses (v{__version__})",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    resolve = commands.add_parser("resolve", help="Resolve the anaphors of one discourse")
    resolve.add_argument("file", type=Path, help="Annotated discourse (JSON)")
    resolve.add_argument(
        "--trace",
        action="store_true",
        help="Print the focus trace as JSON lines",
    )
    resolve.add_argument(
        "--drs",
        choices=RENDER_MODES,
        help="Print the final DRS as ASCII boxes or JSON",
    )
    _add_rule_flags(resolve, "WARNING")

    gold = commands.add_parser("eval", help="Score the resolver against gold bindings")
    gold.add_argument(
        "--gold",
        type=Path,
        default=BUNDLED_CORPUS / "gold.json",
        help="Gold file (default: the bundled example corpus)",
    )
    gold.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help=f"Items resolved in parallel (default: {DEFAULT_WORKERS})",
    )
    gold.add_argument(
        "--json",
        action="store_true",
        help="Print the report as JSON",
    )
    _add_rule_flags(gold, "INFO")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Command-line interface entry point."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    cfg = rule_config(args)

    try:
        if args.command == "resolve":
            output = resolve_file(args.file, cfg, args.trace, args.drs)
        else:
            output = evaluate_gold(args.gold, cfg, args.workers, args.json)
    except ParseError as e:
        logger.error(str(e))
        return EXIT_PARSE_ERROR
    except FocusDrtError as e:
        logger.error(f"Internal fault: {e}")
        return EXIT_FAULT
    except Exception:
        logger.exception("Unexpected failure")
        return EXIT_FAULT

    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
