"""Main entry point for the spinpoly command line."""
# Standard library imports
import argparse
import logging
import os
import sys
from typing import Optional, Sequence

# Third party imports
from dotenv import load_dotenv

# Local imports
from src.commands import EXIT_USAGE, CommandHandler
from src.config import ANALYSES, LOGGING_CONFIG, load_run_config
from src.errors import ConfigError

logger = logging.getLogger(__name__)


def configure_logging():
    """Install the root handlers: stderr always, a log file when configured"""
    level_name = os.getenv(LOGGING_CONFIG['level_env'], LOGGING_CONFIG['level']).upper()
    handlers = [logging.StreamHandler()]
    log_file = os.getenv(LOGGING_CONFIG['file_env'], LOGGING_CONFIG['file'] or '')
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        format=LOGGING_CONFIG['format'],
        handlers=handlers,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    """Subcommands and the shared flags"""
    parser = argparse.ArgumentParser(
        prog='spinpoly',
        description='Polymer-expansion analysis of bounded integer spin systems',
    )
    parser.add_argument('analysis', choices=ANALYSES)
    parser.add_argument('--config', help='dotted-key run config file')
    parser.add_argument('--out', help='output path (stdout when omitted)')
    parser.add_argument('--format', choices=('csv', 'json'))
    parser.add_argument('--beta-max', type=float)
    parser.add_argument('--grid-step', type=float)
    parser.add_argument('--order', type=int)
    parser.add_argument('--seed', type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, load the run config and dispatch the analysis"""
    load_dotenv()
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    overrides = {
        'out': args.out,
        'format': args.format,
        'beta_max': args.beta_max,
        'grid_step': args.grid_step,
        'order': args.order,
        'seed': args.seed,
    }
    try:
        config = load_run_config(args.config, args.analysis, overrides)
    except ConfigError as e:
        logger.error("Invalid configuration: %s", e)
        return EXIT_USAGE

    return CommandHandler(config).handle_command()


if __name__ == '__main__':
    sys.exit(main())
