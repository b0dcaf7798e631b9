#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cli/main_cli.py - Entry point for CLI interface
#

import sys
import os
import traceback
from typing import Optional, Sequence
from rich.console import Console

# Add the project root directory to the Python path
# This allows importing modules like 'core' from anywhere in the project
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from cli.commands import build_parser, make_context
from cli.logger import RichLogger
from core.config import EXIT_FAILURE, EXIT_OK, EXIT_VALIDATION
from core.errors import PinClassError
from core.settings import Settings
from core.translation_utils import _


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    """Parse argv, dispatch one verb and return the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION

    settings = settings or Settings()
    logger = RichLogger(use_colors=not args.nocolor if args.verb else True,
                        log_to_file=bool(getattr(args, "log", False) or settings.get("log_to_file")))

    if args.version:
        logger.print_version()
        return EXIT_OK
    if not args.verb:
        parser.print_usage(sys.stderr)
        return EXIT_VALIDATION

    try:
        context = make_context(args, settings, logger)
        return args.handler(args, context)
    except PinClassError as e:
        logger.log("red", f"{_('ERROR')}: {e}")
        return e.exit_code
    except KeyboardInterrupt:
        logger.log("yellow", _("Operation cancelled by user."))
        return EXIT_FAILURE


def main():
    """Main entry point of the CLI application"""

    console = Console(stderr=True)

    try:
        sys.exit(run())
    except KeyboardInterrupt:
        console.print("\n[yellow]" + _("Operation cancelled by user.") + "[/]")
        sys.exit(EXIT_FAILURE)
    except Exception as e:
        console.print("[red]" + _("Unhandled error: {0}").format(e) + "[/]")
        traceback.print_exc()
        sys.exit(EXIT_FAILURE)


if __name__ == "__main__":
    main()
