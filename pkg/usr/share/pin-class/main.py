#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# main.py - Entry point for the pin-class application
#
# Copyright (c) 2025, BigCommunity Team
# All rights reserved.
#

"""
Main entry point for pin-class.
Everything runs through the command line interface.
"""

import sys
from core.translation_utils import _


def run_cli_interface():
    """Run the command line interface."""
    try:
        from cli.main_cli import main as cli_main
    except ImportError as e:
        print(_("Error: Failed to import CLI components: {0}").format(e), file=sys.stderr)
        sys.exit(1)
    cli_main()


def main():
    """Main application entry point."""
    run_cli_interface()


if __name__ == "__main__":
    main()
