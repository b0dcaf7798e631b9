#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cli/logger.py - Logging and output management for the pin-class CLI
#

import os
from datetime import datetime
from typing import Optional
from rich.box import ROUNDED
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from core.config import APP_DESC, APP_NAME, APP_VERSION, LOG_DIR_BASE
from core.translation_utils import _


class RichLogger:
    """Results go to stdout unstyled; diagnostics go to stderr through Rich"""

    def __init__(self, use_colors: bool = True, log_to_file: bool = False):
        self.use_colors = use_colors
        self.log_file: Optional[str] = None
        self.console = Console(no_color=not use_colors, highlight=False)
        self.errors = Console(stderr=True, no_color=not use_colors, highlight=False)
        if log_to_file:
            self.setup_log_file()

    def setup_log_file(self):
        """Sets up the log file"""
        os.makedirs(LOG_DIR_BASE, exist_ok=True)
        self.log_file = os.path.join(LOG_DIR_BASE, "pin-class.log")

    def log(self, style: str, message: str):
        """Displays a diagnostic on stderr and saves it to the log"""
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")

        color_map = {
            "cyan": "bright_cyan",
            "blue_dark": "blue",
            "medium_blue": "blue",
            "light_blue": "cyan",
            "white": "white",
            "red": "red",
            "yellow": "yellow",
            "green": "green",
            "orange": "yellow",
            "purple": "magenta",
            "black": "black",
            "bold": "bold",
        }

        rich_style = color_map.get(style, "white")
        self.errors.print(Text(message), style=rich_style)

        # Save to log file (without colors)
        if self.log_file:
            with open(self.log_file, "a") as f:
                f.write(f"[{timestamp}] {message}\n")

    def emit(self, text: str):
        """Writes a result line to stdout exactly as given"""
        self.console.out(text, highlight=False)

    def print_version(self):
        version_text = Text()
        version_text.append(f"{APP_NAME} v{APP_VERSION}\n", style="bold cyan")
        version_text.append(f"{APP_DESC}\n\n", style="white")
        version_text.append(_("This program comes with absolutely NO warranty."), style="red")
        self.console.print(Panel(version_text, box=ROUNDED, border_style="blue", padding=(1, 2)))

    def display_summary(self, title: str, data: list):
        """Displays a formatted summary in a Rich table on stderr"""
        table = Table(show_header=False, box=ROUNDED, border_style="blue", padding=(0, 1))
        table.add_column(_("Field"), style="white")
        table.add_column(_("Value"), style="bright_cyan")

        for key, value in data:
            table.add_row(key, value)

        panel = Panel(
            table,
            title=title,
            box=ROUNDED,
            border_style="blue",
            padding=(1, 1),
            width=70,
        )

        self.errors.print(panel)
