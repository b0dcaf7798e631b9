#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/settings.py - User settings management
#
# Copyright (c) 2025, BigCommunity Team
# All rights reserved.
#

import json
import os
from typing import Optional

from rich.console import Console

from .config import (
    BUDGET_ENV_VAR,
    CONFIG_DIR,
    CONFIG_FILE_NAME,
    DEFAULT_MAX_LEN,
    DEFAULT_PREFIX_BUDGET,
    DEFAULT_TOLERANCE,
    DEFAULT_VERIFY_MAX_LEN,
)
from .translation_utils import _


class Settings:
    """Manages user settings with persistent storage"""

    def __init__(self, config_dir: Optional[str] = None, environ: Optional[dict] = None):
        self.config_dir = os.path.expanduser(config_dir or CONFIG_DIR)
        self.config_file = os.path.join(self.config_dir, CONFIG_FILE_NAME)
        self.environ = os.environ if environ is None else environ
        self.settings = self.load()

    def load(self):
        """Load settings from file or return defaults"""
        settings = self.get_defaults()
        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    # Merge with defaults to ensure new keys exist
                    settings.update(json.load(f))
            except (OSError, ValueError):
                pass

        budget = self.environ.get(BUDGET_ENV_VAR)
        if budget:
            try:
                settings["prefix_budget"] = int(budget)
            except ValueError:
                Console(stderr=True, highlight=False).print(
                    _("Ignoring non-integer {0}={1}").format(BUDGET_ENV_VAR, budget), style="yellow", markup=False
                )

        return settings

    def get_defaults(self):
        """Return default settings"""
        return {
            # === ENUMERATION ===
            # Longest pattern length enumerated by brute force
            "max_len": DEFAULT_MAX_LEN,

            # Maximum number of pin letters read from a word during enumeration
            "prefix_budget": DEFAULT_PREFIX_BUDGET,

            # Pattern length used when catalog entries are checked by brute force
            "verify_max_len": DEFAULT_VERIFY_MAX_LEN,

            # === ROOTS ===
            # Absolute tolerance of reported roots and growth rates
            "tolerance": str(DEFAULT_TOLERANCE),

            # === OUTPUT ===
            "output_format": "text",

            # Append diagnostics to a log file under /tmp/pin-class
            "log_to_file": False,
        }

    def save(self):
        """Save settings to file"""
        try:
            os.makedirs(self.config_dir, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.settings, f, indent=2)
            return True
        except OSError as e:
            Console(stderr=True, highlight=False).print(
                _("Error saving settings: {0}").format(e), style="red", markup=False
            )
            return False

    def get(self, key, default=None):
        """Get setting value"""
        return self.settings.get(key, default)

    def set(self, key, value):
        """Set setting value and save"""
        self.settings[key] = value
        self.save()

    def reset(self):
        """Reset to defaults"""
        self.settings = self.get_defaults()
        self.save()
