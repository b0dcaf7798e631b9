#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/config.py - Configuration constants for pin-class
#
# Copyright (c) 2025, BigCommunity Team
# All rights reserved.
#

from fractions import Fraction

# Import translation function
from .translation_utils import _

# Script version
APP_VERSION = "1.0.0"
APP_NAME = _("PIN CLASS")
APP_DESC = _("Pin permutation classes: pin words, brute-force enumeration, exact generating functions and certified growth rates.")

# Settings file (user overrides of the defaults below)
CONFIG_DIR = "~/.config/pin-class"
CONFIG_FILE_NAME = "config.json"

# Environment variable overriding the enumeration prefix budget
BUDGET_ENV_VAR = "PINCLASS_BUDGET"

# Log directory
LOG_DIR_BASE = "/tmp/pin-class"

# Numeric defaults
DEFAULT_TOLERANCE = Fraction(1, 10**9)
DEFAULT_MAX_LEN = 8
MAX_LEN_LIMIT = 12
DEFAULT_PREFIX_BUDGET = 256
DEFAULT_VERIFY_MAX_LEN = 7
SERIES_LIMIT = 10**6

# Sturmian words are scanned on a prefix of max(STURMIAN_MIN_PREFIX, STURMIAN_PREFIX_FACTOR * n)
STURMIAN_MIN_PREFIX = 10000
STURMIAN_PREFIX_FACTOR = 50

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3

# Output formats
VALID_FORMATS = ["text", "json", "csv", "svg"]
