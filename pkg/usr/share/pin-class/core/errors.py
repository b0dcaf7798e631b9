#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/errors.py - Exception hierarchy shared by library and CLI
#

from typing import Optional, Tuple

from .config import EXIT_BUDGET, EXIT_FAILURE, EXIT_VALIDATION
from .translation_utils import _


class PinClassError(Exception):
    """Base error; exit_code is what the CLI returns for it"""

    exit_code = EXIT_VALIDATION


class InvalidSpecError(PinClassError):
    """Unparseable word, polynomial or permutation text"""


class PinWordRejected(PinClassError):
    """A token sequence the pin automaton does not accept"""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair


class InsufficientPrefixError(PinClassError):
    def __init__(self, message: Optional[str] = None):
        super().__init__(message or _("insufficient prefix"))


class AmbiguousEncodingError(PinClassError):
    def __init__(self, message: Optional[str] = None):
        super().__init__(message or _("ambiguous first-letter encoding"))


class UnsupportedFamilyError(PinClassError):
    """Operation needs a word family with known recurrence structure"""


class NotIndecomposableError(PinClassError):
    pass


class NoRealRootError(PinClassError):
    pass


class NoPositiveRootError(PinClassError):
    """No positive real singularity: the series grows subexponentially"""


class UnknownEntryError(PinClassError):
    pass


class BudgetExceededError(PinClassError):
    exit_code = EXIT_BUDGET


class StabilizationError(PinClassError):
    exit_code = EXIT_BUDGET


class MethodDisagreementError(PinClassError):
    """Two independent counting methods produced different numbers"""

    exit_code = EXIT_FAILURE
