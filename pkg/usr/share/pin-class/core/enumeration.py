#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/enumeration.py - Brute-force counts of pin classes and their indecomposables
#

"""
Exact counting of the gridded permutations contained in an infinite pin
permutation, by reading a prefix of its pin word one letter at a time.

Each pin is extreme in its own direction and sits just inside the pin before it,
so the pattern formed by a chosen set of pins only depends on the pattern formed
so far and on whether the previous pin was chosen.  The enumeration keeps that
pair as its state and never builds the pin permutation itself.
"""

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Sequence, Tuple

from .config import DEFAULT_PREFIX_BUDGET
from .errors import (
    BudgetExceededError,
    InvalidSpecError,
    MethodDisagreementError,
    StabilizationError,
    UnsupportedFamilyError,
)
from .gridded import GriddedPermutation, is_box_indecomposable
from .pinwords import Direction, PinLetter, phi_base
from .translation_utils import _
from .words import EventuallyPeriodic, ExplicitPrefix, Substituted, WordSpec, factor_complexity, recurrent_complexity

# (values by position, cut_x, cut_y)
Pattern = Tuple[Tuple[int, ...], int, int]

EMPTY_PATTERN: Pattern = ((), 0, 0)


class Provenance(Enum):
    BRUTE_FORCE = "brute_force"
    FACTOR_FORMULA = "factor_formula"


@dataclass(frozen=True)
class CountSequence:
    """Counts for lengths 1..len(values)"""

    values: Tuple[int, ...]
    provenance: Provenance

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        """Count at length n (1-based)"""
        return self.values[n - 1]


@dataclass(frozen=True)
class ClassProfile:
    word: str
    counts: CountSequence
    indec_counts: CountSequence
    interior_indec_counts: Optional[CountSequence] = None

    def __post_init__(self):
        for n, (indec, total) in enumerate(zip(self.indec_counts.values, self.counts.values), start=1):
            if indec > total:
                raise InvalidSpecError(_("More indecomposables than permutations at length {0}").format(n))
        if self.interior_indec_counts is not None:
            pairs = zip(self.interior_indec_counts.values, self.indec_counts.values)
            for n, (interior, indec) in enumerate(pairs, start=1):
                if interior > indec:
                    raise InvalidSpecError(_("Interior exceeds class indecomposables at length {0}").format(n))


# ---------------------------------------------------------------------------
# Pattern frontier
# ---------------------------------------------------------------------------

def _insert(pattern: Pattern, position: int, value: int, dx: int, dy: int) -> Pattern:
    values, cut_x, cut_y = pattern
    shifted = [v + 1 if v >= value else v for v in values]
    shifted.insert(position, value)
    return tuple(shifted), cut_x + dx, cut_y + dy


def extend_pattern(pattern: Pattern, item: PinLetter, previous_taken: bool) -> Pattern:
    """Add the pin item to a pattern; previous_taken says whether the pin before it is in the pattern"""
    n = len(pattern[0])
    d, s = item.direction, item.memory
    dx = dy = 0
    if d.horizontal:
        if d is Direction.R:
            position = n
        else:
            position, dx = 0, 1
        if s is Direction.U:
            value = n if previous_taken else n + 1
        else:
            value, dy = (2 if previous_taken else 1), 1
    else:
        if d is Direction.U:
            value = n + 1
        else:
            value, dy = 1, 1
        if s is Direction.R:
            position = n - 1 if previous_taken else n
        else:
            position, dx = (1 if previous_taken else 0), 1
    return _insert(pattern, position, value, dx, dy)


class PatternFrontier:
    """Distinct patterns of a growing pin-word prefix, up to length max_len"""

    def __init__(self, max_len: int):
        self.max_len = max_len
        self.states = {(EMPTY_PATTERN, False)}
        self.found: Dict[int, set] = {n: set() for n in range(1, max_len + 1)}
        self.letters_read = 0

    def feed(self, item: PinLetter):
        grown = set()
        for pattern, previous_taken in self.states:
            grown.add((pattern, False))
            if len(pattern[0]) < self.max_len:
                extended = extend_pattern(pattern, item, previous_taken)
                self.found[len(extended[0])].add(extended)
                if len(extended[0]) < self.max_len:
                    grown.add((extended, True))
        self.states = grown
        self.letters_read += 1

    def counts(self) -> list[int]:
        return [len(self.found[n]) for n in range(1, self.max_len + 1)]


def _pin_periodic_form(spec: WordSpec) -> Optional[EventuallyPeriodic]:
    if isinstance(spec, EventuallyPeriodic):
        return spec
    if isinstance(spec, Substituted):
        return spec.periodic_form()
    return None


def _read_prefix(
    spec: WordSpec,
    max_len: int,
    prefix_length: Optional[int],
    prefix_budget: int,
    logger=None,
) -> PatternFrontier:
    frontier = PatternFrontier(max_len)
    if prefix_length is not None or isinstance(spec, ExplicitPrefix):
        if prefix_length is None:
            prefix_length = len(spec.word)
            if logger:
                logger.log("yellow", _("Counting the literal prefix only; nothing certifies the tail"))
        if prefix_length > prefix_budget:
            raise BudgetExceededError(
                _("Prefix of {0} letters exceeds the budget of {1}").format(prefix_length, prefix_budget)
            )
        for item in spec.prefix(prefix_length):
            frontier.feed(item)
        return frontier

    periodic = _pin_periodic_form(spec)
    if periodic is None:
        raise UnsupportedFamilyError(
            _("{0} is not eventually periodic; give an explicit prefix length").format(spec)
        )
    head, period = len(periodic.prefix_word), len(periodic.cycle)
    multiplier = max_len + 2
    length = head + multiplier * period
    if length + period > prefix_budget:
        raise BudgetExceededError(
            _("Stabilization needs {0} letters, budget is {1}").format(length + period, prefix_budget)
        )
    word = periodic.prefix(prefix_budget)
    while True:
        while frontier.letters_read < length:
            frontier.feed(word[frontier.letters_read])
        before = frontier.counts()
        while frontier.letters_read < length + period:
            frontier.feed(word[frontier.letters_read])
        after = frontier.counts()
        if before == after:
            if logger:
                logger.log("green", _("Counts stable from {0} letters").format(length))
            return frontier
        multiplier *= 2
        length = head + multiplier * period
        if logger:
            logger.log("yellow", _("Counts still growing; extending prefix to {0} letters").format(length))
        if length + period > prefix_budget:
            raise StabilizationError(
                _("Counts did not stabilize within {0} letters; raise the prefix budget").format(prefix_budget)
            )


def _validate_max_len(max_len: int):
    if max_len < 1:
        raise InvalidSpecError(_("Maximum length must be at least 1"))


def class_patterns(
    spec: WordSpec,
    max_len: int,
    prefix_length: Optional[int] = None,
    prefix_budget: int = DEFAULT_PREFIX_BUDGET,
    logger=None,
) -> Dict[int, set]:
    """Distinct gridded patterns of each length 1..max_len"""
    _validate_max_len(max_len)
    frontier = _read_prefix(spec, max_len, prefix_length, prefix_budget, logger)
    return {
        n: {GriddedPermutation(values, cut_x, cut_y) for values, cut_x, cut_y in patterns}
        for n, patterns in frontier.found.items()
    }


def class_counts(
    spec: WordSpec,
    max_len: int,
    prefix_length: Optional[int] = None,
    prefix_budget: int = DEFAULT_PREFIX_BUDGET,
    logger=None,
) -> CountSequence:
    _validate_max_len(max_len)
    frontier = _read_prefix(spec, max_len, prefix_length, prefix_budget, logger)
    return CountSequence(tuple(frontier.counts()), Provenance.BRUTE_FORCE)


# ---------------------------------------------------------------------------
# Indecomposables
# ---------------------------------------------------------------------------

def factor_formula_counts(complexity: Callable[[int], int], max_len: int) -> list[int]:
    """
    Indecomposables of each length of a two-quadrant class, from the complexity c
    of the binary word behind it: 2, 2, 2c(2)-2, then c(k)+c(k+1) at length 2k
    and 2c(k+1) at length 2k+1.
    """
    counts = []
    for n in range(1, max_len + 1):
        if n <= 2:
            counts.append(2)
        elif n == 3:
            counts.append(2 * complexity(2) - 2)
        elif n % 2 == 0:
            k = n // 2
            counts.append(complexity(k) + complexity(k + 1))
        else:
            counts.append(2 * complexity(n // 2 + 1))
    return counts


def _two_quadrant_base(spec: WordSpec) -> WordSpec:
    base = phi_base(spec)
    if base is None:
        raise UnsupportedFamilyError(_("The factor formula needs a word of the form phi(b)"))
    try:
        both_recur = recurrent_complexity(base, 1) == 2
    except UnsupportedFamilyError:
        both_recur = factor_complexity(base, 1) == 2
    if not both_recur:
        raise UnsupportedFamilyError(_("{0} does not use both letters infinitely often").format(base))
    return base


def indecomposable_counts(
    spec: WordSpec,
    max_len: int,
    method: str = "brute",
    prefix_length: Optional[int] = None,
    prefix_budget: int = DEFAULT_PREFIX_BUDGET,
    logger=None,
) -> CountSequence:
    """Box-indecomposables by length; method is brute, formula or both (which checks agreement)"""
    _validate_max_len(max_len)
    if method not in ("brute", "formula", "both"):
        raise InvalidSpecError(_("Unknown counting method {0}").format(method))

    formula = None
    if method in ("formula", "both"):
        base = _two_quadrant_base(spec)
        formula = CountSequence(
            tuple(factor_formula_counts(lambda k: factor_complexity(base, k), max_len)),
            Provenance.FACTOR_FORMULA,
        )
        if method == "formula":
            return formula

    patterns = class_patterns(spec, max_len, prefix_length, prefix_budget, logger)
    brute = CountSequence(
        tuple(sum(1 for p in patterns[n] if is_box_indecomposable(p)) for n in range(1, max_len + 1)),
        Provenance.BRUTE_FORCE,
    )
    if formula is not None and formula.values != brute.values:
        raise MethodDisagreementError(
            _("Brute force {0} and factor formula {1} disagree").format(list(brute.values), list(formula.values))
        )
    return brute


def interior_indecomposable_counts(spec: WordSpec, max_len: int) -> CountSequence:
    """Factor formula over recurrent factors: the indecomposables of the box interior"""
    _validate_max_len(max_len)
    base = _two_quadrant_base(spec)
    return CountSequence(
        tuple(factor_formula_counts(lambda k: recurrent_complexity(base, k), max_len)),
        Provenance.FACTOR_FORMULA,
    )


def profile(
    spec: WordSpec,
    max_len: int,
    prefix_length: Optional[int] = None,
    prefix_budget: int = DEFAULT_PREFIX_BUDGET,
    logger=None,
) -> ClassProfile:
    _validate_max_len(max_len)
    patterns = class_patterns(spec, max_len, prefix_length, prefix_budget, logger)
    counts = CountSequence(tuple(len(patterns[n]) for n in range(1, max_len + 1)), Provenance.BRUTE_FORCE)
    indec = CountSequence(
        tuple(sum(1 for p in patterns[n] if is_box_indecomposable(p)) for n in range(1, max_len + 1)),
        Provenance.BRUTE_FORCE,
    )
    interior = None
    if phi_base(spec) is not None:
        try:
            interior = interior_indecomposable_counts(spec, max_len)
        except UnsupportedFamilyError:
            interior = None
    return ClassProfile(str(spec), counts, indec, interior)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def to_json_lines(sequence: CountSequence) -> str:
    lines = [
        json.dumps({"length": n, "count": count, "provenance": sequence.provenance.value})
        for n, count in enumerate(sequence.values, start=1)
    ]
    return "\n".join(lines) + "\n"


def to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()
