#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/words.py - Finitely described infinite words and their complexity
#

"""
Infinite words given by a finite description, over an opaque alphabet.

Four families are understood exactly: eventually periodic words, characteristic
Sturmian words built from a directive sequence, the word b* = 10 110 1110 ...
and uniform substitution images of any of these.  Literal prefixes exist for
diagnostics but carry no knowledge of the tail.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import FrozenSet, Hashable, Optional, Tuple

from .config import STURMIAN_MIN_PREFIX, STURMIAN_PREFIX_FACTOR
from .errors import InsufficientPrefixError, InvalidSpecError, UnsupportedFamilyError
from .translation_utils import _

Symbol = Hashable
Word = Tuple[Symbol, ...]

BINARY = frozenset("01")


class PeriodicityKind(Enum):
    PERIODIC = "periodic"
    EVENTUALLY_PERIODIC = "eventually_periodic"
    APERIODIC = "aperiodic"


@dataclass(frozen=True)
class Periodicity:
    kind: PeriodicityKind
    period: Optional[int] = None

    def __str__(self):
        if self.period is None:
            return self.kind.value
        return f"{self.kind.value}({self.period})"


def windows(word: Word, n: int) -> set:
    """All length-n factors of a finite word"""
    return {tuple(word[i:i + n]) for i in range(len(word) - n + 1)}


def primitive_root(word: Word) -> Word:
    size = len(word)
    for d in range(1, size + 1):
        if size % d == 0 and word[:d] * (size // d) == word:
            return word[:d]
    return word


class WordSpec:
    """Base of all word descriptions"""

    alphabet: FrozenSet

    def prefix(self, length: int) -> Word:
        raise NotImplementedError

    def factors(self, n: int) -> set:
        raise NotImplementedError

    def recurrent_factors(self, n: int) -> set:
        raise UnsupportedFamilyError(_("Recurrent factors are not known for {0}").format(self))

    def periodicity(self) -> Periodicity:
        raise NotImplementedError


@dataclass(frozen=True)
class EventuallyPeriodic(WordSpec):
    """u v v v ... ; stored with v primitive and u not ending in the last letter of v"""

    prefix_word: Word
    cycle: Word
    alphabet: FrozenSet = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if not self.cycle:
            raise InvalidSpecError(_("The cycle of an eventually periodic word must be nonempty"))
        cycle = primitive_root(tuple(self.cycle))
        head = tuple(self.prefix_word)
        while head and head[-1] == cycle[-1]:
            head = head[:-1]
            cycle = cycle[-1:] + cycle[:-1]
        object.__setattr__(self, "prefix_word", head)
        object.__setattr__(self, "cycle", cycle)
        if not self.alphabet:
            object.__setattr__(self, "alphabet", frozenset(head + cycle))

    def prefix(self, length: int) -> Word:
        if length <= len(self.prefix_word):
            return self.prefix_word[:length]
        repeats = ceil((length - len(self.prefix_word)) / len(self.cycle))
        return (self.prefix_word + self.cycle * repeats)[:length]

    def factors(self, n: int) -> set:
        period = len(self.cycle)
        repeats = ceil((n + period) / period) + 1
        return windows(self.prefix_word + self.cycle * repeats, n)

    def recurrent_factors(self, n: int) -> set:
        period = len(self.cycle)
        return windows(self.cycle * (ceil(n / period) + 1), n)

    def periodicity(self) -> Periodicity:
        kind = PeriodicityKind.EVENTUALLY_PERIODIC if self.prefix_word else PeriodicityKind.PERIODIC
        return Periodicity(kind, len(self.cycle))

    def __str__(self):
        return f"per:{format_word(self.prefix_word)};{format_word(self.cycle)}"


@dataclass(frozen=True)
class SturmianDirective(WordSpec):
    """Characteristic Sturmian word of a directive repeated periodically"""

    coefficients: Tuple[int, ...]
    alphabet: FrozenSet = field(default=BINARY, compare=False)

    def __post_init__(self):
        if not self.coefficients or any(d < 1 for d in self.coefficients):
            raise InvalidSpecError(_("Sturmian directive coefficients must all be at least 1"))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    def prefix(self, length: int) -> Word:
        # s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}
        older, current = ("1",), ("0",)
        step = 0
        while len(current) < length:
            d = self.coefficients[step % len(self.coefficients)]
            older, current = current, current * d + older
            step += 1
        return current[:length]

    def factors(self, n: int) -> set:
        return windows(self.prefix(max(STURMIAN_MIN_PREFIX, STURMIAN_PREFIX_FACTOR * n)), n)

    def recurrent_factors(self, n: int) -> set:
        return self.factors(n)

    def periodicity(self) -> Periodicity:
        return Periodicity(PeriodicityKind.APERIODIC)

    def __str__(self):
        return "sturmian:" + ",".join(str(d) for d in self.coefficients)


@dataclass(frozen=True)
class BStar(WordSpec):
    """b* = b(1) b(2) ... with b(1) = 10 and b(i) = b(i-1) 1^i 0"""

    alphabet: FrozenSet = field(default=BINARY, compare=False)

    @staticmethod
    def _blocks_until(length: int) -> Word:
        word = ("1", "0")
        i = 2
        while len(word) < length:
            word += ("1",) * i + ("0",)
            i += 1
        return word

    def prefix(self, length: int) -> Word:
        return self._blocks_until(length)[:length]

    def factors(self, n: int) -> set:
        # blocks up to 1^(n+2) 0 expose every factor of length n
        return windows(self._blocks_until(sum(i + 1 for i in range(1, n + 3))), n)

    def recurrent_factors(self, n: int) -> set:
        ones = ("1",) * n
        return {ones} | {ones[:i] + ("0",) + ones[i + 1:] for i in range(n)}

    def periodicity(self) -> Periodicity:
        return Periodicity(PeriodicityKind.APERIODIC)

    def __str__(self):
        return "bstar"


@dataclass(frozen=True)
class ExplicitPrefix(WordSpec):
    """A literal finite word standing in for an unknown infinite one"""

    word: Word
    alphabet: FrozenSet = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.alphabet:
            object.__setattr__(self, "alphabet", frozenset(self.word))

    def prefix(self, length: int) -> Word:
        if length > len(self.word):
            raise InsufficientPrefixError()
        return self.word[:length]

    def factors(self, n: int) -> set:
        raise InsufficientPrefixError()

    def periodicity(self) -> Periodicity:
        raise UnsupportedFamilyError(_("A literal prefix says nothing about periodicity"))

    def __str__(self):
        return f"lit:{format_word(self.word)}"


@dataclass(frozen=True)
class Substituted(WordSpec):
    """Image of a word under a uniform substitution (every image has the same length)"""

    base: WordSpec
    images: Tuple[Tuple[Symbol, Word], ...]
    alphabet: FrozenSet = field(default=frozenset(), compare=False)
    label: str = field(default="subst", compare=False)

    def __post_init__(self):
        lengths = {len(image) for _symbol, image in self.images}
        if len(lengths) != 1 or 0 in lengths:
            raise InvalidSpecError(_("Substitution images must be nonempty and of equal length"))
        if not self.alphabet:
            object.__setattr__(self, "alphabet", frozenset(s for _symbol, image in self.images for s in image))

    @property
    def width(self) -> int:
        return len(self.images[0][1])

    def apply(self, word: Word) -> Word:
        table = dict(self.images)
        try:
            return tuple(letter for symbol in word for letter in table[symbol])
        except KeyError as e:
            raise InvalidSpecError(_("No image for symbol {0}").format(e.args[0]))

    def prefix(self, length: int) -> Word:
        return self.apply(self.base.prefix(ceil(length / self.width)))[:length]

    def _image_windows(self, base_factors: set, n: int) -> set:
        found = set()
        for factor in base_factors:
            image = self.apply(factor)
            for offset in range(self.width):
                if offset + n <= len(image):
                    found.add(image[offset:offset + n])
        return found

    def _span(self, n: int) -> int:
        return (n + self.width - 2) // self.width + 1

    def factors(self, n: int) -> set:
        return self._image_windows(self.base.factors(self._span(n)), n)

    def recurrent_factors(self, n: int) -> set:
        return self._image_windows(self.base.recurrent_factors(self._span(n)), n)

    def periodic_form(self) -> Optional[EventuallyPeriodic]:
        base = self.base.periodic_form() if isinstance(self.base, Substituted) else self.base
        if not isinstance(base, EventuallyPeriodic):
            return None
        return EventuallyPeriodic(self.apply(base.prefix_word), self.apply(base.cycle), self.alphabet)

    def periodicity(self) -> Periodicity:
        periodic = self.periodic_form()
        if periodic is None:
            return self.base.periodicity()
        return periodic.periodicity()

    def __str__(self):
        return f"{self.label}({self.base})"


def prefix(spec: WordSpec, length: int) -> Word:
    if length < 0:
        raise InvalidSpecError(_("Prefix length must be nonnegative"))
    return spec.prefix(length)


def factors(spec: WordSpec, n: int) -> set:
    if n < 1:
        raise InvalidSpecError(_("Factor length must be at least 1"))
    return spec.factors(n)


def recurrent_factors(spec: WordSpec, n: int) -> set:
    if n < 1:
        raise InvalidSpecError(_("Factor length must be at least 1"))
    return spec.recurrent_factors(n)


def factor_complexity(spec: WordSpec, n: int) -> int:
    return len(factors(spec, n))


def recurrent_complexity(spec: WordSpec, n: int) -> int:
    return len(recurrent_factors(spec, n))


def classify_periodicity(spec: WordSpec) -> Periodicity:
    return spec.periodicity()


def first_distinguishing_length(first: WordSpec, second: WordSpec, n_max: int) -> Optional[int]:
    """Smallest n <= n_max at which the two factor sets differ"""
    for n in range(1, n_max + 1):
        if factors(first, n) != factors(second, n):
            return n
    return None


def format_word(word: Word) -> str:
    text = [str(symbol) for symbol in word]
    if all(len(s) == 1 for s in text):
        return "".join(text)
    return ",".join(text)


def parse_word_spec(text: str) -> WordSpec:
    """
    Parse the binary word grammar:
    per:<prefix>;<cycle>, sturmian:<d1>,<d2>,..., bstar, lit:<word>
    """
    text = text.strip()
    if text == "bstar":
        return BStar()
    kind, sep, body = text.partition(":")
    if not sep:
        raise InvalidSpecError(_("Unknown word spec: {0}").format(text))
    if kind == "per":
        head, sep, cycle = body.partition(";")
        if not sep:
            raise InvalidSpecError(_("Expected per:<prefix>;<cycle>, got {0}").format(text))
        return EventuallyPeriodic(tuple(head.strip()), tuple(cycle.strip()))
    if kind == "sturmian":
        try:
            return SturmianDirective(tuple(int(d) for d in body.split(",")))
        except ValueError:
            raise InvalidSpecError(_("Bad Sturmian directive: {0}").format(body))
    if kind == "lit":
        return ExplicitPrefix(tuple(body.strip()))
    raise InvalidSpecError(_("Unknown word spec: {0}").format(text))
