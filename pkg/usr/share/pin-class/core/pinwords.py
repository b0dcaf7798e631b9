#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/pinwords.py - Pin letters, the acceptance automaton and encodings
#

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import AmbiguousEncodingError, InvalidSpecError, PinWordRejected
from .translation_utils import _
from .words import EventuallyPeriodic, ExplicitPrefix, Substituted, WordSpec, factors, parse_word_spec


class Direction(str, Enum):
    L = "l"
    R = "r"
    U = "u"
    D = "d"

    def __str__(self):
        return self.value

    @property
    def horizontal(self) -> bool:
        return self in (Direction.L, Direction.R)

    @property
    def vector(self) -> Tuple[int, int]:
        return _VECTORS[self]

    @classmethod
    def from_vector(cls, vector: Tuple[int, int]) -> "Direction":
        for direction, v in _VECTORS.items():
            if v == vector:
                return direction
        raise ValueError(vector)


_VECTORS = {
    Direction.R: (1, 0),
    Direction.U: (0, 1),
    Direction.L: (-1, 0),
    Direction.D: (0, -1),
}

# quadrant -> (horizontal half, vertical half)
QUADRANT_HALVES = {
    1: (Direction.R, Direction.U),
    2: (Direction.L, Direction.U),
    3: (Direction.L, Direction.D),
    4: (Direction.R, Direction.D),
}


def quadrant_from_halves(first: Direction, second: Direction) -> int:
    halves = {first, second}
    for quadrant, pair in QUADRANT_HALVES.items():
        if set(pair) == halves:
            return quadrant
    raise InvalidSpecError(_("{0} and {1} do not name a quadrant").format(first, second))


@dataclass(frozen=True, order=True)
class PinLetter:
    """A pin's direction together with the direction of the pin before it"""

    direction: Direction
    memory: Direction

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "memory", Direction(self.memory))
        if self.direction.horizontal == self.memory.horizontal:
            raise InvalidSpecError(_("Invalid pin letter {0}{1}").format(self.direction, self.memory))

    def __str__(self):
        return f"{self.direction}{self.memory}"

    @property
    def quadrant(self) -> int:
        return quadrant_from_halves(self.direction, self.memory)

    @classmethod
    def parse(cls, token: str, previous: Optional["PinLetter"] = None) -> "PinLetter":
        """Parse 'ru', 'r_u' or a bare 'r' whose memory comes from the previous letter"""
        token = token.strip().lower().replace("_", "")
        try:
            if len(token) == 2:
                return cls(Direction(token[0]), Direction(token[1]))
            if len(token) == 1:
                if previous is None:
                    raise InvalidSpecError(_("Bare direction {0} has no predecessor to infer memory from").format(token))
                return cls(Direction(token), previous.direction)
        except ValueError:
            pass
        raise InvalidSpecError(_("Invalid pin token: {0}").format(token))


PIN_ALPHABET = frozenset(
    PinLetter(direction, memory)
    for direction in Direction
    for memory in Direction
    if direction.horizontal != memory.horizontal
)


def letter(token: str) -> PinLetter:
    return PinLetter.parse(token)


def _first_violation(letters: Sequence[PinLetter]) -> Optional[int]:
    for i in range(len(letters) - 1):
        if letters[i + 1].memory != letters[i].direction:
            return i + 1
    return None


@dataclass(frozen=True)
class PinWord:
    """A finite word accepted by the pin automaton"""

    letters: Tuple[PinLetter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        index = _first_violation(self.letters)
        if index is not None:
            raise PinWordRejected(
                _("Pin word rejected at pair ({0},{1})").format(index, index + 1), pair=(index, index + 1)
            )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return PinWord(self.letters[index])
        return self.letters[index]

    def __str__(self):
        return format_pin_word(self.letters)


@dataclass(frozen=True)
class BasicWord:
    quadrant: int
    moves: Tuple[Direction, ...]

    def __post_init__(self):
        if self.quadrant not in QUADRANT_HALVES:
            raise InvalidSpecError(_("Quadrant must be 1..4, got {0}").format(self.quadrant))
        moves = tuple(Direction(m) for m in self.moves)
        object.__setattr__(self, "moves", moves)
        for i in range(len(moves) - 1):
            if moves[i].horizontal == moves[i + 1].horizontal:
                raise PinWordRejected(
                    _("Basic moves must alternate at ({0},{1})").format(i + 2, i + 3), pair=(i + 2, i + 3)
                )

    def __len__(self):
        return 1 + len(self.moves)

    def __str__(self):
        return f"basic:{self.quadrant}" + "".join(str(m) for m in self.moves)


def validate_memory(tokens: Iterable[Union[str, PinLetter]]) -> PinWord:
    letters = tuple(t if isinstance(t, PinLetter) else PinLetter.parse(t) for t in tokens)
    return PinWord(letters)


def basic_to_memory(basic: BasicWord) -> PinWord:
    if len(basic) < 2:
        raise AmbiguousEncodingError()
    horizontal, vertical = QUADRANT_HALVES[basic.quadrant]
    if basic.moves[0].horizontal:
        first = PinLetter(vertical, horizontal)
    else:
        first = PinLetter(horizontal, vertical)
    letters = [first]
    for move in basic.moves:
        letters.append(PinLetter(move, letters[-1].direction))
    return PinWord(tuple(letters))


def memory_to_basic(word: PinWord) -> BasicWord:
    if len(word) < 2:
        raise AmbiguousEncodingError()
    return BasicWord(word[0].quadrant, tuple(item.direction for item in word.letters[1:]))


@dataclass(frozen=True)
class Visit:
    quadrant: int
    start: int
    end: int


def visits(word: Sequence[PinLetter]) -> list[Visit]:
    """Maximal runs of consecutive pins in one quadrant, 1-based and inclusive"""
    runs: list[Visit] = []
    for i, item in enumerate(word, start=1):
        if runs and runs[-1].quadrant == item.quadrant:
            runs[-1] = Visit(item.quadrant, runs[-1].start, i)
        else:
            runs.append(Visit(item.quadrant, i, i))
    return runs


PHI_IMAGES = (
    ("0", (PinLetter(Direction.L, Direction.U), PinLetter(Direction.U, Direction.L))),
    ("1", (PinLetter(Direction.R, Direction.U), PinLetter(Direction.U, Direction.R))),
)


def phi(binary: WordSpec) -> Substituted:
    """0 -> l u_l and 1 -> r u_r; every image letter after the first remembers an up pin"""
    if not binary.alphabet <= frozenset("01"):
        raise InvalidSpecError(_("phi needs a binary word, got alphabet {0}").format(sorted(map(str, binary.alphabet))))
    return Substituted(binary, PHI_IMAGES, PIN_ALPHABET, "phi")


def phi_base(spec: WordSpec) -> Optional[WordSpec]:
    if isinstance(spec, Substituted) and spec.images == PHI_IMAGES:
        return spec.base
    return None


def pin_factors(spec: WordSpec, n: int) -> set:
    return factors(spec, n)


@dataclass(frozen=True)
class Symmetry:
    """Element of the symmetry group of the square, as an integer matrix acting on direction vectors"""

    name: str
    matrix: Tuple[int, int, int, int]

    def act(self, direction: Direction) -> Direction:
        a, b, c, d = self.matrix
        x, y = direction.vector
        return Direction.from_vector((a * x + b * y, c * x + d * y))

    def compose(self, other: "Symmetry") -> "Symmetry":
        """self after other"""
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        product = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return symmetry_by_matrix(product)

    def inverse(self) -> "Symmetry":
        for candidate in SYMMETRIES.values():
            if candidate.compose(self) == IDENTITY:
                return candidate
        raise ValueError(self.name)


SYMMETRIES = {
    s.name: s
    for s in (
        Symmetry("id", (1, 0, 0, 1)),
        Symmetry("rot90", (0, -1, 1, 0)),
        Symmetry("rot180", (-1, 0, 0, -1)),
        Symmetry("rot270", (0, 1, -1, 0)),
        Symmetry("flip_h", (-1, 0, 0, 1)),
        Symmetry("flip_v", (1, 0, 0, -1)),
        Symmetry("diag", (0, 1, 1, 0)),
        Symmetry("antidiag", (0, -1, -1, 0)),
    )
}
IDENTITY = SYMMETRIES["id"]


def symmetry_by_matrix(matrix: Tuple[int, int, int, int]) -> Symmetry:
    for symmetry in SYMMETRIES.values():
        if symmetry.matrix == matrix:
            return symmetry
    raise ValueError(matrix)


def symmetry_transform(word: Sequence[PinLetter], g: Union[str, Symmetry]) -> PinWord:
    if isinstance(g, str):
        if g not in SYMMETRIES:
            raise InvalidSpecError(_("Unknown symmetry {0}; choose from {1}").format(g, ", ".join(SYMMETRIES)))
        g = SYMMETRIES[g]
    return PinWord(tuple(PinLetter(g.act(item.direction), g.act(item.memory)) for item in word))


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------

_TOKEN_SPLIT = re.compile(r"[\s,]+")
_BASIC = re.compile(r"^([1-4])([lrudLRUD]*)$")


def format_pin_word(letters: Iterable[PinLetter]) -> str:
    return ",".join(str(item) for item in letters)


def _split_tokens(text: str) -> list[str]:
    return [t for t in _TOKEN_SPLIT.split(text.strip()) if t]


def parse_pin_tokens(text: str, previous: Optional[PinLetter] = None) -> Tuple[PinLetter, ...]:
    letters: list[PinLetter] = []
    for token in _split_tokens(text):
        item = PinLetter.parse(token, letters[-1] if letters else previous)
        letters.append(item)
    return tuple(letters)


def _parse_cycle(tokens: list[str], previous: Optional[PinLetter]) -> Tuple[PinLetter, ...]:
    if previous is not None or not tokens:
        return parse_pin_tokens(" ".join(tokens), previous)
    # bare tokens wrap around to the end of the cycle
    full = [i for i, t in enumerate(tokens) if len(t.replace("_", "")) == 2]
    if not full:
        raise InvalidSpecError(_("A cycle of bare directions has no letter to start from"))
    start = full[0]
    rotated = parse_pin_tokens(" ".join(tokens[start:] + tokens[:start]))
    return rotated[len(tokens) - start:] + rotated[:len(tokens) - start]


def parse_basic(text: str) -> BasicWord:
    body = text[len("basic:"):] if text.startswith("basic:") else text
    match = _BASIC.match(body.replace(" ", ""))
    if not match:
        raise InvalidSpecError(_("Invalid basic word: {0}").format(text))
    return BasicWord(int(match.group(1)), tuple(Direction(m.lower()) for m in match.group(2)))


def parse_pin_spec(text: str) -> WordSpec:
    """
    Parse pin:per:<prefix>;<cycle>, pin:lit:<tokens>, phi(<binary spec>) or basic:<quadrant><moves>
    """
    text = text.strip()
    if text.startswith("phi(") and text.endswith(")"):
        return phi(parse_word_spec(text[4:-1]))
    if text.startswith("basic:"):
        return ExplicitPrefix(basic_to_memory(parse_basic(text)).letters, PIN_ALPHABET)
    if text.startswith("pin:lit:"):
        return ExplicitPrefix(validate_memory(parse_pin_tokens(text[len("pin:lit:"):])).letters, PIN_ALPHABET)
    if text.startswith("pin:per:"):
        head_text, sep, cycle_text = text[len("pin:per:"):].partition(";")
        if not sep:
            raise InvalidSpecError(_("Expected pin:per:<prefix>;<cycle>, got {0}").format(text))
        head = parse_pin_tokens(head_text)
        cycle = _parse_cycle(_split_tokens(cycle_text), head[-1] if head else None)
        if not cycle:
            raise InvalidSpecError(_("The cycle of an eventually periodic word must be nonempty"))
        validate_memory(head + cycle + cycle[:1])
        return EventuallyPeriodic(head, cycle, PIN_ALPHABET)
    raise InvalidSpecError(_("Unknown pin word spec: {0}").format(text))


def finite_pin_word(spec: WordSpec, length: Optional[int] = None) -> PinWord:
    """The whole word of a literal spec, or the first length letters of an infinite one"""
    if isinstance(spec, ExplicitPrefix) and length is None:
        return PinWord(spec.word)
    if length is None:
        raise InvalidSpecError(_("An infinite pin word needs an explicit length"))
    return PinWord(spec.prefix(length))
