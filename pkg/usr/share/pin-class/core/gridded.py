#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/gridded.py - Gridded permutations in the 2x2 grid and pin geometry
#

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Tuple

from .errors import InvalidSpecError, NotIndecomposableError
from .pinwords import QUADRANT_HALVES, Direction, PinLetter, PinWord
from .translation_utils import _

Point = Tuple[Fraction, Fraction]

_TEXT = re.compile(r"^\s*([0-9,]*)\s*\|\s*x\s*=\s*(\d+)\s*,\s*y\s*=\s*(\d+)\s*$")

OPPOSITE_QUADRANTS = ({1, 3}, {2, 4})


def _quadrant(left: bool, below: bool) -> int:
    if left:
        return 3 if below else 2
    return 4 if below else 1


@dataclass(frozen=True)
class GriddedPermutation:
    """
    A permutation with one vertical and one horizontal grid line.

    values lists the permutation by position, cut_x counts the positions left of
    the vertical line and cut_y the values below the horizontal one.
    """

    values: Tuple[int, ...] = ()
    cut_x: int = 0
    cut_y: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise InvalidSpecError(_("Not a permutation: {0}").format(self.values))
        if not (0 <= self.cut_x <= n and 0 <= self.cut_y <= n):
            raise InvalidSpecError(_("Cuts must lie in 0..{0}").format(n))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def quadrant_at(self, index: int) -> int:
        """Quadrant of the point at 0-based position index"""
        return _quadrant(index < self.cut_x, self.values[index] <= self.cut_y)

    def quadrants(self) -> Tuple[int, ...]:
        return tuple(self.quadrant_at(i) for i in range(self.n))

    def occupied_quadrants(self) -> frozenset:
        return frozenset(self.quadrants())

    def centered_points(self) -> list[Tuple[int, int]]:
        """Points in doubled coordinates with the grid lines through the origin"""
        return [(2 * (i + 1 - self.cut_x) - 1, 2 * (v - self.cut_y) - 1) for i, v in enumerate(self.values)]

    def __str__(self):
        separator = "," if self.n > 9 else ""
        return f"{separator.join(str(v) for v in self.values)}|x={self.cut_x},y={self.cut_y}"

    @classmethod
    def parse(cls, text: str) -> "GriddedPermutation":
        match = _TEXT.match(text)
        if not match:
            raise InvalidSpecError(_("Invalid gridded permutation: {0}").format(text))
        body = match.group(1)
        values = tuple(int(v) for v in body.split(",")) if "," in body else tuple(int(c) for c in body)
        return cls(values, int(match.group(2)), int(match.group(3)))

    @classmethod
    def from_points(cls, points: Sequence[Tuple]) -> "GriddedPermutation":
        """Rank-reduce points given relative to the origin; the axes become the cuts"""
        xs = sorted(p[0] for p in points)
        ys = sorted(p[1] for p in points)
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise InvalidSpecError(_("Points must have distinct coordinates"))
        if 0 in xs or 0 in ys:
            raise InvalidSpecError(_("Points may not lie on an axis"))
        rank_y = {y: r for r, y in enumerate(ys, start=1)}
        by_x = sorted(points, key=lambda p: p[0])
        return cls(
            tuple(rank_y[p[1]] for p in by_x),
            sum(1 for x in xs if x < 0),
            sum(1 for y in ys if y < 0),
        )


EMPTY = GriddedPermutation()


# ---------------------------------------------------------------------------
# Pin construction
# ---------------------------------------------------------------------------

def _as_pin_word(word) -> PinWord:
    return word if isinstance(word, PinWord) else PinWord(tuple(word))


def pin_points(word: Sequence[PinLetter]) -> list[Point]:
    """
    Exact coordinates of the pins, in pin order.

    Each pin sits one unit outside the bounding box of the origin and all earlier
    pins; across its direction it takes the midpoint between the previous pin
    and the box of everything before that.
    """
    word = _as_pin_word(word)
    if len(word) == 0:
        return []
    zero = Fraction(0)
    points: list[Point] = []
    # (xmin, xmax, ymin, ymax), with and without the latest pin
    box = earlier = (zero, zero, zero, zero)
    for index, item in enumerate(word):
        if index == 0:
            horizontal, vertical = QUADRANT_HALVES[item.quadrant]
            point = (Fraction(horizontal.vector[0]), Fraction(vertical.vector[1]))
        else:
            px, py = points[-1]
            d = item.direction
            if d.horizontal:
                x = box[1] + 1 if d is Direction.R else box[0] - 1
                y = (earlier[3] + py) / 2 if py > earlier[3] else (earlier[2] + py) / 2
            else:
                y = box[3] + 1 if d is Direction.U else box[2] - 1
                x = (earlier[1] + px) / 2 if px > earlier[1] else (earlier[0] + px) / 2
            point = (x, y)
        points.append(point)
        earlier = box
        box = (min(box[0], point[0]), max(box[1], point[0]), min(box[2], point[1]), max(box[3], point[1]))
    return points


def build_pin_permutation(word: Sequence[PinLetter]) -> GriddedPermutation:
    return GriddedPermutation.from_points(pin_points(word))


def pin_path(word: Sequence[PinLetter]) -> list[Tuple[int, int]]:
    """(position, value) of each pin of the built permutation, in pin order"""
    points = pin_points(word)
    rank_x = {x: r for r, x in enumerate(sorted(p[0] for p in points), start=1)}
    rank_y = {y: r for r, y in enumerate(sorted(p[1] for p in points), start=1)}
    return [(rank_x[x], rank_y[y]) for x, y in points]


# ---------------------------------------------------------------------------
# Containment, sums and decomposition
# ---------------------------------------------------------------------------

def contains(big: GriddedPermutation, small: GriddedPermutation) -> bool:
    k = small.n
    if k > big.n:
        return False
    small_quadrants = small.quadrants()
    big_quadrants = big.quadrants()
    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        for i in range(start, big.n - (k - j) + 1):
            if big_quadrants[i] != small_quadrants[j]:
                continue
            if all(
                (small.values[j] > small.values[jj]) == (big.values[i] > big.values[chosen[jj]])
                for jj in range(j)
            ):
                chosen.append(i)
                if extend(j + 1, i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def box_sum(inner: GriddedPermutation, outer: GriddedPermutation) -> GriddedPermutation:
    """Insert a shrunken copy of inner at the origin of outer"""
    scale = Fraction(1, 2 * max(inner.n, 1))
    points = [(Fraction(x), Fraction(y)) for x, y in outer.centered_points()]
    points += [(x * scale, y * scale) for x, y in inner.centered_points()]
    return GriddedPermutation.from_points(points)


def box_sum_all(factors: Sequence[GriddedPermutation]) -> GriddedPermutation:
    """factors[0] ⊞ factors[1] ⊞ ..., innermost first"""
    result = EMPTY
    for factor in reversed(factors):
        result = box_sum(factor, result)
    return result


def _closure(seed: int, points: Sequence[Tuple]) -> frozenset:
    """Smallest set containing seed whose box with the origin leaves every other point outside both spans"""
    members = {seed}
    while True:
        xs = [points[i][0] for i in members] + [0]
        ys = [points[i][1] for i in members] + [0]
        xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
        grown = {
            i for i, (x, y) in enumerate(points)
            if xmin <= x <= xmax or ymin <= y <= ymax
        }
        if grown == members:
            return frozenset(members)
        members = grown


def is_box_indecomposable(perm: GriddedPermutation) -> bool:
    points = perm.centered_points()
    return all(len(_closure(i, points)) == len(points) for i in range(len(points)))


def _commutation_key(perm: GriddedPermutation) -> Tuple[int, str]:
    quadrants = perm.occupied_quadrants()
    return (min(quadrants) if len(quadrants) == 1 else 0, str(perm))


def _opposed(first: GriddedPermutation, second: GriddedPermutation) -> bool:
    a, b = first.occupied_quadrants(), second.occupied_quadrants()
    return len(a) == 1 and len(b) == 1 and (a | b) in OPPOSITE_QUADRANTS


def box_decompose(perm: GriddedPermutation) -> list[GriddedPermutation]:
    """Indecomposable factors, innermost first, with commuting neighbours in quadrant order"""
    remaining = perm.centered_points()
    factors: list[GriddedPermutation] = []
    while remaining:
        candidates = []
        for seed in range(len(remaining)):
            members = _closure(seed, remaining)
            block = GriddedPermutation.from_points([remaining[i] for i in sorted(members)])
            candidates.append((len(members), str(block), members, block))
        _size, _text, members, block = min(candidates, key=lambda c: (c[0], c[1]))
        factors.append(block)
        remaining = [p for i, p in enumerate(remaining) if i not in members]

    swapped = True
    while swapped:
        swapped = False
        for i in range(len(factors) - 1):
            left, right = factors[i], factors[i + 1]
            if _opposed(left, right) and _commutation_key(right) < _commutation_key(left):
                factors[i], factors[i + 1] = right, left
                swapped = True
    return factors


def commute(first: GriddedPermutation, second: GriddedPermutation) -> bool:
    for perm in (first, second):
        if perm.n == 0 or not is_box_indecomposable(perm):
            raise NotIndecomposableError(_("{0} is not box indecomposable").format(perm))
    return first == second or _opposed(first, second)


def all_griddings(values: Sequence[int]) -> set:
    n = len(values)
    return {GriddedPermutation(tuple(values), cx, cy) for cx, cy in product(range(n + 1), repeat=2)}


# ---------------------------------------------------------------------------
# Plot
# ---------------------------------------------------------------------------

def render_svg(perm: GriddedPermutation, path: Optional[Sequence[Tuple[int, int]]] = None, scale: int = 20) -> str:
    """Unit-spaced points, bold axes and the pin path as a gray polyline"""
    n = perm.n
    size = (n + 1) * scale

    def sx(position) -> str:
        return f"{position * scale:g}"

    def sy(value) -> str:
        return f"{(n + 1 - value) * scale:g}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'  <rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'  <line x1="{sx(perm.cut_x + 0.5)}" y1="0" x2="{sx(perm.cut_x + 0.5)}" y2="{size}" '
        'stroke="black" stroke-width="3"/>',
        f'  <line x1="0" y1="{sy(perm.cut_y + 0.5)}" x2="{size}" y2="{sy(perm.cut_y + 0.5)}" '
        'stroke="black" stroke-width="3"/>',
    ]
    if path:
        coordinates = " ".join(f"{sx(p)},{sy(v)}" for p, v in path)
        lines.append(f'  <polyline points="{coordinates}" fill="none" stroke="gray" stroke-width="1.5"/>')
    for position, value in enumerate(perm.values, start=1):
        lines.append(f'  <circle cx="{sx(position)}" cy="{sy(value)}" r="4" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
