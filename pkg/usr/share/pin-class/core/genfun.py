#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/genfun.py - Exact polynomials, rational generating functions and growth rates
#

"""
Integer polynomials and reduced rational generating functions.

Roots are isolated with Sturm chains and refined by bisection in exact rational
arithmetic, so every reported root is certified to lie in its bracket.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import Poly, Rational, symbols
from sympy.polys.domains import ZZ

from .config import DEFAULT_TOLERANCE, SERIES_LIMIT
from .errors import InvalidSpecError, NoPositiveRootError, NoRealRootError
from .translation_utils import _

z = symbols("z")

Number = Union[int, Fraction]

_TERM = re.compile(r"([+-])?(\d+)?\*?(z(?:\^(\d+))?)?")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients in ascending degree, trailing zeros stripped"""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    # -- construction ---------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse text such as z^5-4z^4+3z^3-2z^2-z+2"""
        body = text.replace(" ", "").replace("−", "-").replace("**", "^")
        if not body:
            raise InvalidSpecError(_("Empty polynomial"))
        terms: dict[int, int] = {}
        position = 0
        while position < len(body):
            match = _TERM.match(body, position)
            if match is None or match.end() == position or (match.group(2) is None and match.group(3) is None):
                raise InvalidSpecError(_("Invalid polynomial: {0}").format(text))
            if position > 0 and match.group(1) is None:
                raise InvalidSpecError(_("Invalid polynomial: {0}").format(text))
            sign = -1 if match.group(1) == "-" else 1
            coefficient = int(match.group(2)) if match.group(2) else 1
            if match.group(3):
                degree = int(match.group(4)) if match.group(4) else 1
            else:
                degree = 0
            terms[degree] = terms.get(degree, 0) + sign * coefficient
            position = match.end()
        size = max(terms) + 1
        return cls(tuple(terms.get(k, 0) for k in range(size)))

    # -- inspection -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __call__(self, x: Number) -> Number:
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], z, domain=ZZ)

    def reversal(self, degree: Optional[int] = None) -> "IntPolynomial":
        """z^d p(1/z)"""
        degree = self.degree if degree is None else degree
        return IntPolynomial(tuple(self[degree - k] for k in range(degree + 1)))

    def strip_zero_roots(self) -> "IntPolynomial":
        coefficients = list(self.coefficients)
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
        return IntPolynomial(tuple(coefficients))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _as_polynomial(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = IntPolynomial.constant(1)
        for _step in range(exponent):
            result = result * self
        return result

    # -- text -----------------------------------------------------------

    def _format(self, degrees: Iterable[int]) -> str:
        text = ""
        for k in degrees:
            c = self[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if text else "")
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "z" if k == 1 else f"z^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            text += sign + body
        return text or "0"

    def __str__(self):
        return self._format(range(self.degree, -1, -1))

    def ascending(self) -> str:
        return self._format(range(0, self.degree + 1))


def _as_polynomial(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(value)


ONE_MINUS_Z = IntPolynomial((1, -1))


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator, reduced, with a positive denominator constant term"""

    numerator: IntPolynomial
    denominator: IntPolynomial = IntPolynomial((1,))

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise InvalidSpecError(_("Denominator {0} vanishes at z=0").format(self.denominator))
        numerator, denominator = self.numerator.to_sympy(), self.denominator.to_sympy()
        if not self.numerator.is_zero():
            common = numerator.gcd(denominator)
            numerator, denominator = numerator.exquo(common), denominator.exquo(common)
        else:
            denominator = Poly([1], z, domain=ZZ)
        num, den = IntPolynomial.from_sympy(numerator), IntPolynomial.from_sympy(denominator)
        if den[0] < 0:
            num, den = -num, -den
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def of(cls, value) -> "RationalGF":
        if isinstance(value, RationalGF):
            return value
        return cls(_as_polynomial(value))

    @classmethod
    def parse(cls, text: str) -> "RationalGF":
        """(<poly>)/(<poly>) or a bare polynomial"""
        body = text.strip()
        match = re.match(r"^\((.*)\)\s*/\s*\((.*)\)$", body)
        if match:
            return cls(IntPolynomial.parse(match.group(1)), IntPolynomial.parse(match.group(2)))
        return cls(IntPolynomial.parse(body))

    def __add__(self, other):
        other = RationalGF.of(other)
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalGF(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RationalGF.of(other))

    def __rsub__(self, other):
        return RationalGF.of(other) - self

    def __mul__(self, other):
        other = RationalGF.of(other)
        return RationalGF(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalGF.of(other)
        if other.numerator.is_zero():
            raise ZeroDivisionError(str(other))
        return RationalGF(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        return RationalGF.of(other) / self

    def __call__(self, x: Number) -> Fraction:
        return Fraction(self.numerator(x)) / self.denominator(x)

    def constant_term(self) -> Fraction:
        return Fraction(self.numerator[0], self.denominator[0])

    def __str__(self):
        return f"({self.numerator.ascending()})/({self.denominator.ascending()})"


ZERO_GF = RationalGF(IntPolynomial())
ONE_GF = RationalGF(IntPolynomial((1,)))


def series(f: RationalGF, n: int) -> list:
    """Coefficients of z^0 .. z^n; integers whenever they are integral"""
    if n + 1 > SERIES_LIMIT:
        raise InvalidSpecError(_("Series length is capped at {0} coefficients").format(SERIES_LIMIT))
    numerator, denominator = f.numerator, f.denominator
    lead = denominator[0]
    coefficients: list[Fraction] = []
    for k in range(n + 1):
        total = Fraction(numerator[k])
        for i in range(1, min(k, denominator.degree) + 1):
            total -= denominator[i] * coefficients[k - i]
        coefficients.append(total / lead)
    return [int(c) if c.denominator == 1 else c for c in coefficients]


def eventually_constant_gf(terms: Sequence[int], start: int = 1) -> RationalGF:
    """GF of terms[0] z^start + terms[1] z^(start+1) + ..., with the last term repeated forever"""
    if not terms:
        return ZERO_GF
    head = IntPolynomial((0,) * start + tuple(terms[:-1]))
    tail = IntPolynomial.monomial(start + len(terms) - 1, terms[-1])
    return RationalGF(head * ONE_MINUS_Z + tail, ONE_MINUS_Z)


# ---------------------------------------------------------------------------
# Trace monoids
# ---------------------------------------------------------------------------

def _commuting(pairs: Iterable[Tuple]) -> set:
    relation = set()
    for a, b in pairs:
        if a != b:
            relation.add((a, b))
            relation.add((b, a))
    return relation


def trace_monoid_gf(weights: Mapping, commuting_pairs: Iterable[Tuple] = ()) -> RationalGF:
    """1 / sum over sets F of pairwise commuting letters of (-1)^|F| prod g(a)"""
    relation = _commuting(commuting_pairs)
    letters = list(weights)
    total = ONE_GF
    for size in range(1, len(letters) + 1):
        for clique in combinations(letters, size):
            if all((a, b) in relation for a, b in combinations(clique, 2)):
                term = ONE_GF
                for a in clique:
                    term = term * RationalGF.of(weights[a])
                total = total + (term if size % 2 == 0 else -term)
    return ONE_GF / total


def _require_nonempty_weight(*weights: RationalGF):
    for weight in weights:
        if weight.constant_term() != 0:
            raise InvalidSpecError(_("Weight {0} must have zero constant term").format(weight))


def cartier_foata(g_a, g1, g2, g3, g4) -> RationalGF:
    """1/(1 - (g_a + g1 + g2 + g3 + g4) + g1 g3 + g2 g4): quadrants 1&3 and 2&4 commute"""
    weights = [RationalGF.of(g) for g in (g_a, g1, g2, g3, g4)]
    _require_nonempty_weight(*weights)
    g_a, g1, g2, g3, g4 = weights
    return ONE_GF / (ONE_GF - (g_a + g1 + g2 + g3 + g4) + g1 * g3 + g2 * g4)


def box_closure_gf(indec_gf, quadrant_parts: Optional[Mapping[int, RationalGF]] = None) -> RationalGF:
    """
    GF of the box closure of a set of indecomposables.

    quadrant_parts gives the weight of indecomposables wholly inside each quadrant;
    the rest of indec_gf is the non-commuting part.
    """
    g = RationalGF.of(indec_gf)
    _require_nonempty_weight(g)
    if not quadrant_parts:
        return ONE_GF / (ONE_GF - g)
    parts = {q: RationalGF.of(quadrant_parts.get(q, ZERO_GF)) for q in (1, 2, 3, 4)}
    g_a = g - parts[1] - parts[2] - parts[3] - parts[4]
    return cartier_foata(g_a, parts[1], parts[2], parts[3], parts[4])


def count_traces(letters: Sequence, commuting_pairs: Iterable[Tuple], max_len: int) -> list[int]:
    """Number of traces of each length 0..max_len, counted as lexicographic normal forms"""
    relation = _commuting(commuting_pairs)
    order = {a: i for i, a in enumerate(letters)}
    counts = [1]
    frontier: list[tuple] = [()]
    for _length in range(max_len):
        grown = []
        for word in frontier:
            for a in letters:
                normal = True
                for b in reversed(word):
                    if (a, b) not in relation:
                        break
                    if order[b] > order[a]:
                        normal = False
                        break
                if normal:
                    grown.append(word + (a,))
        frontier = grown
        counts.append(len(frontier))
    return counts


# ---------------------------------------------------------------------------
# Real roots
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootBracket:
    """A root certified to lie in [lo, hi]"""

    lo: Fraction
    hi: Fraction

    @property
    def value(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _horner(coefficients: Sequence[Fraction], x: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(coefficients):
        result = result * x + c
    return result


def _sign(value) -> int:
    return (value > 0) - (value < 0)


class SturmChain:
    """Sturm chain of the square-free part of a polynomial"""

    def __init__(self, poly: IntPolynomial):
        square_free = poly.to_sympy().sqf_part()
        self.base = IntPolynomial.from_sympy(square_free)
        self.chain = []
        for member in square_free.sturm():
            coefficients = []
            for c in reversed(member.all_coeffs()):
                c = Rational(c)
                coefficients.append(Fraction(int(c.p), int(c.q)))
            self.chain.append(coefficients)

    @staticmethod
    def count_sign_changes(values: Sequence) -> int:
        """Sign changes in a sequence, ignoring zeros"""
        signs = [_sign(v) for v in values if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations(self, x: Fraction) -> int:
        return self.count_sign_changes([_horner(c, x) for c in self.chain])

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi]"""
        return self.variations(lo) - self.variations(hi)


def cauchy_bound(poly: IntPolynomial) -> Fraction:
    lead = abs(poly.coefficients[-1])
    return 1 + Fraction(max(abs(c) for c in poly.coefficients[:-1]), lead) if poly.degree > 0 else Fraction(1)


def _refine(chain: SturmChain, lo: Fraction, hi: Fraction, done: Callable[[Fraction, Fraction], bool]) -> RootBracket:
    """Bisect (lo, hi], which holds exactly one simple root of chain.base, until done(lo, hi)"""
    p = chain.base
    while not done(lo, hi):
        if p(hi) == 0:
            return RootBracket(hi, hi)
        mid = (lo + hi) / 2
        at_mid = p(mid)
        if at_mid == 0:
            return RootBracket(mid, mid)
        at_lo = p(lo)
        if at_lo != 0:
            if _sign(at_mid) != _sign(at_lo):
                hi = mid
            else:
                lo = mid
        elif chain.count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo, hi)


def _width_at_most(tol: Fraction) -> Callable[[Fraction, Fraction], bool]:
    return lambda lo, hi: hi - lo <= tol


def isolate_smallest_positive_root(poly: IntPolynomial, tol=DEFAULT_TOLERANCE,
                                   done: Optional[Callable] = None) -> Optional[RootBracket]:
    poly = poly.strip_zero_roots()
    if poly.degree < 1:
        return None
    chain = SturmChain(poly)
    hi = cauchy_bound(chain.base)
    lo = Fraction(0)
    if chain.count(lo, hi) == 0:
        return None
    while chain.count(lo, hi) > 1:
        mid = (lo + hi) / 2
        if chain.count(lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return _refine(chain, lo, hi, done or _width_at_most(Fraction(tol)))


def isolate_largest_real_root(poly: IntPolynomial, tol=DEFAULT_TOLERANCE) -> RootBracket:
    if poly.degree < 1:
        raise NoRealRootError(_("{0} is constant").format(poly))
    chain = SturmChain(poly)
    hi = cauchy_bound(chain.base)
    lo = -hi - 1
    if chain.count(lo, hi) == 0:
        raise NoRealRootError(_("{0} has no real root").format(poly))
    while chain.count(lo, hi) > 1:
        mid = (lo + hi) / 2
        if chain.count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return _refine(chain, lo, hi, _width_at_most(Fraction(tol)))


def largest_real_root(poly: IntPolynomial, tol=DEFAULT_TOLERANCE) -> float:
    return isolate_largest_real_root(poly, tol).value


def isolate_growth_rate(f: RationalGF, tol=DEFAULT_TOLERANCE) -> RootBracket:
    """Bracket of 1/r for the smallest positive denominator root r"""
    tol = Fraction(tol)

    def reciprocal_tight(lo, hi):
        return lo > 0 and (1 / lo - 1 / hi) <= tol

    root = isolate_smallest_positive_root(f.denominator, done=reciprocal_tight)
    if root is None:
        raise NoPositiveRootError(_("{0} has no positive singularity").format(f))
    # f is reduced, so the numerator does not vanish at r
    return RootBracket(1 / root.hi, 1 / root.lo)


def growth_rate(f: RationalGF, tol=DEFAULT_TOLERANCE) -> float:
    return isolate_growth_rate(f, tol).value


def isolate_g_eq_1(g: RationalGF, tol=DEFAULT_TOLERANCE) -> RootBracket:
    """Bracket of the smallest positive z with g(z) = 1, below the first singularity of g"""
    g = RationalGF.of(g)
    target = g.denominator - g.numerator
    root = isolate_smallest_positive_root(target, tol)
    if root is None:
        raise NoPositiveRootError(_("g = 1 has no positive solution for g = {0}").format(g))
    singular = isolate_smallest_positive_root(g.denominator, tol)
    if singular is not None:
        width = Fraction(tol)
        while not root.hi < singular.lo:
            if root.lo > singular.hi:
                raise NoPositiveRootError(_("g = 1 has no solution below the first singularity of {0}").format(g))
            width /= 2
            root = isolate_smallest_positive_root(target, width)
            singular = isolate_smallest_positive_root(g.denominator, width)
    return root


def smallest_positive_solution_of_g_eq_1(g: RationalGF, tol=DEFAULT_TOLERANCE) -> float:
    return isolate_g_eq_1(g, tol).value
