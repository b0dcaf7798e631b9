#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/catalog.py - Named pin classes, growth constants and their certificates
#

"""
Every named class and bound, wired from its word to its counts, generating
function and growth rate.

Certification levels:
  FULLY_CERTIFIED  brute-force counts, factor formula and root all agree
  FORMULA_ONLY     generating function and root agree; no finite word to enumerate
  EXPECTED_VALUE   only the stated polynomial's root is checked
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .config import DEFAULT_PREFIX_BUDGET, DEFAULT_VERIFY_MAX_LEN
from .enumeration import class_counts, factor_formula_counts, indecomposable_counts, interior_indecomposable_counts
from .errors import InvalidSpecError, PinClassError, UnknownEntryError
from .genfun import (
    ONE_GF,
    ONE_MINUS_Z,
    IntPolynomial,
    RationalGF,
    SturmChain,
    box_closure_gf,
    cartier_foata,
    eventually_constant_gf,
    isolate_g_eq_1,
    isolate_growth_rate,
    isolate_largest_real_root,
    series,
)
from .pinwords import parse_pin_spec
from .translation_utils import _

CERTIFICATE_TOLERANCE = Fraction(1, 10**15)
RECIPROCAL_TOLERANCE = 2e-4


class Certification(Enum):
    FULLY_CERTIFIED = "fully_certified"
    FORMULA_ONLY = "formula_only"
    EXPECTED_VALUE = "expected_value_only"


def _poly(text: str) -> IntPolynomial:
    return IntPolynomial.parse(text)


def _gf(text: str) -> RationalGF:
    return RationalGF.parse(text)


def printed_tolerance(decimal: str) -> float:
    """One unit in the last printed digit"""
    _whole, _dot, digits = decimal.partition(".")
    return 10.0 ** -len(digits)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    polynomial: IntPolynomial
    expected: str
    certification: Certification
    word: Optional[str] = None
    indec_gf: Optional[RationalGF] = None
    class_gf: Optional[RationalGF] = None
    interior: bool = False
    note: str = ""

    def __post_init__(self):
        if self.certification is Certification.FULLY_CERTIFIED and (self.word is None or self.class_gf is None):
            raise InvalidSpecError(_("{0}: a fully certified entry needs a word and a generating function").format(self.name))


# ---------------------------------------------------------------------------
# Generating functions
# ---------------------------------------------------------------------------

G_STAR_NUMERATOR = _poly("2z-2z^2+2z^3+z^4-2z^5")
G_STAR = _gf("(2z-2z^2+2z^3+z^4-2z^5)/(1-2z+z^2)")


def nu_indec_gf(ell: int) -> RationalGF:
    """Indecomposables of the class of phi((0 1^ell)^inf)"""
    if ell < 1:
        raise InvalidSpecError(_("ell must be at least 1"))
    if ell == 1:
        return _gf("(2z+2z^4)/(1-z)")
    if ell == 2:
        return _gf("(2z+2z^3+2z^4)/(1-z)")
    return G_STAR - RationalGF(IntPolynomial.monomial(2 * ell), ONE_MINUS_Z ** 2)


def nu_polynomial(ell: int) -> IntPolynomial:
    if ell == 1:
        return _poly("z^4-3z^3-2")
    if ell == 2:
        return _poly("z^4-3z^3-2z-2")
    d = 2 * ell
    return (
        IntPolynomial.monomial(d) - IntPolynomial.monomial(d - 1, 4) + IntPolynomial.monomial(d - 2, 3)
        - IntPolynomial.monomial(d - 3, 2) - IntPolynomial.monomial(d - 4) + IntPolynomial.monomial(d - 5, 2) + 1
    )


def nu_word(ell: int) -> str:
    return "phi(per:;0" + "1" * ell + ")"


def gk_gf(k: int) -> RationalGF:
    numerator = (
        G_STAR_NUMERATOR + IntPolynomial.monomial(2 * k + 2) - IntPolynomial.monomial(4 * k) - IntPolynomial.monomial(4 * k + 4)
    )
    return RationalGF(numerator, ONE_MINUS_Z ** 2)


def mu_bound_gf(k: int) -> RationalGF:
    """g_s for the complexity profile s_k"""
    if k < 2:
        raise InvalidSpecError(_("k must be at least 2"))
    if k == 2:
        return _gf("(2z+4z^3+2z^4)/(1-z)")
    if k == 3:
        return _gf("(2z+2z^3+4z^4+2z^5)/(1-z)")
    numerator = G_STAR_NUMERATOR + IntPolynomial.monomial(2 * k - 2) - IntPolynomial.monomial(2 * k, 2)
    return RationalGF(numerator, ONE_MINUS_Z ** 2)


def mu_profile_complexity(k: int):
    """s_k(n) = n+1 below k, then k+2"""
    return lambda n: n + 1 if n < k else k + 2


def mu_profile_gf(k: int) -> RationalGF:
    """g_s rebuilt from the factor formula applied to s_k"""
    terms = factor_formula_counts(mu_profile_complexity(k), 2 * k + 2)
    return eventually_constant_gf(terms)


def _closure(indec: RationalGF) -> RationalGF:
    return box_closure_gf(indec)


Z = _gf("z")
Z_PLUS_Z2 = _gf("z+z^2")
ZERO = RationalGF(IntPolynomial())


def x_class_gf() -> RationalGF:
    return cartier_foata(ZERO, Z, Z, Z, Z)


def four_quadrant_helper_gf() -> RationalGF:
    return cartier_foata(ZERO, Z_PLUS_Z2, Z, Z, Z)


def three_quadrant_helper_gf() -> RationalGF:
    return cartier_foata(_gf("2z^3"), Z_PLUS_Z2, Z_PLUS_Z2, Z_PLUS_Z2, ZERO)


def lambda_gf() -> RationalGF:
    return cartier_foata(_gf("2z^3+z^5"), Z_PLUS_Z2, Z, Z_PLUS_Z2, ZERO)


def _build_entries() -> Dict[str, CatalogEntry]:
    kappa_indec = _gf("(z+z^3)/(1-z)")
    entries = [
        CatalogEntry(
            "kappa", _("one-quadrant oscillation"), _poly("z^3-2z^2-1"), "2.20557",
            Certification.FULLY_CERTIFIED, "pin:per:;ru,ur", kappa_indec, _closure(kappa_indec),
        ),
    ]
    nu_expected = ("3.06918", "3.24796", "3.27963", "3.28248", "3.28274", "3.28277")
    for ell, expected in enumerate(nu_expected, start=1):
        indec = nu_indec_gf(ell)
        entries.append(CatalogEntry(
            f"nu_{ell}", _("two-quadrant word phi((0 1^{0})^inf)").format(ell), nu_polynomial(ell), expected,
            Certification.FULLY_CERTIFIED, nu_word(ell), indec, _closure(indec),
        ))
    nu22 = _gf("(2z+4z^3+2z^4)/(1-z)")
    entries += [
        CatalogEntry(
            "nu_2_2", _("two-quadrant word phi((0011)^inf)"), _poly("z^4-3z^3-4z-2"), "3.39752",
            Certification.FULLY_CERTIFIED, "phi(per:;0011)", nu22, _closure(nu22),
        ),
        CatalogEntry(
            "mu", _("phi of the Fibonacci word; box interior"), _poly("z^5-4z^4+3z^3-2z^2-z+2"), "3.28277",
            Certification.FORMULA_ONLY, "phi(sturmian:1)", G_STAR, _closure(G_STAR), interior=True,
        ),
        CatalogEntry(
            "mu_bstar", _("phi(b*); box interior"), _poly("z^5-4z^4+3z^3-2z^2-z+2"), "3.28277",
            Certification.FORMULA_ONLY, "phi(bstar)", G_STAR, _closure(G_STAR), interior=True,
        ),
        CatalogEntry(
            "lambda", _("three-quadrant lower bound"), _poly("z^5-3z^4-z^3+z-1"), "3.28481",
            Certification.FORMULA_ONLY, class_gf=lambda_gf(),
        ),
        CatalogEntry(
            "three_quadrant_helper", _("three-quadrant case bound"), _poly("z^4-3z^3-2z^2+1"), "3.542",
            Certification.FORMULA_ONLY, class_gf=three_quadrant_helper_gf(),
        ),
        CatalogEntry(
            "nu_2_2_000", _("two-quadrant bound with a 000 factor"), _poly("z^5-3z^4-4z^2-3z-1"), "3.423",
            Certification.FORMULA_ONLY, indec_gf=_gf("(2z+4z^3+3z^4+z^5)/(1-z)"),
            class_gf=_closure(_gf("(2z+4z^3+3z^4+z^5)/(1-z)")),
        ),
        CatalogEntry(
            "x_class", _("box closure of the four single points"), _poly("z^2-4z+2"), "3.41421",
            Certification.FORMULA_ONLY, class_gf=x_class_gf(),
        ),
        CatalogEntry(
            "four_quadrant_helper", _("four single points and a decreasing pair"), _poly("z^3-4z^2+z+1"), "3.65109",
            Certification.FORMULA_ONLY, class_gf=four_quadrant_helper_gf(),
            note=_("often quoted as 3.69109; the root of this denominator is 3.65109"),
        ),
        CatalogEntry(
            "widdershins", _("widdershins spiral"), _poly("z^5-5z^4+6z^3-2z^2-z-3"), "3.48806",
            Certification.EXPECTED_VALUE, "pin:per:;ur,l,d,r",
        ),
        CatalogEntry(
            "three_quadrant_min", _("smallest three-quadrant class"), _poly("z^5-4z^4+2z^3+z^2-2z+1"), "3.36132",
            Certification.EXPECTED_VALUE, "pin:per:;ur,l,d,l,u,r",
        ),
    ]
    return {e.name: e for e in entries}


ENTRIES = _build_entries()


def entry(name: str) -> CatalogEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise UnknownEntryError(_("Unknown catalog entry {0}; known: {1}").format(name, ", ".join(ENTRIES)))


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    name: str
    expected: str
    computed: float
    delta: float
    certification: Certification
    checks: Tuple[Tuple[str, bool], ...] = ()

    @property
    def passed(self) -> bool:
        return all(ok for _label, ok in self.checks)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "computed": round(self.computed, 9),
            "delta": float(f"{self.delta:.3e}"),
            "certification": self.certification.value,
            "checks": {label: ok for label, ok in self.checks},
            "passed": self.passed,
        }


def verify(
    name: str,
    max_len: int = DEFAULT_VERIFY_MAX_LEN,
    prefix_budget: int = DEFAULT_PREFIX_BUDGET,
    tol=None,
    logger=None,
) -> VerificationReport:
    item = entry(name)
    tol = Fraction(tol) if tol is not None else Fraction(1, 10**9)
    computed = isolate_largest_real_root(item.polynomial, tol).value
    delta = abs(computed - float(item.expected))
    checks = [("expected", delta <= printed_tolerance(item.expected))]

    if item.class_gf is not None:
        growth = isolate_growth_rate(item.class_gf, tol).value
        checks.append(("reciprocal", abs(growth - computed) <= RECIPROCAL_TOLERANCE))
        checks.append(("nonnegative", all(c >= 0 for c in series(item.class_gf, 30))))

    if item.word is not None and item.certification is not Certification.EXPECTED_VALUE:
        spec = parse_pin_spec(item.word)
        if logger:
            logger.log("cyan", _("Checking {0} on {1}").format(item.name, item.word))
        if item.interior:
            interior = interior_indecomposable_counts(spec, max_len)
            checks.append(("interior", list(interior.values) == series(item.indec_gf, max_len)[1:]))
        else:
            counts = class_counts(spec, max_len, prefix_budget=prefix_budget, logger=logger)
            checks.append(("brute_force", list(counts.values) == series(item.class_gf, max_len)[1:]))
            method = "brute" if item.name == "kappa" else "both"
            try:
                indec = indecomposable_counts(spec, max_len, method=method, prefix_budget=prefix_budget, logger=logger)
            except PinClassError as e:
                if logger:
                    logger.log("red", str(e))
                checks.append(("indecomposables", False))
            else:
                checks.append(("indecomposables", list(indec.values) == series(item.indec_gf, max_len)[1:]))

    return VerificationReport(item.name, item.expected, computed, delta, item.certification, tuple(checks))


# ---------------------------------------------------------------------------
# Tables and certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NuRow:
    ell: int
    sequence: Tuple[int, ...]
    growth: float
    expected: str


def nu_table() -> list[NuRow]:
    rows = []
    for ell in range(1, 7):
        item = entry(f"nu_{ell}")
        spec = parse_pin_spec(item.word)
        sequence = indecomposable_counts(spec, 2 * ell + 2, method="formula").values
        growth = isolate_growth_rate(item.class_gf).value
        rows.append(NuRow(ell, sequence, growth, item.expected))
    return rows


@dataclass(frozen=True)
class CertificateReport:
    k: int
    g: RationalGF
    root: float
    bound: float
    checks: Tuple[Tuple[str, bool], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(ok for _label, ok in self.checks)


def _strictly_below(lower_fn, upper_fn, rounds: int = 40) -> bool:
    """Certify lower < upper by shrinking both brackets"""
    tol = CERTIFICATE_TOLERANCE
    for _round in range(rounds):
        low, high = lower_fn(tol), upper_fn(tol)
        if low.hi < high.lo:
            return True
        if low.lo > high.hi:
            return False
        tol /= 2
    return False


def mu_lower_bound_certificate(k: int) -> CertificateReport:
    """
    Certify that a box interior whose recurrent complexity dominates s_k grows at
    least as fast as mu: the smallest solution of g_s = 1 lies at or below 1/mu.
    """
    if k < 2:
        raise InvalidSpecError(_("k must be at least 2"))
    g_s = mu_bound_gf(k)
    checks = [("profile", series(g_s, 4 * k + 4) == series(mu_profile_gf(k), 4 * k + 4))]
    if k >= 4:
        difference = RationalGF(
            IntPolynomial.monomial(2 * k - 2) * IntPolynomial((1, 0, -2)), ONE_MINUS_Z ** 2
        )
        checks.append(("identity", g_s - G_STAR == difference))
        chain = SturmChain(IntPolynomial((1, 0, -2)))
        checks.append(("nonnegative", chain.count(Fraction(0), Fraction(1, 2)) == 0))
    checks.append(("below_mu", _strictly_below(
        lambda t: isolate_g_eq_1(g_s, t), lambda t: isolate_g_eq_1(G_STAR, t)
    )))
    root = isolate_g_eq_1(g_s, CERTIFICATE_TOLERANCE)
    bound = isolate_growth_rate(ONE_GF / (ONE_GF - g_s), CERTIFICATE_TOLERANCE)
    return CertificateReport(k, g_s, root.value, bound.value, tuple(checks))


@dataclass(frozen=True)
class GkFamily:
    rows: Tuple[Tuple[int, float], ...]
    increasing: bool
    below_mu: bool


def gk_family(k_max: int) -> GkFamily:
    if k_max < 2:
        raise InvalidSpecError(_("k_max must be at least 2"))
    brackets = [(k, isolate_g_eq_1(gk_gf(k), CERTIFICATE_TOLERANCE)) for k in range(2, k_max + 1)]
    mu_root = isolate_g_eq_1(G_STAR, CERTIFICATE_TOLERANCE)
    increasing = all(a.hi < b.lo for (_k, a), (_k2, b) in zip(brackets, brackets[1:]))
    below = all(b.hi < mu_root.lo for _k, b in brackets)
    return GkFamily(tuple((k, b.value) for k, b in brackets), increasing, below)


@dataclass(frozen=True)
class BoundCheck:
    label: str
    denominator: IntPolynomial
    expected: str
    computed: float

    @property
    def passed(self) -> bool:
        return abs(self.computed - float(self.expected)) <= printed_tolerance(self.expected)


def _bound(label: str, gf: RationalGF, expected_denominator: str, expected: str) -> BoundCheck:
    if gf.denominator != _poly(expected_denominator):
        raise PinClassError(_("{0}: rebuilt denominator {1} differs from {2}").format(
            label, gf.denominator.ascending(), expected_denominator))
    return BoundCheck(label, gf.denominator, expected, isolate_growth_rate(gf).value)


def three_quadrant_bound_check() -> list[BoundCheck]:
    return [
        _bound("three_quadrant_case", three_quadrant_helper_gf(), "1-3z-2z^2+z^4", "3.542"),
        _bound("lambda", lambda_gf(), "1-3z-z^2+z^4-z^5", "3.28481"),
    ]


def four_quadrant_bound_check() -> list[BoundCheck]:
    widdershins = entry("widdershins")
    return [
        _bound("x_class", x_class_gf(), "1-4z+2z^2", "3.414"),
        _bound("four_quadrant_helper", four_quadrant_helper_gf(), "1-4z+z^2+z^3", "3.65109"),
        BoundCheck(
            "widdershins", widdershins.polynomial, widdershins.expected,
            isolate_largest_real_root(widdershins.polynomial).value,
        ),
    ]


ORDERING = ("kappa", "nu_1", "nu_2", "nu_3", "nu_4", "nu_5", "nu_6", "mu", "lambda", "nu_2_2")


def ordering_check() -> Tuple[Tuple[Tuple[str, float], ...], bool]:
    """kappa < nu_1 < ... < nu_6 < mu < lambda < nu_2_2, and mu < 3.310 < 3.397"""
    def bracket(name):
        return lambda t: isolate_largest_real_root(entry(name).polynomial, t)

    def bound(k):
        return lambda t: isolate_growth_rate(ONE_GF / (ONE_GF - mu_bound_gf(k)), t)

    chain = [bracket(name) for name in ORDERING]
    holds = all(_strictly_below(a, b) for a, b in zip(chain, chain[1:]))
    holds = holds and _strictly_below(bracket("mu"), bound(3)) and _strictly_below(bound(3), bound(2))
    values = tuple((name, fn(CERTIFICATE_TOLERANCE).value) for name, fn in zip(ORDERING, chain))
    values += (("bound_k3", bound(3)(CERTIFICATE_TOLERANCE).value), ("bound_k2", bound(2)(CERTIFICATE_TOLERANCE).value))
    return values, holds
