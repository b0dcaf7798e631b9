#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/test_catalog.py - Named classes, certificates and bound checks
#

import pytest

from core.catalog import (
    ENTRIES,
    G_STAR,
    G_STAR_NUMERATOR,
    CatalogEntry,
    Certification,
    entry,
    four_quadrant_bound_check,
    gk_family,
    gk_gf,
    mu_lower_bound_certificate,
    nu_indec_gf,
    nu_table,
    ordering_check,
    printed_tolerance,
    three_quadrant_bound_check,
    verify,
)
from core.errors import InvalidSpecError, UnknownEntryError
from core.genfun import IntPolynomial, growth_rate, largest_real_root, series

WITH_GF = sorted(name for name, item in ENTRIES.items() if item.class_gf is not None)


class TestEntries:
    def test_kappa(self):
        kappa = entry("kappa")
        assert kappa.word == "pin:per:;ru,ur"
        assert str(kappa.class_gf) == "(1-z)/(1-2z-z^3)"
        assert str(kappa.polynomial) == "z^3-2z^2-1"
        assert kappa.certification is Certification.FULLY_CERTIFIED

    def test_nu_2_2(self):
        item = entry("nu_2_2")
        assert item.word == "phi(per:;0011)"
        assert str(item.polynomial) == "z^4-3z^3-4z-2"
        assert item.expected == "3.39752"

    def test_three_quadrant_minimum_is_only_recorded(self):
        item = entry("three_quadrant_min")
        assert item.certification is Certification.EXPECTED_VALUE
        assert item.class_gf is None
        assert item.expected == "3.36132"

    def test_unknown(self):
        with pytest.raises(UnknownEntryError):
            entry("omega")

    def test_full_certification_needs_a_word(self):
        with pytest.raises(InvalidSpecError):
            CatalogEntry("x", "x", IntPolynomial((1, 1)), "1", Certification.FULLY_CERTIFIED)

    @pytest.mark.parametrize("name", sorted(ENTRIES))
    def test_root_matches_printed_digits(self, name):
        item = entry(name)
        assert abs(largest_real_root(item.polynomial) - float(item.expected)) <= printed_tolerance(item.expected)

    @pytest.mark.parametrize("name", WITH_GF)
    def test_growth_is_reciprocal_of_polynomial_root(self, name):
        item = entry(name)
        assert growth_rate(item.class_gf) == pytest.approx(largest_real_root(item.polynomial), abs=2e-4)

    @pytest.mark.parametrize("name", WITH_GF)
    def test_class_series_is_nonnegative(self, name):
        assert all(c >= 0 for c in series(entry(name).class_gf, 30))

    def test_printed_tolerance(self):
        assert printed_tolerance("3.542") == pytest.approx(1e-3)
        assert printed_tolerance("3") == 1.0


class TestVerify:
    @pytest.mark.parametrize("name", ["kappa", "nu_1", "nu_2"])
    def test_fully_certified(self, name):
        report = verify(name, max_len=6)
        labels = {label for label, _ok in report.checks}
        assert {"expected", "reciprocal", "nonnegative", "brute_force", "indecomposables"} <= labels
        assert report.passed

    @pytest.mark.parametrize("name", ["mu", "mu_bstar"])
    def test_interior_entries(self, name):
        report = verify(name, max_len=10)
        assert ("interior", True) in report.checks
        assert report.passed

    def test_expected_value_entry_checks_only_the_root(self):
        report = verify("widdershins")
        assert [label for label, _ok in report.checks] == ["expected"]
        assert report.passed

    def test_report_dict(self):
        report = verify("x_class").as_dict()
        assert report["name"] == "x_class"
        assert report["certification"] == "formula_only"
        assert report["passed"] is True
        assert report["computed"] == pytest.approx(3.414213562, abs=1e-9)


class TestNuTable:
    def test_rows(self):
        rows = nu_table()
        assert [row.ell for row in rows] == [1, 2, 3, 4, 5, 6]
        assert rows[0].sequence == (2, 2, 2, 4)
        assert rows[2].sequence[:6] == (2, 2, 4, 7, 8, 8)
        for row in rows:
            assert row.growth == pytest.approx(float(row.expected), abs=1e-4)
            assert list(row.sequence) == series(nu_indec_gf(row.ell), 2 * row.ell + 2)[1:]

    def test_growth_increases_with_ell(self):
        growths = [row.growth for row in nu_table()]
        assert growths == sorted(growths)


class TestMuCertificates:
    @pytest.mark.parametrize("k", range(2, 9))
    def test_certificate_passes(self, k):
        report = mu_lower_bound_certificate(k)
        assert report.passed
        assert report.root <= 1 / 3.28277 + 1e-5

    def test_small_k_bounds(self):
        assert mu_lower_bound_certificate(2).bound == pytest.approx(3.397, abs=2e-3)
        assert mu_lower_bound_certificate(3).bound == pytest.approx(3.310, abs=2e-3)

    def test_identity_is_checked_from_k_four(self):
        labels = [label for label, _ok in mu_lower_bound_certificate(4).checks]
        assert labels == ["profile", "identity", "nonnegative", "below_mu"]

    def test_identity_catches_a_wrong_numerator(self, monkeypatch):
        assert ("identity", True) in mu_lower_bound_certificate(5).checks
        monkeypatch.setattr("core.catalog.G_STAR_NUMERATOR", G_STAR_NUMERATOR + IntPolynomial.monomial(9))
        report = mu_lower_bound_certificate(5)
        assert ("identity", False) in report.checks
        assert not report.passed

    def test_k_must_be_at_least_two(self):
        with pytest.raises(InvalidSpecError):
            mu_lower_bound_certificate(1)


class TestGkFamily:
    def test_roots_increase_toward_mu(self):
        family = gk_family(8)
        assert [k for k, _root in family.rows] == list(range(2, 9))
        assert family.increasing
        assert family.below_mu

    @pytest.mark.parametrize("k", [3, 4, 6])
    def test_series_agrees_with_g_star_up_to_2k_plus_1(self, k):
        assert series(gk_gf(k), 2 * k + 1) == series(G_STAR, 2 * k + 1)
        assert series(gk_gf(k), 2 * k + 2) != series(G_STAR, 2 * k + 2)

    def test_first_ten_coefficients_need_k_at_least_four(self):
        assert series(gk_gf(3), 9) != series(G_STAR, 9)
        for k in range(4, 9):
            assert series(gk_gf(k), 9) == series(G_STAR, 9)

    def test_k_max(self):
        with pytest.raises(InvalidSpecError):
            gk_family(1)


class TestBoundChecks:
    def test_three_quadrant(self):
        checks = three_quadrant_bound_check()
        assert [c.label for c in checks] == ["three_quadrant_case", "lambda"]
        assert all(c.passed for c in checks)
        assert checks[1].computed == pytest.approx(3.28481, abs=1e-5)

    def test_four_quadrant(self):
        checks = four_quadrant_bound_check()
        assert [c.label for c in checks] == ["x_class", "four_quadrant_helper", "widdershins"]
        assert all(c.passed for c in checks)
        assert checks[1].computed == pytest.approx(3.65109, abs=1e-5)


def test_phase_transition_ordering():
    values, holds = ordering_check()
    assert holds
    names = [name for name, _value in values]
    assert names[:3] == ["kappa", "nu_1", "nu_2"]
    assert names[-2:] == ["bound_k3", "bound_k2"]
