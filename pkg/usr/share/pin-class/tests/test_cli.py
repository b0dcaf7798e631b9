#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/test_cli.py - Verbs, output formats and exit codes
#

import json

import pytest

from cli.main_cli import run
from core.config import EXIT_BUDGET, EXIT_OK, EXIT_VALIDATION
from core.settings import Settings


class TestPerm:
    def test_pin_permutation(self, cli):
        code, out, _err = cli("perm", "pin:lit:ru,ur,ru,ur,lu,ul,ru")
        assert code == EXIT_OK
        assert out == "4731526|x=2,y=0\n"

    def test_decompose(self, cli):
        code, out, _err = cli("perm", "132|x=1,y=1", "--decompose")
        assert code == EXIT_OK
        assert out == "21|x=0,y=0\n1|x=1,y=1\n"

    def test_box_sum(self, cli):
        _code, out, _err = cli("perm", "1|x=0,y=0", "--box-sum", "1|x=1,y=0")
        assert out == "21|x=1,y=0\n"

    def test_indecomposable_json(self, cli):
        _code, out, _err = cli("perm", "12|x=0,y=0", "--indecomposable", "--format", "json")
        assert json.loads(out) == {"indecomposable": False}

    def test_infinite_word_with_length(self, cli):
        _code, out, _err = cli("perm", "pin:per:;ru,ur", "--length", "4")
        assert out == "3142|x=0,y=0\n"

    def test_griddings_json(self, cli):
        _code, out, _err = cli("perm", "21|x=0,y=0", "--griddings", "--format", "json")
        assert json.loads(out)["count"] == 9


class TestConvert:
    def test_basic_to_memory(self, cli):
        code, out, _err = cli("convert", "basic:1urulur")
        assert code == EXIT_OK
        assert out == "ru,ur,ru,ur,lu,ul,ru\n"

    def test_memory_to_basic(self, cli):
        _code, out, _err = cli("convert", "pin:lit:ru,ur,ru,ur,lu,ul,ru")
        assert out == "basic:1urulur\n"

    def test_symmetry_keeps_the_encoding(self, cli):
        _code, out, _err = cli("convert", "ur l d r", "--symmetry", "flip_h")
        assert out == "ul,ru,dr,ld\n"

    def test_single_letter_is_ambiguous(self, cli):
        code, out, err = cli("convert", "ru", "--to", "basic")
        assert code == EXIT_VALIDATION
        assert out == ""
        assert "ambiguous first-letter encoding" in err


class TestValidate:
    def test_accepted(self, cli):
        code, out, _err = cli("validate", "basic:1urulur")
        assert code == EXIT_OK
        assert out == "accepted\n"

    def test_rejected(self, cli):
        code, _out, err = cli("validate", "pin:lit:ru,rd")
        assert code == EXIT_VALIDATION
        assert "ERROR" in err


class TestCounts:
    def test_kappa_counts(self, cli):
        code, out, _err = cli("count", "pin:per:;ru,ur", "--max-len", "5")
        assert code == EXIT_OK
        assert out == "1 1\n2 2\n3 5\n4 11\n5 24\n"

    def test_json_lines(self, cli):
        _code, out, _err = cli("count", "phi(per:;10)", "--max-len", "3", "--format", "json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert [row["count"] for row in rows] == [2, 6, 18]
        assert rows[0]["provenance"] == "brute_force"

    def test_budget_exit_code(self, cli):
        code, out, _err = cli("count", "pin:per:;ru,ur", "--max-len", "10", "--prefix-budget", "20")
        assert code == EXIT_BUDGET
        assert out == ""

    def test_budget_from_environment(self, capsys, tmp_path):
        settings = Settings(config_dir=str(tmp_path), environ={"PINCLASS_BUDGET": "20"})
        assert run(["count", "pin:per:;ru,ur", "--max-len", "10"], settings=settings) == EXIT_BUDGET
        capsys.readouterr()

    def test_bad_budget_variable_keeps_json_clean(self, capsys, tmp_path):
        settings = Settings(config_dir=str(tmp_path), environ={"PINCLASS_BUDGET": "lots"})
        assert run(["count", "pin:per:;ru,ur", "--max-len", "2", "--format", "json"], settings=settings) == EXIT_OK
        captured = capsys.readouterr()
        assert [json.loads(line)["count"] for line in captured.out.splitlines()] == [1, 2]
        assert "PINCLASS_BUDGET" in captured.err

    def test_max_len_cap(self, cli):
        code, _out, _err = cli("count", "pin:per:;ru,ur", "--max-len", "13")
        assert code == EXIT_VALIDATION

    def test_formula_indecomposables_csv(self, cli):
        _code, out, _err = cli("indec", "phi(per:;01)", "--method", "formula", "--max-len", "4", "--format", "csv")
        assert out.splitlines() == [
            "length,count,provenance",
            "1,2,factor_formula",
            "2,2,factor_formula",
            "3,2,factor_formula",
            "4,4,factor_formula",
        ]


class TestWords:
    def test_factors(self, cli):
        _code, out, _err = cli("factors", "per:;01", "3")
        assert out == "010\n101\n"

    def test_complexity(self, cli):
        _code, out, _err = cli("complexity", "sturmian:1", "--max-len", "4")
        assert out == "1 2\n2 3\n3 4\n4 5\n"

    def test_periodicity(self, cli):
        _code, out, _err = cli("complexity", "per:00;01", "--periodicity")
        assert out == "eventually_periodic(2)\n"


class TestGeneratingFunctions:
    def test_growth_of_polynomial(self, cli):
        code, out, _err = cli("growth", "--poly", "z^3-2z^2-1", "--tol", "1e-6")
        assert code == EXIT_OK
        assert out == "2.205569\n"

    def test_growth_json(self, cli):
        _code, out, _err = cli("growth", "--gf", "(1-z)/(1-2z-z^3)", "--format", "json")
        assert json.loads(out)["growth"] == pytest.approx(2.2055694, abs=1e-7)

    def test_subexponential(self, cli):
        code, out, _err = cli("growth", "--gf", "(1)/(1+z)")
        assert code == EXIT_OK
        assert out == "subexponential\n"

    def test_closure(self, cli):
        _code, out, _err = cli("gf", "(z+z^3)/(1-z)", "--closure")
        assert out == "(1-z)/(1-2z-z^3)\n"

    def test_cartier_series(self, cli):
        _code, out, _err = cli("gf", "--cartier", "0", "z", "z", "z", "z", "--series", "4")
        assert out == "1,4,14,48,164\n"

    def test_from_counts(self, cli):
        _code, out, _err = cli("gf", "--from-counts", "2,2,2,4")
        assert out == "(2z+2z^4)/(1-z)\n"

    def test_root_of_g(self, cli):
        _code, out, _err = cli("root", "--g", "z", "--tol", "1e-3")
        assert out == "1.000\n"

    def test_invalid_polynomial(self, cli):
        code, _out, _err = cli("growth", "--poly", "z^")
        assert code == EXIT_VALIDATION


class TestCatalog:
    def test_verify(self, cli):
        code, out, _err = cli("catalog", "verify", "kappa", "--max-len", "6")
        assert code == EXIT_OK
        assert out.startswith("kappa 2.20557 ")
        assert out.rstrip().endswith("PASS")

    def test_unknown_entry(self, cli):
        code, _out, _err = cli("catalog", "show", "omega")
        assert code == EXIT_VALIDATION

    def test_certificate_json(self, cli):
        _code, out, _err = cli("catalog", "certificate", "3", "--format", "json")
        report = json.loads(out)
        assert report["passed"] is True
        assert report["bound"] == pytest.approx(3.310, abs=2e-3)

    def test_section4_table_csv(self, cli):
        code, out, _err = cli("table", "section4", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "ell,sequence,growth,expected"
        assert lines[1].startswith("1,\"2,2,2,4\",3.069")
        assert lines[1].endswith(",3.06918")
        assert len(lines) == 7
        assert out == cli("table", "nu", "--format", "csv")[1]

    def test_gk_target_must_be_an_integer(self, cli):
        code, out, _err = cli("catalog", "gk", "abc")
        assert code == EXIT_VALIDATION
        assert out == ""

    def test_nu_table_csv(self, cli):
        code, out, _err = cli("table", "nu", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 7
        assert lines[0] == "ell,sequence,growth,expected"


class TestSurface:
    def test_version(self, cli):
        code, _out, _err = cli("-V")
        assert code == EXIT_OK

    def test_unknown_verb(self, cli):
        code, _out, _err = cli("frobnicate")
        assert code == EXIT_VALIDATION

    def test_missing_verb(self, cli):
        code, _out, _err = cli()
        assert code == EXIT_VALIDATION

    def test_plot_to_stdout(self, cli):
        code, out, _err = cli("plot", "basic:1urulur")
        assert code == EXIT_OK
        assert out.startswith("<svg")

    def test_plot_to_file(self, cli, tmp_path):
        target = tmp_path / "oscillation.svg"
        code, out, _err = cli("plot", "132|x=1,y=1", "-o", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("<svg")
