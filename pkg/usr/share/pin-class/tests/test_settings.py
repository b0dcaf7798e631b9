#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/test_settings.py - Persistent user settings
#

import json

from core.config import DEFAULT_MAX_LEN, DEFAULT_PREFIX_BUDGET
from core.settings import Settings


def test_defaults(isolated_settings):
    assert isolated_settings.get("max_len") == DEFAULT_MAX_LEN
    assert isolated_settings.get("prefix_budget") == DEFAULT_PREFIX_BUDGET == 256
    assert isolated_settings.get("output_format") == "text"
    assert isolated_settings.get("missing", "fallback") == "fallback"


def test_set_persists(tmp_path):
    settings = Settings(config_dir=str(tmp_path), environ={})
    settings.set("max_len", 10)
    assert json.loads((tmp_path / "config.json").read_text(encoding="utf-8"))["max_len"] == 10
    assert Settings(config_dir=str(tmp_path), environ={}).get("max_len") == 10


def test_file_is_merged_with_defaults(tmp_path):
    (tmp_path / "config.json").write_text(json.dumps({"tolerance": "1/1000"}), encoding="utf-8")
    settings = Settings(config_dir=str(tmp_path), environ={})
    assert settings.get("tolerance") == "1/1000"
    assert settings.get("max_len") == DEFAULT_MAX_LEN


def test_corrupt_file_falls_back_to_defaults(tmp_path):
    (tmp_path / "config.json").write_text("{not json", encoding="utf-8")
    assert Settings(config_dir=str(tmp_path), environ={}).get("max_len") == DEFAULT_MAX_LEN


def test_budget_environment_variable(tmp_path, capsys):
    assert Settings(config_dir=str(tmp_path), environ={"PINCLASS_BUDGET": "64"}).get("prefix_budget") == 64
    ignored = Settings(config_dir=str(tmp_path), environ={"PINCLASS_BUDGET": "lots"})
    assert ignored.get("prefix_budget") == DEFAULT_PREFIX_BUDGET
    captured = capsys.readouterr()
    assert "PINCLASS_BUDGET" in captured.err
    assert captured.out == ""


def test_reset(tmp_path):
    settings = Settings(config_dir=str(tmp_path), environ={})
    settings.set("output_format", "json")
    settings.reset()
    assert settings.get("output_format") == "text"
    assert Settings(config_dir=str(tmp_path), environ={}).get("output_format") == "text"
