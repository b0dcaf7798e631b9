#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/conftest.py - Shared fixtures and the hypothesis profile
#

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

# Add the application directory to the Python path
app_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if app_root not in sys.path:
    sys.path.insert(0, app_root)

from cli.main_cli import run
from core.settings import Settings

settings.register_profile(
    "pin-class",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pin-class")


@pytest.fixture
def isolated_settings(tmp_path):
    """Settings that ignore the user's config file and environment"""
    return Settings(config_dir=str(tmp_path / "config"), environ={})


@pytest.fixture
def cli(capsys, isolated_settings):
    def invoke(*argv):
        code = run(list(argv), settings=isolated_settings)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
