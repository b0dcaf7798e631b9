#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cli/__init__.py - CLI package initialization
#

"""
Command line interface for pin-class.
Argument parsing, verb handlers and the Rich logger.
"""
