#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# core/__init__.py - Core package initialization
#

"""
Core package for pin-class.
Pin words, gridded pin permutations, brute-force class enumeration,
exact generating functions and the catalog of named growth rates.
"""

__version__ = "1.0.0"
__author__ = "BigCommunity Team"
