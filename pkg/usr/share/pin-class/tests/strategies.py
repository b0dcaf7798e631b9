#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/strategies.py - Hypothesis strategies for words and permutations
#

from hypothesis import strategies as st

from core.pinwords import BasicWord, Direction, basic_to_memory
from core.words import EventuallyPeriodic

HORIZONTAL = (Direction.L, Direction.R)
VERTICAL = (Direction.U, Direction.D)


@st.composite
def pin_words(draw, min_size=2, max_size=7):
    """Accepted pin words, drawn in the basic encoding"""
    quadrant = draw(st.integers(1, 4))
    horizontal_first = draw(st.booleans())
    size = draw(st.integers(min_size, max_size))
    moves = []
    for i in range(size - 1):
        horizontal = horizontal_first == (i % 2 == 0)
        moves.append(draw(st.sampled_from(HORIZONTAL if horizontal else VERTICAL)))
    return basic_to_memory(BasicWord(quadrant, tuple(moves)))


binary_text = st.text(alphabet="01", max_size=5)


@st.composite
def eventually_periodic_binary(draw):
    head = draw(binary_text)
    cycle = draw(st.text(alphabet="01", min_size=1, max_size=5))
    return EventuallyPeriodic(tuple(head), tuple(cycle))
