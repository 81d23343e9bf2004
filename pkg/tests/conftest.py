"""Shared helpers for the test suite.

Random instances come from the CLI module's generators so the suites
exercise exactly the distributions the command line emits; seeds are fixed
everywhere, so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from troppsd.cli import GRID, random_member_matrix, random_symmetric_matrix

__all__ = [
    "GRID",
    "random_member_matrix",
    "random_symmetric_matrix",
    "random_vector",
    "rng_for",
]


def rng_for(label: str) -> random.Random:
    """A fresh deterministic generator per test, independent of ordering."""
    return random.Random(label)


def random_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(rng.choice(GRID) for _ in range(n))
