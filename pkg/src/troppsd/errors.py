"""Shared exception types."""

from __future__ import annotations


class CapacityError(Exception):
    """Input size exceeds an enumeration-based routine's supported range."""


class NotAMemberError(ValueError):
    """The matrix lies outside the tropical PSD cone.

    ``pair`` is the lexicographically smallest 0-based pair (i, j), i < j,
    with a[i][i] + a[j][j] > 2 * a[i][j].
    """

    def __init__(self, pair: tuple[int, int]):
        i, j = pair
        super().__init__(
            f"not tropically PSD: x[{i + 1},{i + 1}] + x[{j + 1},{j + 1}]"
            f" > 2*x[{i + 1},{j + 1}]"
        )
        self.pair = pair
