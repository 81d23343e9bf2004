"""Exact min-plus (tropical) linear algebra over the rationals.

The semiring is (Q, min, +): tropical sum is ``min`` and tropical product
is ``+``.  Every scalar is a ``fractions.Fraction``; floats are rejected at
the boundary so that all comparisons inside the library are exact.  General
matrices are plain sequences of rows; symmetric matrices get a compact
dedicated type because they are the object everything else studies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from operator import getitem
from typing import Iterable, NamedTuple, Union

from .errors import CapacityError

__all__ = [
    "BRUTEFORCE_LIMIT",
    "RatLike",
    "SymMatrix",
    "TropicalDet",
    "as_rat",
    "evaluate_quadratic_form",
    "is_rank_one_symmetric",
    "rank_one_from_vector",
    "trop_det_assignment",
    "trop_det_bruteforce",
    "trop_mat_mul",
]

RatLike = Union[Fraction, int, str]

# Permutation enumeration guard for the brute-force determinant.
BRUTEFORCE_LIMIT = 9


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, a string like ``"-3/2"``, or a Fraction to a Fraction.

    Floats are rejected on purpose: a binary float almost never equals the
    decimal the caller had in mind, and exact boundary comparisons are the
    whole point of this library.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _matrix_rows(matrix) -> tuple[tuple[Fraction, ...], ...]:
    if isinstance(matrix, SymMatrix):
        return matrix.rows()
    rows = tuple(tuple(as_rat(x) for x in row) for row in matrix)
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows have unequal lengths")
    return rows


def _common_scale(rows) -> tuple[list[list[int]], int]:
    """Clear denominators: (integer matrix, scale) with int = scale * value."""
    scale = 1
    for row in rows:
        for x in row:
            d = x.denominator
            scale = scale // gcd(scale, d) * d
    ints = [[x.numerator * (scale // x.denominator) for x in row] for row in rows]
    return ints, scale


def _tri_index(n: int, i: int, j: int) -> int:
    return i * n - (i * (i - 1)) // 2 + (j - i)


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix of exact rationals, stored as its upper triangle.

    Indices are 0-based.  Reading ``A[i, j]`` with ``i > j`` returns the
    stored ``(j, i)`` entry, so symmetry holds by construction.  Instances
    are immutable and hashable.  ``+`` and scalar ``*`` act entrywise in
    ordinary (not tropical) arithmetic; that is how cone combinations are
    formed.
    """

    n: int
    upper: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matrix dimension must be at least 1")
        expect = self.n * (self.n + 1) // 2
        if len(self.upper) != expect:
            raise ValueError(
                f"need {expect} upper-triangle entries, got {len(self.upper)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "SymMatrix":
        grid = _matrix_rows(rows)
        n = len(grid)
        if len(grid[0]) != n:
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if grid[i][j] != grid[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        return cls(n, tuple(grid[i][j] for i in range(n) for j in range(i, n)))

    @classmethod
    def from_upper(cls, n: int, entries: Iterable[RatLike]) -> "SymMatrix":
        """Build from upper-triangle entries in row-major (i <= j) order."""
        return cls(n, tuple(as_rat(x) for x in entries))

    @classmethod
    def zero(cls, n: int) -> "SymMatrix":
        return cls(n, (Fraction(0),) * (n * (n + 1) // 2))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"index ({i}, {j}) out of range for n={self.n}")
        if i > j:
            i, j = j, i
        return self.upper[_tri_index(self.n, i, j)]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(self[i, j] for j in range(self.n)) for i in range(self.n)
        )

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self[i, i] for i in range(self.n))

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        if not isinstance(other, SymMatrix) or other.n != self.n:
            return NotImplemented
        return SymMatrix(self.n, tuple(a + b for a, b in zip(self.upper, other.upper)))

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        if not isinstance(other, SymMatrix) or other.n != self.n:
            return NotImplemented
        return SymMatrix(self.n, tuple(a - b for a, b in zip(self.upper, other.upper)))

    def __neg__(self) -> "SymMatrix":
        return SymMatrix(self.n, tuple(-a for a in self.upper))

    def __mul__(self, scalar: RatLike) -> "SymMatrix":
        c = as_rat(scalar)
        return SymMatrix(self.n, tuple(c * a for a in self.upper))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.rows()
        )


class TropicalDet(NamedTuple):
    """Tropical determinant value plus every permutation attaining it."""

    value: Fraction
    argmins: frozenset[tuple[int, ...]]


def trop_mat_mul(a, b) -> tuple[tuple[Fraction, ...], ...]:
    """Tropical matrix product: entry (i, k) is min_j (a[i][j] + b[j][k])."""
    ra = _matrix_rows(a)
    rb = _matrix_rows(b)
    inner = len(ra[0])
    if len(rb) != inner:
        raise ValueError(f"inner dimensions disagree: {inner} vs {len(rb)}")
    cols = range(len(rb[0]))
    return tuple(
        tuple(min(row[j] + rb[j][k] for j in range(inner)) for k in cols)
        for row in ra
    )


def trop_det_bruteforce(matrix) -> TropicalDet:
    """Tropical determinant by scanning every permutation.

    Returns the minimum of sum_i a[i][sigma(i)] over all sigma together
    with the full set of minimizing permutations; ties carry real meaning
    on the cone boundary, so one witness would not do.  Guarded to n <= 9.
    Denominators are cleared up front so the scan runs on plain integers.
    """
    rows = _matrix_rows(matrix)
    n = len(rows)
    if len(rows[0]) != n:
        raise ValueError("tropical determinant needs a square matrix")
    if n > BRUTEFORCE_LIMIT:
        raise CapacityError(
            f"n={n} exceeds the n<={BRUTEFORCE_LIMIT} enumeration guard;"
            " use trop_det_assignment for the value"
        )
    ints, scale = _common_scale(rows)
    best = None
    argmins: list[tuple[int, ...]] = []
    for perm in permutations(range(n)):
        s = sum(map(getitem, ints, perm))
        if best is None or s < best:
            best = s
            argmins = [perm]
        elif s == best:
            argmins.append(perm)
    return TropicalDet(Fraction(best, scale), frozenset(argmins))


def trop_det_assignment(matrix) -> Fraction:
    """Tropical determinant as an exact min-cost assignment.

    Shortest-augmenting-path method with potentials, run on integers after
    clearing denominators, so the value is exact for any rational matrix
    and no permutation enumeration happens.  Agrees with
    ``trop_det_bruteforce(...).value`` wherever the latter is defined.
    """
    rows = _matrix_rows(matrix)
    n = len(rows)
    if len(rows[0]) != n:
        raise ValueError("tropical determinant needs a square matrix")
    a, scale = _common_scale(rows)
    inf = float("inf")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)  # match[j]: 1-based row assigned to column j, 0 if free
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        way = [0] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            row = a[i0 - 1]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    return Fraction(-v[0], scale)


def evaluate_quadratic_form(matrix: SymMatrix, vector) -> Fraction:
    """Value of the tropical quadratic form: min over i, j of a[i][j] + y[i] + y[j]."""
    y = tuple(as_rat(t) for t in vector)
    if len(y) != matrix.n:
        raise ValueError(f"vector length {len(y)} does not match n={matrix.n}")
    return min(
        matrix[i, j] + y[i] + y[j]
        for i in range(matrix.n)
        for j in range(i, matrix.n)
    )


def is_rank_one_symmetric(matrix: SymMatrix) -> bool:
    """Whether the matrix is a tropical outer square u (+) u^T.

    Equivalent forms: 2*a[i][j] == a[i][i] + a[j][j] for all i < j, or the
    minimum being attained twice in every 2x2 tropical minor.  When true,
    the vector is recovered by halving the diagonal.
    """
    return all(
        2 * matrix[i, j] == matrix[i, i] + matrix[j, j]
        for i in range(matrix.n)
        for j in range(i + 1, matrix.n)
    )


def rank_one_from_vector(vector) -> SymMatrix:
    """Tropical rank-one symmetric matrix with entries u[i] + u[j]."""
    u = tuple(as_rat(t) for t in vector)
    n = len(u)
    if n == 0:
        raise ValueError("vector must be nonempty")
    return SymMatrix(n, tuple(u[i] + u[j] for i in range(n) for j in range(i, n)))
