"""Regular subdivisions of the doubled simplex and exact hull facets.

A symmetric n x n matrix lifts the lattice point e_i + e_j of the dilated
simplex 2*Delta_{n-1} (nonnegative coordinates summing to 2) to height
a[i][j].  Projecting the lower facets of the lifted points subdivides the
simplex; the functionals supporting upper facets of the same lift are the
rank-one summands used by the factorization module.  Membership in the
tropical PSD cone is the same thing as this subdivision being trivial.

Enumeration is exact and elementary.  A facet functional is pinned by any
n lifted points whose pair graph forces a unique solution of
lambda_i + lambda_j = height, so every candidate arises from an n-point
subset; heights are scaled to even integers first, which makes every
candidate functional integral and keeps the search in fast exact integer
arithmetic.  Functionals are canonical: the affine constant is folded into
the vector (on the hyperplane sum(x) = 2, adding a constant c is the same
as adding c/2 to every coordinate), so a facet functional literally is the
vector of a tropical rank-one matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from .errors import CapacityError
from .trop_core import SymMatrix

__all__ = [
    "Facet",
    "HULL_LIMIT",
    "LatticePoint",
    "Subdivision",
    "is_psd_by_subdivision",
    "is_trivial",
    "lattice_points",
    "lower_facets",
    "lower_subdivision",
    "upper_facets",
]

LatticePoint = tuple[int, int]

# n(n+1)/2 points and C(points, n) candidate subsets; 28 points at n = 7.
HULL_LIMIT = 7


def lattice_points(n: int) -> list[LatticePoint]:
    """All pairs (i, j) with i <= j, i.e. the points e_i + e_j, in lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclass(frozen=True)
class Facet:
    """One facet of the lifted point set's upper or lower hull.

    The functional evaluates to functional[i] + functional[j] at lattice
    point (i, j).  It meets the lift exactly on ``touching_set`` and lies on
    the valid side everywhere else (at or above every height for an upper
    facet, at or below for a lower one).  Touching sets affinely span the
    simplex hyperplane; that is what makes them facets.
    """

    functional: tuple[Fraction, ...]
    touching_set: frozenset[LatticePoint]

    def value_at(self, point: LatticePoint) -> Fraction:
        i, j = point
        return self.functional[i] + self.functional[j]


@dataclass(frozen=True)
class Subdivision:
    """Cells of a regular subdivision: the lower facets' touching sets.

    Lattice points lifted strictly above the lower hull belong to no cell;
    the cells' convex hulls still cover the simplex.
    """

    cells: tuple[frozenset[LatticePoint], ...]


def is_trivial(subdivision: Subdivision) -> bool:
    """A subdivision is trivial when it consists of a single maximal cell."""
    return len(subdivision.cells) == 1


def _even_heights(matrix: SymMatrix) -> tuple[list[list[int]], int]:
    """Scaled heights H = denom * a with denom = 2 * lcm(denominators).

    Every H entry is an even integer; that parity is what makes all
    candidate functionals integral (solving around an odd cycle divides an
    alternating height sum by two).
    """
    scale = 1
    for x in matrix.upper:
        d = x.denominator
        scale = scale // gcd(scale, d) * d
    denom = 2 * scale
    n = matrix.n
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            h = matrix[i, j]
            v = h.numerator * (denom // h.denominator)
            grid[i][j] = v
            grid[j][i] = v
    return grid, denom


def _solve_pair_system(
    n: int, points, heights
) -> Optional[tuple[int, ...]]:
    """Unique integer solution of lambda_i + lambda_j = H[i][j] over points.

    Returns None when the system is underdetermined or inconsistent.  On
    each connected component of the pair graph the values propagate as
    +-x + offset from a root; a loop or an odd closed walk pins x, an even
    closed walk only imposes a consistency condition.
    """
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    loop_heights: list[list[int]] = [[] for _ in range(n)]
    for i, j in points:
        if i == j:
            loop_heights[i].append(heights[i][i])
        else:
            h = heights[i][j]
            adjacency[i].append((j, h))
            adjacency[j].append((i, h))
    sign = [0] * n
    offset = [0] * n
    lam = [0] * n
    for root in range(n):
        if sign[root] != 0:
            continue
        sign[root] = 1
        offset[root] = 0
        queue = [root]
        pinned = None
        k = 0
        while k < len(queue):
            v = queue[k]
            k += 1
            sv = sign[v]
            cv = offset[v]
            for w, h in adjacency[v]:
                if sign[w] == 0:
                    sign[w] = -sv
                    offset[w] = h - cv
                    queue.append(w)
                else:
                    s = sv + sign[w]
                    c = cv + offset[w]
                    if s == 0:
                        if c != h:
                            return None
                    else:
                        value, rem = divmod(h - c, s)
                        if rem:
                            return None
                        if pinned is None:
                            pinned = value
                        elif pinned != value:
                            return None
        for v in queue:
            for h in loop_heights[v]:
                value, rem = divmod(h - 2 * offset[v], 2 * sign[v])
                if rem:
                    return None
                if pinned is None:
                    pinned = value
                elif pinned != value:
                    return None
        if pinned is None:
            return None
        for v in queue:
            lam[v] = sign[v] * pinned + offset[v]
    return tuple(lam)


def _facet_scan(
    matrix: SymMatrix, upper: bool, stop_after: Optional[int] = None
) -> tuple[list[tuple[tuple[LatticePoint, ...], tuple[int, ...]]], int]:
    """All hull facets on one side, as (touching tuple, scaled functional).

    Candidate functionals come from n-point subsets with a pinned solution;
    each distinct candidate is validated once against every lifted point.
    ``stop_after`` allows an early exit after that many facets (triviality
    tests need to see at most two).  Returns the scaled facets, sorted
    lexicographically by touching set, plus the height denominator.
    """
    n = matrix.n
    if n > HULL_LIMIT:
        raise CapacityError(f"hull enumeration supports n <= {HULL_LIMIT}, got {n}")
    heights, denom = _even_heights(matrix)
    points = lattice_points(n)
    count = len(points)
    point_heights = [heights[i][j] for i, j in points]
    vertex_masks = [(1 << i) | (1 << j) for i, j in points]
    full_mask = (1 << n) - 1
    seen: set[tuple[int, ...]] = set()
    found: list[tuple[tuple[LatticePoint, ...], tuple[int, ...]]] = []
    for subset in combinations(range(count), n):
        mask = 0
        for k in subset:
            mask |= vertex_masks[k]
        if mask != full_mask:
            continue
        lam = _solve_pair_system(n, [points[k] for k in subset], heights)
        if lam is None or lam in seen:
            continue
        seen.add(lam)
        valid = True
        touching: list[LatticePoint] = []
        for k in range(count):
            i, j = points[k]
            value = lam[i] + lam[j]
            h = point_heights[k]
            if value == h:
                touching.append((i, j))
            elif (value < h) if upper else (value > h):
                valid = False
                break
        if not valid:
            continue
        found.append((tuple(touching), lam))
        if stop_after is not None and len(found) >= stop_after:
            break
    found.sort()
    return found, denom


def _facets(matrix: SymMatrix, upper: bool) -> list[Facet]:
    scan, denom = _facet_scan(matrix, upper=upper)
    return [
        Facet(tuple(Fraction(x, denom) for x in lam), frozenset(touching))
        for touching, lam in scan
    ]


def upper_facets(matrix: SymMatrix) -> list[Facet]:
    """Facets of the upper hull of the lift, in lex touching-set order.

    When the matrix is in the tropical PSD cone, every lattice point lies
    on the upper hull, so the touching sets jointly cover all of them.
    """
    return _facets(matrix, upper=True)


def lower_facets(matrix: SymMatrix) -> list[Facet]:
    """Facets of the lower hull of the lift, in lex touching-set order.

    Mirrors ``upper_facets``: negating all heights swaps the two hulls.
    """
    return _facets(matrix, upper=False)


def lower_subdivision(matrix: SymMatrix) -> Subdivision:
    """The regular subdivision of the simplex induced by the heights."""
    scan, _ = _facet_scan(matrix, upper=False)
    return Subdivision(tuple(frozenset(touching) for touching, _ in scan))


def is_psd_by_subdivision(matrix: SymMatrix) -> bool:
    """Cone membership via triviality of the induced subdivision.

    Scanning stops as soon as two distinct lower facets are known, which
    keeps the common rejecting case fast; the verdict equals
    ``is_trivial(lower_subdivision(matrix))``.
    """
    scan, _ = _facet_scan(matrix, upper=False, stop_after=2)
    return len(scan) == 1
