"""Subdivisions and hull facets: examples, oracle agreement, geometry."""

from fractions import Fraction as F
from itertools import combinations

import pytest

from conftest import rng_for
from troppsd import (
    CapacityError,
    SymMatrix,
    is_psd_by_subdivision,
    is_trivial,
    is_trop_psd_inequalities,
    lattice_points,
    lower_facets,
    lower_subdivision,
    upper_facets,
)
from troppsd.cli import random_member_matrix, random_symmetric_matrix


def cells(subdivision):
    return set(subdivision.cells)


def fs(*points):
    return frozenset(points)


# ---------------------------------------------------------------------------
# Independent oracles: generic Gaussian elimination, no parity propagation.


def solve_square(rows, rhs):
    """Unique solution of a square rational system, or None if singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def oracle_facets(matrix, upper):
    """Hull facets by brute force over all affinely spanning point subsets."""
    n = matrix.n
    points = lattice_points(n)
    found = {}
    for subset in combinations(points, n):
        rows = []
        rhs = []
        for i, j in subset:
            row = [F(0)] * n
            row[i] += 1
            row[j] += 1
            rows.append(row)
            rhs.append(matrix[i, j])
        lam = solve_square(rows, rhs)
        if lam is None or lam in found:
            continue
        values = [(p, lam[p[0]] + lam[p[1]]) for p in points]
        if upper and any(v < matrix[p[0], p[1]] for p, v in values):
            continue
        if not upper and any(v > matrix[p[0], p[1]] for p, v in values):
            continue
        found[lam] = frozenset(p for p, v in values if v == matrix[p[0], p[1]])
    return sorted((tuple(sorted(t)), lam) for lam, t in found.items())


def point_vector(point, n):
    coords = [F(0)] * n
    i, j = point
    coords[i] += 1
    coords[j] += 1
    return tuple(coords)


def affine_weights(points_subset, x):
    """Convex-combination weights of x over the subset, or None.

    None when the subset is affinely dependent or the system is
    inconsistent; weights may be negative (caller checks).
    """
    k = len(points_subset)
    n = len(x)
    m = [[p[c] for p in points_subset] + [x[c]] for c in range(n)]
    m.append([F(1)] * k + [F(1)])
    row = 0
    pivots = []
    for col in range(k):
        pivot = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, len(m)):
        if m[r][k] != 0:
            return None
    return tuple(m[r][k] / m[r][c] for r, c in pivots)


def in_convex_hull(x, point_set, n):
    """Exact containment via small affinely independent subsets."""
    vectors = [point_vector(p, n) for p in sorted(point_set)]
    for size in range(1, n + 1):
        for subset in combinations(vectors, size):
            weights = affine_weights(subset, x)
            if weights is not None and all(w >= 0 for w in weights):
                return True
    return False


def simplex_grid(n):
    """All points of the simplex with coordinates in half-integers."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n - 1:
            out.append(tuple(prefix + [remaining]))
            return
        k = 0
        while k <= remaining * 2:
            rec(prefix + [F(k, 2)], remaining - F(k, 2))
            k += 1

    rec([], F(2))
    return out


# ---------------------------------------------------------------------------


class TestLatticePoints:
    def test_small_sizes(self):
        assert lattice_points(1) == [(0, 0)]
        assert lattice_points(2) == [(0, 0), (0, 1), (1, 1)]
        assert len(lattice_points(3)) == 6
        assert len(lattice_points(7)) == 28

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            lattice_points(0)


class TestLowerSubdivision:
    def test_split_segment(self):
        sub = lower_subdivision(SymMatrix.from_rows([[0, -1], [-1, 0]]))
        assert cells(sub) == {fs((0, 0), (0, 1)), fs((0, 1), (1, 1))}

    def test_midpoint_above(self):
        sub = lower_subdivision(SymMatrix.from_rows([[0, 1], [1, 0]]))
        assert cells(sub) == {fs((0, 0), (1, 1))}

    def test_flat_lift(self):
        sub = lower_subdivision(SymMatrix.zero(2))
        assert cells(sub) == {fs((0, 0), (0, 1), (1, 1))}

    def test_trivial_examples(self):
        assert is_trivial(lower_subdivision(SymMatrix.zero(2)))
        assert not is_trivial(lower_subdivision(SymMatrix.from_rows([[0, -1], [-1, 0]])))
        sub = lower_subdivision(
            SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        )
        assert cells(sub) == {fs((0, 0), (1, 1), (2, 2))}

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            lower_subdivision(SymMatrix.zero(8))


class TestMembershipBySubdivision:
    def test_examples(self):
        assert is_psd_by_subdivision(SymMatrix.zero(3))
        assert not is_psd_by_subdivision(SymMatrix.from_rows([[0, -1], [-1, 0]]))
        assert is_psd_by_subdivision(SymMatrix.from_rows([[0, 2], [2, 1]]))

    def test_matches_full_subdivision_and_inequalities(self):
        rng = rng_for("thm-equivalence")
        for _ in range(300):
            n = rng.randint(1, 5)
            a = random_symmetric_matrix(rng, n)
            trivial = is_trivial(lower_subdivision(a))
            assert is_psd_by_subdivision(a) == trivial
            assert trivial == is_trop_psd_inequalities(a).is_member


class TestUpperFacets:
    def test_tent_over_three_points(self):
        facets = upper_facets(SymMatrix.from_rows([[0, 1], [1, 0]]))
        got = {(f.functional, f.touching_set) for f in facets}
        assert got == {
            ((F(0), F(1)), fs((0, 0), (0, 1))),
            ((F(1), F(0)), fs((0, 1), (1, 1))),
        }

    def test_flat_lift_single_facet(self):
        facets = upper_facets(SymMatrix.zero(2))
        assert len(facets) == 1
        assert facets[0].functional == (0, 0)
        assert facets[0].touching_set == fs((0, 0), (0, 1), (1, 1))

    def test_all_ones_off_diagonal(self):
        facets = upper_facets(
            SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        )
        got = {(f.functional, f.touching_set) for f in facets}
        assert got == {
            ((F(1, 2), F(1, 2), F(1, 2)), fs((0, 1), (0, 2), (1, 2))),
            ((F(0), F(1), F(1)), fs((0, 0), (0, 1), (0, 2))),
            ((F(1), F(0), F(1)), fs((0, 1), (1, 1), (1, 2))),
            ((F(1), F(1), F(0)), fs((0, 2), (1, 2), (2, 2))),
        }

    def test_canonical_order(self):
        facets = upper_facets(
            SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        )
        keys = [tuple(sorted(f.touching_set)) for f in facets]
        assert keys == sorted(keys)

    def test_validity_and_touching_exactness(self):
        rng = rng_for("facet-validity")
        for _ in range(60):
            n = rng.randint(1, 4)
            a = random_symmetric_matrix(rng, n)
            for f in upper_facets(a):
                for p in lattice_points(n):
                    value = f.value_at(p)
                    assert value >= a[p[0], p[1]]
                    assert (value == a[p[0], p[1]]) == (p in f.touching_set)
            for f in lower_facets(a):
                for p in lattice_points(n):
                    value = f.value_at(p)
                    assert value <= a[p[0], p[1]]
                    assert (value == a[p[0], p[1]]) == (p in f.touching_set)

    def test_members_are_fully_covered(self):
        rng = rng_for("facet-coverage")
        for _ in range(40):
            n = rng.randint(1, 5)
            a = random_member_matrix(rng, n)
            covered = set()
            for f in upper_facets(a):
                covered |= f.touching_set
            assert covered == set(lattice_points(n))


class TestLowerUpperReflection:
    def test_negating_heights_swaps_hulls(self):
        rng = rng_for("reflection")
        for _ in range(40):
            n = rng.randint(1, 4)
            a = random_symmetric_matrix(rng, n)
            lower = lower_facets(a)
            upper = upper_facets(-1 * a)
            assert len(lower) == len(upper)
            for lf, uf in zip(lower, upper):
                assert lf.touching_set == uf.touching_set
                assert tuple(-x for x in lf.functional) == uf.functional


class TestHullOracle:
    def test_agreement_with_bruteforce_enumeration(self):
        rng = rng_for("hull-oracle")
        specials = [
            SymMatrix.zero(2),
            SymMatrix.from_rows([[0, 1], [1, 0]]),
            SymMatrix.from_rows([[0, -1], [-1, 0]]),
            SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
        ]
        randoms = [
            random_symmetric_matrix(rng, rng.randint(1, 4)) for _ in range(25)
        ]
        for a in specials + randoms:
            for upper in (True, False):
                produced = (upper_facets if upper else lower_facets)(a)
                got = [
                    (tuple(sorted(f.touching_set)), f.functional) for f in produced
                ]
                assert got == oracle_facets(a, upper)


class TestSubdivisionGeometry:
    def test_cells_cover_and_meet_in_common_faces(self):
        # Exact geometry on a half-integer sample grid.  The lower hull
        # function is the max of the facet functionals; a grid point lies in
        # a cell's polytope iff that cell's functional attains the max, and
        # the geometric (convex hull) containment must agree.
        rng = rng_for("geometry")
        matrices = [random_symmetric_matrix(rng, 3) for _ in range(6)]
        matrices += [random_member_matrix(rng, 3) for _ in range(3)]
        for a in matrices:
            facets = lower_facets(a)
            grid = simplex_grid(3)
            for x in grid:
                values = [
                    sum(f.functional[c] * x[c] for c in range(3)) for f in facets
                ]
                top = max(values)
                by_functional = {
                    k for k, v in enumerate(values) if v == top
                }
                by_geometry = {
                    k
                    for k, f in enumerate(facets)
                    if in_convex_hull(x, f.touching_set, 3)
                }
                assert by_functional == by_geometry
                assert by_geometry  # covering
                # pairwise intersections land in the shared touching points
                for k1 in by_geometry:
                    for k2 in by_geometry:
                        if k1 < k2:
                            shared = facets[k1].touching_set & facets[k2].touching_set
                            assert in_convex_hull(x, shared, 3)

    def test_cells_cover_simplex_n4(self):
        rng = rng_for("geometry-4")
        for _ in range(3):
            a = random_symmetric_matrix(rng, 4)
            facets = lower_facets(a)
            for x in simplex_grid(4):
                assert any(
                    in_convex_hull(x, f.touching_set, 4) for f in facets
                )
