"""Rank-one decompositions, exact symmetric Barvinok rank, Gram factors.

Every matrix in the tropical PSD cone is the entrywise minimum of finitely
many matrices u (+) u^T.  The vectors u are upper-facet functionals of the
lifted simplex: any collection of facets whose touching sets cover all
lattice points reconstructs the matrix exactly.  The minimum number of
rank-one summands equals the minimum size of such a cover (any valid
functional touches along a face of the upper hull, hence inside some
facet's touching set), computed here by exact branch and bound.  A
facet-free brute-force oracle over group assignments double-checks the
rank on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, NotAMemberError
from .newton_subdiv import lattice_points, upper_facets
from .psd_cone import is_trop_psd_inequalities
from .trop_core import SymMatrix

__all__ = [
    "GramFactor",
    "ORACLE_LIMIT",
    "RANK_LIMIT",
    "RankOneDecomposition",
    "decompose_rank_one",
    "gram_factor",
    "rank_oracle_small",
    "symmetric_barvinok_rank",
]

RANK_LIMIT = 6
ORACLE_LIMIT = 4


@dataclass(frozen=True)
class RankOneDecomposition:
    """Vectors u_k whose tropical outer squares min out to the source matrix."""

    vectors: tuple[tuple[Fraction, ...], ...]

    def to_matrix(self) -> SymMatrix:
        """Entrywise minimum of u_k[i] + u_k[j] over the vectors."""
        n = len(self.vectors[0])
        return SymMatrix.from_upper(
            n,
            (
                min(u[i] + u[j] for u in self.vectors)
                for i in range(n)
                for j in range(i, n)
            ),
        )


@dataclass(frozen=True)
class GramFactor:
    """An n x r matrix B with B (min,+) B^T equal to the source matrix."""

    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def column_count(self) -> int:
        return len(self.matrix[0])

    def to_matrix(self) -> SymMatrix:
        rows = self.matrix
        n = len(rows)
        return SymMatrix.from_upper(
            n,
            (
                min(a + b for a, b in zip(rows[i], rows[j]))
                for i in range(n)
                for j in range(i, n)
            ),
        )


def _require_member(matrix: SymMatrix) -> None:
    verdict = is_trop_psd_inequalities(matrix)
    if not verdict.is_member:
        raise NotAMemberError(verdict.violated_pair)


def decompose_rank_one(matrix: SymMatrix) -> RankOneDecomposition:
    """Greedy covering decomposition from upper facets.

    Repeatedly picks the facet covering the most still-uncovered lattice
    points, ties broken by lexicographic touching set.  Not necessarily of
    minimum length; ``symmetric_barvinok_rank`` computes that.  Rejects
    non-members, for which no finite decomposition exists.
    """
    _require_member(matrix)
    facets = upper_facets(matrix)
    uncovered = set(lattice_points(matrix.n))
    chosen = []
    while uncovered:
        best = max(facets, key=lambda f: len(f.touching_set & uncovered))
        if not best.touching_set & uncovered:
            raise RuntimeError("lattice point off the upper hull of a member lift")
        chosen.append(best)
        uncovered -= best.touching_set
    return RankOneDecomposition(tuple(f.functional for f in chosen))


def gram_factor(matrix: SymMatrix) -> GramFactor:
    """Tropical Gram factor whose columns are the greedy rank-one vectors.

    The factor may need more than n columns; whatever the greedy cover
    uses is what B gets.
    """
    decomposition = decompose_rank_one(matrix)
    n = matrix.n
    rows = tuple(tuple(u[i] for u in decomposition.vectors) for i in range(n))
    return GramFactor(rows)


def symmetric_barvinok_rank(matrix: SymMatrix) -> int:
    """Exact minimum number of rank-one summands, as a minimum facet cover."""
    if matrix.n > RANK_LIMIT:
        raise CapacityError(f"exact rank supports n <= {RANK_LIMIT}, got {matrix.n}")
    _require_member(matrix)
    sets = [f.touching_set for f in upper_facets(matrix)]
    universe = frozenset(lattice_points(matrix.n))
    return _min_cover_size(universe, sets)


def _min_cover_size(universe: frozenset, sets: Sequence[frozenset]) -> int:
    # Greedy cover for the initial upper bound.
    best = 0
    remaining = set(universe)
    while remaining:
        gain = max(sets, key=lambda s: len(s & remaining))
        if not gain & remaining:
            raise ValueError("sets do not cover the universe")
        remaining -= gain
        best += 1
    max_size = max(len(s) for s in sets)
    best_box = [best]

    def search(uncovered: frozenset, depth: int) -> None:
        if not uncovered:
            best_box[0] = min(best_box[0], depth)
            return
        if depth + -(-len(uncovered) // max_size) >= best_box[0]:
            return
        # Branch on the uncovered point lying in the fewest sets.
        point = min(uncovered, key=lambda p: (sum(1 for s in sets if p in s), p))
        for s in sets:
            if point in s:
                search(uncovered - s, depth + 1)

    search(universe, 0)
    return best_box[0]


def _point_coefficients(n: int, point) -> list[Fraction]:
    coeffs = [Fraction(0)] * n
    i, j = point
    coeffs[i] += 1
    coeffs[j] += 1
    return coeffs


def _linear_feasible(equalities, inequalities, nvars: int) -> bool:
    """Exact feasibility of {x : each equality holds, each inequality >= }.

    Constraints are (coefficients, rhs) meaning dot(coefficients, x) = rhs
    respectively >= rhs.  Equalities are substituted out by Gaussian
    elimination, then the remaining variables fall to Fourier-Motzkin
    elimination; everything stays rational.
    """
    eqs = [(list(c), r) for c, r in equalities]
    rows = [(list(c), r) for c, r in inequalities]
    while eqs:
        coeffs, rhs = eqs.pop()
        pivot = next((k for k, c in enumerate(coeffs) if c != 0), None)
        if pivot is None:
            if rhs != 0:
                return False
            continue

        def eliminate(rc, rr):
            f = rc[pivot]
            if f == 0:
                return rc, rr
            factor = f / coeffs[pivot]
            nc = [a - factor * b for a, b in zip(rc, coeffs)]
            nc[pivot] = Fraction(0)
            return nc, rr - factor * rhs

        eqs = [eliminate(c, r) for c, r in eqs]
        rows = [eliminate(c, r) for c, r in rows]
    for v in range(nvars):
        lowers = []
        uppers = []
        rest = []
        for c, r in rows:
            cv = c[v]
            if cv == 0:
                rest.append((c, r))
                continue
            # Normalize to x_v >= expr (cv > 0) or x_v <= expr (cv < 0).
            norm_c = [-ck / cv for ck in c]
            norm_c[v] = Fraction(0)
            norm = (norm_c, r / cv)
            (lowers if cv > 0 else uppers).append(norm)
        combined = []
        for lc, lr in lowers:
            for uc, ur in uppers:
                combined.append(([a - b for a, b in zip(uc, lc)], lr - ur))
        rows = rest + combined
    return all(r <= 0 for _, r in rows)


def rank_oracle_small(matrix: SymMatrix, r: int) -> bool:
    """Facet-free check that r rank-one summands suffice (n <= 4, r <= 4).

    Enumerates assignments of lattice points to at most r groups (new
    groups open in first-use order, so partitions are not revisited in
    permuted form).  A group is workable when some functional is exactly
    tight on it and valid at every lattice point; that is exact linear
    feasibility, decided by Fourier-Motzkin elimination.  Feasibility only
    shrinks as a group grows, so infeasible prefixes prune the search.
    """
    if matrix.n > ORACLE_LIMIT or r > ORACLE_LIMIT:
        raise CapacityError(
            f"rank oracle supports n <= {ORACLE_LIMIT} and r <= {ORACLE_LIMIT}"
        )
    if r < 1:
        raise ValueError("r must be positive")
    n = matrix.n
    points = lattice_points(n)
    valid_everywhere = [
        (_point_coefficients(n, p), matrix[p[0], p[1]]) for p in points
    ]
    cache: dict[frozenset, bool] = {}

    def group_ok(group: frozenset) -> bool:
        hit = cache.get(group)
        if hit is None:
            tight = [
                (_point_coefficients(n, p), matrix[p[0], p[1]]) for p in sorted(group)
            ]
            hit = _linear_feasible(tight, valid_everywhere, n)
            cache[group] = hit
        return hit

    def assign(k: int, groups: tuple[frozenset, ...]) -> bool:
        if k == len(points):
            return True
        p = points[k]
        for idx, group in enumerate(groups):
            grown = group | {p}
            if group_ok(grown) and assign(
                k + 1, groups[:idx] + (grown,) + groups[idx + 1 :]
            ):
                return True
        if len(groups) < r:
            fresh = frozenset((p,))
            if group_ok(fresh) and assign(k + 1, groups + (fresh,)):
                return True
        return False

    return assign(0, ())
