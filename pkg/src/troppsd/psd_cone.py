"""Membership tests and generators for the tropical PSD cone.

The cone consists of the symmetric rational matrices with
a[i][i] + a[j][j] <= 2*a[i][j] for every i < j; equivalently those whose
tropical determinant is attained by the identity permutation.  It is a
closed polyhedral cone spanned by the off-diagonal unit matrices together
with a lineality space of tropical rank-one matrices, and both descriptions
are exposed here with exact certificates either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .trop_core import SymMatrix, trop_det_assignment, trop_det_bruteforce

__all__ = [
    "ConeCombination",
    "MembershipVerdict",
    "cone_decompose",
    "generators",
    "is_trop_psd_det",
    "is_trop_psd_inequalities",
    "lineality_generator",
    "pair_ray",
    "principal_minor_identity_optimal",
]


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the inequality test, with the first violated pair if any."""

    is_member: bool
    violated_pair: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class ConeCombination:
    """Coefficients writing a symmetric matrix over the cone generators.

    ``lineality_coeffs[i]`` scales the rank-one generator with 2 at (i, i)
    and 1 along row and column i; ``ray_coeffs[(i, j)]`` scales the unit
    matrix supported on the (i, j) and (j, i) entries.  The combination
    reconstructs the source matrix exactly for every symmetric matrix; it
    certifies cone membership exactly when every ray coefficient is >= 0.
    """

    n: int
    lineality_coeffs: tuple[Fraction, ...]
    ray_coeffs: Mapping[tuple[int, int], Fraction]

    def certifies_membership(self) -> bool:
        return all(c >= 0 for c in self.ray_coeffs.values())

    def to_matrix(self) -> SymMatrix:
        total = SymMatrix.zero(self.n)
        for i, c in enumerate(self.lineality_coeffs):
            total = total + c * lineality_generator(self.n, i)
        for (i, j), c in self.ray_coeffs.items():
            total = total + c * pair_ray(self.n, i, j)
        return total


def pair_ray(n: int, i: int, j: int) -> SymMatrix:
    """Unit symmetric matrix with 1 at (i, j) and (j, i), zero elsewhere."""
    if i == j:
        raise ValueError("ray generators need i != j")
    lo, hi = min(i, j), max(i, j)
    return SymMatrix.from_upper(
        n,
        (
            1 if (a, b) == (lo, hi) else 0
            for a in range(n)
            for b in range(a, n)
        ),
    )


def lineality_generator(n: int, i: int) -> SymMatrix:
    """Lineality basis matrix: 2 at (i, i) and 1 along row and column i."""
    def entry(a: int, b: int) -> int:
        if a == i and b == i:
            return 2
        if a == i or b == i:
            return 1
        return 0

    return SymMatrix.from_upper(
        n, (entry(a, b) for a in range(n) for b in range(a, n))
    )


def generators(n: int) -> tuple[list[SymMatrix], list[SymMatrix]]:
    """All cone rays (pairs i < j, lex order) and the lineality basis."""
    if n < 1:
        raise ValueError("n must be positive")
    rays = [pair_ray(n, i, j) for i in range(n) for j in range(i + 1, n)]
    lineality = [lineality_generator(n, i) for i in range(n)]
    return rays, lineality


def is_trop_psd_inequalities(matrix: SymMatrix) -> MembershipVerdict:
    """Membership by the defining inequalities a[i][i] + a[j][j] <= 2*a[i][j].

    Pairs are scanned in lexicographic order, so the reported violation is
    deterministic.
    """
    for i in range(matrix.n):
        aii = matrix[i, i]
        for j in range(i + 1, matrix.n):
            if aii + matrix[j, j] > 2 * matrix[i, j]:
                return MembershipVerdict(False, (i, j))
    return MembershipVerdict(True, None)


def is_trop_psd_det(matrix: SymMatrix) -> bool:
    """Membership by the determinant criterion: the diagonal attains the minimum."""
    return sum(matrix.diagonal()) == trop_det_assignment(matrix.rows())


def principal_minor_identity_optimal(matrix: SymMatrix, subset: Iterable[int]) -> bool:
    """Whether the diagonal attains the tropical determinant of A[S, S]."""
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("subset must be nonempty")
    if idx[0] < 0 or idx[-1] >= matrix.n:
        raise ValueError("subset indices out of range")
    sub_rows = tuple(tuple(matrix[i, j] for j in idx) for i in idx)
    diag = sum(matrix[i, i] for i in idx)
    return diag == trop_det_bruteforce(sub_rows).value


def cone_decompose(matrix: SymMatrix) -> ConeCombination:
    """Canonical generator coefficients, in closed form.

    lambda_i = a[i][i] / 2 and mu_ij = a[i][j] - (a[i][i] + a[j][j]) / 2.
    Defined for every symmetric matrix; a negative mu appears exactly on the
    violated inequalities, so the combination doubles as a non-membership
    certificate.
    """
    n = matrix.n
    lam = tuple(matrix[i, i] / 2 for i in range(n))
    mu = {
        (i, j): matrix[i, j] - (matrix[i, i] + matrix[j, j]) / 2
        for i in range(n)
        for j in range(i + 1, n)
    }
    return ConeCombination(n, lam, mu)
