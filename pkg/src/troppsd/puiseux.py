"""Finite Puiseux polynomials over Q and symbolic PSD certificates.

An element is a finite sum of terms c * t^e with rational coefficient c
and rational exponent e, kept sorted by exponent.  The ambient field of
Puiseux series is ordered: an element is positive when its lowest-order
coefficient is positive, i.e. when its value is positive for every small
enough positive t.  The valuation of a nonzero element is that lowest
exponent; taking valuations entrywise is what sends a symbolic matrix back
to the tropical world.

The certificate machinery lifts a matrix from the tropical PSD cone to a
symmetric matrix over this ring: diagonal entries n! * t^(a_ii) and
off-diagonal entries +-t^(a_ij) in any requested sign pattern.  In every
principal minor the diagonal permutation contributes the lowest exponent,
and the factorial coefficient is too large for the remaining permutations
to cancel, so all principal minors are positive in the order above.  The
entrywise valuation of the lift is the original matrix, which is exactly
what the certificate is for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import CapacityError, NotAMemberError
from .psd_cone import is_trop_psd_inequalities
from .trop_core import RatLike, SymMatrix, as_rat

__all__ = [
    "MINOR_LIMIT",
    "ONE",
    "PuiseuxMatrix",
    "PuiseuxPoly",
    "SignPattern",
    "T",
    "ZERO",
    "constant",
    "construct_witness",
    "format_poly",
    "is_positive",
    "leading_coefficient",
    "monomial",
    "principal_minors",
    "specialization_threshold",
    "specialize",
    "specialize_and_check",
    "valuation",
    "verify_witness",
]

# 2^n - 1 symbolic determinants per matrix; keep that at desk scale.
MINOR_LIMIT = 7


def _canonical_terms(items) -> tuple[tuple[Fraction, Fraction], ...]:
    acc: dict[Fraction, Fraction] = {}
    for exponent, coeff in items:
        e = as_rat(exponent)
        c = as_rat(coeff)
        if c == 0:
            continue
        s = acc.get(e)
        if s is None:
            acc[e] = c
        else:
            s = s + c
            if s == 0:
                del acc[e]
            else:
                acc[e] = s
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class PuiseuxPoly:
    """Finite sum of c * t^e terms: strictly increasing e, no zero c.

    The empty term tuple is the zero element.  Build values through
    ``from_terms`` / ``monomial`` / ``constant``, or with the arithmetic
    operators, all of which keep the representation canonical.
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, items: Iterable[tuple[RatLike, RatLike]]) -> "PuiseuxPoly":
        return cls(_canonical_terms(items))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "PuiseuxPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return PuiseuxPoly(_canonical_terms(self.terms + other.terms))

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxPoly":
        return PuiseuxPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "PuiseuxPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PuiseuxPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "PuiseuxPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                s = acc.get(e)
                acc[e] = c1 * c2 if s is None else s + c1 * c2
        return PuiseuxPoly(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(value) -> Optional[PuiseuxPoly]:
    if isinstance(value, PuiseuxPoly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return constant(value)
    return None


def monomial(coeff: RatLike, exponent: RatLike) -> PuiseuxPoly:
    """Single term c * t^e; the zero element when c == 0."""
    c = as_rat(coeff)
    if c == 0:
        return ZERO
    return PuiseuxPoly(((as_rat(exponent), c),))


def constant(coeff: RatLike) -> PuiseuxPoly:
    return monomial(coeff, 0)


ZERO = PuiseuxPoly()
ONE = PuiseuxPoly(((Fraction(0), Fraction(1)),))
T = PuiseuxPoly(((Fraction(1), Fraction(1)),))


def valuation(poly: PuiseuxPoly) -> Fraction:
    """Lowest exponent carrying a nonzero coefficient; undefined at zero."""
    if poly.is_zero:
        raise ValueError("valuation of the zero element is undefined")
    return poly.terms[0][0]


def leading_coefficient(poly: PuiseuxPoly) -> Fraction:
    """Coefficient of the lowest-order term; undefined at zero."""
    if poly.is_zero:
        raise ValueError("leading coefficient of the zero element is undefined")
    return poly.terms[0][1]


def is_positive(poly: PuiseuxPoly) -> bool:
    """Positivity in the ordered field: nonzero with positive leading coefficient."""
    return bool(poly.terms) and poly.terms[0][1] > 0


def _format_power(e: Fraction) -> str:
    if e == 1:
        return "t"
    if e.denominator == 1 and e >= 0:
        return f"t^{e}"
    return f"t^({e})"


def format_poly(poly: PuiseuxPoly) -> str:
    """Render as a sum of c*t^(e) terms, exact and locale-independent."""
    if poly.is_zero:
        return "0"
    parts = []
    for k, (e, c) in enumerate(poly.terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = _format_power(e)
        else:
            body = f"{mag}*{_format_power(e)}"
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def _pair_index(n: int, i: int, j: int) -> int:
    # position of (i, j), i < j, in lexicographic pair order
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class SignPattern:
    """A choice of +1 or -1 for every off-diagonal position (i < j).

    Stored in lexicographic pair order: (0,1), (0,2), ..., (1,2), ...
    """

    n: int
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        expect = self.n * (self.n - 1) // 2
        if len(self.signs) != expect:
            raise ValueError(f"need {expect} signs for n={self.n}, got {len(self.signs)}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def all_plus(cls, n: int) -> "SignPattern":
        return cls(n, (1,) * (n * (n - 1) // 2))

    @classmethod
    def all_minus(cls, n: int) -> "SignPattern":
        return cls(n, (-1,) * (n * (n - 1) // 2))

    @classmethod
    def from_string(cls, n: int, text: str) -> "SignPattern":
        """Parse a '+'/'-' string in lexicographic pair order."""
        mapping = {"+": 1, "-": -1}
        try:
            signs = tuple(mapping[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"sign characters must be '+' or '-', got {exc.args[0]!r}") from exc
        return cls(n, signs)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if i > j:
            i, j = j, i
        if i == j:
            raise KeyError("sign patterns cover off-diagonal pairs only")
        return self.signs[_pair_index(self.n, i, j)]


@dataclass(frozen=True)
class PuiseuxMatrix:
    """Symmetric matrix of nonzero Puiseux elements."""

    n: int
    entries: tuple[tuple[PuiseuxPoly, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.entries) != self.n:
            raise ValueError("entries must form an n x n grid")
        for i, row in enumerate(self.entries):
            if len(row) != self.n:
                raise ValueError("entries must form an n x n grid")
            for j, p in enumerate(row):
                if p.is_zero:
                    raise ValueError(f"entry ({i}, {j}) is zero; witnesses have none")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows) -> "PuiseuxMatrix":
        grid = tuple(tuple(row) for row in rows)
        return cls(len(grid), grid)

    def __getitem__(self, key: tuple[int, int]) -> PuiseuxPoly:
        i, j = key
        return self.entries[i][j]


def construct_witness(
    matrix: SymMatrix, signs: Optional[SignPattern] = None
) -> PuiseuxMatrix:
    """Symbolic certificate for a matrix in the tropical PSD cone.

    Diagonal entries are n! * t^(a_ii); off-diagonal entries are
    sign * t^(a_ij), with all signs +1 by default.  Any sign pattern
    certifies: the factorial coefficient dominates every competing
    permutation product in every principal minor.  Raises NotAMemberError
    outside the cone, where no certificate exists.
    """
    verdict = is_trop_psd_inequalities(matrix)
    if not verdict.is_member:
        raise NotAMemberError(verdict.violated_pair)
    n = matrix.n
    if signs is None:
        signs = SignPattern.all_plus(n)
    if signs.n != n:
        raise ValueError(f"sign pattern is for n={signs.n}, matrix has n={n}")
    fact = math.factorial(n)
    grid: list[list[PuiseuxPoly]] = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = monomial(fact, matrix[i, i])
        for j in range(i + 1, n):
            entry = monomial(signs[i, j], matrix[i, j])
            grid[i][j] = entry
            grid[j][i] = entry
    return PuiseuxMatrix(n, tuple(tuple(row) for row in grid))


def _ring_det(rows, one):
    """Exact determinant over any commutative ring with +, -, *.

    Expansion along the last row with a column-subset memo; 2^k * k ring
    multiplications for a k x k matrix.
    """
    k = len(rows)
    table: list = [None] * (1 << k)
    table[0] = one
    for mask in range(1, 1 << k):
        r = mask.bit_count() - 1
        sign = 1 if r % 2 == 0 else -1
        row = rows[r]
        total = None
        for j in range(k):
            bit = 1 << j
            if not mask & bit:
                continue
            term = row[j] * table[mask ^ bit]
            if sign < 0:
                term = -term
            total = term if total is None else total + term
            sign = -sign
        table[mask] = total
    return table[-1]


def _index_subsets(n: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def principal_minors(matrix: PuiseuxMatrix) -> dict[tuple[int, ...], PuiseuxPoly]:
    """Exact determinant of every principal submatrix, keyed by index tuple.

    Keys appear ordered by size, then lexicographically.  Guarded to
    n <= MINOR_LIMIT (2^n - 1 symbolic determinants).
    """
    n = matrix.n
    if n > MINOR_LIMIT:
        raise CapacityError(f"principal minors support n <= {MINOR_LIMIT}, got {n}")
    out: dict[tuple[int, ...], PuiseuxPoly] = {}
    for subset in _index_subsets(n):
        rows = [[matrix[i, j] for j in subset] for i in subset]
        out[subset] = _ring_det(rows, ONE)
    return out


def verify_witness(matrix: PuiseuxMatrix, source: SymMatrix) -> bool:
    """Check the certificate: valuations match and all minors are positive."""
    if matrix.n != source.n:
        raise ValueError(f"dimension mismatch: {matrix.n} vs {source.n}")
    for i in range(matrix.n):
        for j in range(i, matrix.n):
            if valuation(matrix[i, j]) != source[i, j]:
                return False
    return all(is_positive(m) for m in principal_minors(matrix).values())


def _exponent_lcm(matrix: PuiseuxMatrix) -> int:
    lcm = 1
    for row in matrix.entries:
        for p in row:
            for e, _ in p.terms:
                lcm = math.lcm(lcm, e.denominator)
    return lcm


def specialize(matrix: PuiseuxMatrix, u: RatLike) -> SymMatrix:
    """Exact rational matrix obtained by substituting t = u^L.

    L is the least common multiple of all exponent denominators, so every
    exponent becomes an integer and each entry a plain rational.  Requires
    0 < u < 1, the regime in which leading terms dominate.
    """
    u = as_rat(u)
    if not 0 < u < 1:
        raise ValueError("u must lie strictly between 0 and 1")
    lcm = _exponent_lcm(matrix)

    def value(p: PuiseuxPoly) -> Fraction:
        total = Fraction(0)
        for e, c in p.terms:
            total += c * u ** int(e * lcm)
        return total

    n = matrix.n
    return SymMatrix.from_rows(
        [[value(matrix[i, j]) for j in range(n)] for i in range(n)]
    )


def specialize_and_check(matrix: PuiseuxMatrix, u: RatLike) -> bool:
    """Whether the specialization at u has all principal minors > 0.

    Works directly on the specialized rational matrix with exact rational
    determinants; it never looks at the symbolic minors, so it is an
    independent cross-check of ``verify_witness``.  For any u below
    ``specialization_threshold`` the two must agree.
    """
    n = matrix.n
    if n > MINOR_LIMIT:
        raise CapacityError(f"minor enumeration supports n <= {MINOR_LIMIT}, got {n}")
    s = specialize(matrix, u)
    one = Fraction(1)
    for subset in _index_subsets(n):
        rows = [[s[i, j] for j in subset] for i in subset]
        if _ring_det(rows, one) <= 0:
            return False
    return True


def specialization_threshold(matrix: PuiseuxMatrix) -> Fraction:
    """A rational u* in (0, 1] below which every minor keeps its leading sign.

    For a minor with leading term c0 * t^(e0), second exponent e1 and tail
    coefficient sum s, any 0 < t < (|c0|/s)^ceil(1/(e1-e0)) preserves the
    sign; substituting t = u^L with L >= 1 only shrinks t, so the same
    bound works for u.  The minimum over all minors is returned.  This is a
    sufficient bound, deliberately conservative; monomial minors impose no
    constraint.
    """
    bound = Fraction(1)
    for minor in principal_minors(matrix).values():
        if len(minor.terms) < 2:
            continue
        (e0, c0), (e1, _) = minor.terms[0], minor.terms[1]
        tail = sum(abs(c) for _, c in minor.terms[1:])
        ratio = abs(c0) / tail
        if ratio >= 1:
            continue
        power = math.ceil(Fraction(1) / (e1 - e0))
        bound = min(bound, ratio**power)
    return bound
