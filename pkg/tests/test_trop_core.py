"""Min-plus arithmetic: examples, independent oracles, algebraic laws."""

from fractions import Fraction as F
from itertools import permutations

import pytest

from conftest import random_vector, rng_for
from troppsd import (
    CapacityError,
    SymMatrix,
    as_rat,
    evaluate_quadratic_form,
    is_rank_one_symmetric,
    rank_one_from_vector,
    trop_det_assignment,
    trop_det_bruteforce,
    trop_mat_mul,
)
from troppsd.cli import random_symmetric_matrix


def mat(rows):
    return tuple(tuple(as_rat(x) for x in row) for row in rows)


def naive_trop_mul(a, b):
    """Independent oracle: direct min-of-sums per entry."""
    p, q, r = len(a), len(b), len(b[0])
    out = []
    for i in range(p):
        row = []
        for k in range(r):
            candidates = [as_rat(a[i][j]) + as_rat(b[j][k]) for j in range(q)]
            row.append(min(candidates))
        out.append(tuple(row))
    return tuple(out)


def naive_trop_det(rows):
    """Independent oracle: explicit permutation scan in Fraction arithmetic."""
    n = len(rows)
    best = None
    args = set()
    for perm in permutations(range(n)):
        s = sum(as_rat(rows[i][perm[i]]) for i in range(n))
        if best is None or s < best:
            best = s
            args = {perm}
        elif s == best:
            args.add(perm)
    return best, frozenset(args)


class TestAsRat:
    def test_accepts_int_str_fraction(self):
        assert as_rat(3) == F(3)
        assert as_rat("-3/2") == F(-3, 2)
        assert as_rat(F(1, 7)) == F(1, 7)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            as_rat(0.5)


class TestSymMatrix:
    def test_symmetric_read(self):
        a = SymMatrix.from_rows([[0, 1, 2], [1, 5, 3], [2, 3, 7]])
        assert a[2, 0] == a[0, 2] == 2
        assert a.diagonal() == (0, 5, 7)

    def test_from_rows_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            SymMatrix.from_rows([[0, 1], [2, 0]])

    def test_from_rows_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            SymMatrix.from_rows([[0, 1, 2], [1, 0, 3]])

    def test_classical_combination(self):
        a = SymMatrix.from_rows([[0, 1], [1, 0]])
        b = SymMatrix.from_rows([[2, 0], [0, 2]])
        assert (a + 2 * b).rows() == mat([[4, 1], [1, 4]])
        assert (-a).rows() == mat([[0, -1], [-1, 0]])

    def test_out_of_range(self):
        a = SymMatrix.zero(2)
        with pytest.raises(IndexError):
            a[0, 2]


class TestTropMatMul:
    def test_zero_idempotent(self):
        z = [[0, 0], [0, 0]]
        assert trop_mat_mul(z, z) == mat(z)

    def test_outer_square(self):
        u = [[0], [1]]
        ut = [[0, 1]]
        assert trop_mat_mul(u, ut) == mat([[0, 1], [1, 2]])

    def test_two_by_two_against_oracle(self):
        a = [[0, 2], [1, 0]]
        b = [[0, 3], [1, 0]]
        expected = naive_trop_mul(a, b)
        assert expected == mat([[0, 2], [1, 0]])
        assert trop_mat_mul(a, b) == expected

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            trop_mat_mul([[0, 1]], [[0, 1]])

    def test_associative_random(self):
        rng = rng_for("assoc")
        for _ in range(60):
            p, q, r, s = (rng.randint(1, 5) for _ in range(4))
            a = [[rng.choice((F(-2), F(-1, 2), F(0), F(1), F(3, 2))) for _ in range(q)] for _ in range(p)]
            b = [[rng.choice((F(-2), F(-1, 2), F(0), F(1), F(3, 2))) for _ in range(r)] for _ in range(q)]
            c = [[rng.choice((F(-2), F(-1, 2), F(0), F(1), F(3, 2))) for _ in range(s)] for _ in range(r)]
            assert trop_mat_mul(trop_mat_mul(a, b), c) == trop_mat_mul(a, trop_mat_mul(b, c))


class TestTropDetBruteforce:
    def test_identity_argmin(self):
        det = trop_det_bruteforce([[0, 1], [1, 0]])
        assert det.value == 0
        assert det.argmins == frozenset({(0, 1)})

    def test_all_ties(self):
        det = trop_det_bruteforce([[0, 0], [0, 0]])
        assert det.value == 0
        assert det.argmins == frozenset({(0, 1), (1, 0)})

    def test_three_by_three(self):
        rows = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        expected = naive_trop_det(rows)
        assert expected == (0, frozenset({(0, 1, 2)}))
        det = trop_det_bruteforce(rows)
        assert (det.value, det.argmins) == expected

    def test_capacity_guard_names_alternative(self):
        big = [[0] * 10 for _ in range(10)]
        with pytest.raises(CapacityError, match="trop_det_assignment"):
            trop_det_bruteforce(big)

    def test_matches_naive_oracle_random(self):
        rng = rng_for("det-oracle")
        for _ in range(40):
            n = rng.randint(1, 5)
            rows = [[rng.choice((F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2))) for _ in range(n)] for _ in range(n)]
            value, args = naive_trop_det(rows)
            det = trop_det_bruteforce(rows)
            assert det.value == value
            assert det.argmins == args


class TestTropDetAssignment:
    def test_diagonal_assignment(self):
        rows = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
        assert trop_det_assignment(rows) == 0

    def test_two_by_two(self):
        assert trop_det_assignment([[0, 1], [1, 0]]) == 0

    def test_matches_bruteforce_on_seven(self):
        rng = rng_for("assign-7")
        rows = [[F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(7)] for _ in range(7)]
        assert trop_det_assignment(rows) == trop_det_bruteforce(rows).value

    def test_matches_bruteforce_random_sizes(self):
        rng = rng_for("assign-sizes")
        for _ in range(60):
            n = rng.randint(1, 6)
            rows = [[F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
            assert trop_det_assignment(rows) == trop_det_bruteforce(rows).value


class TestQuadraticForm:
    def test_zero_matrix(self):
        a = SymMatrix.zero(2)
        assert evaluate_quadratic_form(a, [0, 0]) == 0
        assert evaluate_quadratic_form(a, [1, 3]) == 2

    def test_negative_entries(self):
        a = SymMatrix.from_rows([[0, 1], [1, 0]])
        # pairs: (0,0) -> 0, (0,1) -> -4, (1,1) -> -10
        assert evaluate_quadratic_form(a, [0, -5]) == -10

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            evaluate_quadratic_form(SymMatrix.zero(2), [0, 0, 0])

    def test_matches_matrix_sandwich(self):
        rng = rng_for("quad")
        for _ in range(40):
            n = rng.randint(1, 5)
            a = random_symmetric_matrix(rng, n)
            y = random_vector(rng, n)
            sandwich = trop_mat_mul(trop_mat_mul([y], a.rows()), [[t] for t in y])
            assert evaluate_quadratic_form(a, y) == sandwich[0][0]


class TestRankOne:
    def test_examples(self):
        assert is_rank_one_symmetric(SymMatrix.zero(3))
        assert is_rank_one_symmetric(SymMatrix.from_rows([[0, 1], [1, 2]]))
        assert not is_rank_one_symmetric(SymMatrix.from_rows([[0, 1], [1, 0]]))

    def test_outer_square_values(self):
        m = rank_one_from_vector([F(1, 2), F(-1, 2), 3])
        assert m.rows() == mat(
            [[1, 0, F(7, 2)], [0, -1, F(5, 2)], [F(7, 2), F(5, 2), 6]]
        )
        assert rank_one_from_vector([0, 0, 0]) == SymMatrix.zero(3)
        assert rank_one_from_vector([0, 1]).rows() == mat([[0, 1], [1, 2]])

    def test_roundtrip_vector_to_matrix(self):
        rng = rng_for("rank-one")
        for _ in range(40):
            n = rng.randint(1, 6)
            u = random_vector(rng, n)
            m = rank_one_from_vector(u)
            assert is_rank_one_symmetric(m)
            # and back: halved diagonal recovers the vector
            assert tuple(m[i, i] / 2 for i in range(n)) == u

    def test_roundtrip_matrix_to_vector(self):
        rng = rng_for("rank-one-back")
        for _ in range(40):
            n = rng.randint(1, 6)
            m = rank_one_from_vector(random_vector(rng, n))
            rebuilt = rank_one_from_vector(tuple(m[i, i] / 2 for i in range(n)))
            assert rebuilt == m


class TestRowColumnShift:
    def test_det_shifts_by_twice_constant(self):
        # Adding c to row i and column i (2c on the diagonal) moves every
        # permutation sum by exactly 2c, so the argmin set is unchanged.
        rng = rng_for("shift")
        for _ in range(25):
            n = rng.randint(2, 5)
            a = random_symmetric_matrix(rng, n)
            i = rng.randrange(n)
            c = rng.choice((F(-3, 2), F(-1), F(1, 2), F(2)))
            shifted = [
                [
                    a[p, q] + c * ((p == i) + (q == i))
                    for q in range(n)
                ]
                for p in range(n)
            ]
            before = trop_det_bruteforce(a)
            after = trop_det_bruteforce(shifted)
            assert after.value == before.value + 2 * c
            assert after.argmins == before.argmins
