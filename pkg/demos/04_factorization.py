"""Writing a tropical PSD matrix as a min of rank-one squares, and B (x) B^T.

Each upper facet functional u gives the rank-one matrix with entries
u_i + u_j; a covering collection of facets reconstructs the matrix as an
entrywise minimum.  The smallest possible number of summands is the
symmetric Barvinok rank, computed exactly by minimum set cover, and the
vectors stack into a tropical Gram factor B.
"""

from fractions import Fraction as F

from troppsd import (
    SymMatrix,
    decompose_rank_one,
    gram_factor,
    rank_one_from_vector,
    rank_oracle_small,
    symmetric_barvinok_rank,
    trop_mat_mul,
)

a = SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
print("matrix:")
print(a)

decomposition = decompose_rank_one(a)
print("\nrank-one vectors:")
for u in decomposition.vectors:
    print(" ", u, "->")
    print(rank_one_from_vector(u))
print("entrywise minimum reconstructs:", decomposition.to_matrix() == a)

rank = symmetric_barvinok_rank(a)
print("\nsymmetric Barvinok rank:", rank)
print("oracle agrees:", min(r for r in range(1, 5) if rank_oracle_small(a, r)) == rank)

factor = gram_factor(a)
print("\nGram factor B:")
for row in factor.matrix:
    print(" ", row)
bt = list(zip(*factor.matrix))
print("B (min,+) B^T equals A:", SymMatrix.from_rows(trop_mat_mul(factor.matrix, bt)) == a)

boundary = SymMatrix.from_rows(
    [[-1, F(1, 2), F(1, 2)], [F(1, 2), 1, 3], [F(1, 2), 3, 2]]
)
print("\na boundary member needs only rank", symmetric_barvinok_rank(boundary))
print("vectors:", decompose_rank_one(boundary).vectors)
