"""Heights on the doubled simplex: subdivisions and hull facets.

A symmetric matrix lifts the lattice point e_i + e_j to height a[i][j].
The lower hull's facets project to a subdivision; the matrix is tropically
PSD exactly when that subdivision is trivial.  The upper hull's facets are
affine functionals that dominate the heights, and each one is the vector
of a tropical rank-one matrix.
"""

from troppsd import (
    SymMatrix,
    is_trivial,
    lattice_points,
    lower_subdivision,
    upper_facets,
)

print("lattice points of the doubled triangle:", lattice_points(3))

flat = SymMatrix.zero(2)
tent = SymMatrix.from_rows([[0, 1], [1, 0]])
fold = SymMatrix.from_rows([[0, -1], [-1, 0]])

for name, a in (("flat", flat), ("lifted midpoint", tent), ("dropped midpoint", fold)):
    sub = lower_subdivision(a)
    print(f"\n{name}: cells = {[sorted(c) for c in sub.cells]}")
    print("trivial:", is_trivial(sub))

print("\nupper facets of the all-ones-off-diagonal matrix:")
a = SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
for facet in upper_facets(a):
    print(f"  functional {facet.functional} touches {sorted(facet.touching_set)}")
print("Four facets, and their touching sets cover all six lattice points:")
covered = set()
for facet in upper_facets(a):
    covered |= facet.touching_set
print("covered:", sorted(covered))
