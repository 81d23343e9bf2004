"""Tour of the three equivalent membership tests for the tropical PSD cone.

A symmetric rational matrix A is tropically PSD when it is the entrywise
valuation of a positive semidefinite matrix of Puiseux series without zero
entries.  Three very different procedures decide that, and they always
agree:

  1. the inequalities a_ii + a_jj <= 2 a_ij,
  2. the tropical determinant being attained on the diagonal,
  3. the induced subdivision of the doubled simplex being trivial.
"""

from fractions import Fraction as F

from troppsd import (
    SymMatrix,
    cone_decompose,
    is_psd_by_subdivision,
    is_trop_psd_det,
    is_trop_psd_inequalities,
    trop_det_bruteforce,
)

examples = {
    "zero matrix": SymMatrix.zero(3),
    "all ones off-diagonal": SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
    "negative off-diagonal": SymMatrix.from_rows([[0, -1], [-1, 0]]),
    "boundary tie": SymMatrix.from_rows(
        [[-1, F(1, 2), F(1, 2)], [F(1, 2), 1, 3], [F(1, 2), 3, 2]]
    ),
}

for name, a in examples.items():
    print(f"--- {name} ---")
    print(a)
    verdict = is_trop_psd_inequalities(a)
    print("inequalities :", "member" if verdict.is_member else f"violation at pair {verdict.violated_pair}")
    print("determinant  :", "member" if is_trop_psd_det(a) else "non-member")
    print("subdivision  :", "member" if is_psd_by_subdivision(a) else "non-member")

    det = trop_det_bruteforce(a)
    print(f"tropical det = {det.value}, attained by {len(det.argmins)} permutation(s)")

    combination = cone_decompose(a)
    print("lineality coefficients:", combination.lineality_coeffs)
    print("ray coefficients      :", dict(combination.ray_coeffs))
    print("certifies membership  :", combination.certifies_membership())
    print()

print("The ray coefficients are the slacks of the inequalities: the")
print("decomposition doubles as an exact certificate either way.")
