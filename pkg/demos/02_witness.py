"""Lifting a tropical PSD matrix back to a positive definite symbolic matrix.

The witness has n! * t^(a_ii) on the diagonal and +-t^(a_ij) elsewhere.
Whatever signs you pick, every principal minor is positive in the ordered
field of Puiseux series, because the diagonal permutation contributes the
lowest-order term and its factorial coefficient cannot be cancelled.
Substituting a small rational number for t turns the symbolic certificate
into a plain rational positive definite matrix, checked exactly.
"""

from fractions import Fraction as F

from troppsd import (
    SignPattern,
    SymMatrix,
    construct_witness,
    principal_minors,
    specialization_threshold,
    specialize,
    specialize_and_check,
    valuation,
    verify_witness,
)

a = SymMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
print("matrix:")
print(a)

for signs in (SignPattern.all_plus(3), SignPattern.from_string(3, "+-+")):
    print(f"\nsign pattern {signs.signs}:")
    witness = construct_witness(a, signs)
    for i in range(3):
        print("  [" + ", ".join(str(witness[i, j]) for j in range(3)) + "]")
    print("entrywise valuation matches:", all(
        valuation(witness[i, j]) == a[i, j] for i in range(3) for j in range(i, 3)
    ))
    for subset, minor in principal_minors(witness).items():
        print(f"  minor {subset}: {minor}")
    print("verified:", verify_witness(witness, a))

witness = construct_witness(a)
ustar = specialization_threshold(witness)
print(f"\nany 0 < u < {ustar} keeps every minor's sign; try u = 1/1000:")
s = specialize(witness, F(1, 1000))
print(s)
print("all principal minors positive:", specialize_and_check(witness, F(1, 1000)))
