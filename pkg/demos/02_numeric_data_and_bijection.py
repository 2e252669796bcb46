"""Enumerate the numeric invariants of lifted rank-2 bundles.

A bundle fixed by the automorphism carries, at each special orbit, a
pair of exponents describing the local action on its fibre.  Fixing an
equivariant determinant pins these pairs down to a finite set.  The
script lists that set for a small cover, converts each element to its
downstairs description (weights, exponent, twisted degree), and checks
the conversion is invertible.
"""

from fixloc import (
    DeterminantLift,
    PLUS,
    Rank2EqData,
    enumerate_lambda,
    from_parabolic,
    make_profile,
    solve_d2,
    to_parabolic,
    weight_system,
)

profile = make_profile(6, [("a", 2), ("b", 3)], genus_base=1)
det = DeterminantLift(residues={"a": 1, "b": 1}, degree=11, lift_sign=PLUS)

family = enumerate_lambda(det, profile)
print(f"determinant residues {det.residues}, degree {det.degree}")
print(f"{len(family)} admissible exponent assignments:\n")

for numeric in family:
    data = Rank2EqData(numeric=numeric, det=det)
    pdat = to_parabolic(data, profile)
    ws = weight_system(numeric, profile)
    shown = {label: str(w) for label, w in ws.items()}
    print(f"  exponents {numeric}")
    print(f"    weights {shown}  twisted degree {pdat.det_bar_degree}")
    assert from_parabolic(pdat, profile) == data  # round trip

# the downstairs side determines the exponents orbit by orbit: pick any
# weight system that occurred above and solve for the compatible data
target_weights = weight_system(family[0], profile)
solutions = solve_d2(det, target_weights, profile)
print(f"\nexponent solutions for weights "
      f"{ {label: str(w) for label, w in target_weights.items()} }:")
for sol in solutions:
    print(f"  {sol}")
