"""Decide parabolic stability for split rank-2 bundles on the line.

The downstairs objects for the order-two family are bundles
O(c) + O(d-c) on the projective line with a weighted flag at each
branch point.  For a configuration of flags the classifier finds the
strongest destabilizing line subbundle exactly; when the bundle is
strictly semistable the graded object identifies the boundary class it
degenerates to.
"""

from fractions import Fraction

from fixloc import (
    flagged_class,
    graded_of,
    make_bundle,
    parabolic_slope_difference,
    split_moduli_P1,
    stability_classify,
)

g = 2
points = [0, 1, 2, 3, 4, 5]
half = [Fraction(1, 2)] * 6

# flags in general position: no line agrees often enough to destabilize
generic = make_bundle(-1, -3, points,
                      [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (0, 1)], half)
verdict = stability_classify(generic, g)
print(f"generic flags: {verdict.label}")

# all flags along the same line summand: that summand destabilizes
aligned = make_bundle(-1, -3, points, [(1, 0)] * 6, half)
verdict = stability_classify(aligned, g)
wit = verdict.witness
excess = -parabolic_slope_difference(aligned, wit)
print(f"aligned flags: {verdict.label}, witness line of degree {wit.e} "
      f"agreeing at {sorted(wit.agreement)} "
      f"(exceeds the bundle slope by {excess})")

# four flags on one line, two on another: exactly balanced
split = make_bundle(-1, -3, points,
                    [(0, 1), (1, 1), (2, 1), (3, 1), (1, 0), (1, 0)], half)
verdict = stability_classify(split, g)
print(f"four-two split: {verdict.label}")
graded = graded_of(split, verdict)
print(f"  graded object: {sorted((s.bar_degree, sorted(s.support)) for s in graded.summands)}")
match = flagged_class(g, {4, 5})
print(f"  matches the flagged boundary class for Q = {{4, 5}}: "
      f"{sorted((s.bar_degree, len(s.support)) for s in match.summands) == sorted((s.bar_degree, len(s.support)) for s in graded.summands)}")

# without weights the fixed-determinant moduli of the line is tiny:
# empty in odd degree, one balanced split bundle in even degree
print("\nunweighted semistable locus, by determinant degree:")
for d in (-3, -4):
    print(f"  degree {d}: {split_moduli_P1(d)}")
