"""Walk through the structure theory of a single finite-order automorphism.

An order-n automorphism of a curve X is described here by its quotient
data alone: the quotient genus and, for each special orbit, the orbit
length k (a proper divisor of n).  The script computes the subgroup
acting without special orbits, factors the cover through the associated
intermediate curve, and reports the numbers attached to each stage.
"""

from fixloc import (
    factor_cover,
    gcd_orbit_lengths,
    kernel_order,
    make_profile,
    orbit_length_under_power,
)


def describe(profile, title):
    print(f"== {title} ==")
    print(f"   order n = {profile.n}, quotient genus {profile.genus_base}")
    for y in profile.orbits:
        print(f"   orbit {y.id}: length {y.k}, local order n' = {y.nprime}")
    r = kernel_order(profile)
    print(f"   subgroup acting freely on the special fibres: order {r}")
    assert r == gcd_orbit_lengths(profile)  # two routes, same answer
    ramified, unram_degree = factor_cover(profile)
    print(f"   factors as ramified degree {ramified.n} after free degree {unram_degree}")
    print(f"   intermediate curve genus: {ramified.genus_base}")
    print()


# a cover where every orbit length shares the factor 2
describe(make_profile(12, [("a", 6), ("b", 4), ("c", 2)], genus_base=1),
         "order 12, three special orbits")

# no common factor: the automorphism generates no free subcover
describe(make_profile(6, [("a", 2), ("b", 3)], genus_base=0),
         "order 6, coprime orbit lengths")

# no special orbits at all: the whole action is free
describe(make_profile(5, [], genus_base=2), "order 5, free action")

# orbit lengths under iterates of the automorphism
profile = make_profile(12, [("a", 6), ("b", 4)], genus_base=1)
print("orbit lengths under powers of the order-12 automorphism:")
for d in (1, 2, 3, 4, 6):
    lengths = {y.id: orbit_length_under_power(y.k, d) for y in profile.orbits}
    print(f"   power {d}: {lengths}")
