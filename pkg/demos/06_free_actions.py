"""Component structure when the automorphism acts freely.

Without special orbits the fixed variety is governed by the parity of
the order and of the reduced determinant degree.  The script prints the
component inventory in each of the four regimes, then shows how the
general (ramified) decomposition depends on the kernel order.
"""

from fixloc import decomposition_report, make_profile, s_i_possible, unramified_census

print("free action census (quotient genus 2):")
for n, deg in [(3, 9), (3, 6), (4, 12), (4, 8)]:
    rec = unramified_census(n, deg, 2)
    parts = ", ".join(f"{c.count} x {c.kind}" for c in rec.components)
    print(f"   n={n}, degree {deg:>2}: [{rec.case}]  {parts}")

print("\ndecomposition shape in the ramified case:")
for profile in (
    make_profile(9, [("a", 3)], genus_base=1),
    make_profile(10, [("a", 5)], genus_base=1),
    make_profile(12, [("a", 6), ("b", 4)], genus_base=1),
):
    rep = decomposition_report(profile)
    print(f"   n={profile.n}, kernel order {rep.kernel_order}: {rep.case}")
    for line in rep.statements:
        print(f"      - {line}")
    print(f"      sign-mixing twists possible: {s_i_possible(profile)}")
