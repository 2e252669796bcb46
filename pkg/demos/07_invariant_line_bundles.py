"""Invariant divisors, root-of-unity scalars, and line bundle classes.

Divisor classes fixed by the automorphism are recorded by an integer
per special orbit plus a pullback part; the class modulo pullbacks
lives in the residues mod n'.  Scalars in the cyclic group act through
their exponent, whose reduction at each orbit gives the local weight
used by the twist operations.
"""

from fixloc import (
    InvariantDivisor,
    d_mu,
    degree_on_X,
    is_pullback,
    make_profile,
    minus_one,
    numeric_data,
    unit_root,
)

profile = make_profile(12, [("a", 1), ("b", 4), ("c", 6)], genus_base=2)

div = InvariantDivisor(residues={"a": 14, "b": 2, "c": 1}, base_degree=1)
print(f"divisor with orbit coefficients {div.residues} + pullback of degree "
      f"{div.base_degree}")
print(f"   degree upstairs: {degree_on_X(div, profile)}")
print(f"   class mod pullbacks: {numeric_data(div, profile).values}")
print(f"   is a pullback: {is_pullback(div, profile)}")

# a divisor whose coefficients all vanish mod n' is a pullback class
flat = InvariantDivisor(residues={"a": 24, "b": 3, "c": 2}, base_degree=0)
print(f"\ncoefficients {flat.residues}: pullback class? "
      f"{is_pullback(flat, profile)}")

# local weights of scalar actions
print("\nlocal weights d_mu at each orbit:")
for a in (1, 6, 7):
    mu = unit_root(a, profile.n)
    weights = {y.id: d_mu(mu, y) for y in profile.orbits}
    print(f"   exponent {a}: {weights}")
neg = minus_one(profile.n)
print(f"   the order-two scalar is exponent {neg.a}: "
      f"{ {y.id: d_mu(neg, y) for y in profile.orbits} }")

# exponents compose additively, so the weights do too (mod n')
mu, nu = unit_root(5, profile.n), unit_root(9, profile.n)
prod = mu.mul(nu)
for y in profile.orbits:
    assert d_mu(prod, y) == (d_mu(mu, y) + d_mu(nu, y)) % y.nprime
print("\nweights of a product agree with the sum of weights mod n'")
