"""Invariant divisors on the cover and their residue data.

An invariant divisor is recorded downstairs-up: an integer coefficient
per special orbit (the multiplicity along the reduced fiber over that
branch point) plus a pullback part of the given base degree.  The class
of such a divisor modulo pullbacks is captured by the residues of the
orbit coefficients mod n'(y); that reduction is the numeric data of the
associated line bundle.

Root-of-unity scalars are tracked by their integer exponent a mod n;
the local weight of such a scalar at an orbit is its exponent reduced
mod n'(y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import CoverProfile, SpecialOrbit
from .errors import SchemaError, UnknownOrbit


@dataclass(frozen=True)
class RootExponent:
    """Scalar exp(2*pi*i*a/modulus), stored as a mod modulus."""

    a: int
    modulus: int

    def __post_init__(self):
        assert self.modulus >= 1
        object.__setattr__(self, "a", self.a % self.modulus)

    def mul(self, other: "RootExponent") -> "RootExponent":
        assert self.modulus == other.modulus
        return RootExponent(self.a + other.a, self.modulus)

    def inverse(self) -> "RootExponent":
        return RootExponent(-self.a, self.modulus)

    def power(self, m: int) -> "RootExponent":
        return RootExponent(self.a * m, self.modulus)


def unit_root(a: int, n: int) -> RootExponent:
    return RootExponent(a, n)


def minus_one(n: int) -> RootExponent:
    assert n % 2 == 0, "order-two scalar needs even order"
    return RootExponent(n // 2, n)


def d_mu(mu: RootExponent, orbit: SpecialOrbit) -> int:
    """Local weight of the scalar mu at an orbit: exponent mod n'(y)."""
    assert mu.modulus % orbit.nprime == 0
    return mu.a % orbit.nprime


@dataclass(frozen=True)
class InvariantDivisor:
    """sum_y residues[y] * (reduced fiber over y) + pullback of base degree."""

    residues: dict[str, int]
    base_degree: int


@dataclass(frozen=True)
class LineNumericData:
    """Residues mod n'(y) classifying a line bundle up to pullback twist."""

    values: dict[str, int]

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values.values())


def degree_on_X(div: InvariantDivisor, profile: CoverProfile) -> int:
    """Total degree upstairs: sum of residue * orbit length + n * base part."""
    total = profile.n * div.base_degree
    known = {y.id: y.k for y in profile.orbits}
    for label, res in div.residues.items():
        if label not in known:
            raise UnknownOrbit(label)
        total += res * known[label]
    return total


def numeric_data(div: InvariantDivisor, profile: CoverProfile) -> LineNumericData:
    """Reduce the orbit coefficients mod n'(y); absent orbits contribute 0."""
    known = {y.id for y in profile.orbits}
    for label in div.residues:
        if label not in known:
            raise UnknownOrbit(label)
    values = {y.id: div.residues.get(y.id, 0) % y.nprime for y in profile.orbits}
    return LineNumericData(values=values)


def is_pullback(div: InvariantDivisor, profile: CoverProfile) -> bool:
    """True iff the divisor class is a pullback, i.e. all residues vanish mod n'."""
    return numeric_data(div, profile).is_trivial()


def norm_degree_check(base_degree: int, profile: CoverProfile) -> int:
    """Degree upstairs of the pullback of a degree-base_degree class."""
    return profile.n * base_degree


# --- serialization ---

def divisor_to_json(div: InvariantDivisor) -> dict:
    return {"residues": dict(sorted(div.residues.items())), "base_degree": div.base_degree}


def divisor_from_json(doc: object) -> InvariantDivisor:
    if not isinstance(doc, dict):
        raise SchemaError("divisor document must be an object")
    extra = set(doc) - {"residues", "base_degree"}
    if extra:
        raise SchemaError(f"unknown divisor fields: {sorted(extra)}")
    if "residues" not in doc or "base_degree" not in doc:
        raise SchemaError("divisor document requires 'residues' and 'base_degree'")
    residues = doc["residues"]
    base = doc["base_degree"]
    if not isinstance(residues, dict):
        raise SchemaError("'residues' must be an object")
    for label, res in residues.items():
        if not isinstance(label, str):
            raise SchemaError("residue keys must be strings")
        if not isinstance(res, int) or isinstance(res, bool):
            raise SchemaError(f"residue at {label!r} must be an integer")
    if not isinstance(base, int) or isinstance(base, bool):
        raise SchemaError("'base_degree' must be an integer")
    return InvariantDivisor(residues=dict(residues), base_degree=base)
