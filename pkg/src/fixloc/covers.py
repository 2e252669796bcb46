"""Combinatorial profiles of cyclic branched covers.

A cover profile records the data of a degree-n cyclic cover of curves
that the rest of the package consumes: the order n of the automorphism,
the base genus (reporting only), and one entry per special orbit, i.e.
per branch point, holding the orbit length k(y) < n.  The local
stabilizer order n'(y) = n / k(y) is derived.

No Riemann-Hurwitz consistency is imposed: profiles are combinatorial
objects and some of them are not realized by any actual curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidProfile, SchemaError


@dataclass(frozen=True)
class SpecialOrbit:
    """One branch orbit: label, length k, stabilizer order n' = n/k."""

    id: str
    k: int
    nprime: int


@dataclass(frozen=True)
class CoverProfile:
    n: int
    orbits: tuple[SpecialOrbit, ...]
    genus_base: int = 0

    def orbit(self, orbit_id: str) -> SpecialOrbit:
        for y in self.orbits:
            if y.id == orbit_id:
                return y
        raise KeyError(orbit_id)

    def orbit_ids(self) -> tuple[str, ...]:
        return tuple(y.id for y in self.orbits)


def make_profile(n: int, lengths: dict[str, int] | list[tuple[str, int]],
                 genus_base: int = 0) -> CoverProfile:
    """Build and validate a profile from (label, orbit length) pairs."""
    items = list(lengths.items()) if isinstance(lengths, dict) else list(lengths)
    orbits = []
    for label, k in items:
        if not isinstance(k, int) or k < 1 or n % k != 0:
            raise InvalidProfile(f"orbit {label!r}: length {k} does not divide n={n}")
        orbits.append(SpecialOrbit(id=str(label), k=k, nprime=n // k))
    profile = CoverProfile(n=n, orbits=tuple(orbits), genus_base=genus_base)
    validate(profile)
    return profile


def validate(profile: CoverProfile) -> None:
    """Check structural invariants; raise InvalidProfile on violation."""
    if not isinstance(profile.n, int) or profile.n < 1:
        raise InvalidProfile(f"cover order must be a positive integer, got {profile.n!r}")
    if not isinstance(profile.genus_base, int) or profile.genus_base < 0:
        raise InvalidProfile(f"base genus must be a non-negative integer, got {profile.genus_base!r}")
    seen = set()
    for y in profile.orbits:
        if y.id in seen:
            raise InvalidProfile(f"duplicate orbit label {y.id!r}")
        seen.add(y.id)
        if y.k < 1 or profile.n % y.k != 0:
            raise InvalidProfile(f"orbit {y.id!r}: length {y.k} does not divide n={profile.n}")
        if y.k == profile.n:
            # full-length orbits are generic, not special; they carry no data
            raise InvalidProfile(f"orbit {y.id!r} has full length n={profile.n}")
        if y.nprime != profile.n // y.k:
            raise InvalidProfile(f"orbit {y.id!r}: stabilizer order {y.nprime} != {profile.n}//{y.k}")


def gcd_orbit_lengths(profile: CoverProfile) -> int:
    """gcd of n and all special-orbit lengths (n itself when there are none)."""
    r = profile.n
    for y in profile.orbits:
        r = math.gcd(r, y.k)
    return r


def kernel_order(profile: CoverProfile) -> int:
    """Order of the kernel of pullback on degree-zero line bundle classes.

    The kernel of pullback along the cover is cyclic, generated by the
    class cutting out the maximal unramified intermediate quotient; its
    order is the largest divisor of n dividing every orbit length.
    Computed here by divisor search and cross-checked against the gcd
    form, which is a separate code path.
    """
    validate(profile)
    best = 1
    for t in range(1, profile.n + 1):
        if profile.n % t != 0:
            continue
        if all(y.k % t == 0 for y in profile.orbits):
            best = t
    assert best == gcd_orbit_lengths(profile)
    return best


def factor_cover(profile: CoverProfile) -> tuple[CoverProfile, int]:
    """Split the cover into a ramified part over an unramified part.

    Returns (ramified_profile, r): the cover factors through an
    intermediate curve; the map onto the base is unramified of degree
    r = kernel_order(profile), and the remaining degree n/r cover is
    described by ramified_profile, whose orbit lengths k/r now have
    trivial common divisor with n/r.  The intermediate reporting genus
    comes from the unramified degree formula r*(g-1)+1, floored at 0
    for profiles with no geometric realization.
    """
    r = kernel_order(profile)
    mid_genus = max(0, r * (profile.genus_base - 1) + 1)
    orbits = tuple(
        SpecialOrbit(id=y.id, k=y.k // r, nprime=y.nprime) for y in profile.orbits
    )
    ramified = CoverProfile(n=profile.n // r, orbits=orbits, genus_base=mid_genus)
    validate(ramified)
    return ramified, r


def orbit_length_under_power(k: int, d: int) -> int:
    """Length of a k-point orbit under the d-th power of the generator."""
    assert k >= 1 and d >= 1
    return k // math.gcd(d, k)


# --- serialization ---

def profile_to_json(profile: CoverProfile) -> dict:
    return {
        "n": profile.n,
        "genus_base": profile.genus_base,
        "orbits": [{"id": y.id, "k": y.k} for y in profile.orbits],
    }


def profile_from_json(doc: object) -> CoverProfile:
    """Parse the profile document schema; unknown fields are rejected."""
    if not isinstance(doc, dict):
        raise SchemaError("profile document must be an object")
    allowed = {"n", "genus_base", "orbits"}
    extra = set(doc) - allowed
    if extra:
        raise SchemaError(f"unknown profile fields: {sorted(extra)}")
    if "n" not in doc or "orbits" not in doc:
        raise SchemaError("profile document requires 'n' and 'orbits'")
    n = doc["n"]
    genus = doc.get("genus_base", 0)
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("'n' must be an integer")
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise SchemaError("'genus_base' must be an integer")
    raw = doc["orbits"]
    if not isinstance(raw, list):
        raise SchemaError("'orbits' must be a list")
    lengths: list[tuple[str, int]] = []
    for entry in raw:
        if not isinstance(entry, dict):
            raise SchemaError("orbit entries must be objects")
        if set(entry) != {"id", "k"}:
            raise SchemaError(f"orbit entry fields must be exactly id,k: {sorted(entry)}")
        if not isinstance(entry["id"], str):
            raise SchemaError("orbit 'id' must be a string")
        if not isinstance(entry["k"], int) or isinstance(entry["k"], bool):
            raise SchemaError("orbit 'k' must be an integer")
        lengths.append((entry["id"], entry["k"]))
    return make_profile(n, lengths, genus_base=genus)
