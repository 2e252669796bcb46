"""Rank-2 equivariant numeric data and the parabolic correspondence.

The discrete part of a rank-2 equivariant bundle with fixed determinant
lift consists of, per special orbit, the unordered pair of local
eigenvalue exponents (d1 <= d2, both in [0, n'(y))), tied to the
determinant's residue by d1 + d2 = delta(y) mod n'(y).  The admissible
set for a fixed determinant is the product over orbits of the pairs
satisfying that congruence.

On the other side sits the parabolic datum downstairs: a determinant
degree on the base, a weight w(y) = (d2-d1)/n'(y) per orbit, and the
distinguished exponent d2 recording which eigenline carries the flag.
`to_parabolic` / `from_parabolic` realize the exact bijection between
the two descriptions; `solve_d2` recovers the possible distinguished
exponents from (determinant, weights) alone.

Elementary modifications act on this data by integer bookkeeping:
the tracked flag exponent is kept, the complementary exponent drops by
one (mod n'), the determinant loses one fiber (degree -k(y), residue
-1); `gamma_apply` is the closed form for iterating this m(y) times
at every orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ._ser import rat_from_json, rat_to_json, require_int, require_keys, require_str
from .covers import CoverProfile
from .errors import InvalidDatum, NonIntegralDegree, NoSolution, SchemaError, UnknownOrbit

PLUS = "+"
MINUS = "-"
FIRST = "first"
SECOND = "second"


@dataclass(frozen=True)
class DeterminantLift:
    """Determinant line with a chosen equivariant lift.

    residues[y] in [0, n'(y)) is the determinant's local exponent,
    degree its total degree upstairs.  lift_sign is an opaque two-value
    tag distinguishing the two inequivalent lifts that exist for even
    cover order; odd order forces "+".
    """

    residues: dict[str, int]
    degree: int
    lift_sign: str = PLUS


@dataclass(frozen=True)
class Rank2EqData:
    """Per-orbit exponent pairs plus the determinant lift they sum to."""

    numeric: dict[str, tuple[int, int]]
    det: DeterminantLift


@dataclass(frozen=True)
class FlagSelector:
    """Per-orbit choice of tracked eigenvalue: 'first' (d1) or 'second' (d2)."""

    choice: dict[str, str]


@dataclass(frozen=True)
class AdmissibleParabolicDatum:
    """Downstairs shadow: determinant degree on the base, weights, flag exponent."""

    det_bar_degree: int
    weights: dict[str, Fraction]
    d2: dict[str, int]
    det_lift_sign: str = PLUS


def validate_det(det: DeterminantLift, profile: CoverProfile) -> None:
    if det.lift_sign not in (PLUS, MINUS):
        raise InvalidDatum(f"lift sign must be '+' or '-', got {det.lift_sign!r}")
    if profile.n % 2 == 1 and det.lift_sign != PLUS:
        raise InvalidDatum("odd cover order admits a single lift; sign must be '+'")
    known = {y.id: y.nprime for y in profile.orbits}
    for label, res in det.residues.items():
        if label not in known:
            raise UnknownOrbit(label)
        if not 0 <= res < known[label]:
            raise InvalidDatum(f"determinant residue at {label!r} out of range [0,{known[label]})")


def validate_rank2(data: Rank2EqData, profile: CoverProfile) -> None:
    validate_det(data.det, profile)
    ids = set(profile.orbit_ids())
    if set(data.numeric) != ids:
        raise InvalidDatum("numeric data must cover exactly the profile orbits")
    for y in profile.orbits:
        d1, d2 = data.numeric[y.id]
        if not (0 <= d1 <= d2 < y.nprime):
            raise InvalidDatum(f"exponent pair at {y.id!r} violates 0 <= d1 <= d2 < n'")
        if (d1 + d2) % y.nprime != data.det.residues.get(y.id, 0) % y.nprime:
            raise InvalidDatum(f"exponent pair at {y.id!r} does not sum to determinant residue")


def validate_parabolic(pdat: AdmissibleParabolicDatum, profile: CoverProfile) -> None:
    if pdat.det_lift_sign not in (PLUS, MINUS):
        raise InvalidDatum(f"lift sign must be '+' or '-', got {pdat.det_lift_sign!r}")
    if profile.n % 2 == 1 and pdat.det_lift_sign != PLUS:
        raise InvalidDatum("odd cover order admits a single lift; sign must be '+'")
    known = {y.id: y for y in profile.orbits}
    for label in itertools.chain(pdat.weights, pdat.d2):
        if label not in known:
            raise UnknownOrbit(label)
    for y in profile.orbits:
        w = Fraction(pdat.weights.get(y.id, 0))
        if not 0 <= w < 1:
            raise InvalidDatum(f"weight at {y.id!r} outside [0,1)")
        if (w * y.nprime).denominator != 1:
            raise InvalidDatum(f"weight denominator at {y.id!r} does not divide n'={y.nprime}")
        d2 = pdat.d2.get(y.id, 0)
        if not 0 <= d2 < y.nprime:
            raise InvalidDatum(f"flag exponent at {y.id!r} outside [0,{y.nprime})")
        if d2 - int(w * y.nprime) < 0:
            raise InvalidDatum(f"derived lower exponent at {y.id!r} is negative")


def admissible_pairs(delta_residue: int, nprime: int) -> list[tuple[int, int]]:
    """Ordered pairs d1 <= d2 < n' with d1 + d2 = delta_residue mod n'."""
    return [
        (d1, d2)
        for d1 in range(nprime)
        for d2 in range(d1, nprime)
        if (d1 + d2) % nprime == delta_residue % nprime
    ]


def enumerate_lambda(det: DeterminantLift, profile: CoverProfile) -> list[dict[str, tuple[int, int]]]:
    """All admissible numeric data for the given determinant.

    Cartesian product over orbits of the per-orbit admissible pairs, in
    profile orbit order; the empty profile yields the single empty
    assignment.
    """
    validate_det(det, profile)
    per_orbit = [
        admissible_pairs(det.residues.get(y.id, 0), y.nprime) for y in profile.orbits
    ]
    ids = profile.orbit_ids()
    return [dict(zip(ids, combo)) for combo in itertools.product(*per_orbit)]


def weight_system(numeric: dict[str, tuple[int, int]], profile: CoverProfile) -> dict[str, Fraction]:
    """Parabolic weights w(y) = (d2 - d1) / n'(y)."""
    out = {}
    for y in profile.orbits:
        d1, d2 = numeric[y.id]
        out[y.id] = Fraction(d2 - d1, y.nprime)
    return out


def bar_delta_degree(det: DeterminantLift, numeric: dict[str, tuple[int, int]],
                     profile: CoverProfile) -> int:
    """Degree of the descended determinant on the base.

    deg = (degree - sum_y (d1+d2) k(y)) / n; raises NonIntegralDegree
    when the division fails, which flags data not realizable over the
    profile.
    """
    total = det.degree
    for y in profile.orbits:
        d1, d2 = numeric[y.id]
        total -= (d1 + d2) * y.k
    q, rem = divmod(total, profile.n)
    if rem != 0:
        raise NonIntegralDegree(
            f"corrected determinant degree {total} is not divisible by n={profile.n}")
    return q


def elementary_modification(data: Rank2EqData, profile: CoverProfile, orbit_id: str,
                            direction: str, inverse: bool = False) -> Rank2EqData:
    """One elementary modification at an orbit, in the tracked direction.

    The tracked exponent (direction 'first' = d1, 'second' = d2) stays;
    the complementary exponent drops by one mod n' (rises for the
    inverse), the pair re-sorts, and the determinant loses (gains) one
    reduced fiber: degree -k(y), residue -1 mod n'(y).
    """
    validate_rank2(data, profile)
    if direction not in (FIRST, SECOND):
        raise InvalidDatum(f"direction must be 'first' or 'second', got {direction!r}")
    y = profile.orbit(orbit_id)
    d1, d2 = data.numeric[orbit_id]
    step = 1 if inverse else -1
    if direction == FIRST:
        kept, moved = d1, (d2 + step) % y.nprime
    else:
        kept, moved = d2, (d1 + step) % y.nprime
    pair = (min(kept, moved), max(kept, moved))
    numeric = dict(data.numeric)
    numeric[orbit_id] = pair
    residues = dict(data.det.residues)
    residues[orbit_id] = (residues.get(orbit_id, 0) + step) % y.nprime
    det = DeterminantLift(residues=residues, degree=data.det.degree + step * y.k,
                          lift_sign=data.det.lift_sign)
    return Rank2EqData(numeric=numeric, det=det)


def gamma_apply(data: Rank2EqData, profile: CoverProfile, m: dict[str, int],
                flags: FlagSelector) -> Rank2EqData:
    """Closed form for m(y)-fold elementary modification at every orbit.

    Positive m(y) runs m(y) forward modifications in the selected
    direction (negative: inverse ones): the selected exponent survives,
    the complementary one drops by m(y) mod n', the determinant degree
    drops by sum_y m(y) k(y) and each residue by m(y).
    """
    validate_rank2(data, profile)
    numeric = {}
    residues = dict(data.det.residues)
    degree = data.det.degree
    for y in profile.orbits:
        d1, d2 = data.numeric[y.id]
        my = m.get(y.id, 0)
        if my == 0:
            numeric[y.id] = (d1, d2)
            continue
        side = flags.choice.get(y.id)
        if side not in (FIRST, SECOND):
            raise InvalidDatum(f"no tracked direction for modified orbit {y.id!r}")
        kept, moved = (d1, d2) if side == FIRST else (d2, d1)
        moved = (moved - my) % y.nprime
        numeric[y.id] = (min(kept, moved), max(kept, moved))
        residues[y.id] = (residues.get(y.id, 0) - my) % y.nprime
        degree -= my * y.k
    det = DeterminantLift(residues=residues, degree=degree, lift_sign=data.det.lift_sign)
    return Rank2EqData(numeric=numeric, det=det)


def to_parabolic(data: Rank2EqData, profile: CoverProfile) -> AdmissibleParabolicDatum:
    """Descend equivariant numeric data to its parabolic shadow."""
    validate_rank2(data, profile)
    weights = weight_system(data.numeric, profile)
    d2 = {y.id: data.numeric[y.id][1] for y in profile.orbits}
    bar = bar_delta_degree(data.det, data.numeric, profile)
    return AdmissibleParabolicDatum(det_bar_degree=bar, weights=weights, d2=d2,
                                    det_lift_sign=data.det.lift_sign)


def from_parabolic(pdat: AdmissibleParabolicDatum, profile: CoverProfile) -> Rank2EqData:
    """Reconstruct equivariant numeric data from its parabolic shadow."""
    validate_parabolic(pdat, profile)
    numeric = {}
    residues = {}
    degree = profile.n * pdat.det_bar_degree
    for y in profile.orbits:
        w = Fraction(pdat.weights.get(y.id, 0))
        spread = w * y.nprime
        assert spread.denominator == 1
        d2 = pdat.d2.get(y.id, 0)
        d1 = d2 - int(spread)
        if d1 < 0:
            raise InvalidDatum(f"flag exponent at {y.id!r} too small for weight {w}")
        numeric[y.id] = (d1, d2)
        residues[y.id] = (d1 + d2) % y.nprime
        degree += (d1 + d2) * y.k
    det = DeterminantLift(residues=residues, degree=degree, lift_sign=pdat.det_lift_sign)
    return Rank2EqData(numeric=numeric, det=det)


def solve_d2(det: DeterminantLift, weights: dict[str, Fraction],
             profile: CoverProfile) -> list[dict[str, int]]:
    """Distinguished exponents consistent with (determinant, weights).

    Per orbit, solves 2*d2 = delta(y) + n'(y) w(y) mod n'(y) within
    [0, n'(y)) and keeps solutions whose derived lower exponent is
    non-negative; odd n'(y) gives exactly one solution, even n'(y) up
    to two.  Raises NoSolution when some orbit admits none; returns the
    product over orbits otherwise.
    """
    validate_det(det, profile)
    per_orbit: list[list[int]] = []
    for y in profile.orbits:
        w = Fraction(weights.get(y.id, 0))
        spread = w * y.nprime
        if spread.denominator != 1 or not 0 <= w < 1:
            raise InvalidDatum(f"weight at {y.id!r} not admissible for n'={y.nprime}")
        m = int(spread)
        delta = det.residues.get(y.id, 0)
        sols = [d2 for d2 in range(y.nprime)
                if (2 * d2 - m - delta) % y.nprime == 0 and d2 - m >= 0]
        if not sols:
            raise NoSolution(f"no flag exponent at {y.id!r} fits residue {delta} and weight {w}")
        per_orbit.append(sols)
    ids = profile.orbit_ids()
    return [dict(zip(ids, combo)) for combo in itertools.product(*per_orbit)]


# --- serialization ---

def det_to_json(det: DeterminantLift) -> dict:
    return {
        "residues": dict(sorted(det.residues.items())),
        "degree": det.degree,
        "lift_sign": det.lift_sign,
    }


def det_from_json(doc: object) -> DeterminantLift:
    if not isinstance(doc, dict):
        raise SchemaError("determinant document must be an object")
    require_keys(doc, {"residues", "degree"}, {"lift_sign"}, "determinant")
    residues = doc["residues"]
    if not isinstance(residues, dict):
        raise SchemaError("'residues' must be an object")
    parsed = {}
    for label, res in residues.items():
        parsed[require_str(label, "residue key")] = require_int(res, f"residue at {label!r}")
    degree = require_int(doc["degree"], "'degree'")
    sign = doc.get("lift_sign", PLUS)
    if sign not in (PLUS, MINUS):
        raise SchemaError("'lift_sign' must be '+' or '-'")
    return DeterminantLift(residues=parsed, degree=degree, lift_sign=sign)


def numeric_to_json(numeric: dict[str, tuple[int, int]]) -> dict:
    return {label: [d1, d2] for label, (d1, d2) in sorted(numeric.items())}


def numeric_from_json(doc: object) -> dict[str, tuple[int, int]]:
    if not isinstance(doc, dict):
        raise SchemaError("numeric data must be an object")
    out = {}
    for label, pair in doc.items():
        require_str(label, "numeric key")
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"numeric entry at {label!r} must be a two-element list")
        out[label] = (require_int(pair[0], "d1"), require_int(pair[1], "d2"))
    return out


def rank2_to_json(data: Rank2EqData) -> dict:
    return {"numeric": numeric_to_json(data.numeric), "det": det_to_json(data.det)}


def rank2_from_json(doc: object) -> Rank2EqData:
    if not isinstance(doc, dict):
        raise SchemaError("rank-2 datum must be an object")
    require_keys(doc, {"numeric", "det"}, set(), "rank-2 datum")
    return Rank2EqData(numeric=numeric_from_json(doc["numeric"]),
                       det=det_from_json(doc["det"]))


def parabolic_to_json(pdat: AdmissibleParabolicDatum) -> dict:
    return {
        "det_bar_degree": pdat.det_bar_degree,
        "weights": {label: rat_to_json(w) for label, w in sorted(pdat.weights.items())},
        "d2": dict(sorted(pdat.d2.items())),
        "det_lift_sign": pdat.det_lift_sign,
    }


def parabolic_from_json(doc: object) -> AdmissibleParabolicDatum:
    if not isinstance(doc, dict):
        raise SchemaError("parabolic datum must be an object")
    require_keys(doc, {"det_bar_degree", "weights", "d2"}, {"det_lift_sign"}, "parabolic datum")
    weights_doc = doc["weights"]
    d2_doc = doc["d2"]
    if not isinstance(weights_doc, dict) or not isinstance(d2_doc, dict):
        raise SchemaError("'weights' and 'd2' must be objects")
    weights = {require_str(k, "weight key"): rat_from_json(v, f"weight at {k!r}")
               for k, v in weights_doc.items()}
    d2 = {require_str(k, "d2 key"): require_int(v, f"d2 at {k!r}") for k, v in d2_doc.items()}
    sign = doc.get("det_lift_sign", PLUS)
    if sign not in (PLUS, MINUS):
        raise SchemaError("'det_lift_sign' must be '+' or '-'")
    return AdmissibleParabolicDatum(det_bar_degree=require_int(doc["det_bar_degree"], "'det_bar_degree'"),
                                    weights=weights, d2=d2, det_lift_sign=sign)
