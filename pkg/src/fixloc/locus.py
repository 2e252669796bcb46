"""Graded points of the fixed variety and their discrete dynamics.

A strictly semistable point is recorded by its graded object: an
unordered pair of summands, each a (base degree, flagged-orbit support)
record, together with the ambient context (numeric exponent data and
determinant lift).  Twisting one summand by a root-of-unity character
and the other by its inverse preserves the associated fixed point; for
even cover order the odd characters cross between the two determinant
lifts.  Closing the input under those steps yields the partition whose
classes biject with strictly semistable fixed points.

All degree bookkeeping runs through the per-summand upstairs degree
n * bar_degree + sum_y k(y) * l(y), which is invariant under the
twists; the downstairs degrees after a step are recovered from it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .covers import CoverProfile, kernel_order, make_profile
from .divisors import RootExponent, d_mu
from .equivariant import (
    MINUS,
    PLUS,
    AdmissibleParabolicDatum,
    DeterminantLift,
    Rank2EqData,
    validate_parabolic,
    validate_rank2,
)
from .errors import (
    InconsistentDegrees,
    InvalidDatum,
    InvalidGenus,
    NonIntegralDegree,
    OddOrder,
)


@dataclass(frozen=True)
class GradedSummand:
    """One graded piece: degree downstairs and the set of flagged orbits."""

    bar_degree: int
    support: frozenset


def _summand_key(s: GradedSummand):
    return (s.bar_degree, tuple(sorted(map(str, s.support))))


class GradedPoint:
    """Unordered pair of graded summands with its discrete context.

    numeric/det may be None for points born downstairs without a chosen
    cover (the stability module constructs those); equivalence steps
    require both.  Equality and hashing are by canonical content.
    """

    __slots__ = ("summands", "numeric", "det")

    def __init__(self, summands, numeric=None, det=None):
        pair = tuple(sorted(summands, key=_summand_key))
        if len(pair) != 2:
            raise InvalidDatum("graded point needs exactly two summands")
        self.summands = pair
        self.numeric = dict(numeric) if numeric is not None else None
        self.det = det

    def _key(self):
        numeric = tuple(sorted(self.numeric.items())) if self.numeric is not None else None
        det = self.det
        det_key = None
        if det is not None:
            det_key = (tuple(sorted(det.residues.items())), det.degree, det.lift_sign)
        return (self.summands, numeric, det_key)

    def __eq__(self, other):
        return isinstance(other, GradedPoint) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GradedPoint(summands={self.summands!r}, numeric={self.numeric!r}, det={self.det!r})"


def validate_graded(pt: GradedPoint, profile: CoverProfile) -> None:
    """Structural checks tying a graded point to its cover context."""
    if pt.numeric is None or pt.det is None:
        raise InvalidDatum("graded point lacks cover context")
    validate_rank2(Rank2EqData(numeric=pt.numeric, det=pt.det), profile)
    weighted = {y.id for y in profile.orbits if pt.numeric[y.id][0] != pt.numeric[y.id][1]}
    s0, s1 = pt.summands
    if set(s0.support) | set(s1.support) != weighted or set(s0.support) & set(s1.support):
        raise InvalidDatum("summand supports must partition the weighted orbits")
    up0, up1 = (_upstairs_degree(pt, i, profile) for i in (0, 1))
    if up0 != up1:
        raise InvalidDatum("summands have unequal parabolic degree")


def _exponents(pt: GradedPoint, index: int, profile: CoverProfile) -> dict[str, int]:
    """Per-orbit eigenvalue exponent carried by one summand.

    The flagged summand carries the larger exponent d2 on its support,
    the complementary one d1 there; off-support both coincide.
    """
    supp = pt.summands[index].support
    out = {}
    for y in profile.orbits:
        d1, d2 = pt.numeric[y.id]
        out[y.id] = d2 if y.id in supp else d1
    return out


def _upstairs_degree(pt: GradedPoint, index: int, profile: CoverProfile) -> int:
    ell = _exponents(pt, index, profile)
    return profile.n * pt.summands[index].bar_degree + sum(
        y.k * ell[y.id] for y in profile.orbits)


def _rebuild(ell0: dict[str, int], ell1: dict[str, int], up0: int, up1: int,
             det: DeterminantLift, profile: CoverProfile) -> GradedPoint:
    """Reassemble a graded point from per-summand exponents and upstairs degrees."""
    numeric = {}
    supports: tuple[set, set] = (set(), set())
    for y in profile.orbits:
        a, b = ell0[y.id], ell1[y.id]
        numeric[y.id] = (min(a, b), max(a, b))
        if a != b:
            supports[0 if a > b else 1].add(y.id)
    bars = []
    for up, ell in ((up0, ell0), (up1, ell1)):
        corrected = up - sum(y.k * ell[y.id] for y in profile.orbits)
        q, rem = divmod(corrected, profile.n)
        if rem != 0:
            raise NonIntegralDegree(
                f"summand degree {corrected} not divisible by n={profile.n}; "
                "profile does not admit this twist")
        bars.append(q)
    summands = (GradedSummand(bars[0], frozenset(supports[0])),
                GradedSummand(bars[1], frozenset(supports[1])))
    pt = GradedPoint(summands, numeric=numeric, det=det)
    validate_graded(pt, profile)
    return pt


def sim_o_step(pt: GradedPoint, mu: RootExponent, profile: CoverProfile) -> GradedPoint:
    """Twist one summand by mu and the other by its inverse.

    Leaves the determinant lift untouched; the two summand degrees move
    in opposite directions as dictated by the reduced local weights of
    mu.  Raises NonIntegralDegree when the profile cannot absorb the
    twist at degree level (never on profiles realized by a curve).
    """
    validate_graded(pt, profile)
    assert mu.modulus == profile.n
    ell0 = _exponents(pt, 0, profile)
    ell1 = _exponents(pt, 1, profile)
    up0 = _upstairs_degree(pt, 0, profile)
    up1 = _upstairs_degree(pt, 1, profile)
    for y in profile.orbits:
        shift = d_mu(mu, y)
        ell0[y.id] = (ell0[y.id] + shift) % y.nprime
        ell1[y.id] = (ell1[y.id] - shift) % y.nprime
    return _rebuild(ell0, ell1, up0, up1, pt.det, profile)


def sim_e_step(pt: GradedPoint, profile: CoverProfile, exponent: int = 1,
               summand: int = 0) -> GradedPoint:
    """Twist a single summand by an odd character, crossing determinant lifts.

    Only exists for even cover order (OddOrder otherwise); the exponent
    must be odd so that the determinant's equivariant structure moves to
    the other lift, whose opaque sign tag flips.
    """
    if profile.n % 2 == 1:
        raise OddOrder("single-summand crossing twist needs even cover order")
    if exponent % 2 != 1:
        raise InvalidDatum("crossing twist exponent must be odd")
    if summand not in (0, 1):
        raise InvalidDatum("summand index must be 0 or 1")
    validate_graded(pt, profile)
    mu = RootExponent(exponent, profile.n)
    ell = [_exponents(pt, 0, profile), _exponents(pt, 1, profile)]
    ups = [_upstairs_degree(pt, 0, profile), _upstairs_degree(pt, 1, profile)]
    residues = dict(pt.det.residues)
    # the underlying summand bundle is untouched (only its lift scales),
    # so the upstairs degrees stay fixed while the exponents reduce anew
    for y in profile.orbits:
        shift = d_mu(mu, y)
        ell[summand][y.id] = (ell[summand][y.id] + shift) % y.nprime
        residues[y.id] = (residues.get(y.id, 0) + shift) % y.nprime
    sign = MINUS if pt.det.lift_sign == PLUS else PLUS
    det = DeterminantLift(residues=residues, degree=pt.det.degree, lift_sign=sign)
    return _rebuild(ell[0], ell[1], ups[0], ups[1], det, profile)


def zeta2_apply(data: Rank2EqData, profile: CoverProfile) -> Rank2EqData:
    """Negate the equivariant lift (even order only).

    Every local exponent shifts by the reduced weight of -1, i.e. by
    n'(y)/2 at odd-length orbits and not at all at even-length ones;
    the determinant residues and degree are untouched and the opaque
    lift tag flips.  This is an involution.
    """
    if profile.n % 2 == 1:
        raise OddOrder("lift negation needs even cover order")
    validate_rank2(data, profile)
    half = profile.n // 2
    numeric = {}
    for y in profile.orbits:
        d1, d2 = data.numeric[y.id]
        shift = half % y.nprime
        a, b = (d1 + shift) % y.nprime, (d2 + shift) % y.nprime
        numeric[y.id] = (min(a, b), max(a, b))
    sign = MINUS if data.det.lift_sign == PLUS else PLUS
    det = DeterminantLift(residues=dict(data.det.residues), degree=data.det.degree,
                          lift_sign=sign)
    return Rank2EqData(numeric=numeric, det=det)


def parabolic_zeta2(pdat: AdmissibleParabolicDatum, profile: CoverProfile) -> AdmissibleParabolicDatum:
    """Lift negation written directly on the parabolic shadow.

    An independent route to the same operation as zeta2_apply: the
    opaque sign tag flips and per orbit (m below is the weight
    numerator w*n'):

      even length          unchanged
      2*d2 < n'            d2 -> d2 + n'/2, weight kept          (up)
      2*(d2-m) >= n'       d2 -> d2 + n'/2 - n', weight kept     (down)
      otherwise            d2 -> d2 - m + n'/2, weight -> 1 - w  (cross)

    The straddling branch is where the two flag exponents trade
    places, which is what reverses the weight.  The determinant
    upstairs is untouched, but descending along the negated lift
    rescales by one reduced fiber per moving orbit, so the base degree
    shifts by (#down - #up).
    """
    if profile.n % 2 == 1:
        raise OddOrder("lift negation needs even cover order")
    validate_parabolic(pdat, profile)
    weights = {}
    d2map = {}
    bar = pdat.det_bar_degree
    for y in profile.orbits:
        w = Fraction(pdat.weights.get(y.id, 0))
        d2 = pdat.d2.get(y.id, 0)
        m = int(w * y.nprime)
        if y.k % 2 == 0:
            weights[y.id], d2map[y.id] = w, d2
            continue
        half = y.nprime // 2
        if 2 * d2 < y.nprime:
            weights[y.id], d2map[y.id] = w, d2 + half
            bar -= 1
        elif 2 * (d2 - m) >= y.nprime:
            weights[y.id], d2map[y.id] = w, d2 + half - y.nprime
            bar += 1
        else:
            weights[y.id], d2map[y.id] = 1 - w, d2 - m + half
    sign = MINUS if pdat.det_lift_sign == PLUS else PLUS
    out = AdmissibleParabolicDatum(det_bar_degree=bar,
                                   weights=weights, d2=d2map, det_lift_sign=sign)
    validate_parabolic(out, profile)
    return out


def zeta2_partition(numeric: dict[str, tuple[int, int]], profile: CoverProfile) -> dict[str, str]:
    """Classify each orbit's behavior under lift negation.

    'fixed': even orbit length, nothing moves; at odd length the shift
    is n'/2 and the pair either moves up ('up': d2 < n'/2), down
    ('down': d1 >= n'/2), or straddles and swaps ('cross').
    """
    if profile.n % 2 == 1:
        raise OddOrder("lift negation needs even cover order")
    out = {}
    for y in profile.orbits:
        d1, d2 = numeric[y.id]
        if y.k % 2 == 0:
            out[y.id] = "fixed"
        elif 2 * d2 < y.nprime:
            out[y.id] = "up"
        elif 2 * d1 >= y.nprime:
            out[y.id] = "down"
        else:
            out[y.id] = "cross"
    return out


def m_cross(numeric: dict[str, tuple[int, int]], profile: CoverProfile) -> dict[str, int]:
    """Indicator of the straddling orbits (the downstairs modification count)."""
    table = zeta2_partition(numeric, profile)
    return {label: 1 if tag == "cross" else 0 for label, tag in table.items()}


def s_i_possible(profile: CoverProfile) -> bool:
    """Whether stable points can map to strictly semistable ones.

    Happens exactly when the pullback kernel contains an involution,
    i.e. when its order is even.
    """
    return kernel_order(profile) % 2 == 0


@dataclass(frozen=True)
class DecompositionReport:
    n_parity: str
    r_parity: str
    case: str
    kernel_order: int
    statements: tuple[str, ...]


def decomposition_report(profile: CoverProfile) -> DecompositionReport:
    """Case analysis of how the admissible family covers the fixed variety."""
    r = kernel_order(profile)
    n_parity = "odd" if profile.n % 2 else "even"
    r_parity = "odd" if r % 2 else "even"
    if profile.n % 2 == 1:
        case = "n odd"
        statements = (
            "case n odd: the correspondence is a bijection from stable admissible "
            "data onto the stable fixed points",
            "the strictly semistable fixed points biject with classes of the "
            "opposite-twist relation on the semistable boundary",
        )
    elif r % 2 == 1:
        case = "n even, r odd"
        statements = (
            "case n even, r odd: the correspondence descends to the quotient by "
            "lift negation and is a bijection from stable data onto the stable "
            "fixed points",
            "no stable datum is fixed by a kernel involution (the kernel has odd "
            "order), so the self-associated part is empty",
            "the strictly semistable fixed points biject with classes of the "
            "crossing-twist relation on the quotient semistable boundary",
        )
    else:
        case = "n even, r even"
        statements = (
            "case n even, r even: the correspondence descends to the quotient by "
            "lift negation; generic stable data biject with stable fixed points",
            "stable data fixed by the kernel involution map to strictly "
            "semistable bundles and are counted separately",
            "the strictly semistable fixed points biject with the disjoint union "
            "of that self-associated part and the classes of the crossing-twist "
            "relation on the quotient semistable boundary",
        )
    return DecompositionReport(n_parity=n_parity, r_parity=r_parity, case=case,
                               kernel_order=r, statements=statements)


# --- equivalence closure ---

def equivalence_classes(points, profile: CoverProfile) -> list[list[GradedPoint]]:
    """Partition graded points by the twist relation.

    Closure generators: opposite twists by every character (odd order),
    plus, for even order, single-summand crossing twists by every odd
    character applied to either summand.  The closure may pass through
    points outside the input; returned classes contain input points
    only, in input order.
    """
    pts = list(points)
    for pt in pts:
        validate_graded(pt, profile)

    parent: dict[GradedPoint, GradedPoint] = {}

    def find(x):
        root = x
        while parent[root] is not root:
            root = parent[root]
        while parent[x] is not root:
            parent[x], x = root, parent[x]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra is not rb:
            parent[rb] = ra

    def neighbors(pt):
        for a in range(profile.n):
            yield sim_o_step(pt, RootExponent(a, profile.n), profile)
        if profile.n % 2 == 0:
            for a in range(1, profile.n, 2):
                for which in (0, 1):
                    yield sim_e_step(pt, profile, exponent=a, summand=which)

    queue = list(pts)
    for pt in queue:
        parent.setdefault(pt, pt)
    seen = set(parent)
    while queue:
        pt = queue.pop()
        for nb in neighbors(pt):
            if nb not in seen:
                seen.add(nb)
                parent[nb] = nb
                queue.append(nb)
            union(pt, nb)

    groups: dict[GradedPoint, list[GradedPoint]] = {}
    for pt in pts:
        groups.setdefault(find(pt), []).append(pt)
    return list(groups.values())


def component_normality(boundary_classes, relation_restricted) -> bool:
    """A component is normal iff the restricted relation is trivial.

    relation_restricted is a partition (iterable of collections) of the
    component's boundary classes; triviality means every part is a
    singleton.
    """
    seen = set()
    for part in relation_restricted:
        part = list(part)
        if len(part) != 1:
            return False
        seen.add(part[0])
    return seen == set(boundary_classes)


# --- the order-two worked family ---

def hyperelliptic_profile(g: int) -> CoverProfile:
    """Degree-2 cover of the line branched at 2g+2 points."""
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    return make_profile(2, [(f"p{i}", 1) for i in range(2 * g + 2)], genus_base=0)


def hyperelliptic_delta(g: int, which: int) -> DeterminantLift:
    """The two determinant lifts of the trivial determinant (which in {0,1})."""
    assert which in (0, 1)
    profile = hyperelliptic_profile(g)
    residues = {y.id: which for y in profile.orbits}
    return DeterminantLift(residues=residues, degree=0,
                           lift_sign=PLUS if which == 0 else MINUS)


def double_class(g: int, q_indices) -> GradedPoint:
    """Boundary class with both flags on one summand pair (even subset Q)."""
    profile = hyperelliptic_profile(g)
    q = frozenset(int(i) for i in q_indices)
    assert len(q) % 2 == 0, "subset size must be even"
    ids = profile.orbit_ids()
    numeric = {label: ((1, 1) if i in q else (0, 0)) for i, label in enumerate(ids)}
    det = hyperelliptic_delta(g, 0)
    half = len(q) // 2
    summands = (GradedSummand(-half, frozenset()), GradedSummand(-half, frozenset()))
    return GradedPoint(summands, numeric=numeric, det=det)


def flagged_class(g: int, q_indices) -> GradedPoint:
    """Boundary class with flags split between the two summands (even subset Q)."""
    profile = hyperelliptic_profile(g)
    q = frozenset(int(i) for i in q_indices)
    assert len(q) % 2 == 0, "subset size must be even"
    ids = profile.orbit_ids()
    d = -(g + 1)
    numeric = {label: (0, 1) for label in ids}
    det = hyperelliptic_delta(g, 1)
    q_ids = frozenset(ids[i] for i in q)
    rest = frozenset(ids) - q_ids
    half = len(q) // 2
    summands = (GradedSummand(-half, q_ids), GradedSummand(d + half, rest))
    return GradedPoint(summands, numeric=numeric, det=det)


@dataclass(frozen=True)
class ComponentRecord:
    label: str
    c: int
    dimension: int
    boundary_classes: frozenset
    normal: bool


@dataclass(frozen=True)
class HyperellipticReport:
    g: int
    d: int
    components: tuple[ComponentRecord, ...]
    pairwise_intersections: dict
    global_intersection: frozenset
    max_dimension: int
    boundary_class_count: int
    subset_label_count: int


def _canonical_subset(q: frozenset, npoints: int, threshold: int) -> frozenset:
    """Identify Q with its complement when both satisfy the membership bound."""
    comp = frozenset(range(npoints)) - q
    if len(comp) <= threshold and len(comp) < len(q):
        return comp
    if len(comp) <= threshold and len(comp) == len(q):
        return min(q, comp, key=lambda s: tuple(sorted(s)))
    return q


def _boundary_subsets(g: int, c: int) -> frozenset:
    npoints = 2 * g + 2
    threshold = -2 * c
    out = set()
    for size in range(0, min(npoints, threshold) + 1, 2):
        for combo in itertools.combinations(range(npoints), size):
            out.add(_canonical_subset(frozenset(combo), npoints, threshold))
    return frozenset(out)


def hyperelliptic_report(g: int, with_classes: bool = True) -> HyperellipticReport:
    """Component census of the fixed variety for the order-two family.

    Components are indexed by the splitting type c (d/2 <= c < 0 with
    d = -(g+1)); dimension g-2c-1, except 2g-1 for the balanced type
    at c = d/2 (odd g).  Boundary classes of a component are the even
    point subsets Q with d_Q <= -2c, with Q identified with its
    complement when both qualify.  The global intersection runs over
    the full predicate family including the degenerate c = 0 stratum,
    leaving only the empty subset.  Normality of each component is
    certified by checking that lift negation fixes each of its
    boundary classes.  with_classes=False skips the (exponentially
    sized) honest class count of the whole semistable boundary.
    """
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    d = -(g + 1)
    c_min = -((g + 1) // 2)
    profile = hyperelliptic_profile(g)
    components = []
    for c in range(c_min, 0):
        dim = (2 * g - 1) if 2 * c == d else (g - 2 * c - 1)
        classes = _boundary_subsets(g, c)
        # lift negation fixes every flagged boundary class; verify on the
        # graded points rather than assuming it
        normal = True
        for q in classes:
            pt = flagged_class(g, q)
            image = sim_o_step(pt, RootExponent(1, 2), profile)
            if image != pt:
                normal = False
        components.append(ComponentRecord(label=f"c={c}", c=c, dimension=dim,
                                          boundary_classes=classes, normal=normal))
    pairwise = {}
    for rec1, rec2 in itertools.combinations(components, 2):
        shared = _boundary_subsets(g, max(rec1.c, rec2.c))
        pairwise[(rec1.label, rec2.label)] = shared
    global_intersection = _boundary_subsets(g, 0)
    max_dim = max(rec.dimension for rec in components)
    class_count = -1
    if with_classes:
        # honest class count of the semistable boundary across both lifts
        all_even = [frozenset(q) for size in range(0, 2 * g + 3, 2)
                    for q in itertools.combinations(range(2 * g + 2), size)]
        points = [double_class(g, q) for q in all_even]
        points += list({flagged_class(g, q) for q in all_even})
        class_count = len(equivalence_classes(points, profile))
    return HyperellipticReport(
        g=g, d=d, components=tuple(components), pairwise_intersections=pairwise,
        global_intersection=global_intersection, max_dimension=max_dim,
        boundary_class_count=class_count, subset_label_count=2 ** (2 * g + 1),
    )


# --- unramified census ---

@dataclass(frozen=True)
class CensusComponent:
    kind: str
    count: int
    description: str


@dataclass(frozen=True)
class CensusRecord:
    n: int
    deg_delta: int
    genus_base: int
    bar_degree: int
    case: str
    components: tuple[CensusComponent, ...]
    intersection_note: str


def unramified_census(n: int, deg_delta: int, genus_base: int) -> CensusRecord:
    """Component structure of the fixed variety for a free cover action.

    With no special orbits the admissible set is a single numeric datum
    and everything is governed by the parity of n and of the reduced
    determinant degree.  The determinant degree must be divisible by n
    (InconsistentDegrees otherwise).
    """
    if n < 1:
        raise InconsistentDegrees(f"cover order must be positive, got {n}")
    if genus_base < 0:
        raise InvalidGenus(f"base genus must be non-negative, got {genus_base}")
    if deg_delta % n != 0:
        raise InconsistentDegrees(
            f"determinant degree {deg_delta} not divisible by cover order {n}")
    bar = deg_delta // n
    if n % 2 == 1:
        if deg_delta % 2 == 1:
            case = "n odd, determinant degree odd"
            comps = (CensusComponent("moduli", 1,
                                     "the full semistable moduli space of the reduced determinant"),)
            note = "single component; no strictly semistable identifications"
        else:
            case = "n odd, determinant degree even"
            comps = (CensusComponent(
                "pic0_quotient", 1,
                "Pic_0(base)/G with G generated by the pullback kernel and inversion"),)
            note = "one component; the kernel-and-inversion group G acts on Pic_0"
    else:
        if bar % 2 == 1:
            case = "n even, reduced degree odd"
            comps = (CensusComponent(
                "prym", 2, "two copies of the Prym variety of the residual double cover"),)
            note = "two disjoint components, one per determinant lift"
        else:
            case = "n even, reduced degree even"
            comps = (
                CensusComponent("kummer", 4,
                                "Kummer quotients Prym/{+-1} of the residual double cover"),
                CensusComponent(
                    "pic0_quotient", 1,
                    "Pic_0(base)/G with G generated by the pullback kernel and inversion"),
            )
            note = "each Kummer component meets the Pic_0 quotient in finitely many points"
    return CensusRecord(n=n, deg_delta=deg_delta, genus_base=genus_base, bar_degree=bar,
                        case=case, components=comps, intersection_note=note)
