"""Numeric data, modifications, and the parabolic correspondence."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fixloc import (
    FIRST,
    SECOND,
    DeterminantLift,
    FlagSelector,
    InvalidDatum,
    NonIntegralDegree,
    NoSolution,
    Rank2EqData,
    SchemaError,
    admissible_pairs,
    bar_delta_degree,
    det_from_json,
    det_to_json,
    elementary_modification,
    enumerate_lambda,
    from_parabolic,
    gamma_apply,
    make_profile,
    numeric_from_json,
    numeric_to_json,
    parabolic_from_json,
    parabolic_to_json,
    rank2_from_json,
    rank2_to_json,
    solve_d2,
    to_parabolic,
    weight_system,
)
from fixloc.locus import hyperelliptic_delta, hyperelliptic_profile

import gen


def brute_force_pairs(delta, nprime):
    return [(d1, d2) for d1 in range(nprime) for d2 in range(d1, nprime)
            if (d1 + d2) % nprime == delta % nprime]


def test_admissible_pairs_against_brute_force():
    for nprime in range(1, 13):
        for delta in range(nprime):
            assert admissible_pairs(delta, nprime) == brute_force_pairs(delta, nprime)


def test_lambda_is_the_product_of_orbit_choices():
    rng = random.Random(11)
    for _ in range(20):
        profile = gen.random_profile(rng)
        det = gen.random_det(rng, profile)
        lam = enumerate_lambda(det, profile)
        expected = 1
        for y in profile.orbits:
            expected *= len(admissible_pairs(det.residues[y.id], y.nprime))
        assert len(lam) == expected
        assert len({tuple(sorted(el.items())) for el in lam}) == len(lam)


def test_lambda_of_the_two_square_root_lifts():
    for g in (1, 2, 3):
        profile = hyperelliptic_profile(g)
        even_lift = hyperelliptic_delta(g, 0)
        odd_lift = hyperelliptic_delta(g, 1)
        lam0 = enumerate_lambda(even_lift, profile)
        lam1 = enumerate_lambda(odd_lift, profile)
        assert len(lam0) == 2 ** (2 * g + 2)
        assert len(lam1) == 1
        for y in profile.orbits:
            assert admissible_pairs(even_lift.residues[y.id], y.nprime) == [(0, 0), (1, 1)]
            assert admissible_pairs(odd_lift.residues[y.id], y.nprime) == [(0, 1)]


def test_weight_system_values():
    profile = make_profile(12, [("a", 1), ("b", 4)])
    ws = weight_system({"a": (2, 7), "b": (0, 2)}, profile)
    assert ws == {"a": Fraction(5, 12), "b": Fraction(2, 3)}


def test_bar_degree_division_guard():
    profile = make_profile(4, [("a", 2)])
    det = DeterminantLift(residues={"a": 1}, degree=2 + 4 * 3)
    assert bar_delta_degree(det, {"a": (0, 1)}, profile) == 3
    corrupted = DeterminantLift(residues={"a": 1}, degree=det.degree + 1)
    with pytest.raises(NonIntegralDegree):
        bar_delta_degree(corrupted, {"a": (0, 1)}, profile)


def test_single_modification_bookkeeping():
    profile = make_profile(6, [("a", 2)])
    data = Rank2EqData(numeric={"a": (1, 2)},
                       det=DeterminantLift(residues={"a": 0}, degree=6))
    out = elementary_modification(data, profile, "a", SECOND)
    # kept d2=2, moved d1 -> 0; determinant loses one reduced fiber
    assert out.numeric["a"] == (0, 2)
    assert out.det.degree == 6 - 2
    assert out.det.residues["a"] == 2  # (0 - 1) mod 3
    undone = elementary_modification(out, profile, "a", SECOND, inverse=True)
    assert undone == data


def test_modification_wraps_and_resorts():
    profile = make_profile(6, [("a", 2)])
    data = Rank2EqData(numeric={"a": (0, 2)},
                       det=DeterminantLift(residues={"a": 2}, degree=10))
    out = elementary_modification(data, profile, "a", SECOND)
    # moved exponent wraps 0 -> 2 and the pair re-sorts to (2, 2)
    assert out.numeric["a"] == (2, 2)
    out2 = elementary_modification(data, profile, "a", FIRST)
    # kept d1=0, moved 2 -> 1
    assert out2.numeric["a"] == (0, 1)


def test_modification_rejects_bad_direction():
    profile = make_profile(6, [("a", 2)])
    data = Rank2EqData(numeric={"a": (1, 2)},
                       det=DeterminantLift(residues={"a": 0}, degree=6))
    with pytest.raises(InvalidDatum):
        elementary_modification(data, profile, "a", "third")


def iterate_modifications(data, profile, m, flags):
    """Single steps with the tracked eigenvalue re-located after each re-sort."""
    current = data
    for y in profile.orbits:
        my = m.get(y.id, 0)
        if my == 0:
            continue
        d1, d2 = current.numeric[y.id]
        track = d1 if flags.choice[y.id] == FIRST else d2
        for _ in range(abs(my)):
            d1c, d2c = current.numeric[y.id]
            direction = FIRST if d1c == track else SECOND
            current = elementary_modification(current, profile, y.id, direction,
                                              inverse=my < 0)
        assert track in current.numeric[y.id]
    return current


def relocate_selector(reference, image) -> FlagSelector:
    """Selector pointing, in image, at the eigenvalues tracked in reference."""
    choice = {}
    for label, (kept, _ignored) in reference.items():
        choice[label] = FIRST if image.numeric[label][0] == kept else SECOND
    return FlagSelector(choice=choice)


def test_closed_form_matches_iteration():
    rng = random.Random(77)
    for _ in range(200):
        profile = gen.random_profile(rng)
        if not profile.orbits:
            continue
        data = gen.random_data(rng, profile)
        m = {y.id: rng.randint(-4, 4) for y in profile.orbits}
        flags = FlagSelector(choice={y.id: rng.choice([FIRST, SECOND])
                                     for y in profile.orbits})
        assert gamma_apply(data, profile, m, flags) == iterate_modifications(
            data, profile, m, flags)


def test_closed_form_round_trip():
    rng = random.Random(78)
    for _ in range(200):
        profile = gen.random_profile(rng)
        data = gen.random_data(rng, profile)
        m = {y.id: rng.randint(-4, 4) for y in profile.orbits}
        flags = FlagSelector(choice={y.id: rng.choice([FIRST, SECOND])
                                     for y in profile.orbits})
        kept = {y.id: (data.numeric[y.id][0 if flags.choice[y.id] == FIRST else 1], None)
                for y in profile.orbits}
        image = gamma_apply(data, profile, m, flags)
        back = gamma_apply(image, profile, {k: -v for k, v in m.items()},
                           relocate_selector(kept, image))
        assert back == data


def test_gamma_requires_direction_at_modified_orbits():
    profile = make_profile(6, [("a", 2)])
    data = Rank2EqData(numeric={"a": (1, 2)},
                       det=DeterminantLift(residues={"a": 0}, degree=6))
    with pytest.raises(InvalidDatum):
        gamma_apply(data, profile, {"a": 2}, FlagSelector(choice={}))


def test_round_trip_on_full_lambda():
    rng = random.Random(5)
    profile = make_profile(8, [("a", 2), ("b", 4), ("c", 1)], genus_base=1)
    det = gen.random_det(rng, profile)
    for numeric in enumerate_lambda(det, profile):
        data = Rank2EqData(numeric=numeric, det=det)
        pdat = to_parabolic(data, profile)
        assert from_parabolic(pdat, profile) == data
        assert to_parabolic(from_parabolic(pdat, profile), profile) == pdat


def test_from_parabolic_rejects_negative_lower_exponent():
    profile = make_profile(4, [("a", 1)])
    bad = parabolic_from_json({
        "det_bar_degree": 0,
        "weights": {"a": {"num": 3, "den": 4}},
        "d2": {"a": 2},
        "det_lift_sign": "+",
    })
    with pytest.raises(InvalidDatum):
        from_parabolic(bad, profile)


def test_solve_d2_against_lambda_fibers():
    rng = random.Random(13)
    for _ in range(20):
        profile = gen.random_profile(rng, max_n=10, max_orbits=3)
        det = gen.random_det(rng, profile)
        by_weights = {}
        for numeric in enumerate_lambda(det, profile):
            key = tuple(sorted(weight_system(numeric, profile).items()))
            d2map = tuple(sorted((label, pair[1]) for label, pair in numeric.items()))
            by_weights.setdefault(key, set()).add(d2map)
        for key, expected in by_weights.items():
            sols = solve_d2(det, dict(key), profile)
            assert {tuple(sorted(s.items())) for s in sols} == expected


def test_solve_d2_no_solution():
    profile = make_profile(2, [("y", 1)])
    det = DeterminantLift(residues={"y": 0}, degree=0)
    with pytest.raises(NoSolution):
        solve_d2(det, {"y": Fraction(1, 2)}, profile)


def test_solve_d2_rejects_inadmissible_weight():
    profile = make_profile(4, [("y", 2)])
    det = DeterminantLift(residues={"y": 0}, degree=0)
    with pytest.raises(InvalidDatum):
        solve_d2(det, {"y": Fraction(1, 3)}, profile)


def test_json_round_trips():
    rng = random.Random(17)
    for _ in range(20):
        profile = gen.random_profile(rng)
        data = gen.random_data(rng, profile)
        assert det_from_json(det_to_json(data.det)) == data.det
        assert numeric_from_json(numeric_to_json(data.numeric)) == data.numeric
        assert rank2_from_json(rank2_to_json(data)) == data
        pdat = to_parabolic(data, profile)
        assert parabolic_from_json(parabolic_to_json(pdat)) == pdat


def test_json_rejections():
    with pytest.raises(SchemaError):
        det_from_json({"residues": {}, "degree": 0, "lift_sign": "+", "x": 1})
    with pytest.raises(SchemaError):
        det_from_json({"residues": {"a": 0.5}, "degree": 0, "lift_sign": "+"})
    with pytest.raises(SchemaError):
        numeric_from_json({"a": [1]})
    with pytest.raises(SchemaError):
        numeric_from_json({"a": [1, 2, 3]})
    with pytest.raises(SchemaError):
        rank2_from_json({"numeric": {}, "det": []})
    with pytest.raises(SchemaError):
        parabolic_from_json({"det_bar_degree": 0, "weights": {"a": {"num": 1, "den": 0}},
                             "d2": {"a": 0}, "det_lift_sign": "+"})


@st.composite
def profile_and_data(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    divisors = [k for k in range(1, n) if n % k == 0]
    ks = draw(st.lists(st.sampled_from(divisors), max_size=4)) if divisors else []
    profile = make_profile(n, [(f"y{i}", k) for i, k in enumerate(ks)])
    residues = {y.id: draw(st.integers(0, y.nprime - 1)) for y in profile.orbits}
    degree = sum(residues[y.id] * y.k for y in profile.orbits) \
        + n * draw(st.integers(-3, 3))
    sign = "+" if n % 2 else draw(st.sampled_from(["+", "-"]))
    det = DeterminantLift(residues=residues, degree=degree, lift_sign=sign)
    numeric = {
        y.id: draw(st.sampled_from(admissible_pairs(residues[y.id], y.nprime)))
        for y in profile.orbits
    }
    return profile, Rank2EqData(numeric=numeric, det=det)


@settings(max_examples=150)
@given(profile_and_data())
def test_correspondence_round_trip_property(pd):
    profile, data = pd
    pdat = to_parabolic(data, profile)
    assert from_parabolic(pdat, profile) == data


@settings(max_examples=150)
@given(profile_and_data())
def test_weights_stay_in_range(pd):
    profile, data = pd
    for label, w in to_parabolic(data, profile).weights.items():
        assert 0 <= w < 1
        assert (w * profile.orbit(label).nprime).denominator == 1
