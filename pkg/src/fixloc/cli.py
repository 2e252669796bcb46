"""Command line interface: fixed-locus reports over JSON documents.

Exit codes: 0 success, 1 property-check failure (with a counterexample
dump), 2 malformed input (schema or usage), 3 domain rejection
(mathematically inadmissible input).  All output is deterministic for
a fixed seed: reports are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import covers, equivariant, locus, stability
from .errors import DomainError, SchemaError

DEFAULT_SEED = 1729

# keep CLI outputs bounded; larger collections report counts only
LIST_CAP = 128


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}")


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _wrap_doc(doc: object, required: set[str]) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError("input document must be an object")
    extra = set(doc) - required
    if extra:
        raise SchemaError(f"unknown input fields: {sorted(extra)}")
    missing = required - set(doc)
    if missing:
        raise SchemaError(f"input requires fields: {sorted(missing)}")
    return doc


def cmd_kernel(args) -> int:
    profile = covers.profile_from_json(_load_json(args.file))
    r = covers.kernel_order(profile)
    payload = {"kernel_order": r, "gcd_orbit_lengths": covers.gcd_orbit_lengths(profile)}
    _emit(payload, args.format, [f"kernel_order: {r}"])
    return 0


def cmd_factor(args) -> int:
    profile = covers.profile_from_json(_load_json(args.file))
    ramified, r = covers.factor_cover(profile)
    payload = {
        "ramified": covers.profile_to_json(ramified),
        "unramified_degree": r,
    }
    lines = [
        f"unramified degree: {r}",
        f"ramified part: n={ramified.n}, orbits "
        + ", ".join(f"{y.id}:k={y.k}" for y in ramified.orbits),
    ]
    _emit(payload, args.format, lines)
    return 0


def cmd_orbits(args) -> int:
    profile = covers.profile_from_json(_load_json(args.file))
    table = {
        y.id: {str(d): covers.orbit_length_under_power(y.k, d)
               for d in range(1, profile.n + 1)}
        for y in profile.orbits
    }
    payload = {"n": profile.n, "orbit_lengths_under_powers": table}
    lines = [f"n = {profile.n}"]
    for y in profile.orbits:
        row = " ".join(f"{d}:{covers.orbit_length_under_power(y.k, d)}"
                       for d in range(1, profile.n + 1))
        lines.append(f"{y.id} (k={y.k}): {row}")
    _emit(payload, args.format, lines)
    return 0


def cmd_lambda(args) -> int:
    doc = _wrap_doc(_load_json(args.file), {"profile", "det"})
    profile = covers.profile_from_json(doc["profile"])
    det = equivariant.det_from_json(doc["det"])
    elements = equivariant.enumerate_lambda(det, profile)
    per_orbit = {
        y.id: [[d1, d2] for d1, d2 in
               equivariant.admissible_pairs(det.residues.get(y.id, 0), y.nprime)]
        for y in profile.orbits
    }
    payload = {"count": len(elements), "per_orbit": per_orbit}
    if len(elements) <= LIST_CAP:
        payload["elements"] = [equivariant.numeric_to_json(el) for el in elements]
    lines = [f"admissible numeric data: {len(elements)}"]
    for label, pairs in sorted(per_orbit.items()):
        lines.append(f"{label}: " + " ".join(f"({a},{b})" for a, b in pairs))
    _emit(payload, args.format, lines)
    return 0


def cmd_weights(args) -> int:
    doc = _wrap_doc(_load_json(args.file), {"profile", "numeric"})
    profile = covers.profile_from_json(doc["profile"])
    numeric = equivariant.numeric_from_json(doc["numeric"])
    ws = equivariant.weight_system(numeric, profile)
    payload = {"weights": {label: {"num": w.numerator, "den": w.denominator}
                           for label, w in sorted(ws.items())}}
    lines = [f"{label}: {w}" for label, w in sorted(ws.items())]
    _emit(payload, args.format, lines)
    return 0


def _random_profile(rng: random.Random) -> covers.CoverProfile:
    n = rng.randint(1, 12)
    divisors = [k for k in range(1, n) if n % k == 0]
    count = rng.randint(0, 4) if divisors else 0
    lengths = [(f"y{i}", rng.choice(divisors)) for i in range(count)]
    return covers.make_profile(n, lengths, genus_base=rng.randint(0, 3))


def _random_det(rng: random.Random, profile: covers.CoverProfile) -> equivariant.DeterminantLift:
    residues = {y.id: rng.randrange(y.nprime) for y in profile.orbits}
    degree = sum(residues[y.id] * y.k for y in profile.orbits) + profile.n * rng.randint(-3, 3)
    sign = equivariant.PLUS
    if profile.n % 2 == 0 and rng.random() < 0.5:
        sign = equivariant.MINUS
    return equivariant.DeterminantLift(residues=residues, degree=degree, lift_sign=sign)


def cmd_bijection_check(args) -> int:
    rng = random.Random(args.seed)
    profiles = []
    if args.file:
        profiles.append(covers.profile_from_json(_load_json(args.file)))
    else:
        profiles.extend(_random_profile(rng) for _ in range(20))
    checked = 0
    for profile in profiles:
        det = _random_det(rng, profile)
        for numeric in equivariant.enumerate_lambda(det, profile):
            data = equivariant.Rank2EqData(numeric=numeric, det=det)
            try:
                pdat = equivariant.to_parabolic(data, profile)
                back = equivariant.from_parabolic(pdat, profile)
            except DomainError as exc:
                print(json.dumps({
                    "property": "round_trip",
                    "error": str(exc),
                    "profile": covers.profile_to_json(profile),
                    "datum": equivariant.rank2_to_json(data),
                }, indent=2, sort_keys=True))
                return 1
            if back != data:
                print(json.dumps({
                    "property": "round_trip",
                    "profile": covers.profile_to_json(profile),
                    "datum": equivariant.rank2_to_json(data),
                    "round_tripped": equivariant.rank2_to_json(back),
                }, indent=2, sort_keys=True))
                return 1
            checked += 1
    payload = {"checked": checked, "profiles": len(profiles), "failures": 0}
    _emit(payload, args.format, [f"round trips checked: {checked} (all exact)"])
    return 0


def cmd_zeta2(args) -> int:
    doc = _wrap_doc(_load_json(args.file), {"profile", "data"})
    profile = covers.profile_from_json(doc["profile"])
    data = equivariant.rank2_from_json(doc["data"])
    image = locus.zeta2_apply(data, profile)
    twice = locus.zeta2_apply(image, profile)
    if twice != data:
        print(json.dumps({
            "property": "involution",
            "datum": equivariant.rank2_to_json(data),
            "twice": equivariant.rank2_to_json(twice),
        }, indent=2, sort_keys=True))
        return 1
    payload = {
        "image": equivariant.rank2_to_json(image),
        "partition": locus.zeta2_partition(data.numeric, profile),
        "involution_ok": True,
    }
    lines = [f"image numeric: {equivariant.numeric_to_json(image.numeric)}",
             f"image lift sign: {image.det.lift_sign}",
             "involution: ok"]
    _emit(payload, args.format, lines)
    return 0


def cmd_decompose(args) -> int:
    profile = covers.profile_from_json(_load_json(args.file))
    report = locus.decomposition_report(profile)
    payload = {
        "n_parity": report.n_parity,
        "r_parity": report.r_parity,
        "case": report.case,
        "kernel_order": report.kernel_order,
        "statements": list(report.statements),
    }
    lines = [f"case: {report.case}", f"kernel order: {report.kernel_order}"]
    lines.extend(f"- {s}" for s in report.statements)
    _emit(payload, args.format, lines)
    return 0


def _hyperelliptic_payload(report) -> dict:
    comps = []
    for rec in report.components:
        entry = {
            "label": rec.label,
            "c": rec.c,
            "dimension": rec.dimension,
            "boundary_class_count": len(rec.boundary_classes),
            "normal": rec.normal,
        }
        if len(rec.boundary_classes) <= LIST_CAP:
            entry["boundary_classes"] = sorted(
                sorted(q) for q in rec.boundary_classes)
        comps.append(entry)
    pairwise = {
        f"{a} & {b}": len(shared)
        for (a, b), shared in sorted(report.pairwise_intersections.items())
    }
    return {
        "g": report.g,
        "d": report.d,
        "components": comps,
        "pairwise_intersection_counts": pairwise,
        "global_intersection": sorted(sorted(q) for q in report.global_intersection),
        "max_dimension": report.max_dimension,
        "semistable_class_count": report.boundary_class_count,
        "subset_label_count": report.subset_label_count,
    }


def cmd_hyperelliptic(args) -> int:
    if args.g is None:
        raise SchemaError("hyperelliptic requires --g")
    report = locus.hyperelliptic_report(args.g, with_classes=args.g <= 4)
    payload = _hyperelliptic_payload(report)
    if args.format == "dot":
        lines = ["graph components {"]
        for rec in report.components:
            lines.append(
                f'  "{rec.label}" [label="{rec.label} dim={rec.dimension} '
                f'classes={len(rec.boundary_classes)}"];')
        for (a, b), shared in sorted(report.pairwise_intersections.items()):
            lines.append(f'  "{a}" -- "{b}" [label="{len(shared)}"];')
        lines.append("}")
        print("\n".join(lines))
        return 0
    lines = [f"g = {report.g}, d = {report.d}"]
    for rec in report.components:
        lines.append(f"{rec.label}: dimension {rec.dimension}, "
                     f"{len(rec.boundary_classes)} boundary classes, "
                     f"normal: {'yes' if rec.normal else 'no'}")
    for (a, b), shared in sorted(report.pairwise_intersections.items()):
        lines.append(f"{a} & {b}: {len(shared)} shared classes")
    lines.append(f"global intersection: {sorted(sorted(q) for q in report.global_intersection)}")
    lines.append(f"max dimension: {report.max_dimension}")
    if report.boundary_class_count >= 0:
        lines.append(f"semistable classes: {report.boundary_class_count}")
    _emit(payload, args.format, lines)
    return 0


def cmd_census(args) -> int:
    if args.n is None or args.deg_delta is None or args.genus_y is None:
        raise SchemaError("census requires --n, --deg-delta and --genus-y")
    record = locus.unramified_census(args.n, args.deg_delta, args.genus_y)
    payload = {
        "n": record.n,
        "deg_delta": record.deg_delta,
        "genus_base": record.genus_base,
        "bar_degree": record.bar_degree,
        "case": record.case,
        "components": [
            {"kind": comp.kind, "count": comp.count, "description": comp.description}
            for comp in record.components
        ],
        "intersection_note": record.intersection_note,
    }
    lines = [f"case: {record.case}"]
    for comp in record.components:
        lines.append(f"- {comp.count} x {comp.kind}: {comp.description}")
    lines.append(record.intersection_note)
    _emit(payload, args.format, lines)
    return 0


def cmd_stability(args) -> int:
    bundle = stability.bundle_from_json(_load_json(args.file))
    g = (len(bundle.points) - 2) // 2
    verdict = stability.stability_classify(bundle, g)
    payload = stability.verdict_to_json(verdict)
    lines = [f"class: {verdict.label}"]
    if verdict.witness is not None:
        wit = verdict.witness
        lines.append(f"witness degree: {wit.e}")
        lines.append(f"witness agreement: {sorted(wit.agreement)}")
    _emit(payload, args.format, lines)
    return 0


COMMANDS = {
    "kernel": cmd_kernel,
    "factor": cmd_factor,
    "lambda": cmd_lambda,
    "weights": cmd_weights,
    "bijection-check": cmd_bijection_check,
    "zeta2": cmd_zeta2,
    "orbits": cmd_orbits,
    "decompose": cmd_decompose,
    "hyperelliptic": cmd_hyperelliptic,
    "census": cmd_census,
    "stability": cmd_stability,
}

NEEDS_FILE = {"kernel", "factor", "lambda", "weights", "zeta2", "orbits",
              "decompose", "stability"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixloc",
        description="discrete classification data of fixed loci on rank-2 moduli")
    parser.add_argument("subcommand", choices=sorted(COMMANDS))
    parser.add_argument("--file", help="input JSON document")
    parser.add_argument("--g", type=int, help="genus parameter")
    parser.add_argument("--n", type=int, help="cover order")
    parser.add_argument("--deg-delta", type=int, dest="deg_delta",
                        help="determinant degree upstairs")
    parser.add_argument("--genus-y", type=int, dest="genus_y", help="base genus")
    parser.add_argument("--format", choices=["json", "text", "dot"], default="json")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and args.subcommand != "hyperelliptic":
        parser.error("dot format is only available for the hyperelliptic report")
    if args.subcommand in NEEDS_FILE and not args.file:
        parser.error(f"{args.subcommand} requires --file")
    try:
        return COMMANDS[args.subcommand](args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
