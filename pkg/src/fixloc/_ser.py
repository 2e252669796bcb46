"""Small shared JSON helpers (exact rationals, guarded scalars)."""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError


def rat_to_json(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def rat_from_json(obj: object, where: str = "value") -> Fraction:
    """Accept either a bare integer or a {num, den} object."""
    if isinstance(obj, bool):
        raise SchemaError(f"{where}: expected rational, got boolean")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict):
        if set(obj) != {"num", "den"}:
            raise SchemaError(f"{where}: rational object fields must be exactly num,den")
        num, den = obj["num"], obj["den"]
        for part in (num, den):
            if not isinstance(part, int) or isinstance(part, bool):
                raise SchemaError(f"{where}: rational parts must be integers")
        if den == 0:
            raise SchemaError(f"{where}: zero denominator")
        return Fraction(num, den)
    raise SchemaError(f"{where}: expected rational, got {type(obj).__name__}")


def require_int(obj: object, where: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise SchemaError(f"{where} must be an integer")
    return obj


def require_str(obj: object, where: str) -> str:
    if not isinstance(obj, str):
        raise SchemaError(f"{where} must be a string")
    return obj


def require_keys(doc: dict, required: set[str], optional: set[str], where: str) -> None:
    extra = set(doc) - required - optional
    if extra:
        raise SchemaError(f"unknown {where} fields: {sorted(extra)}")
    missing = required - set(doc)
    if missing:
        raise SchemaError(f"{where} requires fields: {sorted(missing)}")
