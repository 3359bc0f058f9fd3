import csv
import io
import json
from decimal import Context, Decimal
from fractions import Fraction

from .constants import APPROX_DIGITS, MINUS_INFINITY
from .monomials import ExponentVector, FacePrime, MonomialIdeal, format_vector


def rational(value: Fraction | int) -> str:
    """Exact rational as ``num/den``; integers given as Fraction keep the ``/1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def a_invariant(value: int | None) -> int | str:
    return MINUS_INFINITY if value is None else value


def approx(value: Fraction) -> str:
    """Decimal rendering for display only; never fed back into computation."""
    context = Context(prec=APPROX_DIGITS)
    return str(context.divide(Decimal(value.numerator), Decimal(value.denominator)))


def ideal_terms(ideal: MonomialIdeal, names: tuple[str, ...]) -> list[str]:
    return [format_vector(g, names) for g in ideal.gens]


def monomial(v: ExponentVector, names: tuple[str, ...]) -> str:
    return format_vector(v, names)


def face_prime(prime: FacePrime, names: tuple[str, ...]) -> list[str]:
    return [names[i] for i in sorted(prime.variables)]


def dumps(payload: dict) -> str:
    """Canonical JSON: sorted keys, fixed separators, so equal results are byte-identical."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True)


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _is_rational(value) -> bool:
    if not isinstance(value, str) or value.count("/") != 1:
        return False
    num, den = value.split("/")
    return num.lstrip("-").isdigit() and den.isdigit()


def add_approximations(payload):
    """Copy of ``payload`` where every ``num/den`` entry gains a sibling ``<key>_approx``."""
    if isinstance(payload, list):
        return [add_approximations(item) for item in payload]
    if not isinstance(payload, dict):
        return payload
    result = {}
    for key, value in payload.items():
        result[key] = add_approximations(value)
        if _is_rational(value):
            result[f"{key}_approx"] = approx(Fraction(value))
    return result
