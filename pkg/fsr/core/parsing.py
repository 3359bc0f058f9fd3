"""Ring files and ideal literals.

A ring file is JSON: ``{"variables": ["x", "y", "z"], "p": 2, "relations": [[1, 1, 0]]}``.
Relations and ideal literals are written either as exponent arrays or as monomial
strings over the ring's variables (``"x*z, x^2*y"``). ``""`` and ``"0"`` denote the
zero ideal.
"""

import json
import re
from pathlib import Path

from .exceptions import AmbientMismatchError, InputError, MalformedExponentError, RingFileError, UnknownVariableError
from .monomials import ExponentVector, MonomialIdeal, check_exponent
from .rings import StanleyReisnerRing

_VARIABLE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EXPONENT = re.compile(r"[0-9]+")


def parse_vector(entries, variables: tuple[str, ...]) -> ExponentVector:
    if not isinstance(entries, list):
        raise MalformedExponentError(entries)
    if len(entries) != len(variables):
        raise AmbientMismatchError(len(variables), len(entries))
    return tuple(check_exponent(e) for e in entries)


def parse_monomial(text: str, variables: tuple[str, ...]) -> ExponentVector:
    """``x^2*y`` style monomial; ``1`` is the empty product."""
    exponents = [0] * len(variables)
    position = {name: i for i, name in enumerate(variables)}
    for factor in text.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        name, sep, power = factor.partition("^")
        name = name.strip()
        if not _VARIABLE.fullmatch(name):
            raise UnknownVariableError(name or factor, variables)
        if name not in position:
            raise UnknownVariableError(name, variables)
        power = power.strip()
        if sep and not _EXPONENT.fullmatch(power):
            raise MalformedExponentError(power)
        exponents[position[name]] += int(power) if sep else 1
    return tuple(exponents)


def _parse_generator(entry, variables: tuple[str, ...]) -> ExponentVector:
    if isinstance(entry, str):
        return parse_monomial(entry, variables)
    return parse_vector(entry, variables)


def parse_ideal(text, variables: tuple[str, ...]) -> MonomialIdeal:
    """Ideal from an exponent array (JSON text or list) or comma separated monomials.

    List entries may mix exponent arrays and monomial strings.
    """
    n = len(variables)
    if isinstance(text, list):
        return MonomialIdeal(n, tuple(_parse_generator(v, variables) for v in text))
    if not isinstance(text, str):
        raise InputError(f"Cannot read an ideal from {text!r}.")
    stripped = text.strip()
    if stripped in ("", "0", "(0)"):
        return MonomialIdeal.zero(n)
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputError(f"Malformed exponent array '{stripped}': {e}") from e
        if not isinstance(data, list):
            raise MalformedExponentError(stripped)
        return MonomialIdeal(n, tuple(parse_vector(v, variables) for v in data))
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    terms = stripped.split(",")
    if any(not term.strip() for term in terms):
        raise InputError(f"Empty monomial in ideal literal '{text}'.")
    return MonomialIdeal(n, tuple(parse_monomial(term, variables) for term in terms))


def ring_from_dict(data: dict, source: str = "<inline>") -> StanleyReisnerRing:
    try:
        variables = tuple(str(v) for v in data["variables"])
        p = data["p"]
    except (KeyError, TypeError) as e:
        raise RingFileError(source, f"missing field {e}") from e
    for name in variables:
        if not _VARIABLE.fullmatch(name):
            raise RingFileError(source, f"invalid variable name '{name}'")
    if len(set(variables)) != len(variables):
        raise RingFileError(source, "duplicate variable names")
    relations = parse_ideal(data.get("relations", []), variables)
    return StanleyReisnerRing(len(variables), p, relations, variables)


def load_ring(source: str) -> StanleyReisnerRing:
    """Ring from a JSON file path, or from inline JSON text starting with ``{``."""
    if source.lstrip().startswith("{"):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as e:
            raise RingFileError(source, e.strerror or str(e)) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise RingFileError(source, f"invalid JSON ({e})") from e
    if not isinstance(data, dict):
        raise RingFileError(source, "expected a JSON object")
    return ring_from_dict(data, source)
