import json

import pytest

from fsr.core.exceptions import (
    AmbientMismatchError,
    InputError,
    MalformedExponentError,
    NotPrimeError,
    RingFileError,
    UnknownVariableError,
)
from fsr.core.monomials import MonomialIdeal
from fsr.core.parsing import load_ring, parse_ideal, parse_monomial

XYZ = ("x", "y", "z")


class TestParseMonomial:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("x*z", (1, 0, 1)),
            ("x^2*y", (2, 1, 0)),
            ("1", (0, 0, 0)),
            (" y ^ 3 ", (0, 3, 0)),
            ("x*x", (2, 0, 0)),
        ],
    )
    def test_valid(self, text, expected):
        assert parse_monomial(text, XYZ) == expected

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as excinfo:
            parse_monomial("w", XYZ)
        assert excinfo.value.token == "w"

    @pytest.mark.parametrize("text", ["x^-1", "x^1.5", "x^", "y^a"])
    def test_malformed_exponent(self, text):
        with pytest.raises(MalformedExponentError):
            parse_monomial(text, XYZ)


class TestParseIdeal:
    def test_monomial_list(self):
        assert parse_ideal("x*z, x^2*y", XYZ) == MonomialIdeal(3, ((1, 0, 1), (2, 1, 0)))

    def test_parenthesized(self):
        assert parse_ideal("(x, y)", XYZ) == MonomialIdeal(3, ((1, 0, 0), (0, 1, 0)))

    def test_exponent_array_text(self):
        assert parse_ideal("[[1, 0, 1]]", XYZ) == parse_ideal("x*z", XYZ)

    def test_mixed_list(self):
        assert parse_ideal([[1, 0, 0], "y*z"], XYZ) == parse_ideal("x, y*z", XYZ)

    @pytest.mark.parametrize("text", ["", "0", "(0)", []])
    def test_zero(self, text):
        assert parse_ideal(text, XYZ).is_zero()

    def test_wrong_length(self):
        with pytest.raises(AmbientMismatchError):
            parse_ideal("[[1, 0]]", XYZ)

    def test_negative_entry(self):
        with pytest.raises(MalformedExponentError):
            parse_ideal([[1, -1, 0]], XYZ)

    def test_empty_term(self):
        with pytest.raises(InputError):
            parse_ideal("x,,y", XYZ)

    def test_bad_json(self):
        with pytest.raises(InputError):
            parse_ideal("[[1, 0", XYZ)

    def test_canonical_form_is_stable(self):
        ideal = parse_ideal("x^2*y, x*y, x^2", XYZ)
        again = parse_ideal(ideal.format(XYZ), XYZ)
        assert again == ideal
        assert again.format(XYZ) == "(x*y, x^2)"


class TestLoadRing:
    def test_file(self, fixtures_dir):
        ring = load_ring(str(fixtures_dir / "planes.json"))
        assert ring.variables == XYZ
        assert ring.defining_ideal == MonomialIdeal(3, ((1, 1, 0),))

    def test_inline(self):
        ring = load_ring('{"variables": ["a", "b"], "p": 3, "relations": "a*b"}')
        assert ring.p == 3
        assert ring.variables == ("a", "b")

    def test_missing_file(self, tmp_path):
        with pytest.raises(RingFileError):
            load_ring(str(tmp_path / "missing.json"))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "ring.json"
        path.write_text("{not json")
        with pytest.raises(RingFileError):
            load_ring(str(path))

    def test_missing_characteristic(self):
        with pytest.raises(RingFileError):
            load_ring(json.dumps({"variables": ["x"]}))

    def test_non_prime_characteristic(self):
        with pytest.raises(NotPrimeError):
            load_ring(json.dumps({"variables": ["x"], "p": 4}))

    def test_duplicate_variables(self):
        with pytest.raises(RingFileError):
            load_ring(json.dumps({"variables": ["x", "x"], "p": 2}))

    def test_relations_over_unknown_variables(self):
        with pytest.raises(UnknownVariableError):
            load_ring(json.dumps({"variables": ["x", "y"], "p": 2, "relations": "x*w"}))
