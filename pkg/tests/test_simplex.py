from fractions import Fraction

import pytest

from fsr.core.exceptions import InfeasibleSelectionError, NotInRadicalError, UnitIdealError
from fsr.core.simplex import OPTIMAL, UNBOUNDED, SelectionLP, SimplexTableau, disjunctive_lp_value, selections


class TestSimplexTableau:
    def test_two_variable_program(self):
        # max x + y with x + 2y <= 4, 3x + y <= 6
        tableau = SimplexTableau([[1, 2], [3, 1]], [4, 6], [1, 1])
        assert tableau.bland_primal() == OPTIMAL
        assert tableau.z == Fraction(14, 5)
        assert sorted(tableau.b_vars) == [0, 1]

    def test_unbounded(self):
        tableau = SimplexTableau([[1, -1]], [1], [1, 1])
        assert tableau.bland_primal() == UNBOUNDED

    def test_values_stay_exact(self):
        tableau = SimplexTableau([[3]], [1], [1])
        tableau.bland_primal()
        assert tableau.z == Fraction(1, 3)
        assert isinstance(tableau.z, Fraction)


class TestSelectionLP:
    def test_bounds_take_the_smallest_exponent(self):
        lp = SelectionLP(((1, 1),), ((2, 0), (3, 1)), (0, 0))
        assert lp.bounds() == {0: 2}

    def test_solve(self):
        lp = SelectionLP(((2, 0), (0, 2)), ((1, 0), (0, 1)), (0, 1))
        assert lp.solve() == 1

    def test_unbounded_selection(self):
        lp = SelectionLP(((0, 1),), ((1, 0),), (0,))
        assert lp.solve() is None


def test_selections_skip_zero_coordinates():
    assert sorted(selections(((1, 0, 1), (0, 1, 0)))) == [(0, 1), (2, 1)]


class TestDisjunctiveLP:
    @pytest.mark.parametrize(
        ("a_gens", "j_gens", "expected"),
        [
            (((2, 0), (0, 2)), ((1, 0), (0, 1)), Fraction(1)),
            (((1, 1),), ((1, 0), (0, 1)), Fraction(1)),
            (((1, 0), (0, 1)), ((1, 0), (0, 1)), Fraction(2)),
            (((3, 1),), ((3, 1),), Fraction(1)),
            (((1, 0), (0, 1)), ((2, 0), (0, 1)), Fraction(3)),
            (((2, 0), (0, 3)), ((1, 0), (0, 1)), Fraction(5, 6)),
            (((1, 0), (0, 1)), ((2, 0), (0, 2)), Fraction(4)),
        ],
    )
    def test_values(self, a_gens, j_gens, expected):
        assert disjunctive_lp_value(a_gens, j_gens) == expected

    def test_principal_scaling(self):
        # c^{(x^3)}(x) = 3
        assert disjunctive_lp_value(((1,),), ((3,),)) == 3

    def test_not_in_radical(self):
        with pytest.raises(NotInRadicalError):
            disjunctive_lp_value(((0, 1),), ((1, 0),))

    def test_zero_j(self):
        with pytest.raises(InfeasibleSelectionError):
            disjunctive_lp_value(((1, 0),), ())

    def test_unit_a(self):
        with pytest.raises(UnitIdealError):
            disjunctive_lp_value(((0, 0),), ((1, 0),))
