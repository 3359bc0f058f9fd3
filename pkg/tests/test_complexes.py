import pytest

from fsr.core.complexes import (
    SimplicialComplex,
    a_invariants_squarefree,
    complex_of_ideal,
    coboundary_matrix,
    link,
    reduced_cohomology_ranks,
)
from fsr.core.exceptions import NotContainedError, NotSquarefreeError
from fsr.core.monomials import MonomialIdeal


def faces(*sets):
    return tuple(frozenset(s) for s in sets)


HOLLOW_TRIANGLE = SimplicialComplex(3, faces({0, 1}, {1, 2}, {0, 2}))
TWO_POINTS = SimplicialComplex(2, faces({0}, {1}))


class TestComplexOfIdeal:
    def test_cross(self):
        assert complex_of_ideal(MonomialIdeal(2, ((1, 1),))).facets == faces({0}, {1})

    def test_zero_ideal_is_a_simplex(self):
        assert complex_of_ideal(MonomialIdeal.zero(2)).facets == faces({0, 1})

    def test_triangle_relations(self):
        ideal = MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1)))
        assert complex_of_ideal(ideal).facets == faces({0}, {1}, {2})

    def test_maximal_ideal_is_irrelevant(self):
        assert complex_of_ideal(MonomialIdeal.maximal(2)) == SimplicialComplex.irrelevant(2)

    def test_unit_ideal_is_void(self):
        assert complex_of_ideal(MonomialIdeal.unit(2)).is_void()

    def test_rejects_non_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            complex_of_ideal(MonomialIdeal(2, ((2, 0),)))


class TestLink:
    def test_link_of_empty_face(self):
        assert link(HOLLOW_TRIANGLE, ()) == HOLLOW_TRIANGLE

    def test_link_of_vertex(self):
        assert link(TWO_POINTS, {0}) == SimplicialComplex.irrelevant(2)
        assert link(HOLLOW_TRIANGLE, {0}).facets == faces({1}, {2})

    def test_non_face(self):
        with pytest.raises(NotContainedError):
            link(TWO_POINTS, {0, 1})


class TestCohomology:
    def test_two_points(self):
        assert reduced_cohomology_ranks(TWO_POINTS, 2) == {-1: 0, 0: 1}

    def test_circle(self):
        assert reduced_cohomology_ranks(HOLLOW_TRIANGLE, 3) == {-1: 0, 0: 0, 1: 1}

    def test_irrelevant_complex(self):
        assert reduced_cohomology_ranks(SimplicialComplex.irrelevant(1), 2) == {-1: 1}

    def test_void_complex(self):
        assert reduced_cohomology_ranks(SimplicialComplex.void(1), 2) == {-1: 0}

    def test_simplex_is_acyclic(self):
        simplex = SimplicialComplex(3, faces({0, 1, 2}))
        assert set(reduced_cohomology_ranks(simplex, 5).values()) == {0}

    def test_projective_plane_depends_on_characteristic(self):
        # six-vertex triangulation of RP^2
        rp2 = SimplicialComplex(
            6,
            faces(
                {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
            ),
        )
        assert reduced_cohomology_ranks(rp2, 3) == {-1: 0, 0: 0, 1: 0, 2: 0}
        assert reduced_cohomology_ranks(rp2, 2) == {-1: 0, 0: 0, 1: 1, 2: 1}

    @pytest.mark.parametrize("complex_", [TWO_POINTS, HOLLOW_TRIANGLE, SimplicialComplex(4, faces({0, 1}, {1, 2, 3}))])
    def test_euler_characteristic(self, complex_):
        ranks = reduced_cohomology_ranks(complex_, 2)
        counts = {}
        for face in complex_.faces():
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
        assert sum((-1) ** d * r for d, r in ranks.items()) == sum((-1) ** d * c for d, c in counts.items())

    def test_coboundary_signs(self):
        lower = [frozenset({0}), frozenset({1})]
        assert coboundary_matrix(lower, [frozenset({0, 1})]) == [[-1, 1]]


class TestAInvariants:
    def test_cross(self):
        table = a_invariants_squarefree(MonomialIdeal(2, ((1, 1),)), 2)
        assert table.dim == 1
        assert table.values == {0: None, 1: 0}

    def test_polynomial_ring_in_one_variable(self):
        assert a_invariants_squarefree(MonomialIdeal.zero(1), 2).values == {0: None, 1: -1}

    def test_field(self):
        assert a_invariants_squarefree(MonomialIdeal.maximal(1), 3).values == {0: 0}

    def test_polynomial_ring(self):
        assert a_invariants_squarefree(MonomialIdeal.zero(3), 2).finite() == {3: -3}

    def test_three_axes(self):
        ideal = MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1)))
        assert a_invariants_squarefree(ideal, 2).values == {0: None, 1: 0}

    def test_zero_ring(self):
        table = a_invariants_squarefree(MonomialIdeal.unit(2), 2)
        assert table.zero_ring
        assert table.finite() == {}

    def test_never_positive(self):
        ideal = MonomialIdeal(4, ((1, 1, 0, 0), (0, 0, 1, 1)))
        assert all(a <= 0 for a in a_invariants_squarefree(ideal, 2).finite().values())
