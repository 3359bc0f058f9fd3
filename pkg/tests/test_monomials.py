from functools import reduce

import pytest

from fsr.core.exceptions import (
    AmbientMismatchError,
    MalformedExponentError,
    NotSquarefreeError,
    UnitIdealError,
    ZeroColonError,
)
from fsr.core.monomials import (
    FacePrime,
    Monomial,
    MonomialIdeal,
    colon,
    colon_monomial,
    contains,
    dimension,
    format_vector,
    frobenius_power,
    ideal_sum,
    image_mod_face_prime,
    intersect,
    is_subideal,
    minimal_primes,
    normalize,
    radical,
    restrict_to,
)


def ideal(*gens):
    return MonomialIdeal(len(gens[0]), gens)


def primes(*supports):
    return [FacePrime.of(s) for s in supports]


class TestNormalize:
    def test_divisibility_reduction(self):
        assert normalize([(2, 1), (1, 1), (2, 0)], 2).gens == ((1, 1), (2, 0))

    def test_empty_is_zero(self):
        assert normalize([], 2) == MonomialIdeal.zero(2)

    def test_multiples_dropped(self):
        assert normalize([(1, 1), (2, 2)], 2).gens == ((1, 1),)

    def test_generator_order_does_not_matter(self):
        assert normalize([(0, 1), (1, 0)], 2) == normalize([(1, 0), (0, 1), (1, 0)], 2)

    def test_wrong_length_is_rejected(self):
        with pytest.raises(AmbientMismatchError):
            MonomialIdeal(2, ((1, 0, 0),))

    def test_unit_absorbs_everything(self):
        assert normalize([(0, 0), (3, 1)], 2) == MonomialIdeal.unit(2)

    @pytest.mark.parametrize("entry", [1.5, -1, True, "2"])
    def test_bad_exponents_are_rejected(self, entry):
        with pytest.raises(MalformedExponentError):
            MonomialIdeal(2, ((entry, 0),))


class TestMembership:
    def test_multiple_is_member(self):
        assert contains(ideal((1, 1)), (2, 2))

    def test_divisor_is_not(self):
        assert not contains(ideal((1, 1)), (1, 0))

    def test_mixed_powers(self):
        assert not contains(ideal((4, 0), (0, 4)), (2, 2))

    def test_monomial_objects(self):
        assert Monomial((3, 1)) in ideal((1, 1))

    def test_zero_ideal_contains_nothing(self):
        assert not contains(MonomialIdeal.zero(2), (5, 5))

    def test_length_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            contains(ideal((1, 1)), (1, 1, 1))

    def test_subideal(self):
        assert is_subideal(ideal((2, 0), (0, 2)), ideal((1, 0), (0, 1)))
        assert not is_subideal(ideal((1, 0), (0, 1)), ideal((2, 0), (0, 2)))


class TestSumAndIntersection:
    def test_sum(self):
        a = ideal((2, 0, 0), (0, 2, 0), (0, 0, 2))
        assert ideal_sum(a, ideal((1, 0, 0), (0, 1, 0))).gens == ((0, 0, 2), (0, 1, 0), (1, 0, 0))

    def test_sum_with_zero(self):
        a = ideal((1, 2))
        assert a + MonomialIdeal.zero(2) == a

    def test_sum_with_unit(self):
        assert (ideal((1, 0)) + MonomialIdeal.unit(2)).is_unit()

    def test_intersection_of_variables(self):
        assert intersect(ideal((1, 0)), ideal((0, 1))).gens == ((1, 1),)

    def test_intersection_of_face_primes(self):
        xy = ideal((1, 0, 0), (0, 1, 0))
        xz = ideal((1, 0, 0), (0, 0, 1))
        assert (xy & xz).gens == ((0, 1, 1), (1, 0, 0))

    def test_intersection_with_unit(self):
        a = ideal((1, 2), (3, 0))
        assert intersect(a, MonomialIdeal.unit(2)) == a

    def test_mismatched_ambients(self):
        with pytest.raises(AmbientMismatchError):
            ideal_sum(MonomialIdeal.zero(2), MonomialIdeal.zero(3))


class TestColon:
    def test_by_variable(self):
        assert colon(ideal((1, 1)), ideal((0, 1))) == ideal((1, 0))

    def test_squarefree_colon_only_sees_support(self):
        a = ideal((1, 1, 0), (0, 1, 1))
        assert colon_monomial(a, (0, 1, 0)) == ideal((1, 0, 0), (0, 0, 1))
        assert colon_monomial(a, (0, 3, 0)) == colon_monomial(a, (0, 1, 0))

    def test_by_itself(self):
        a = ideal((1, 1))
        assert colon(a, a).is_unit()

    def test_by_zero_ideal(self):
        with pytest.raises(ZeroColonError):
            colon(ideal((1, 1)), MonomialIdeal.zero(2))

    def test_of_zero_ideal(self):
        assert colon(MonomialIdeal.zero(2), ideal((1, 0))).is_zero()

    def test_non_squarefree(self):
        assert colon(ideal((3, 0), (1, 2)), ideal((1, 1))) == ideal((0, 1), (2, 0))


class TestFrobeniusAndRadical:
    def test_frobenius(self):
        assert frobenius_power(ideal((1, 1, 0), (0, 1, 1)), 4).gens == ((0, 4, 4), (4, 4, 0))

    def test_frobenius_at_q_one(self):
        a = ideal((1, 2), (3, 0))
        assert frobenius_power(a, 1) == a

    def test_frobenius_of_variables(self):
        assert frobenius_power(MonomialIdeal.maximal(2), 2) == ideal((2, 0), (0, 2))

    def test_radical(self):
        assert radical(ideal((2, 1))) == ideal((1, 1))
        assert radical(ideal((3, 0), (1, 2))) == ideal((1, 0))

    def test_radical_of_squarefree(self):
        a = ideal((1, 1, 0), (0, 0, 1))
        assert radical(a) == a


class TestMinimalPrimes:
    def test_cross(self):
        assert minimal_primes(ideal((1, 1))) == primes({0}, {1})

    def test_triangle(self):
        assert minimal_primes(ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))) == primes({0, 1}, {0, 2}, {1, 2})

    def test_zero_ideal(self):
        assert minimal_primes(MonomialIdeal.zero(3)) == [FacePrime(frozenset())]

    def test_path(self):
        # x1x2, x2x3, x3x4: covers {2,3}, {1,3}, {2,4}
        a = ideal((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1))
        assert minimal_primes(a) == primes({0, 2}, {1, 2}, {1, 3})

    def test_every_prime_contains_the_ideal(self):
        a = ideal((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
        for prime in minimal_primes(a):
            assert is_subideal(a, prime.ideal(4))

    def test_rejects_non_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            minimal_primes(ideal((2, 0)))

    def test_rejects_unit(self):
        with pytest.raises(UnitIdealError):
            minimal_primes(MonomialIdeal.unit(2))

    def test_dimension(self):
        assert dimension(ideal((1, 1, 0))) == 2
        assert dimension(ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))) == 1
        assert dimension(MonomialIdeal.zero(3)) == 3


class TestImages:
    def test_image_keeps_surviving_generators(self):
        a = ideal((1, 0, 1), (1, 1, 0))
        assert image_mod_face_prime(a, FacePrime.of({1})) == MonomialIdeal(2, ((1, 1),))

    def test_image_can_vanish(self):
        assert image_mod_face_prime(ideal((1, 0, 1)), FacePrime.of({0})).is_zero()

    def test_image_of_prime(self):
        assert image_mod_face_prime(ideal((1, 0), (0, 1)), FacePrime.of({1})) == MonomialIdeal(1, ((1,),))

    def test_restrict(self):
        assert restrict_to(ideal((1, 1, 2)), (0, 1)) == MonomialIdeal(2, ((1, 1),))
        assert restrict_to(ideal((0, 0, 2)), (0, 1)).is_unit()


def test_format_vector():
    assert format_vector((2, 1, 0), ("x", "y", "z")) == "x^2*y"
    assert format_vector((0, 0)) == "1"
    assert format_vector((0, 1)) == "x2"


def test_ideal_format():
    assert ideal((1, 1, 0), (0, 0, 2)).format(("x", "y", "z")) == "(z^2, x*y)"
    assert MonomialIdeal.zero(2).format() == "(0)"


def test_monomial_products():
    assert Monomial((1, 0, 2)) * Monomial((0, 3, 1)) == Monomial((1, 3, 3))
    assert Monomial((1, 0, 2)) ** 3 == Monomial((3, 0, 6))
    assert str(Monomial((0, 0))) == "1"


class TestRandomIdeals:
    def test_intersection_membership(self, random_instances):
        instances = random_instances(31)
        rng = instances.rng
        for _ in range(100):
            n = rng.randint(1, 3)
            a, b = instances.ideal(n, 3), instances.ideal(n, 3)
            both = intersect(a, b)
            for _ in range(20):
                m = tuple(rng.randint(0, 4) for _ in range(n))
                assert contains(both, m) == (contains(a, m) and contains(b, m)), (a, b, m)

    def test_frobenius_power_commutes_with_intersection(self, random_instances):
        instances = random_instances(32)
        rng = instances.rng
        for _ in range(100):
            n = rng.randint(1, 3)
            a, b = instances.ideal(n, 3), instances.ideal(n, 3)
            q = rng.choice((2, 3, 4, 9))
            assert frobenius_power(intersect(a, b), q) == intersect(frobenius_power(a, q), frobenius_power(b, q))

    def test_minimal_primes_cut_out_the_radical(self, random_instances):
        instances = random_instances(33)
        rng = instances.rng
        for _ in range(100):
            n = rng.randint(1, 4)
            root = radical(instances.ideal(n, 2))
            components = [prime.ideal(n) for prime in minimal_primes(root)]
            assert reduce(intersect, components) == root
            assert all(root <= component for component in components)
