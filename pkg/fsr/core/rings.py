import logging
from dataclasses import dataclass, field
from functools import cached_property

from sympy import isprime

from .exceptions import MalformedExponentError, NotContainedError, NotPrimeError, NotSquarefreeError, UnitIdealError
from .monomials import (
    FacePrime,
    MonomialIdeal,
    dimension,
    ideal_sum,
    image_mod_face_prime,
    is_subideal,
    minimal_primes,
    restrict_to,
)

logger = logging.getLogger(__name__)


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise NotPrimeError(p)
    return p


@dataclass(frozen=True)
class FrobeniusLevel:
    """The Frobenius level q = p^e."""

    p: int
    e: int

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.e, int) or self.e < 0:
            raise MalformedExponentError(self.e)

    @property
    def q(self) -> int:
        return self.p**self.e

    def next(self) -> "FrobeniusLevel":
        return FrobeniusLevel(self.p, self.e + 1)

    @classmethod
    def levels(cls, p: int, e_max: int, start: int = 0) -> list["FrobeniusLevel"]:
        if start > e_max:
            return []
        levels = [cls(p, start)]
        while levels[-1].e < e_max:
            levels.append(levels[-1].next())
        return levels


@dataclass(frozen=True)
class StanleyReisnerRing:
    """R = F_p[x_1..x_n] / I for a squarefree monomial ideal I.

    Ideals of R are passed around as monomial ideals of the polynomial ring; the
    engines always work with their lift J + I.
    """

    n: int
    p: int
    defining_ideal: MonomialIdeal
    variables: tuple[str, ...] = field(default=())

    def __post_init__(self):
        check_prime(self.p)
        if self.defining_ideal.ambient_n != self.n:
            raise NotContainedError("Defining ideal", self.defining_ideal, f"a ring in {self.n} variables")
        if not self.defining_ideal.is_squarefree():
            raise NotSquarefreeError("Defining ideal", self.defining_ideal.format(self.variables or None))
        if self.defining_ideal.is_unit():
            raise UnitIdealError("Defining ideal")
        if not self.variables:
            object.__setattr__(self, "variables", tuple(f"x{i + 1}" for i in range(self.n)))

    @classmethod
    def polynomial_ring(cls, n: int, p: int, variables: tuple[str, ...] = ()) -> "StanleyReisnerRing":
        return cls(n, p, MonomialIdeal.zero(n), variables)

    @cached_property
    def minimal_primes(self) -> list[FacePrime]:
        return minimal_primes(self.defining_ideal)

    @cached_property
    def dim(self) -> int:
        return dimension(self.defining_ideal)

    @property
    def maximal_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.maximal(self.n)

    @property
    def zero_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.zero(self.n)

    def is_polynomial_ring(self) -> bool:
        return self.defining_ideal.is_zero()

    def lift(self, ideal: MonomialIdeal) -> MonomialIdeal:
        """J + I, the preimage in S of the ideal generated by J in R."""
        return ideal_sum(ideal, self.defining_ideal)

    def quotient(self, ideal: MonomialIdeal) -> "StanleyReisnerRing":
        """R / J for a squarefree J."""
        return StanleyReisnerRing(self.n, self.p, self.lift(ideal), self.variables)

    def quotient_by_face_prime(self, prime: FacePrime) -> "StanleyReisnerRing":
        """S / P, presented as the polynomial ring on the variables outside P."""
        kept = prime.complement(self.n)
        return StanleyReisnerRing.polynomial_ring(len(kept), self.p, tuple(self.variables[i] for i in kept))

    def image(self, ideal: MonomialIdeal, prime: FacePrime) -> MonomialIdeal:
        return image_mod_face_prime(ideal, prime)

    def with_characteristic(self, p: int) -> "StanleyReisnerRing":
        return StanleyReisnerRing(self.n, p, self.defining_ideal, self.variables)

    def level(self, e: int) -> FrobeniusLevel:
        return FrobeniusLevel(self.p, e)

    def format(self, ideal: MonomialIdeal) -> str:
        return ideal.format(self.variables)

    def __str__(self) -> str:
        base = f"F_{self.p}[{', '.join(self.variables)}]"
        return base if self.is_polynomial_ring() else f"{base}/{self.format(self.defining_ideal)}"


def localize_at_face_prime(
    ring: StanleyReisnerRing, prime: FacePrime, extras: list[MonomialIdeal]
) -> tuple[StanleyReisnerRing, list[MonomialIdeal]]:
    """Stanley-Reisner presentation of R localized (and completed) at a face prime.

    Variables outside the prime become units, so they are deleted from every
    generator. Adjoining the free variables back changes none of the monomial
    operations, so they are dropped from the presentation.
    """
    prime_ideal = prime.ideal(ring.n)
    if not is_subideal(ring.defining_ideal, prime_ideal):
        raise NotContainedError("Localization", ring.format(ring.defining_ideal), str(prime))
    for extra in extras:
        if not is_subideal(extra, prime_ideal):
            raise NotContainedError("Localization", ring.format(extra), str(prime))

    kept = tuple(sorted(prime.variables))
    local_ring = StanleyReisnerRing(
        len(kept),
        ring.p,
        restrict_to(ring.defining_ideal, kept),
        tuple(ring.variables[i] for i in kept),
    )
    logger.debug("Localized %s at %s: %s", ring, prime, local_ring)
    return local_ring, [restrict_to(extra, kept) for extra in extras]
