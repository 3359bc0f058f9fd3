"""Slow, literal implementations used to cross-check the engines.

They share only monomial membership with the engines: ``bf_nu`` expands a^m
product by product, and ``bf_contraction_trace`` tests membership in J_e through
the trace description of the maps F^e_* R -> R instead of the splitting colons.
"""

import itertools
import logging
import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .config import budget_settings
from .exceptions import BudgetExceededError, NotInRadicalError, UnitIdealError
from .monomials import Monomial, MonomialIdeal, colon, contains, frobenius_power, is_subideal, radical
from .rings import FrobeniusLevel, StanleyReisnerRing
from .thresholds import nontrivial_generator_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleBudget:
    max_n: int
    max_p: int
    max_e: int
    max_degree: int

    @classmethod
    def from_env(cls) -> "OracleBudget":
        return cls(**budget_settings())

    def enforce(self, ring: StanleyReisnerRing, level: FrobeniusLevel | None = None, ideals: tuple = ()):
        checks = [("n", ring.n, self.max_n), ("p", ring.p, self.max_p)]
        if level is not None:
            checks.append(("e", level.e, self.max_e))
        for ideal in (ring.defining_ideal, *ideals):
            checks.append(("generator degree", ideal.max_degree(), self.max_degree))
        for field_name, value, limit in checks:
            if value > limit:
                raise BudgetExceededError(field_name, value, limit)


def _products(gens, count: int):
    """Every product of `count` generators, taken with repetition."""
    for combo in itertools.combinations_with_replacement(gens, count):
        yield reduce(operator.mul, (Monomial(g) ** k for g, k in Counter(combo).items()))


class BruteForceOracle:
    def __init__(self, ring: StanleyReisnerRing, budget: OracleBudget | None = None):
        self.ring = ring
        self.budget = budget or OracleBudget.from_env()

    def bf_nu(self, a: MonomialIdeal, j: MonomialIdeal, level: FrobeniusLevel) -> int:
        """Last m for which some product of m generators of a avoids J^[q] + I."""
        self.budget.enforce(self.ring, level, (a, j))
        lifted = self.ring.lift(j)
        if lifted.is_unit():
            raise UnitIdealError("J + I")
        if not is_subideal(a, radical(lifted)):
            raise NotInRadicalError(self.ring.format(a), self.ring.format(lifted))

        target = self.ring.lift(frobenius_power(j, level))
        m = 0
        while True:
            if all(contains(target, w) for w in _products(a.gens, m + 1)):
                return m
            m += 1

    def bf_contraction_trace(self, j: MonomialIdeal, level: FrobeniusLevel, m: Monomial) -> bool:
        """x^beta is in J_e iff x^delta is in J + I whenever x^eta is in (I^[q] : I) and eta + beta = q*delta + (q-1).

        Membership is upward closed in eta, so only the least admissible eta above
        each minimal generator of (I^[q] : I) needs checking.
        """
        self.budget.enforce(self.ring, level, (j,))
        lifted = self.ring.lift(j)
        q = level.q
        n = self.ring.n
        if self.ring.is_polynomial_ring():
            multipliers = MonomialIdeal.unit(n)
        else:
            multipliers = colon(frobenius_power(self.ring.defining_ideal, q), self.ring.defining_ideal)

        beta = m.exponents
        residue = tuple((q - 1 - b) % q for b in beta)
        for g in multipliers.gens:
            eta = tuple(gi + (ri - gi) % q for gi, ri in zip(g, residue, strict=True))
            delta = tuple((e + b - (q - 1)) // q for e, b in zip(eta, beta, strict=True))
            if not contains(lifted, delta):
                logger.debug("Trace map through x^%s sends x^%s outside J", eta, beta)
                return False
        return True

    def bf_threshold_bracket(self, a: MonomialIdeal, j: MonomialIdeal, e_level: int) -> tuple[Fraction, Fraction]:
        level = FrobeniusLevel(self.ring.p, e_level)
        nu = self.bf_nu(a, j, level)
        mu = nontrivial_generator_count(self.ring, a)
        return Fraction(nu, level.q), Fraction(nu + mu, level.q)

    def bf_b_value(self, a: MonomialIdeal, j: MonomialIdeal, level: FrobeniusLevel) -> int:
        """Last t for which some product of t generators of a avoids J_e, with J_e tested by the trace route."""
        self.budget.enforce(self.ring, level, (a, j))
        lifted = self.ring.lift(j)
        if lifted.is_unit():
            raise UnitIdealError("J + I")
        if not is_subideal(a, radical(lifted)):
            raise NotInRadicalError(self.ring.format(a), self.ring.format(lifted))

        t = 0
        while True:
            if all(self.bf_contraction_trace(j, level, w) for w in _products(a.gens, t + 1)):
                return t
            t += 1
