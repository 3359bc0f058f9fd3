"""Cartier contractions, uniformly F-compatible ideals, Cartier cores and Cartier thresholds.

Over F_p every R-linear map F^e_* R -> R is premultiplication of a trace-like
map by an element of (I^[q] : I). Writing a monomial as x^{q*theta + alpha} with
0 <= alpha < q, it lies in the contraction J_e exactly when

    x^theta * (I : (I : x^alpha)) is inside J + I,

and (I : (I : x^alpha)) depends only on Supp(alpha). These double colons are the
"splitting colons" T_N below; T_N is the unit ideal for the polynomial ring.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import (
    InternalInconsistencyError,
    NotContainedError,
    NotInRadicalError,
    NotRadicalError,
    NotSquarefreeError,
    UnitIdealError,
)
from .monomials import (
    ExponentVector,
    FacePrime,
    Monomial,
    MonomialIdeal,
    add_vectors,
    colon,
    colon_monomial,
    contains,
    indicator,
    is_subideal,
    minimal_primes,
    radical,
    support,
)
from .rings import FrobeniusLevel, StanleyReisnerRing, localize_at_face_prime
from .thresholds import ThresholdEngine, max_power_outside, nontrivial_generator_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContractionQuery:
    ring: StanleyReisnerRing
    j: MonomialIdeal
    level: FrobeniusLevel

    def __post_init__(self):
        if self.level.p != self.ring.p:
            raise NotContainedError("Frobenius level", f"p = {self.level.p}", f"a ring of characteristic {self.ring.p}")
        if self.ring.lift(self.j).is_unit():
            raise UnitIdealError("J + I")


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    witnesses: tuple[tuple[ExponentVector, MonomialIdeal, bool], ...]


@dataclass(frozen=True)
class CoreResult:
    core: MonomialIdeal
    certificate: tuple[tuple[ExponentVector, MonomialIdeal], ...]
    rounds: int


@dataclass(frozen=True)
class PrimeTrace:
    prime: FacePrime
    local_ring: StanleyReisnerRing
    local_a: MonomialIdeal
    local_core: MonomialIdeal
    value: Fraction
    killed_by_core: bool


@dataclass(frozen=True)
class CtRecord:
    value: Fraction
    per_prime: tuple[tuple[FacePrime, Fraction], ...]
    pipeline_trace: tuple[PrimeTrace, ...]


@dataclass(frozen=True)
class SandwichRow:
    level: FrobeniusLevel
    contraction: MonomialIdeal
    b: int
    c: Fraction

    @property
    def b_scaled(self) -> Fraction:
        return Fraction(self.b, self.level.q)

    @property
    def c_scaled(self) -> Fraction:
        return self.c / self.level.q


@dataclass(frozen=True)
class SandwichTable:
    rows: tuple[SandwichRow, ...]
    mu: int


class CartierEngine:
    def __init__(self, ring: StanleyReisnerRing):
        self.ring = ring
        self._splitting_colons: dict[frozenset[int], MonomialIdeal] = {}
        self._contractions: dict[tuple[MonomialIdeal, int], MonomialIdeal] = {}

    def splitting_colon(self, variables: frozenset[int]) -> MonomialIdeal:
        """T_N = (I : (I : x^N))."""
        if variables not in self._splitting_colons:
            ring = self.ring
            if ring.is_polynomial_ring():
                result = MonomialIdeal.unit(ring.n)
            else:
                inner = colon_monomial(ring.defining_ideal, indicator(ring.n, variables))
                result = colon(ring.defining_ideal, inner)
            self._splitting_colons[variables] = result
        return self._splitting_colons[variables]

    def _query(self, j: MonomialIdeal, level: FrobeniusLevel) -> ContractionQuery:
        return ContractionQuery(self.ring, j, level)

    def contraction_contains(self, query: ContractionQuery, m: Monomial) -> bool:
        lifted = self.ring.lift(query.j)
        beta = m.exponents
        if query.level.e == 0:
            return contains(lifted, beta)
        q = query.level.q
        theta = tuple(b // q for b in beta)
        alpha = tuple(b % q for b in beta)
        closure = self.splitting_colon(support(alpha))
        return all(contains(lifted, add_vectors(theta, t)) for t in closure.gens)

    def contraction_ideal(self, query: ContractionQuery) -> MonomialIdeal:
        """J_e, generated by x^{q*theta + 1_N} for theta among the generators of ((J + I) : T_N)."""
        key = (query.j, query.level.e)
        if key in self._contractions:
            return self._contractions[key]

        n = self.ring.n
        lifted = self.ring.lift(query.j)
        if query.level.e == 0:
            result = lifted
        else:
            q = query.level.q
            gens = []
            for size in range(n + 1):
                for variables in itertools.combinations(range(n), size):
                    allowed = colon(lifted, self.splitting_colon(frozenset(variables)))
                    one_n = indicator(n, variables)
                    gens.extend(tuple(q * t + o for t, o in zip(theta, one_n, strict=True)) for theta in allowed.gens)
            result = MonomialIdeal(n, tuple(gens))
        logger.debug("J_%d of %s is %s", query.level.e, self.ring.format(lifted), self.ring.format(result))
        self._contractions[key] = result
        return result

    def is_uniformly_compatible(self, c: MonomialIdeal) -> CompatibilityReport:
        """C is inside C_e for all e iff every generator x^N of C has T_N inside C + I."""
        if not c.is_squarefree():
            raise NotSquarefreeError("Compatible ideal candidate", self.ring.format(c))
        lifted = self.ring.lift(c)
        if lifted.is_unit():
            raise UnitIdealError("C + I")
        witnesses = []
        for g in c.gens:
            closure = self.splitting_colon(support(g))
            witnesses.append((g, closure, is_subideal(closure, lifted)))
        return CompatibilityReport(all(ok for _, _, ok in witnesses), tuple(witnesses))

    def cartier_core(self, j: MonomialIdeal) -> CoreResult:
        """P(J), the largest uniformly F-compatible ideal inside J.

        Greatest fixpoint over squarefree supports: start from every N with x^N in
        J + I and drop those whose splitting colon leaves the ideal the survivors
        generate. The surviving family stays closed upward, since T_M is inside
        T_N whenever N is inside M.
        """
        n = self.ring.n
        lifted = self.ring.lift(j)
        if lifted.is_unit():
            raise UnitIdealError("J + I")

        family = {
            frozenset(variables)
            for size in range(n + 1)
            for variables in itertools.combinations(range(n), size)
            if contains(lifted, indicator(n, variables))
        }
        rounds = 0
        while True:
            rounds += 1
            current = self.ring.lift(MonomialIdeal.from_supports(n, family))
            survivors = {variables for variables in family if is_subideal(self.splitting_colon(variables), current)}
            if survivors == family:
                break
            family = survivors

        core = self.ring.lift(MonomialIdeal.from_supports(n, family))
        certificate = tuple((g, self.splitting_colon(support(g))) for g in core.gens)
        logger.debug("Cartier core of %s: %s after %d rounds", self.ring.format(lifted), self.ring.format(core), rounds)
        return CoreResult(core, certificate, rounds)

    def splitting_ideal(self, level: FrobeniusLevel) -> MonomialIdeal:
        """I_e(R), the contraction of the maximal ideal."""
        return self.contraction_ideal(self._query(self.ring.maximal_ideal, level))

    def splitting_prime(self) -> MonomialIdeal:
        return self.cartier_core(self.ring.maximal_ideal).core

    def b_value(self, a: MonomialIdeal, j: MonomialIdeal, level: FrobeniusLevel) -> int:
        """max{t : a^t not inside J_e}."""
        query = self._query(j, level)
        if not is_subideal(a, radical(self.ring.lift(j))):
            raise NotInRadicalError(self.ring.format(a), self.ring.format(self.ring.lift(j)))
        return max_power_outside(a.gens, self.contraction_ideal(query))

    def _check_threshold_input(self, a: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
        lifted = self.ring.lift(j)
        if not lifted.is_squarefree():
            raise NotRadicalError(self.ring.format(lifted))
        if lifted.is_unit():
            raise UnitIdealError("J + I")
        if not is_subideal(a, lifted):
            raise NotContainedError("Cartier threshold", self.ring.format(a), self.ring.format(lifted))
        return lifted

    def cartier_threshold(self, a: MonomialIdeal, j: MonomialIdeal) -> CtRecord:
        """ct_J(a) for a radical monomial J.

        One branch per minimal prime Q of J + I: localize at Q, compute the
        splitting prime P of the local ring, and take the F-threshold of a with
        respect to the maximal ideal of the local ring modulo P.
        """
        lifted = self._check_threshold_input(a, j)
        trace = []
        for prime in minimal_primes(lifted):
            local_ring, (local_a,) = localize_at_face_prime(self.ring, prime, [a])
            local_core = CartierEngine(local_ring).splitting_prime()
            if is_subideal(local_a, local_core):
                value, killed = Fraction(0), True
            else:
                quotient = local_ring.quotient(local_core)
                value = ThresholdEngine(quotient).f_threshold(local_a, quotient.maximal_ideal).value
                killed = False
            logger.debug("ct branch at %s: core %s, value %s", prime, local_ring.format(local_core), value)
            trace.append(PrimeTrace(prime, local_ring, local_a, local_core, value, killed))
        per_prime = tuple((t.prime, t.value) for t in trace)
        return CtRecord(max(v for _, v in per_prime), per_prime, tuple(trace))

    def fpt(self, a: MonomialIdeal) -> CtRecord:
        return self.cartier_threshold(a, self.ring.maximal_ideal)

    def fpt_ring(self) -> Fraction:
        """fpt(R) = ct_m(m)."""
        return self.fpt(self.ring.maximal_ideal).value

    def ct_sandwich_table(self, a: MonomialIdeal, j: MonomialIdeal, e_max: int) -> SandwichTable:
        """b(p^e)/p^e and c^{J_e}(a)/p^e for e = 1..e_max, both tending to ct_J(a)."""
        self._check_threshold_input(a, j)
        thresholds = ThresholdEngine(self.ring)
        mu = nontrivial_generator_count(self.ring, a)
        rows = []
        for level in FrobeniusLevel.levels(self.ring.p, e_max, start=1):
            contraction = self.contraction_ideal(self._query(j, level))
            b = max_power_outside(a.gens, contraction)
            c = thresholds.f_threshold(a, contraction).value
            if not 0 <= c - b <= mu:
                raise InternalInconsistencyError("Cartier sandwich", f"at q={level.q}: c = {c}, b = {b}, mu = {mu}")
            rows.append(SandwichRow(level, contraction, b, c))
        for prev, nxt in zip(rows, rows[1:]):
            if nxt.c_scaled > prev.c_scaled:
                raise InternalInconsistencyError(
                    "Cartier sandwich", f"c/q increased from {prev.c_scaled} to {nxt.c_scaled} at q={nxt.level.q}"
                )
        return SandwichTable(tuple(rows), mu)

    def ct_equals_c_criterion(self, a: MonomialIdeal, j: MonomialIdeal, e_max: int) -> list[tuple[int, Fraction, Fraction]]:
        """(e, c^{J_e}(a), c^{J^[q]}(a)) for e = 1..e_max; ct_J(a) = c^J(a) iff the columns agree at every level."""
        thresholds = ThresholdEngine(self.ring)
        base = thresholds.f_threshold(a, j).value
        rows = []
        for level in FrobeniusLevel.levels(self.ring.p, e_max, start=1):
            contraction = self.contraction_ideal(self._query(j, level))
            rows.append((level.e, thresholds.f_threshold(a, contraction).value, level.q * base))
        return rows
