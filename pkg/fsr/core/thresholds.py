import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .exceptions import InternalInconsistencyError, NotContainedError, NotInRadicalError, UnitIdealError
from .monomials import (
    ExponentVector,
    FacePrime,
    MonomialIdeal,
    add_vectors,
    contains,
    frobenius_power,
    is_subideal,
    radical,
    support,
)
from .rings import FrobeniusLevel, StanleyReisnerRing
from .simplex import disjunctive_lp_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NuRecord:
    """nu = max{m : a^m not inside J^[q]}, with a^0 = (1)."""

    level: FrobeniusLevel
    nu: int
    per_prime: tuple[tuple[FacePrime, int], ...] = ()
    degenerate: bool = False

    @property
    def scaled(self) -> Fraction:
        return Fraction(self.nu, self.level.q)


@dataclass(frozen=True)
class ThresholdRecord:
    value: Fraction
    per_prime: tuple[tuple[FacePrime, Fraction], ...] = ()
    degenerate: bool = False


@dataclass(frozen=True)
class ConvergenceTable:
    rows: tuple[NuRecord, ...]
    mu: int
    bracket: tuple[Fraction, Fraction]


def power_needed(u: ExponentVector, target: MonomialIdeal) -> int:
    """Least k with (x^u)^k in ``target``."""
    best = None
    for g in target.gens:
        if not support(g) <= support(u):
            continue
        k = max((ceil(gi / ui) for gi, ui in zip(g, u, strict=True) if gi > 0), default=0)
        best = k if best is None else min(best, k)
    if best is None:
        raise NotInRadicalError(MonomialIdeal(len(u), (u,)), target)
    return max(best, 1)


def max_power_outside(gens: tuple[ExponentVector, ...], target: MonomialIdeal) -> int:
    """Largest m such that some product of m generators lies outside ``target``.

    Walks the finite, downward-closed set of multiplicity vectors c whose product
    prod u^{c_u} avoids ``target`` instead of expanding whole powers.
    """
    n = target.ambient_n
    if contains(target, (0,) * n):
        raise UnitIdealError("Target ideal")
    if not gens:
        return 0

    powers = [power_needed(u, target) for u in gens]
    bound = sum(k - 1 for k in powers)

    start = (0,) * len(gens)
    visited = {start}
    stack = [(start, (0,) * n)]
    best = 0
    while stack:
        c, w = stack.pop()
        best = max(best, sum(c))
        for idx, u in enumerate(gens):
            nxt = c[:idx] + (c[idx] + 1,) + c[idx + 1 :]
            if nxt in visited:
                continue
            w_next = add_vectors(w, u)
            if contains(target, w_next):
                continue
            visited.add(nxt)
            stack.append((nxt, w_next))

    if best > bound:
        raise InternalInconsistencyError("power search", f"found {best} beyond the pigeonhole bound {bound}")
    return best


def nontrivial_generator_count(ring: StanleyReisnerRing, a: MonomialIdeal) -> int:
    """mu(a): minimal generators of a + I that are nonzero in R."""
    return sum(1 for g in ring.lift(a).gens if not contains(ring.defining_ideal, g))


class ThresholdEngine:
    """nu-values and F-thresholds c^J(a) of monomial ideals.

    Both reduce to the minimal primes of R: a monomial lies outside J^[q] + I iff
    it survives in some S/P_i and its image there lies outside the image of J^[q].
    """

    def __init__(self, ring: StanleyReisnerRing):
        self.ring = ring

    def _check(self, a: MonomialIdeal, j: MonomialIdeal, level: FrobeniusLevel | None = None):
        ring = self.ring
        if level is not None and level.p != ring.p:
            raise NotContainedError("Frobenius level", f"p = {level.p}", f"a ring of characteristic {ring.p}")
        lifted = ring.lift(j)
        if lifted.is_unit():
            raise UnitIdealError("J + I")
        if not is_subideal(a, radical(lifted)):
            raise NotInRadicalError(ring.format(a), ring.format(lifted))

    def nu_value(self, a: MonomialIdeal, j: MonomialIdeal, level: FrobeniusLevel) -> NuRecord:
        self._check(a, j, level)
        per_prime = []
        degenerate = True
        for prime in self.ring.minimal_primes:
            a_img, j_img = self.ring.image(a, prime), self.ring.image(j, prime)
            if a_img.is_zero():
                per_prime.append((prime, 0))
                continue
            degenerate = False
            per_prime.append((prime, max_power_outside(a_img.gens, frobenius_power(j_img, level))))
        nu = max(value for _, value in per_prime)
        logger.debug("nu at q=%d: %s", level.q, [(str(p), v) for p, v in per_prime])
        return NuRecord(level, nu, tuple(per_prime), degenerate)

    def f_threshold(self, a: MonomialIdeal, j: MonomialIdeal) -> ThresholdRecord:
        """c^J(a) as the maximum of the regular-quotient thresholds."""
        self._check(a, j)
        per_prime = []
        degenerate = True
        for prime in self.ring.minimal_primes:
            a_img, j_img = self.ring.image(a, prime), self.ring.image(j, prime)
            if a_img.is_zero():
                per_prime.append((prime, Fraction(0)))
                continue
            degenerate = False
            per_prime.append((prime, disjunctive_lp_value(a_img.gens, j_img.gens)))
        value = max(v for _, v in per_prime)
        return ThresholdRecord(value, tuple(per_prime), degenerate)

    def convergence_table(self, a: MonomialIdeal, j: MonomialIdeal, e_max: int) -> ConvergenceTable:
        rows = tuple(self.nu_value(a, j, level) for level in FrobeniusLevel.levels(self.ring.p, e_max))
        mu = nontrivial_generator_count(self.ring, a)
        p = self.ring.p
        for prev, nxt in zip(rows, rows[1:]):
            if p * prev.nu > nxt.nu:
                raise InternalInconsistencyError(
                    "nu monotonicity", f"p*nu({prev.level.q}) = {p * prev.nu} > nu({nxt.level.q}) = {nxt.nu}"
                )
        for i, early in enumerate(rows):
            for late in rows[i + 1 :]:
                if late.scaled - early.scaled > Fraction(mu, early.level.q):
                    raise InternalInconsistencyError(
                        "nu convergence",
                        f"nu({late.level.q})/{late.level.q} - nu({early.level.q})/{early.level.q} exceeds {mu}/{early.level.q}",
                    )
        last = rows[-1]
        bracket = (last.scaled, last.scaled + Fraction(mu, last.level.q))
        return ConvergenceTable(rows, mu, bracket)

    def frobenius_scaling_check(self, a: MonomialIdeal, j: MonomialIdeal) -> tuple[Fraction, Fraction]:
        """(c^{J^[p]}(a), p * c^J(a)); the two agree."""
        scaled = self.f_threshold(a, frobenius_power(j, self.ring.p)).value
        return scaled, self.ring.p * self.f_threshold(a, j).value
