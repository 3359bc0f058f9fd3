import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .cartier import CartierEngine
from .complexes import AInvariantTable, a_invariants_squarefree
from .constants import DEFAULT_TABLE_LEVELS
from .exceptions import InternalInconsistencyError, NotSquarefreeError, UnitIdealError
from .monomials import ExponentVector, MonomialIdeal, colon_monomial, ideal_sum
from .rings import FrobeniusLevel, StanleyReisnerRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularityLimitReport:
    limit: int
    argmax: tuple[tuple[ExponentVector, int], ...]
    finite_levels: tuple[tuple[int, Fraction], ...]

    @property
    def artinian_witness(self) -> bool:
        """True when some maximizing term comes from H^0, outside the range 1 <= i <= d."""
        return any(i == 0 for _, i in self.argmax)


@dataclass(frozen=True)
class LowerBoundCheck:
    limit: int
    top_a_invariant: int | None
    fpt: Fraction

    @property
    def bound(self) -> Fraction | None:
        return None if self.top_a_invariant is None else self.top_a_invariant + self.fpt


class RegularityEngine:
    """lim reg(R/J^[q])/q for squarefree J, through a-invariants of S/(J_alpha + J).

    Here J_alpha = (I : x^alpha) for alpha in {0,1}^n; the index range is
    0 <= i <= dim so that Artinian quotients contribute through H^0.
    """

    def __init__(self, ring: StanleyReisnerRing):
        self.ring = ring
        self._tables: dict[MonomialIdeal, AInvariantTable] = {}

    def _check(self, j: MonomialIdeal):
        if not j.is_squarefree():
            raise NotSquarefreeError("Regularity input J", self.ring.format(j))
        if self.ring.lift(j).is_unit():
            raise UnitIdealError("J + I")

    def a_invariants(self, ideal: MonomialIdeal) -> AInvariantTable:
        if not ideal.is_squarefree():
            raise NotSquarefreeError("Ideal", self.ring.format(ideal))
        if ideal not in self._tables:
            self._tables[ideal] = a_invariants_squarefree(ideal, self.ring.p)
        return self._tables[ideal]

    def _terms(self, j: MonomialIdeal):
        """(alpha, i, a_i) for every finite a-invariant of every proper S/(J_alpha + J)."""
        n = self.ring.n
        lifted = self.ring.lift(j)
        for alpha in itertools.product((0, 1), repeat=n):
            quotient = ideal_sum(colon_monomial(self.ring.defining_ideal, alpha), lifted)
            if quotient.is_unit():
                continue
            for i, a in sorted(self.a_invariants(quotient).finite().items()):
                yield alpha, i, a

    def scaled_regularity_at_level(self, j: MonomialIdeal, level: FrobeniusLevel) -> Fraction:
        """reg(R/J^[q])/q = max of a_i + |alpha|(q-1)/q + i/q."""
        self._check(j)
        q = level.q
        return max(a + Fraction(sum(alpha) * (q - 1) + i, q) for alpha, i, a in self._terms(j))

    def regularity_limit(self, j: MonomialIdeal, e_max: int = DEFAULT_TABLE_LEVELS) -> RegularityLimitReport:
        self._check(j)
        terms = list(self._terms(j))
        limit = max(a + sum(alpha) for alpha, _, a in terms)
        argmax = tuple((alpha, i) for alpha, i, a in terms if a + sum(alpha) == limit)

        n = self.ring.n
        slack = n + max(sum(alpha) for alpha, _, _ in terms)
        levels = []
        for level in FrobeniusLevel.levels(self.ring.p, e_max):
            scaled = self.scaled_regularity_at_level(j, level)
            if abs(scaled - limit) > Fraction(slack, level.q):
                raise InternalInconsistencyError(
                    "regularity convergence", f"reg/q = {scaled} is farther than {slack}/{level.q} from {limit}"
                )
            levels.append((level.e, scaled))
        report = RegularityLimitReport(limit, argmax, tuple(levels))
        if report.artinian_witness:
            logger.info("Regularity limit %d is attained through H^0 of an Artinian quotient", limit)
        return report

    def lower_bound_check(self, j: MonomialIdeal) -> LowerBoundCheck:
        """limit >= max_i a_i(R/J) + fpt(R)."""
        report = self.regularity_limit(j)
        table = self.a_invariants(self.ring.lift(j))
        finite = table.finite()
        top = max(finite.values()) if finite else None
        check = LowerBoundCheck(report.limit, top, CartierEngine(self.ring).fpt_ring())
        if check.bound is not None and check.bound > report.limit:
            raise InternalInconsistencyError(
                "regularity lower bound", f"limit {report.limit} below max a_i(R/J) + fpt(R) = {check.bound}"
            )
        return check
