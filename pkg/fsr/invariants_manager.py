import itertools
import logging
from fractions import Fraction

from .core import (
    BruteForceOracle,
    CartierEngine,
    ContractionQuery,
    FrobeniusLevel,
    Monomial,
    MonomialIdeal,
    OracleBudget,
    RegularityEngine,
    StanleyReisnerRing,
    ThresholdEngine,
    VerificationError,
    colon,
    dimension,
    frobenius_power,
    intersect,
    minimal_primes,
)
from .core.constants import DEFAULT_TABLE_LEVELS
from .core.exceptions import BudgetExceededError, NotSquarefreeError
from .core.parsing import load_ring, parse_ideal, parse_monomial
from .core.utils import a_invariant, face_prime, ideal_terms, monomial, rational

logger = logging.getLogger(__name__)


class InvariantsManager:
    """Facade over the engines of one ring.

    Every method takes ideals as literals over the ring's variables and returns a
    JSON-ready payload with exact values.
    """

    def __init__(self, ring: StanleyReisnerRing, budget: OracleBudget | None = None):
        self.ring = ring
        self.thresholds = ThresholdEngine(ring)
        self.cartier = CartierEngine(ring)
        self.regularity = RegularityEngine(ring)
        self.oracle = BruteForceOracle(ring, budget)

    @classmethod
    def from_source(cls, ring_source: str, p: int | None = None) -> "InvariantsManager":
        """Manager for a ring file (or inline JSON), optionally in another characteristic."""
        ring = load_ring(ring_source)
        if p is not None and p != ring.p:
            ring = ring.with_characteristic(p)
        return cls(ring)

    # Input helpers
    def ideal(self, literal) -> MonomialIdeal:
        return parse_ideal(literal, self.ring.variables)

    def level(self, e: int) -> FrobeniusLevel:
        return FrobeniusLevel(self.ring.p, e)

    def _terms(self, ideal: MonomialIdeal) -> list[str]:
        return ideal_terms(ideal, self.ring.variables)

    def _prime(self, prime) -> list[str]:
        return face_prime(prime, self.ring.variables)

    def _run_oracle(self, command: str, check):
        """Run an oracle comparison; a budget refusal skips it with a warning."""
        try:
            check()
        except BudgetExceededError as e:
            logger.warning("Skipping verification of '%s': %s", command, e)
            return "skipped"
        return "agreed"

    # Monomial core
    def min_primes(self, literal=None) -> dict:
        ideal = self.ring.defining_ideal if literal is None else self.ideal(literal)
        if not ideal.is_squarefree():
            raise NotSquarefreeError("Ideal", self.ring.format(ideal))
        return {
            "primes": [self._prime(prime) for prime in minimal_primes(ideal)],
            "dim": dimension(ideal),
        }

    def colon(self, a_literal, b_literal) -> dict:
        return {"ideal": self._terms(colon(self.ideal(a_literal), self.ideal(b_literal)))}

    def intersect(self, a_literal, b_literal) -> dict:
        return {"ideal": self._terms(intersect(self.ideal(a_literal), self.ideal(b_literal)))}

    def frobenius(self, a_literal, e: int) -> dict:
        level = self.level(e)
        return {"ideal": self._terms(frobenius_power(self.ideal(a_literal), level)), "q": level.q}

    # Threshold engine
    def nu(self, a_literal, j_literal, e: int, verify: bool = False) -> dict:
        a, j, level = self.ideal(a_literal), self.ideal(j_literal), self.level(e)
        record = self.thresholds.nu_value(a, j, level)
        payload = {
            "nu": record.nu,
            "q": level.q,
            "scaled": rational(record.scaled),
            "degenerate": record.degenerate,
            "per_prime": [{"prime": self._prime(prime), "nu": value} for prime, value in record.per_prime],
        }
        if verify:

            def check():
                expected = self.oracle.bf_nu(a, j, level)
                if expected != record.nu:
                    raise VerificationError("nu", record.nu, expected)

            payload["verification"] = self._run_oracle("nu", check)
        return payload

    def threshold(self, a_literal, j_literal, table_e_max: int | None = None, verify: bool = False) -> dict:
        a, j = self.ideal(a_literal), self.ideal(j_literal)
        record = self.thresholds.f_threshold(a, j)
        payload = {
            "value": rational(record.value),
            "degenerate": record.degenerate,
            "per_prime": [{"prime": self._prime(prime), "value": rational(value)} for prime, value in record.per_prime],
        }
        if table_e_max is not None:
            table = self.thresholds.convergence_table(a, j, table_e_max)
            payload["mu"] = table.mu
            payload["bracket"] = [rational(table.bracket[0]), rational(table.bracket[1])]
            payload["table"] = [
                {"e": row.level.e, "q": row.level.q, "nu": row.nu, "scaled": rational(row.scaled)} for row in table.rows
            ]
        if verify:

            def check():
                low, high = self.oracle.bf_threshold_bracket(a, j, self.oracle.budget.max_e)
                if not low <= record.value <= high:
                    raise VerificationError("threshold", rational(record.value), f"[{rational(low)}, {rational(high)}]")

            payload["verification"] = self._run_oracle("threshold", check)
        return payload

    # Cartier engine
    def contraction(self, j_literal, e: int, monomial_literal: str | None = None, verify: bool = False) -> dict:
        j, level = self.ideal(j_literal), self.level(e)
        query = ContractionQuery(self.ring, j, level)
        payload = {"ideal": self._terms(self.cartier.contraction_ideal(query)), "q": level.q}
        candidates = []
        if monomial_literal is not None:
            m = Monomial(parse_monomial(monomial_literal, self.ring.variables))
            payload["monomial"] = monomial(m.exponents, self.ring.variables)
            payload["contains"] = self.cartier.contraction_contains(query, m)
            candidates = [m]
        if verify:

            def check():
                self.oracle.budget.enforce(self.ring, level, (j,))
                box = candidates or [Monomial(v) for v in itertools.product(range(2 * level.q), repeat=self.ring.n)]
                for m in box:
                    engine = self.cartier.contraction_contains(query, m)
                    oracle = self.oracle.bf_contraction_trace(j, level, m)
                    if engine != oracle:
                        raise VerificationError(f"cartier contraction at {m}", engine, oracle)

            payload["verification"] = self._run_oracle("cartier contraction", check)
        return payload

    def core(self, j_literal) -> dict:
        result = self.cartier.cartier_core(self.ideal(j_literal))
        return {
            "core": self._terms(result.core),
            "rounds": result.rounds,
            "certificate": [
                {"generator": monomial(g, self.ring.variables), "closure": self._terms(closure)}
                for g, closure in result.certificate
            ],
        }

    def compatible(self, c_literal) -> dict:
        report = self.cartier.is_uniformly_compatible(self.ideal(c_literal))
        return {
            "compatible": report.compatible,
            "witnesses": [
                {"generator": monomial(g, self.ring.variables), "closure": self._terms(closure), "closed": ok}
                for g, closure, ok in report.witnesses
            ],
        }

    def b_value(self, a_literal, j_literal, e: int, verify: bool = False) -> dict:
        a, j, level = self.ideal(a_literal), self.ideal(j_literal), self.level(e)
        b = self.cartier.b_value(a, j, level)
        payload = {"b": b, "q": level.q, "scaled": rational(Fraction(b, level.q))}
        if verify:

            def check():
                expected = self.oracle.bf_b_value(a, j, level)
                if expected != b:
                    raise VerificationError("cartier b", b, expected)

            payload["verification"] = self._run_oracle("cartier b", check)
        return payload

    def cartier_threshold(self, a_literal, j_literal, verify: bool = False) -> dict:
        a, j = self.ideal(a_literal), self.ideal(j_literal)
        record = self.cartier.cartier_threshold(a, j)
        payload = {
            "value": rational(record.value),
            "per_prime": [
                {
                    "prime": self._prime(t.prime),
                    "value": rational(t.value),
                    "local_ring": str(t.local_ring),
                    "local_core": ideal_terms(t.local_core, t.local_ring.variables),
                    "killed_by_core": t.killed_by_core,
                }
                for t in record.pipeline_trace
            ],
        }
        if verify:

            def check():
                _, high = self.oracle.bf_threshold_bracket(a, j, self.oracle.budget.max_e)
                if record.value > high:
                    raise VerificationError("cartier threshold", rational(record.value), f"at most {rational(high)}")

            payload["verification"] = self._run_oracle("cartier threshold", check)
        return payload

    def sandwich_table(self, a_literal, j_literal, e_max: int, verify: bool = False) -> dict:
        a, j = self.ideal(a_literal), self.ideal(j_literal)
        table = self.cartier.ct_sandwich_table(a, j, e_max)
        payload = {
            "mu": table.mu,
            "value": rational(self.cartier.cartier_threshold(a, j).value),
            "table": [
                {
                    "e": row.level.e,
                    "q": row.level.q,
                    "b": row.b,
                    "b_scaled": rational(row.b_scaled),
                    "c": rational(row.c),
                    "c_scaled": rational(row.c_scaled),
                    "contraction": " ".join(self._terms(row.contraction)),
                }
                for row in table.rows
            ],
        }
        if verify:

            def check():
                for row in table.rows:
                    expected = self.oracle.bf_b_value(a, j, row.level)
                    if expected != row.b:
                        raise VerificationError(f"cartier table at q={row.level.q}", row.b, expected)

            payload["verification"] = self._run_oracle("cartier table", check)
        return payload

    # Regularity engine
    def reg_limit(self, j_literal) -> dict:
        report = self.regularity.regularity_limit(self.ideal(j_literal))
        return {
            "limit": report.limit,
            "argmax": [{"alpha": list(alpha), "i": i} for alpha, i in report.argmax],
            "artinian_witness": report.artinian_witness,
            "finite_levels": [{"e": e, "scaled": rational(value)} for e, value in report.finite_levels],
        }

    def reg_table(self, j_literal, e_max: int = DEFAULT_TABLE_LEVELS) -> dict:
        report = self.regularity.regularity_limit(self.ideal(j_literal), e_max)
        return {
            "limit": report.limit,
            "table": [{"e": e, "q": self.ring.p**e, "scaled": rational(value)} for e, value in report.finite_levels],
        }

    def a_invariants(self, literal=None) -> dict:
        ideal = self.ring.lift(self.ring.zero_ideal if literal is None else self.ideal(literal))
        table = self.regularity.a_invariants(ideal)
        return {"dim": table.dim, "a": {str(i): a_invariant(a) for i, a in sorted(table.values.items())}}

    # Oracle
    def oracle_nu(self, a_literal, j_literal, e: int) -> dict:
        level = self.level(e)
        return {"nu": self.oracle.bf_nu(self.ideal(a_literal), self.ideal(j_literal), level), "q": level.q}

    def oracle_je(self, j_literal, e: int, monomial_literal: str) -> dict:
        m = Monomial(parse_monomial(monomial_literal, self.ring.variables))
        contains = self.oracle.bf_contraction_trace(self.ideal(j_literal), self.level(e), m)
        return {"monomial": monomial(m.exponents, self.ring.variables), "contains": contains}

    def oracle_bracket(self, a_literal, j_literal, e: int) -> dict:
        low, high = self.oracle.bf_threshold_bracket(self.ideal(a_literal), self.ideal(j_literal), e)
        return {"bracket": [rational(low), rational(high)], "q": self.ring.p**e}
