"""Exact rational simplex and the selection programs behind monomial F-thresholds.

For monomial ideals a, J of a polynomial ring, x^w lies outside J^{[q]} iff some
coordinate selection sigma (one coordinate with v_i > 0 per generator v of J)
has w_{sigma(v)} < q * v_{sigma(v)} for every v. Scaling by q and passing to the
limit, c^J(a) is the largest value of sum(lambda) over lambda >= 0 with
(sum_u lambda_u * u)_i <= min{v_i : sigma(v) = i} for some selection sigma.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InfeasibleSelectionError, NotInRadicalError, UnitIdealError
from .monomials import ExponentVector, MonomialIdeal, radical

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
GO_ON = "go_on"


class SimplexTableau:
    """Dictionary-form tableau for ``max c.x`` subject to ``A x <= b``, ``x >= 0``, ``b >= 0``.

    Basic variables are written as ``x_B = b - A x_N`` and the objective as
    ``z + c . x_N``. Variables ``0..n-1`` are the decision variables and
    ``n..n+m-1`` the slacks. Pivoting follows Bland's rule, so it terminates.
    """

    def __init__(self, A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.m = len(A)
        self.n = len(c)
        self.A = [[Fraction(x) for x in row] for row in A]
        self.b = [Fraction(x) for x in b]
        self.c = [Fraction(x) for x in c]
        self.z = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))

    def pivot(self, i: int, j: int):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.z += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta

        for col in range(self.n):
            self.A[i][col] = 1 / piv if col == j else self.A[i][col] / piv
        self.b[i] /= piv

        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            for col in range(self.n):
                self.A[k][col] = -f / piv if col == j else self.A[k][col] - f * self.A[i][col]
            self.b[k] -= f * self.b[i]

        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[col], col) for col in range(self.n) if self.c[col] > 0)
        except ValueError:
            return OPTIMAL
        try:
            _, _, i = min(
                (self.b[row] / self.A[row][j], self.b_vars[row], row) for row in range(self.m) if self.A[row][j] > 0
            )
        except ValueError:
            return UNBOUNDED
        self.pivot(i, j)
        return GO_ON

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status in (OPTIMAL, UNBOUNDED):
                return status


@dataclass(frozen=True)
class SelectionLP:
    """The packing program of one coordinate selection."""

    a_gens: tuple[ExponentVector, ...]
    j_gens: tuple[ExponentVector, ...]
    selection: tuple[int, ...]

    def bounds(self) -> dict[int, int]:
        """Right-hand side per selected coordinate: the smallest v_i among generators sent to i."""
        caps: dict[int, int] = {}
        for v, i in zip(self.j_gens, self.selection, strict=True):
            caps[i] = min(caps.get(i, v[i]), v[i])
        return caps

    def solve(self) -> Fraction | None:
        """Optimal value, or None when the program is unbounded."""
        return solve_packing(self.a_gens, self.bounds())


def solve_packing(a_gens: tuple[ExponentVector, ...], caps: dict[int, int]) -> Fraction | None:
    coordinates = sorted(caps)
    A = [[Fraction(u[i]) for u in a_gens] for i in coordinates]
    b = [Fraction(caps[i]) for i in coordinates]
    tableau = SimplexTableau(A, b, [Fraction(1)] * len(a_gens))
    status = tableau.bland_primal()
    return None if status == UNBOUNDED else tableau.z


def selections(j_gens: tuple[ExponentVector, ...]):
    """Coordinate selections, restricted to coordinates where each generator is positive."""
    choices = [[i for i, e in enumerate(v) if e > 0] for v in j_gens]
    return itertools.product(*choices)


def disjunctive_lp_value(a_gens: tuple[ExponentVector, ...], j_gens: tuple[ExponentVector, ...]) -> Fraction:
    """c^J(a) in a polynomial ring: the best selection program value.

    Selections inducing the same right-hand side are solved once.
    """
    if not j_gens:
        raise InfeasibleSelectionError()
    n = len(j_gens[0])
    a_ideal, j_ideal = MonomialIdeal(n, a_gens), MonomialIdeal(n, j_gens)
    if a_ideal.is_unit() or j_ideal.is_unit():
        raise UnitIdealError("Threshold input")
    if not a_ideal <= radical(j_ideal):
        raise NotInRadicalError(a_ideal, j_ideal)

    seen: set[tuple[tuple[int, int], ...]] = set()
    best: Fraction | None = None
    for selection in selections(j_ideal.gens):
        lp = SelectionLP(a_ideal.gens, j_ideal.gens, selection)
        key = tuple(sorted(lp.bounds().items()))
        if key in seen:
            continue
        seen.add(key)
        value = lp.solve()
        if value is None:
            # each selection's coordinates form a vertex cover of J, so a inside rad(J) keeps it bounded
            raise InfeasibleSelectionError()
        if best is None or value > best:
            best = value
    logger.debug("Solved %d distinct selection programs for %s against %s", len(seen), a_ideal, j_ideal)
    return best
