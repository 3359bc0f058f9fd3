"""Simplicial complexes of squarefree monomial ideals and their cohomology over F_p.

The void complex has no faces at all; the irrelevant complex {emptyset} has the
single empty face and reduced cohomology F_p in degree -1.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cache

from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from .exceptions import NotContainedError, NotSquarefreeError
from .monomials import MonomialIdeal, minimal_primes

logger = logging.getLogger(__name__)

Face = frozenset[int]


def _maximal(sets) -> tuple[Face, ...]:
    unique = set(sets)
    kept = [s for s in unique if not any(s < other for other in unique)]
    return tuple(sorted(kept, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[Face, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(frozenset(f) for f in self.facets))

    @classmethod
    def void(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, ())

    @classmethod
    def irrelevant(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, (frozenset(),))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)

    def faces(self) -> list[Face]:
        found = {frozenset(sub) for facet in self.facets for k in range(len(facet) + 1) for sub in itertools.combinations(sorted(facet), k)}
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= facet for facet in self.facets)


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex: faces are the F with x^F outside the ideal."""
    if not ideal.is_squarefree():
        raise NotSquarefreeError("Stanley-Reisner ideal", ideal)
    n = ideal.ambient_n
    if ideal.is_unit():
        return SimplicialComplex.void(n)
    return SimplicialComplex(n, tuple(frozenset(prime.complement(n)) for prime in minimal_primes(ideal)))


def link(complex_: SimplicialComplex, face) -> SimplicialComplex:
    face = frozenset(face)
    if face not in complex_:
        raise NotContainedError("Link", sorted(face), "the complex")
    return SimplicialComplex(complex_.vertex_count, tuple(facet - face for facet in complex_.facets if face <= facet))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(p)).rank()


def coboundary_matrix(lower: list[Face], upper: list[Face]) -> list[list[int]]:
    """delta: C^d -> C^{d+1}; rows are (d+1)-faces, columns d-faces."""
    position = {f: k for k, f in enumerate(lower)}
    rows = []
    for g in upper:
        row = [0] * len(lower)
        for k, v in enumerate(sorted(g)):
            row[position[g - {v}]] = (-1) ** k
        rows.append(row)
    return rows


def reduced_cohomology_ranks(complex_: SimplicialComplex, p: int) -> dict[int, int]:
    """dim_{F_p} of reduced cohomology in degrees -1..dim (augmented cochain complex)."""
    if complex_.is_void():
        return {-1: 0}
    by_dim: dict[int, list[Face]] = {}
    for f in complex_.faces():
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = complex_.dim
    ranks_delta = {
        d: _rank_mod_p(coboundary_matrix(by_dim.get(d, []), by_dim.get(d + 1, [])), p) for d in range(-1, top + 1)
    }
    ranks_delta[-2] = 0
    return {d: len(by_dim.get(d, [])) - ranks_delta[d] - ranks_delta[d - 1] for d in range(-1, top + 1)}


@dataclass(frozen=True)
class AInvariantTable:
    """a_i for 0 <= i <= dim, with None standing for minus infinity."""

    values: dict[int, int | None]
    dim: int
    zero_ring: bool = False

    def finite(self) -> dict[int, int]:
        return {i: a for i, a in self.values.items() if a is not None}


@cache
def _cohomology_of_link(facets: tuple[Face, ...], vertex_count: int, p: int) -> tuple[tuple[int, int], ...]:
    ranks = reduced_cohomology_ranks(SimplicialComplex(vertex_count, facets), p)
    return tuple(sorted(ranks.items()))


def a_invariants_squarefree(ideal: MonomialIdeal, p: int) -> AInvariantTable:
    """a-invariants of S/Q by Hochster's formula.

    H^i_m(S/Q) lives in degrees -|F| for faces F with nonzero reduced cohomology
    of lk(F) in degree i - |F| - 1, so a_i is the largest such -|F|.
    """
    if ideal.is_unit():
        return AInvariantTable({}, -1, zero_ring=True)
    delta = complex_of_ideal(ideal)
    dim = delta.dim + 1
    values: dict[int, int | None] = dict.fromkeys(range(dim + 1))
    for face in delta.faces():
        lk = link(delta, face)
        for degree, rank in _cohomology_of_link(lk.facets, lk.vertex_count, p):
            if rank == 0:
                continue
            i = degree + len(face) + 1
            current = values.get(i)
            if current is None or -len(face) > current:
                values[i] = -len(face)
    logger.debug("a-invariants of S/%s: %s", ideal, values)
    return AInvariantTable(values, dim)
