"""Monomials and monomial ideals of a polynomial ring in ``n`` variables.

An ideal is stored through its minimal generators, kept in lexicographic order so
that equal ideals compare (and serialize) equal. The zero ideal has no generators;
the unit ideal is generated by the zero exponent vector.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce

from .exceptions import AmbientMismatchError, MalformedExponentError, NotSquarefreeError, UnitIdealError, ZeroColonError

logger = logging.getLogger(__name__)

ExponentVector = tuple[int, ...]


def check_exponent(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise MalformedExponentError(value)
    return value


def support(v: ExponentVector) -> frozenset[int]:
    return frozenset(i for i, entry in enumerate(v) if entry > 0)


def divides(u: ExponentVector, v: ExponentVector) -> bool:
    """True iff x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v, strict=True))


def lcm(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    return tuple(max(a, b) for a, b in zip(u, v, strict=True))


def add_vectors(u: ExponentVector, v: ExponentVector) -> ExponentVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def indicator(n: int, variables: Iterable[int]) -> ExponentVector:
    """The exponent vector 1_N of the squarefree monomial x^N."""
    chosen = set(variables)
    return tuple(1 if i in chosen else 0 for i in range(n))


def format_vector(v: ExponentVector, names: tuple[str, ...] | None = None) -> str:
    names = names or tuple(f"x{i + 1}" for i in range(len(v)))
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, v, strict=True) if e > 0]
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Monomial:
    exponents: ExponentVector

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(add_vectors(self.exponents, other.exponents))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * e for e in self.exponents))

    def __str__(self) -> str:
        return format_vector(self.exponents)


def _minimize(gens: Iterable[ExponentVector]) -> tuple[ExponentVector, ...]:
    candidates = sorted(set(gens), key=lambda v: (sum(v), v))
    kept: list[ExponentVector] = []
    for v in candidates:
        if not any(divides(u, v) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    The constructor validates vector lengths and reduces ``gens`` to the minimal
    generating set in canonical (lexicographic) order.
    """

    ambient_n: int
    gens: tuple[ExponentVector, ...] = ()

    def __post_init__(self):
        gens = tuple(tuple(check_exponent(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.ambient_n:
                raise AmbientMismatchError(self.ambient_n, len(g))
        object.__setattr__(self, "gens", _minimize(gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, tuple(indicator(n, [i]) for i in range(n)))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(n, tuple(indicator(n, s) for s in supports))

    @property
    def mu(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def supports(self) -> list[frozenset[int]]:
        return [support(g) for g in self.gens]

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __contains__(self, item: "Monomial | ExponentVector") -> bool:
        return contains(self, item)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subideal(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def format(self, names: tuple[str, ...] | None = None) -> str:
        return "(" + ", ".join(format_vector(g, names) for g in self.gens) + ")" if self.gens else "(0)"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class FacePrime:
    """Prime ideal generated by a set of variables (by index)."""

    variables: frozenset[int]

    @classmethod
    def of(cls, variables: Iterable[int]) -> "FacePrime":
        return cls(frozenset(variables))

    def ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal(n, tuple(indicator(n, [i]) for i in sorted(self.variables)))

    def complement(self, n: int) -> tuple[int, ...]:
        return tuple(i for i in range(n) if i not in self.variables)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.variables), tuple(sorted(self.variables))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" for i in sorted(self.variables)) + ")" if self.variables else "(0)"


def _check_ambient(*ideals: MonomialIdeal):
    n = ideals[0].ambient_n
    for ideal in ideals[1:]:
        if ideal.ambient_n != n:
            raise AmbientMismatchError(n, ideal.ambient_n)


def normalize(gens: Iterable[ExponentVector], n: int) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    return MonomialIdeal(n, tuple(gens))


def contains(ideal: MonomialIdeal, m: "Monomial | ExponentVector") -> bool:
    v = m.exponents if isinstance(m, Monomial) else tuple(m)
    if len(v) != ideal.ambient_n:
        raise AmbientMismatchError(ideal.ambient_n, len(v))
    return any(divides(g, v) for g in ideal.gens)


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_ambient(a, b)
    return all(contains(b, g) for g in a.gens)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return MonomialIdeal(a.ambient_n, a.gens + b.gens)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(a, b)
    return MonomialIdeal(a.ambient_n, tuple(lcm(u, v) for u in a.gens for v in b.gens))


def colon_monomial(a: MonomialIdeal, v: ExponentVector) -> MonomialIdeal:
    """(A : x^v), generated by max(u - v, 0) over the generators u of A.

    For squarefree A this is x^{Supp(u) minus Supp(v)}, so the result only depends
    on the support of v.
    """
    if len(v) != a.ambient_n:
        raise AmbientMismatchError(a.ambient_n, len(v))
    return MonomialIdeal(a.ambient_n, tuple(tuple(max(x - y, 0) for x, y in zip(u, v, strict=True)) for u in a.gens))


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """(A : B) as the intersection of (A : x^v) over the generators v of B."""
    _check_ambient(a, b)
    if b.is_zero():
        raise ZeroColonError()
    return reduce(intersect, (colon_monomial(a, v) for v in b.gens))


def frobenius_power(a: MonomialIdeal, level) -> MonomialIdeal:
    """A^{[q]}: generators raised to the q-th power. ``level`` is a FrobeniusLevel or q itself."""
    q = level if isinstance(level, int) else level.q
    return MonomialIdeal(a.ambient_n, tuple(tuple(q * e for e in g) for g in a.gens))


def radical(a: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(a.ambient_n, tuple(tuple(min(e, 1) for e in g) for g in a.gens))


def _minimal_transversals(edges: list[frozenset[int]]) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers of a hypergraph, by branch and bound.

    Branches on the vertices of the first uncovered edge; a partial cover that
    already contains a known minimal cover is pruned.
    """
    edges = sorted(set(edges), key=lambda e: (len(e), sorted(e)))
    found: list[frozenset[int]] = []

    def is_minimal(cover: frozenset[int]) -> bool:
        return all(any(edge & cover == {v} for edge in edges) for v in cover)

    def branch(cover: frozenset[int]):
        if any(known <= cover for known in found):
            return
        uncovered = next((edge for edge in edges if not edge & cover), None)
        if uncovered is None:
            if is_minimal(cover):
                found.append(cover)
            return
        for v in sorted(uncovered):
            branch(cover | {v})

    branch(frozenset())
    return found


def minimal_primes(a: MonomialIdeal) -> list[FacePrime]:
    """Minimal primes of a squarefree monomial ideal, i.e. the minimal vertex covers
    of the hypergraph whose edges are the generator supports."""
    if not a.is_squarefree():
        raise NotSquarefreeError("Ideal", a)
    if a.is_unit():
        raise UnitIdealError("Ideal")
    if a.is_zero():
        return [FacePrime(frozenset())]
    covers = _minimal_transversals(a.supports())
    logger.debug("%s has %d minimal primes", a, len(covers))
    return sorted((FacePrime(c) for c in covers), key=FacePrime.sort_key)


def dimension(a: MonomialIdeal) -> int:
    """Krull dimension of S/A for a squarefree proper A."""
    return a.ambient_n - min(len(prime.variables) for prime in minimal_primes(a))


def image_mod_face_prime(a: MonomialIdeal, prime: FacePrime) -> MonomialIdeal:
    """Image of A in S/P, as an ideal of the polynomial ring on the variables outside P.

    Generators whose support meets P vanish; the rest are re-indexed on the kept
    variables in their original order.
    """
    kept = prime.complement(a.ambient_n)
    gens = tuple(tuple(g[i] for i in kept) for g in a.gens if not support(g) & prime.variables)
    return MonomialIdeal(len(kept), gens)


def restrict_to(a: MonomialIdeal, variables: tuple[int, ...]) -> MonomialIdeal:
    """Set every variable outside ``variables`` to 1, i.e. delete those coordinates."""
    return MonomialIdeal(len(variables), tuple(tuple(g[i] for i in variables) for g in a.gens))
