import random
from pathlib import Path

import pytest

from fsr.core import FrobeniusLevel, MonomialIdeal, OracleBudget, StanleyReisnerRing, radical
from fsr.core.monomials import add_vectors

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    monkeypatch.delenv("FSR_ORACLE_BUDGET", raising=False)
    monkeypatch.delenv("FSR_LOG_LEVEL", raising=False)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def plane() -> StanleyReisnerRing:
    """F_2[x, y]."""
    return StanleyReisnerRing.polynomial_ring(2, 2, ("x", "y"))


@pytest.fixture
def cross() -> StanleyReisnerRing:
    """F_2[x, y]/(xy), two lines meeting at the origin."""
    return StanleyReisnerRing(2, 2, MonomialIdeal(2, ((1, 1),)), ("x", "y"))


@pytest.fixture
def planes() -> StanleyReisnerRing:
    """F_2[x, y, z]/(xy), two planes meeting along the z axis."""
    return StanleyReisnerRing(3, 2, MonomialIdeal(3, ((1, 1, 0),)), ("x", "y", "z"))


@pytest.fixture
def points() -> StanleyReisnerRing:
    """F_2[x, y, z]/(xy, yz, xz), three coordinate axes."""
    return StanleyReisnerRing(3, 2, MonomialIdeal(3, ((1, 1, 0), (0, 1, 1), (1, 0, 1))), ("x", "y", "z"))


@pytest.fixture
def budget() -> OracleBudget:
    return OracleBudget(max_n=4, max_p=3, max_e=2, max_degree=6)


class RandomInstances:
    """Seeded small rings and ideals for the property tests."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def ring(self, n: int, p: int) -> StanleyReisnerRing:
        rng = self.rng
        supports = [rng.sample(range(n), rng.randint(1, min(2, n))) for _ in range(rng.randint(0, 2))]
        return StanleyReisnerRing(n, p, MonomialIdeal.from_supports(n, supports))

    def gens(self, n: int, count: int, top: int) -> tuple:
        gens = []
        while len(gens) < count:
            v = tuple(self.rng.randint(0, top) for _ in range(n))
            if any(v):
                gens.append(v)
        return tuple(gens)

    def ideal(self, n: int, top: int = 2) -> MonomialIdeal:
        return MonomialIdeal(n, self.gens(n, self.rng.randint(1, 3), top))

    def threshold_input(self, n: int | None = None, p: int | None = None):
        """(ring, a, J) with a inside the radical of J + I."""
        rng = self.rng
        n = n or rng.randint(2, 3)
        ring = self.ring(n, p or rng.choice((2, 3)))
        j = self.ideal(n)
        roots = radical(ring.lift(j)).gens
        a = MonomialIdeal(n, tuple(add_vectors(rng.choice(roots), g) for g in self.gens(n, rng.randint(1, 3), 1)))
        return ring, a, j

    def instance(self):
        ring, a, j = self.threshold_input()
        return ring, a, j, FrobeniusLevel(ring.p, self.rng.randint(0, 2))


@pytest.fixture
def random_instances():
    return RandomInstances
