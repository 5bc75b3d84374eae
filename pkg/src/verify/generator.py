"""
Seeded generation of verification instances.

Recipes: a catalog seed in a random graded basis, a direct sum of two
seeds, or a quotient of a seed (or seed sum) by a computed graded ideal.
Every instance goes through validate(), and the same seed always yields the
same instances in the same order.
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..catalog import catalog_get
from ..gf_linalg import enumerate_subspaces, rref
from ..superalgebra import Morphism, SuperAlgebra, change_basis, direct_sum, is_graded_ideal, quotient


logger = logging.getLogger(__name__)

SEED_NAMES = ("E1", "E2", "sl2", "ab1")


@dataclass(frozen=True)
class Instance:
    """A validated algebra, optionally with an isomorphism onto the algebra it came from"""
    descriptor: str
    algebra: SuperAlgebra
    isomorphism: Optional[Morphism] = None


def random_invertible(rng: random.Random, p: int, d: int) -> np.ndarray:
    """Uniformly random invertible d x d matrix over GF(p)"""
    while True:
        rows = [[rng.randrange(p) for _ in range(d)] for _ in range(d)]
        if rref(rows, p, d).rank == d:
            return np.array(rows, dtype=np.int64).reshape(d, d)


def random_graded_basis(rng: random.Random, L: SuperAlgebra) -> np.ndarray:
    """Block-diagonal change of basis (even block, odd block)"""
    T = np.zeros((L.n, L.n), dtype=np.int64)
    d0 = L.dim_even
    T[:d0, :d0] = random_invertible(rng, L.p, d0)
    T[d0:, d0:] = random_invertible(rng, L.p, L.dim_odd)
    return T


class InstanceGenerator:
    """Deterministic stream of verification instances"""

    RECIPES = ("basis-change", "direct-sum", "quotient")

    def __init__(self, seed: int = 1, primes: Sequence[int] = (3, 5), max_dim: int = 4):
        """
        Initialize generator.

        Args:
            seed: Random seed
            primes: Fields to draw from, cycled in order
            max_dim: Largest dimension of a generated algebra
        """
        self.seed = seed
        self.primes = tuple(primes)
        self.max_dim = max_dim

    def seeds(self, p: int) -> List[SuperAlgebra]:
        return [catalog_get(f"{name}@{p}") for name in SEED_NAMES]

    def _sums(self, p: int):
        seeds = self.seeds(p)
        return [(a, b) for i, a in enumerate(seeds) for b in seeds[i:] if a.n + b.n <= self.max_dim]

    def _basis_change(self, rng: random.Random, p: int, k: int) -> Instance:
        bases = [L for L in self.seeds(p) if L.n <= self.max_dim and L.n > 1]
        base = rng.choice(bases)
        algebra, iso = change_basis(base, random_graded_basis(rng, base), name=f"{base.label}~{k}")
        return Instance(f"#{k} {base.label} in a random graded basis", algebra, iso)

    def _direct_sum(self, rng: random.Random, p: int, k: int) -> Instance:
        a, b = rng.choice(self._sums(p))
        D = direct_sum(a, b)
        return Instance(f"#{k} {a.label}+{b.label}", D.algebra)

    def _quotient(self, rng: random.Random, p: int, k: int) -> Optional[Instance]:
        bases = self.seeds(p) + [direct_sum(a, b).algebra for a, b in self._sums(p)]
        rng.shuffle(bases)
        for base in bases:
            ideals = [S for S in enumerate_subspaces(p, base.n)
                      if not S.is_zero() and not S.is_full() and is_graded_ideal(base, S)]
            if ideals:
                J = rng.choice(ideals)
                Q = quotient(base, J, name=f"{base.label}/J~{k}")
                return Instance(f"#{k} {base.label} modulo a graded ideal of dimension {J.rank}", Q.algebra)
        return None

    def generate(self, count: int) -> List[Instance]:
        """
        First count instances for this seed.

        Primes are cycled; within each prime the recipes are cycled.
        """
        rng = random.Random(self.seed)
        instances = []
        for k in range(count):
            p = self.primes[k % len(self.primes)]
            recipe = self.RECIPES[(k // len(self.primes)) % len(self.RECIPES)]
            instance = None
            if recipe == "quotient":
                instance = self._quotient(rng, p, k)
            elif recipe == "direct-sum":
                instance = self._direct_sum(rng, p, k)
            if instance is None:
                instance = self._basis_change(rng, p, k)
            logger.debug(f"Generated {instance.descriptor}")
            instances.append(instance)
        return instances
