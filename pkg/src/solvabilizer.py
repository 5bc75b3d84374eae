"""
Solvabilizers and nilpotentizers.

Everything here reduces to one question, asked many times: is the
subalgebra generated by {x, z} solvable (or nilpotent)? PairOracle answers
it and caches the verdict by the span of {x, z}, since the generated
subalgebra only depends on that span.
"""

import logging
import threading
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence

from .config import Config
from .gf_linalg import Subspace, Vector, enumerate_subspaces, rref
from .models import ElementSet
from .superalgebra import (
    SuperAlgebra,
    Subalg,
    check_element,
    generated_subalgebra,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
)
from .utils import parallel_map


logger = logging.getLogger(__name__)

PROPERTIES = ("solvable", "nilpotent")


class EnumerationTooLargeError(RuntimeError):
    """Raised when a subspace enumeration exceeds the configured caps"""


class PairCache:
    """Lock-protected map from a span key to a verdict, with hit/miss counters"""

    def __init__(self):
        self._values: Dict[Hashable, bool] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], bool]) -> bool:
        with self._lock:
            if key in self._values:
                self.hits += 1
                return self._values[key]
        # two threads may compute the same key; both get the same answer
        value = compute()
        with self._lock:
            self.misses += 1
            self._values[key] = value
        return value

    def __len__(self) -> int:
        return len(self._values)

    def stats(self) -> str:
        return f"{len(self._values)} spans, {self.hits} hits, {self.misses} misses"


class PairOracle:
    """
    Decides whether <x, z> has a property (solvable or nilpotent) in one algebra.

    Also memoises whole rows {x : <x, z> has the property} per z.
    """

    def __init__(self, algebra: SuperAlgebra, prop: str = "solvable", closure: Optional[str] = None):
        if prop not in PROPERTIES:
            raise ValueError(f"Unknown property '{prop}', expected one of {PROPERTIES}")
        self.algebra = algebra
        self.prop = prop
        self.closure = closure or "plain"
        self.cache = PairCache()
        self._test = is_solvable if prop == "solvable" else is_nilpotent
        self._rows: Dict[Vector, FrozenSet[Vector]] = {}
        self._rows_lock = threading.Lock()

    def __call__(self, x: Sequence[int], z: Sequence[int]) -> bool:
        L = self.algebra
        key = rref([tuple(x), tuple(z)], L.p, L.n)
        return self.cache.get_or_compute(key, lambda: self.decide(key))

    def decide(self, span: Subspace) -> bool:
        sub = generated_subalgebra(self.algebra, span.basis, self.closure)
        return self._test(self.algebra, sub)

    def single(self, x: Sequence[int]) -> bool:
        """Whether <x> alone has the property"""
        return self(x, self.algebra.zero_vector())

    def row(self, z: Sequence[int], workers: int = 1) -> FrozenSet[Vector]:
        """{x in L : <x, z> has the property}"""
        z = tuple(z)
        with self._rows_lock:
            cached = self._rows.get(z)
        if cached is not None:
            return cached
        elements = list(self.algebra.elements())
        flags = parallel_map(lambda x: self(x, z), elements, workers)
        row = frozenset(x for x, ok in zip(elements, flags) if ok)
        with self._rows_lock:
            self._rows[z] = row
        return row


@lru_cache(maxsize=64)
def _cached_oracle(algebra: SuperAlgebra, prop: str, closure: str) -> PairOracle:
    return PairOracle(algebra, prop, closure)


def get_oracle(L: SuperAlgebra, prop: str = "solvable", closure: Optional[str] = None) -> PairOracle:
    """Shared oracle per (algebra, property, closure mode)"""
    return _cached_oracle(L, prop, closure or "plain")


def _checked(L: SuperAlgebra, v: Sequence[int]) -> Vector:
    return tuple(int(c) % L.p for c in check_element(L, v))


def pair_solvable(L: SuperAlgebra, x: Sequence[int], z: Sequence[int], closure: Optional[str] = None) -> bool:
    """Whether the subalgebra generated by x and z is solvable"""
    return get_oracle(L, "solvable", closure)(_checked(L, x), _checked(L, z))


def pair_nilpotent(L: SuperAlgebra, x: Sequence[int], z: Sequence[int], closure: Optional[str] = None) -> bool:
    return get_oracle(L, "nilpotent", closure)(_checked(L, x), _checked(L, z))


def solvabilizer_of(L: SuperAlgebra, z: Sequence[int], closure: Optional[str] = None, workers: int = 1,
                    oracle: Optional[PairOracle] = None) -> ElementSet:
    """
    sol_L(z) = {x in L : <x, z> is solvable}.

    Args:
        L: Algebra
        z: Element of L
        closure: Subalgebra closure mode
        workers: Thread-pool size for the row scan
        oracle: Override the shared oracle
    """
    oracle = oracle or get_oracle(L, "solvable", closure)
    return ElementSet.of(L, oracle.row(_checked(L, z), workers))


def nilpotentizer_of(L: SuperAlgebra, z: Sequence[int], closure: Optional[str] = None, workers: int = 1,
                     oracle: Optional[PairOracle] = None) -> ElementSet:
    """nil_L(z) = {x in L : <x, z> is nilpotent}"""
    oracle = oracle or get_oracle(L, "nilpotent", closure)
    return ElementSet.of(L, oracle.row(_checked(L, z), workers))


def solvabilizer_rel(L: SuperAlgebra, A: ElementSet, B: ElementSet, closure: Optional[str] = None,
                     oracle: Optional[PairOracle] = None) -> ElementSet:
    """
    sol_A(B) = {x in A : <x, z> solvable for every z in B}.

    Conventions: sol_A(B) is empty when A is, and sol_A(empty) is the set of
    x in A with <x> solvable.
    """
    if A.algebra != L or B.algebra != L:
        raise ValueError(f"element sets must belong to {L.label}")
    oracle = oracle or get_oracle(L, "solvable", closure)
    if A.is_empty():
        return ElementSet.empty(L)
    if B.is_empty():
        return ElementSet.of(L, [x for x in A if oracle.single(x)])
    return ElementSet.of(L, [x for x in A if all(oracle(x, z) for z in B)])


def _centralizer_like(L: SuperAlgebra, oracle: PairOracle, workers: int) -> ElementSet:
    elements = list(L.elements())

    def keep(x):
        return all(oracle(x, z) for z in elements)

    flags = parallel_map(keep, elements, workers)
    result = ElementSet.of(L, [x for x, ok in zip(elements, flags) if ok])
    logger.debug(f"{L.label} {oracle.prop}: {len(result)} members; cache {oracle.cache.stats()}")
    return result


def solvabilizer(L: SuperAlgebra, closure: Optional[str] = None, workers: int = 1, cross_check: bool = False,
                 oracle: Optional[PairOracle] = None) -> ElementSet:
    """
    sol(L) = {x in L : <x, z> solvable for every z in L}.

    Computed by a direct double loop that stops at the first z breaking
    solvability.

    Args:
        L: Algebra
        closure: Subalgebra closure mode
        workers: Thread-pool size over candidate x
        cross_check: Also intersect sol_L(z) over every z and compare
        oracle: Override the shared oracle

    Raises:
        RuntimeError: cross_check found a disagreement
    """
    oracle = oracle or get_oracle(L, "solvable", closure)
    result = _centralizer_like(L, oracle, workers)
    if cross_check:
        members = frozenset(L.elements())
        for z in L.elements():
            members &= oracle.row(z, workers)
        if ElementSet.of(L, members) != result:
            raise RuntimeError(f"sol({L.label}) disagrees with the intersection of its element solvabilizers")
    return result


def nilpotentizer(L: SuperAlgebra, closure: Optional[str] = None, workers: int = 1,
                  oracle: Optional[PairOracle] = None) -> ElementSet:
    """nil(L) = {x in L : <x, z> nilpotent for every z in L}"""
    oracle = oracle or get_oracle(L, "nilpotent", closure)
    return _centralizer_like(L, oracle, workers)


def solvable_singletons(L: SuperAlgebra, closure: Optional[str] = None) -> ElementSet:
    """{x in L : <x> is solvable}"""
    oracle = get_oracle(L, "solvable", closure)
    return ElementSet.of(L, [x for x in L.elements() if oracle.single(x)])


def solvable_subalgebras(L: SuperAlgebra, config: Optional[Config] = None) -> List[Subalg]:
    """
    Every solvable subalgebra (bracket-closed subspace, graded or not).

    Raises:
        EnumerationTooLargeError: L is past the enumeration caps
    """
    config = config or Config()
    if not config.allows_subspace_enumeration(L.n, L.p):
        raise EnumerationTooLargeError(
            f"subspace enumeration of {L.label} (n={L.n}, p={L.p}) exceeds the caps "
            f"n <= {config.subspace_max_dim}, p <= {config.subspace_max_prime}"
        )
    found = []
    for S in enumerate_subspaces(L.p, L.n):
        if is_subalgebra(L, S) and is_solvable(L, S):
            found.append(Subalg(L, S, S.is_graded(L.dim_even)))
    return found


def maximal_solvable_subalgebras(L: SuperAlgebra, containing: Optional[Sequence[int]] = None,
                                 config: Optional[Config] = None) -> List[Subalg]:
    """
    Maximal solvable subalgebras, by exhaustive subspace enumeration.

    Args:
        L: Algebra (n and p within the Config caps)
        containing: Keep only those containing this element
        config: Caps

    Returns:
        Subalgebras sorted by (dimension, basis)
    """
    solvable = solvable_subalgebras(L, config)
    solvable.sort(key=lambda s: -s.dim)
    maximal: List[Subalg] = []
    for S in solvable:
        # a strictly larger solvable subalgebra lies in an already kept maximal one
        if not any(T.dim > S.dim and S.space.issubset(T.space) for T in maximal):
            maximal.append(S)
    if containing is not None:
        z = _checked(L, containing)
        maximal = [S for S in maximal if z in S.space]
    maximal.sort(key=lambda s: (s.dim, s.space.basis))
    logger.debug(f"{L.label}: {len(solvable)} solvable subalgebras, {len(maximal)} maximal")
    return maximal
