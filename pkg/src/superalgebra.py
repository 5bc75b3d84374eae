"""
Lie superalgebras over GF(p) given by structure constants.

Basis convention: indices 0..dim_even-1 are even, the rest odd, and
constants[i, j, k] is the coefficient of e_k in [e_i, e_j]. The table stores
both [e_i, e_j] and [e_j, e_i], so bracket() never applies a sign itself.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .config import CLOSURE_MODES
from .gf_linalg import (
    DimensionMismatchError,
    FieldError,
    Subspace,
    Vector,
    all_vectors,
    check_field_prime,
    inverse,
    nullspace,
    reduce_vector,
    rref,
    subspace_sum,
    unit_vector,
)


logger = logging.getLogger(__name__)

Element = Vector

AXIOMS = ("grading", "skew", "jacobi", "cubic")
WAIVABLE_AXIOMS = ("jacobi", "cubic")
MAX_WITNESSES = 20

_SIMPLE_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass(frozen=True)
class AxiomViolation:
    """One failed axiom instance with the basis indices that witness it"""
    kind: str
    witness: Tuple[int, ...]
    message: str


class AxiomViolationError(ValueError):
    """Raised by validate() with every violation found"""

    def __init__(self, violations: Sequence[AxiomViolation]):
        self.violations = list(violations)
        kinds = sorted({v.kind for v in self.violations})
        super().__init__(
            f"{len(self.violations)} axiom violation(s) [{', '.join(kinds)}]; "
            f"first: {self.violations[0].message}"
        )


class UnvalidatedAxiomError(ValueError):
    """Raised when an axiom cannot be checked within the configured limits"""


class MorphismError(ValueError):
    """Raised for maps that are not graded bracket-preserving linear maps"""


class NotGradedError(ValueError):
    """Raised when a graded subspace is required"""


class NotIdealError(ValueError):
    """Raised when a quotient is requested by a subspace that is not an ideal"""


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    """
    A finite-dimensional Lie superalgebra over GF(p).

    Build instances with validate(). Equality compares the field, the grading,
    the structure constants, the basis names and the waived axioms.
    """
    p: int
    dim_even: int
    dim_odd: int
    constants: np.ndarray
    basis_names: Tuple[str, ...]
    name: Optional[str] = None
    waived: Tuple[str, ...] = ()
    waived_violations: Tuple[AxiomViolation, ...] = field(default=(), repr=False)

    def __post_init__(self):
        table = np.array(self.constants, dtype=np.int64).reshape(self.n, self.n, self.n) % self.p
        table.setflags(write=False)
        object.__setattr__(self, "constants", table)
        object.__setattr__(self, "basis_names", tuple(self.basis_names))

    @property
    def n(self) -> int:
        return self.dim_even + self.dim_odd

    @property
    def order(self) -> int:
        """Number of elements, p^n"""
        return self.p ** self.n

    @property
    def label(self) -> str:
        return self.name or f"L({self.dim_even}|{self.dim_odd})@{self.p}"

    def parity(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.p, self.dim_even, self.dim_odd, self.basis_names, self.waived) == \
            (other.p, other.dim_even, other.dim_odd, other.basis_names, other.waived) and \
            np.array_equal(self.constants, other.constants)

    def __hash__(self) -> int:
        return hash((self.p, self.dim_even, self.dim_odd, self.basis_names, self.waived,
                     self.constants.tobytes()))

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.label}, dims=({self.dim_even}|{self.dim_odd}), p={self.p})"

    def zero_vector(self) -> Element:
        return tuple([0] * self.n)

    def basis_vector(self, i: int) -> Element:
        return unit_vector(self.n, i)

    def elements(self):
        """All p^n elements in lexicographic order"""
        return all_vectors(self.p, self.n)

    def element(self, coords: Sequence[int]) -> Element:
        if len(coords) != self.n:
            raise DimensionMismatchError(f"{self.label} has dimension {self.n}, got {len(coords)} coordinates")
        return reduce_vector(coords, self.p)

    def even_part(self, v: Sequence[int]) -> Element:
        return tuple(v[:self.dim_even]) + tuple([0] * self.dim_odd)

    def odd_part(self, v: Sequence[int]) -> Element:
        return tuple([0] * self.dim_even) + tuple(v[self.dim_even:])

    def full_space(self) -> Subspace:
        return Subspace.full(self.p, self.n)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.p, self.n)

    def format_element(self, v: Sequence[int]) -> str:
        """Render an element as a basis combination such as 'h+2x'"""
        terms = []
        for k, c in enumerate(v):
            c = int(c) % self.p
            if c:
                terms.append(f"{'' if c == 1 else c}{self.basis_names[k]}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class Subalg:
    """A subspace of an algebra, tagged with whether it is graded"""
    algebra: SuperAlgebra
    space: Subspace
    graded: bool

    @property
    def dim(self) -> int:
        return self.space.rank

    def __contains__(self, v) -> bool:
        return v in self.space

    def elements(self) -> List[Element]:
        return self.space.elements()


SpaceLike = Union[Subalg, Subspace]


def _default_names(dim_even: int, dim_odd: int) -> Tuple[str, ...]:
    return tuple([f"e{i}" for i in range(dim_even)] + [f"o{i}" for i in range(dim_odd)])


def _as_table(constants, p: int, n: int) -> np.ndarray:
    table = np.asarray(constants, dtype=np.int64)
    if n == 0 and table.size == 0:
        return np.zeros((0, 0, 0), dtype=np.int64)
    if table.shape != (n, n, n):
        raise DimensionMismatchError(f"structure constants have shape {table.shape}, expected {(n, n, n)}")
    return table % p


def _collect(kind: str, witnesses, describe) -> List[AxiomViolation]:
    witnesses = [tuple(int(i) for i in w) for w in witnesses]
    out = [AxiomViolation(kind, w, describe(w)) for w in witnesses[:MAX_WITNESSES]]
    if len(witnesses) > MAX_WITNESSES:
        logger.debug(f"{kind}: {len(witnesses)} violations, keeping the first {MAX_WITNESSES}")
    return out


def check_axioms(
    p: int,
    dim_even: int,
    dim_odd: int,
    constants,
    basis_names: Optional[Sequence[str]] = None,
    cubic_max_odd_dim: int = 8,
) -> List[AxiomViolation]:
    """
    Check the Lie superalgebra axioms on a structure-constant table.

    Checks the grading, super skew-symmetry and the super Jacobi identity on
    basis triples, and for p = 3 the cubic identity [x,[x,x]] = 0 on every odd x.

    Args:
        p: Field characteristic
        dim_even: Even dimension
        dim_odd: Odd dimension
        constants: n x n x n table
        basis_names: Names used in violation messages
        cubic_max_odd_dim: Largest odd dimension enumerated for the cubic check

    Returns:
        List of violations (empty when the table is a Lie superalgebra)

    Raises:
        FieldError: p is not an odd prime
        DimensionMismatchError: negative dimensions or a table of the wrong shape
        UnvalidatedAxiomError: p = 3 and dim_odd exceeds cubic_max_odd_dim
    """
    p = check_field_prime(p)
    if dim_even < 0 or dim_odd < 0:
        raise DimensionMismatchError(f"dimensions must be non-negative, got ({dim_even}|{dim_odd})")
    n = dim_even + dim_odd
    c = _as_table(constants, p, n)
    names = tuple(basis_names) if basis_names else _default_names(dim_even, dim_odd)
    if n == 0:
        return []

    par = np.array([0] * dim_even + [1] * dim_odd, dtype=np.int64)
    violations: List[AxiomViolation] = []

    expected = (par[:, None] + par[None, :]) % 2
    wrong = (c != 0) & (expected[:, :, None] != par[None, None, :])
    violations += _collect(
        "grading", np.argwhere(wrong),
        lambda w: f"[{names[w[0]]},{names[w[1]]}] has a component on {names[w[2]]} of the wrong parity",
    )

    # sign[i, j] = (-1)^{|i||j|}
    sign = np.where(np.outer(par, par) == 1, -1, 1)
    skew = (c.transpose(1, 0, 2) + sign[:, :, None] * c) % p
    pairs = [w for w in np.argwhere(skew.any(axis=2)) if w[0] <= w[1]]
    violations += _collect(
        "skew", pairs,
        lambda w: f"[{names[w[1]]},{names[w[0]]}] is not the super-skew partner of [{names[w[0]]},{names[w[1]]}]",
    )

    # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    inner = np.einsum("jkm,imr->ijkr", c, c)
    outer = np.einsum("ijm,mkr->ijkr", c, c)
    swapped = np.einsum("ikm,jmr->ijkr", c, c)
    jacobi = (inner - outer - sign[:, :, None, None] * swapped) % p
    violations += _collect(
        "jacobi", np.argwhere(jacobi.any(axis=3)),
        lambda w: f"super Jacobi fails on ({names[w[0]]}, {names[w[1]]}, {names[w[2]]})",
    )

    if p == 3 and dim_odd:
        if dim_odd > cubic_max_odd_dim:
            raise UnvalidatedAxiomError(
                f"cubic axiom needs 3^{dim_odd} odd elements, above the limit of 3^{cubic_max_odd_dim}"
            )
        odd = np.array(list(all_vectors(p, dim_odd))[1:], dtype=np.int64)
        xs = np.hstack([np.zeros((len(odd), dim_even), dtype=np.int64), odd])
        squares = np.einsum("ai,aj,ijk->ak", xs, xs, c) % p
        cubes = np.einsum("ai,aj,ijk->ak", xs, squares, c) % p
        bad = [tuple(int(a) for a in xs[row]) for row in np.flatnonzero(cubes.any(axis=1))]

        def describe(w):
            x = "+".join(f"{'' if a == 1 else a}{names[k]}" for k, a in enumerate(w) if a)
            return f"[x,[x,x]] != 0 for odd x = {x}"

        violations += _collect("cubic", bad, describe)

    return violations


def validate(
    p: int,
    dim_even: int,
    dim_odd: int,
    constants,
    basis_names: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
    waive: Sequence[str] = (),
    cubic_max_odd_dim: int = 8,
) -> SuperAlgebra:
    """
    Build a SuperAlgebra after checking every axiom.

    Waived axioms are still checked; their violations are logged and stored on
    the returned algebra instead of raising.

    Raises:
        AxiomViolationError: an axiom that is not waived fails
        ValueError: waive names an axiom that cannot be waived
    """
    waive = tuple(sorted(set(waive)))
    unknown = [w for w in waive if w not in WAIVABLE_AXIOMS]
    if unknown:
        raise ValueError(f"cannot waive {unknown}; waivable axioms are {WAIVABLE_AXIOMS}")
    if basis_names is not None and len(basis_names) != dim_even + dim_odd:
        raise DimensionMismatchError(f"{len(basis_names)} basis names for dimension {dim_even + dim_odd}")
    names = tuple(basis_names) if basis_names else _default_names(dim_even, dim_odd)
    if len(set(names)) != len(names):
        raise ValueError(f"basis names must be distinct, got {names}")

    violations = check_axioms(p, dim_even, dim_odd, constants, names, cubic_max_odd_dim)
    blocking = [v for v in violations if v.kind not in waive]
    if blocking:
        raise AxiomViolationError(blocking)
    waived_hits = tuple(v for v in violations if v.kind in waive)
    if waived_hits:
        kinds = sorted({v.kind for v in waived_hits})
        logger.info(f"{name or 'algebra'}: {len(waived_hits)} waived violation(s) of {kinds}; "
                    f"first: {waived_hits[0].message}")

    return SuperAlgebra(
        p=int(p),
        dim_even=dim_even,
        dim_odd=dim_odd,
        constants=_as_table(constants, int(p), dim_even + dim_odd),
        basis_names=names,
        name=name,
        waived=waive,
        waived_violations=waived_hits,
    )


def expand_brackets(p: int, dim_even: int, dim_odd: int,
                    brackets: Mapping[Tuple[int, int], Mapping[int, int]]) -> np.ndarray:
    """
    Expand a sparse table of [e_i, e_j] (i <= j) into the full constant table.

    [e_j, e_i] is filled in by super skew-symmetry.

    Raises:
        ValueError: i > j, an index out of range, or a nonzero even diagonal
    """
    n = dim_even + dim_odd
    table = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), coeffs in brackets.items():
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bracket index ({i}, {j}) out of range for dimension {n}")
        if i > j:
            raise ValueError(f"bracket ({i}, {j}) must be given with i <= j")
        for k, value in coeffs.items():
            if not 0 <= k < n:
                raise ValueError(f"coefficient index {k} out of range for dimension {n}")
            table[i, j, k] = int(value) % p
        if i == j and i < dim_even and table[i, i].any():
            raise ValueError(f"[e{i},e{i}] must vanish for an even basis element")
        both_odd = i >= dim_even and j >= dim_even
        table[j, i] = table[i, j] if both_odd else (-table[i, j]) % p
    return table


def from_brackets(p: int, dim_even: int, dim_odd: int,
                  brackets: Mapping[Tuple[int, int], Mapping[int, int]],
                  basis_names: Optional[Sequence[str]] = None,
                  name: Optional[str] = None,
                  waive: Sequence[str] = ()) -> SuperAlgebra:
    """validate() on a sparse upper-triangular bracket table"""
    check_field_prime(p)
    table = expand_brackets(p, dim_even, dim_odd, brackets)
    return validate(p, dim_even, dim_odd, table, basis_names, name, waive)


def check_element(L: SuperAlgebra, v) -> np.ndarray:
    if len(v) != L.n:
        raise DimensionMismatchError(f"element of length {len(v)} in {L.label} of dimension {L.n}")
    return np.asarray(v, dtype=np.int64)


def bracket(L: SuperAlgebra, x: Sequence[int], y: Sequence[int]) -> Element:
    """Bilinear extension of the structure constants"""
    xa = check_element(L, x)
    ya = check_element(L, y)
    if L.n == 0:
        return ()
    out = np.einsum("i,j,ijk->k", xa, ya, L.constants) % L.p
    return tuple(int(c) for c in out)


def _space(L: SuperAlgebra, S: SpaceLike) -> Subspace:
    space = S.space if isinstance(S, Subalg) else S
    if space.p != L.p or space.ambient_dim != L.n:
        raise DimensionMismatchError(f"subspace of GF({space.p})^{space.ambient_dim} used in {L.label}")
    return space


def bracket_span(L: SuperAlgebra, left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> Subspace:
    """Span of all [a, b] with a from left and b from right"""
    if L.n == 0 or not len(left) or not len(right):
        return L.zero_space()
    a = np.asarray(left, dtype=np.int64)
    b = np.asarray(right, dtype=np.int64)
    products = np.einsum("ai,bj,ijk->abk", a, b, L.constants).reshape(-1, L.n) % L.p
    return rref(products.tolist(), L.p, L.n)


def _graded_hull(L: SuperAlgebra, S: Subspace) -> Subspace:
    rows = [L.even_part(v) for v in S.basis] + [L.odd_part(v) for v in S.basis]
    return rref(rows, L.p, L.n)


def generated_subalgebra(L: SuperAlgebra, gens: Sequence[Sequence[int]], closure: Optional[str] = None) -> Subalg:
    """
    Smallest subspace containing gens and closed under the bracket.

    Args:
        L: Ambient algebra
        gens: Generating elements (may be empty)
        closure: "plain" (default) or "graded", which also closes under
            the even/odd projections
    """
    mode = closure or "plain"
    if mode not in CLOSURE_MODES:
        raise ValueError(f"Unknown closure mode '{mode}'")
    gens = [tuple(int(c) for c in check_element(L, g)) for g in gens]
    space = rref(gens, L.p, L.n)
    if mode == "graded":
        space = _graded_hull(L, space)
    # the rank grows at most n times
    for _ in range(L.n + 1):
        grown = subspace_sum(space, bracket_span(L, space.basis, space.basis))
        if mode == "graded":
            grown = _graded_hull(L, grown)
        if grown.rank == space.rank:
            break
        space = grown
    return Subalg(L, space, space.is_graded(L.dim_even))


def _series(L: SuperAlgebra, start: Subspace, step) -> List[Subspace]:
    terms = [start]
    current = start
    while not current.is_zero():
        nxt = step(current)
        terms.append(nxt)
        if nxt == current:
            break
        if len(terms) > L.n + 2:
            raise ValueError("series does not stabilise; is the subspace closed under the bracket?")
        current = nxt
    return terms


def derived_series(L: SuperAlgebra, S: SpaceLike) -> List[Subspace]:
    """
    S, [S,S], [[S,S],[S,S]], ... until a zero term or a repeated term.

    The repeated term is included, so a perfect S gives [S, S].
    """
    start = _space(L, S)
    return _series(L, start, lambda T: bracket_span(L, T.basis, T.basis))


def lower_central_series(L: SuperAlgebra, S: SpaceLike) -> List[Subspace]:
    """S, [S,S], [[S,S],S], ... with the same stopping rule as derived_series"""
    start = _space(L, S)
    return _series(L, start, lambda T: bracket_span(L, T.basis, start.basis))


def is_solvable(L: SuperAlgebra, S: SpaceLike) -> bool:
    return derived_series(L, S)[-1].is_zero()


def is_nilpotent(L: SuperAlgebra, S: SpaceLike) -> bool:
    return lower_central_series(L, S)[-1].is_zero()


def is_subalgebra(L: SuperAlgebra, S: SpaceLike) -> bool:
    space = _space(L, S)
    return bracket_span(L, space.basis, space.basis).issubset(space)


def is_ideal(L: SuperAlgebra, S: SpaceLike) -> bool:
    """Two-sided ideal test, [S,L] and [L,S] inside S; gradedness not required"""
    space = _space(L, S)
    full = L.full_space().basis
    return bracket_span(L, space.basis, full).issubset(space) and \
        bracket_span(L, full, space.basis).issubset(space)


def is_graded_ideal(L: SuperAlgebra, S: SpaceLike) -> bool:
    space = _space(L, S)
    return space.is_graded(L.dim_even) and is_ideal(L, space)


@dataclass(frozen=True, eq=False)
class Morphism:
    """
    A graded, bracket-preserving linear map between algebras over one field.

    images[i] is the image of the i-th source basis vector. Build with
    make_morphism(), which checks both properties.
    """
    source: SuperAlgebra
    target: SuperAlgebra
    images: np.ndarray
    name: Optional[str] = None

    def __post_init__(self):
        matrix = np.array(self.images, dtype=np.int64).reshape(self.source.n, self.target.n) % self.source.p
        matrix.setflags(write=False)
        object.__setattr__(self, "images", matrix)

    def __call__(self, v: Sequence[int]) -> Element:
        x = check_element(self.source, v)
        if self.target.n == 0:
            return ()
        return tuple(int(c) for c in (x @ self.images) % self.source.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and \
            np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.images.tobytes()))

    def __repr__(self) -> str:
        return f"Morphism({self.name or '?'}: {self.source.label} -> {self.target.label})"

    @cached_property
    def kernel(self) -> Subspace:
        return nullspace(self.images.T.tolist(), self.source.p, self.source.n)

    @cached_property
    def image(self) -> Subspace:
        return rref(self.images.tolist(), self.target.p, self.target.n)

    def is_surjective(self) -> bool:
        return self.image.is_full()

    def is_injective(self) -> bool:
        return self.kernel.is_zero()

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other"""
        if other.target != self.source:
            raise MorphismError(f"cannot compose {self!r} after {other!r}: target and source differ")
        images = (other.images @ self.images) % self.source.p
        name = f"{self.name}.{other.name}" if self.name and other.name else None
        return Morphism(other.source, self.target, images, name)


def make_morphism(source: SuperAlgebra, target: SuperAlgebra, images, name: Optional[str] = None) -> Morphism:
    """
    Build a morphism after checking it is graded and preserves the bracket.

    Raises:
        FieldError: source and target over different fields
        MorphismError: wrong shape, parity-breaking or bracket-breaking images
    """
    if source.p != target.p:
        raise FieldError(f"morphism between GF({source.p}) and GF({target.p}) algebras")
    p = source.p
    matrix = np.asarray(images, dtype=np.int64)
    if matrix.size == 0:
        matrix = np.zeros((source.n, target.n), dtype=np.int64)
    if matrix.shape != (source.n, target.n):
        raise MorphismError(f"images have shape {matrix.shape}, expected {(source.n, target.n)}")
    matrix = matrix % p

    for i in range(source.n):
        row = matrix[i]
        stray = row[target.dim_even:] if i < source.dim_even else row[:target.dim_even]
        if stray.any():
            raise MorphismError(
                f"{name or 'map'} sends {source.basis_names[i]} to an element with a component of the wrong parity"
            )

    lhs = np.einsum("ijk,kr->ijr", source.constants, matrix) % p
    rhs = np.einsum("ia,jb,abr->ijr", matrix, matrix, target.constants) % p
    broken = np.argwhere((lhs != rhs).any(axis=2))
    if len(broken):
        i, j = (int(a) for a in broken[0])
        raise MorphismError(
            f"{name or 'map'} does not preserve [{source.basis_names[i]},{source.basis_names[j]}] "
            f"({len(broken)} basis pair(s) fail)"
        )
    return Morphism(source, target, matrix, name)


def identity_morphism(L: SuperAlgebra) -> Morphism:
    return Morphism(L, L, np.eye(L.n, dtype=np.int64), f"id:{L.label}")


@dataclass(frozen=True)
class DirectSum:
    """L1 ⊕ L2 with its canonical injections and projections"""
    algebra: SuperAlgebra
    left: SuperAlgebra
    right: SuperAlgebra
    injections: Tuple[Morphism, Morphism]
    projections: Tuple[Morphism, Morphism]

    def split(self, v: Sequence[int]) -> Tuple[Element, Element]:
        return self.projections[0](v), self.projections[1](v)

    def join(self, v1: Sequence[int], v2: Sequence[int]) -> Element:
        a = self.injections[0](v1)
        b = self.injections[1](v2)
        return tuple((x + y) % self.algebra.p for x, y in zip(a, b))


def _summand_indices(L1: SuperAlgebra, L2: SuperAlgebra) -> Tuple[List[int], List[int]]:
    a0, a1, b0 = L1.dim_even, L1.dim_odd, L2.dim_even
    left = list(range(a0)) + [a0 + b0 + t for t in range(a1)]
    right = [a0 + t for t in range(b0)] + [a0 + b0 + a1 + t for t in range(L2.dim_odd)]
    return left, right


def direct_sum(L1: SuperAlgebra, L2: SuperAlgebra, basis_names: Optional[Sequence[str]] = None,
               name: Optional[str] = None) -> DirectSum:
    """
    L1 ⊕ L2 with basis (evens of L1, evens of L2, odds of L1, odds of L2).

    Basis names are kept when they are disjoint and suffixed _1/_2 otherwise.
    """
    if L1.p != L2.p:
        raise FieldError(f"direct sum of algebras over GF({L1.p}) and GF({L2.p})")
    p = L1.p
    n = L1.n + L2.n
    idx1, idx2 = _summand_indices(L1, L2)
    i1 = np.array(idx1, dtype=np.intp)
    i2 = np.array(idx2, dtype=np.intp)
    table = np.zeros((n, n, n), dtype=np.int64)
    table[np.ix_(i1, i1, i1)] = L1.constants
    table[np.ix_(i2, i2, i2)] = L2.constants

    if basis_names is None:
        n1, n2 = L1.basis_names, L2.basis_names
        if set(n1) & set(n2):
            n1 = tuple(f"{nm}_1" for nm in n1)
            n2 = tuple(f"{nm}_2" for nm in n2)
        ordered = [""] * n
        for k, nm in zip(idx1, n1):
            ordered[k] = nm
        for k, nm in zip(idx2, n2):
            ordered[k] = nm
        basis_names = ordered

    algebra = validate(p, L1.dim_even + L2.dim_even, L1.dim_odd + L2.dim_odd, table, basis_names,
                       name or f"{L1.label}+{L2.label}", tuple(set(L1.waived) | set(L2.waived)))

    inj1 = np.zeros((L1.n, n), dtype=np.int64)
    inj1[np.arange(L1.n), i1] = 1
    inj2 = np.zeros((L2.n, n), dtype=np.int64)
    inj2[np.arange(L2.n), i2] = 1
    injections = (Morphism(L1, algebra, inj1, "i1"), Morphism(L2, algebra, inj2, "i2"))
    projections = (Morphism(algebra, L1, inj1.T, "p1"), Morphism(algebra, L2, inj2.T, "p2"))
    return DirectSum(algebra, L1, L2, injections, projections)


@dataclass(frozen=True)
class Quotient:
    """L/J with the projection and the basis indices of L kept as a complement"""
    algebra: SuperAlgebra
    projection: Morphism
    ideal: Subspace
    complement: Tuple[int, ...]


def quotient(L: SuperAlgebra, J: SpaceLike, name: Optional[str] = None) -> Quotient:
    """
    Quotient by a graded ideal.

    The complement is the lexicographically first set of standard basis
    vectors completing a basis of J; since the standard basis is homogeneous
    and J graded, the quotient inherits the grading.

    Raises:
        NotGradedError: J is not graded
        NotIdealError: J is not an ideal
    """
    ideal = _space(L, J)
    if not ideal.is_graded(L.dim_even):
        raise NotGradedError(f"cannot take a quotient of {L.label} by a subspace that is not graded")
    if not is_ideal(L, ideal):
        raise NotIdealError(f"subspace of dimension {ideal.rank} is not an ideal of {L.label}")

    complement = []
    current = ideal
    for i in range(L.n):
        e = L.basis_vector(i)
        if e not in current:
            complement.append(i)
            current = subspace_sum(current, rref([e], L.p, L.n))
    basis = list(ideal.basis) + [L.basis_vector(i) for i in complement]
    # coordinates of v in the basis (J rows, complement rows) are v @ basis^-1
    coords = inverse(basis, L.p)
    projection = coords[:, ideal.rank:] % L.p

    comp = np.array(complement, dtype=np.intp)
    table = np.einsum("abk,kr->abr", L.constants[np.ix_(comp, comp)], projection) % L.p
    d0 = sum(1 for i in complement if i < L.dim_even)
    algebra = validate(L.p, d0, len(complement) - d0, table,
                       [L.basis_names[i] for i in complement],
                       name or f"{L.label}/J{ideal.rank}", L.waived)
    return Quotient(algebra, Morphism(L, algebra, projection, "pi"), ideal, tuple(complement))


def _composite_name(L: SuperAlgebra, v: Sequence[int]) -> str:
    text = L.format_element(v)
    return text if _SIMPLE_NAME.match(text) else f"({text})"


def subalgebra_algebra(L: SuperAlgebra, S: SpaceLike, name: Optional[str] = None) -> Tuple[SuperAlgebra, Morphism]:
    """
    A graded subalgebra as an algebra in its own right.

    The basis is the RREF basis of S (even rows first), so coordinates are
    read off the pivot columns.

    Returns:
        (algebra, inclusion morphism into L)

    Raises:
        NotGradedError: S is not graded
        ValueError: S is not closed under the bracket
    """
    space = _space(L, S)
    if not space.is_graded(L.dim_even):
        raise NotGradedError(f"subspace of {L.label} is not graded")
    if not is_subalgebra(L, space):
        raise ValueError(f"subspace of {L.label} is not closed under the bracket")
    m = space.rank
    rows = space.to_array()
    d0 = sum(1 for col in space.pivots if col < L.dim_even)
    if m:
        products = np.einsum("ai,bj,ijk->abk", rows, rows, L.constants) % L.p
        table = products[:, :, list(space.pivots)]
    else:
        table = np.zeros((0, 0, 0), dtype=np.int64)
    names = [_composite_name(L, row) for row in space.basis]
    algebra = validate(L.p, d0, m - d0, table, names, name or f"{L.label}[{m}]", L.waived)
    return algebra, Morphism(algebra, L, rows.reshape(m, L.n), "incl")


def change_basis(L: SuperAlgebra, T, name: Optional[str] = None) -> Tuple[SuperAlgebra, Morphism]:
    """
    The same algebra in a new graded basis.

    Args:
        L: Algebra
        T: Invertible block-diagonal matrix; row a is the new a-th basis
           vector in old coordinates

    Returns:
        (algebra in the new basis, isomorphism onto L)

    Raises:
        NotGradedError: T mixes parities
        ValueError: T is singular
    """
    matrix = np.asarray(T, dtype=np.int64) % L.p
    if matrix.shape != (L.n, L.n):
        raise DimensionMismatchError(f"basis change of shape {matrix.shape} for dimension {L.n}")
    d0 = L.dim_even
    if matrix[:d0, d0:].any() or matrix[d0:, :d0].any():
        raise NotGradedError("basis change must map even to even and odd to odd")
    back = inverse(matrix, L.p)
    table = np.einsum("ai,bj,ijk->abk", matrix, matrix, L.constants) % L.p
    table = np.einsum("abk,kr->abr", table, back) % L.p
    names = [f"{nm}'" for nm in L.basis_names]
    algebra = validate(L.p, L.dim_even, L.dim_odd, table, names, name or f"{L.label}'", L.waived)
    return algebra, make_morphism(algebra, L, matrix, "basis-change")


def direct_sum_morphism(phi1: Morphism, phi2: Morphism) -> Tuple[Morphism, DirectSum, DirectSum]:
    """
    phi1 ⊕ phi2 between the direct sums of sources and targets.

    Returns:
        (morphism, source sum, target sum)
    """
    src = direct_sum(phi1.source, phi2.source)
    tgt = direct_sum(phi1.target, phi2.target)
    p = src.algebra.p
    images = (src.projections[0].images @ phi1.images @ tgt.injections[0].images
              + src.projections[1].images @ phi2.images @ tgt.injections[1].images) % p
    name = f"{phi1.name}+{phi2.name}" if phi1.name and phi2.name else None
    return make_morphism(src.algebra, tgt.algebra, images, name), src, tgt


@dataclass(frozen=True)
class Pullback:
    """Fiber product L ×_M N with its two projections and its embedding in L ⊕ N"""
    algebra: SuperAlgebra
    left: Morphism
    right: Morphism
    inclusion: Morphism
    ambient: DirectSum


def pullback(f: Morphism, g: Morphism) -> Pullback:
    """
    Pullback of two surjective morphisms with a common target.

    The algebra is {(x, y) : f(x) = g(y)} inside L ⊕ N.

    Raises:
        MorphismError: different targets or a non-surjective leg
    """
    if f.target != g.target:
        raise MorphismError("pullback legs must share their target")
    if not (f.is_surjective() and g.is_surjective()):
        raise MorphismError("pullback legs must be surjective")
    ambient = direct_sum(f.source, g.source)
    p = ambient.algebra.p
    difference = (ambient.projections[0].images @ f.images - ambient.projections[1].images @ g.images) % p
    fiber = nullspace(difference.T.tolist(), p, ambient.algebra.n)
    algebra, inclusion = subalgebra_algebra(ambient.algebra, fiber,
                                            name=f"{f.source.label}x{g.source.label}")
    left = ambient.projections[0].compose(inclusion)
    right = ambient.projections[1].compose(inclusion)
    return Pullback(algebra, left, right, inclusion, ambient)


def abelian_algebra(p: int, dim_even: int, dim_odd: int, name: Optional[str] = None,
                    basis_names: Optional[Sequence[str]] = None) -> SuperAlgebra:
    n = dim_even + dim_odd
    return validate(p, dim_even, dim_odd, np.zeros((n, n, n), dtype=np.int64), basis_names, name)


def zero_algebra(p: int) -> SuperAlgebra:
    return abelian_algebra(p, 0, 0, name=f"0@{p}")


def bracket_table(L: SuperAlgebra) -> Dict[Tuple[int, int], Dict[int, int]]:
    """Sparse upper-triangular view {(i, j): {k: c}} of the nonzero brackets"""
    out = {}
    for i in range(L.n):
        for j in range(i, L.n):
            coeffs = {k: int(c) for k, c in enumerate(L.constants[i, j]) if c}
            if coeffs:
                out[(i, j)] = coeffs
    return out
