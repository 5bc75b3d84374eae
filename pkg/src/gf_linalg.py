"""
Linear algebra over the prime field GF(p).

Vectors are tuples of residues in [0, p). A subspace is stored by its reduced
row echelon basis with leading ones; that basis is unique, so two Subspace
objects compare (and hash) equal exactly when they span the same space. The
solvabilizer module relies on this to use subspaces as memo keys.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np


logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class FieldError(ValueError):
    """Raised when a modulus is not an odd prime, or two moduli differ."""


class DimensionMismatchError(ValueError):
    """Raised when vectors or subspaces of different shapes are combined."""


def is_prime(n: int) -> bool:
    """Trial-division primality test (moduli here are tiny)."""
    if n <= 1:
        return False
    for i in range(2, math.isqrt(n) + 1):
        if n % i == 0:
            return False
    return True


def check_field_prime(p) -> int:
    """
    Validate a field characteristic.

    Args:
        p: Candidate modulus

    Returns:
        p as a plain int

    Raises:
        FieldError: p is not an integer, not prime, or equal to 2
    """
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise FieldError(f"field characteristic must be an integer, got {p!r}")
    p = int(p)
    if p == 2:
        raise FieldError("characteristic 2 is not supported (p must be an odd prime)")
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    return p


def reduce_vector(v: Sequence[int], p: int) -> Vector:
    """Reduce every coordinate into [0, p)."""
    return tuple(int(c) % p for c in v)


def _row_reduce(rows: List[List[int]], p: int, n: int) -> List[List[int]]:
    """
    Gauss-Jordan elimination over GF(p).

    Rows must already be reduced mod p. Returns the nonzero rows of the
    reduced row echelon form, pivots normalised to 1.
    """
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(n):
        if pivot_row >= len(rows):
            break
        for r in range(pivot_row, len(rows)):
            if rows[r][col]:
                break
        else:
            continue
        rows[pivot_row], rows[r] = rows[r], rows[pivot_row]
        pivot = rows[pivot_row]
        inv = pow(pivot[col], -1, p)
        if inv != 1:
            pivot = [(a * inv) % p for a in pivot]
            rows[pivot_row] = pivot
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor:
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], pivot)]
        pivot_row += 1
    return rows[:pivot_row]


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of GF(p)^n given by its canonical RREF basis.

    Build instances with rref(); the constructor trusts its input.
    """
    p: int
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(i for i, c in enumerate(row) if c) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    def __contains__(self, v) -> bool:
        return subspace_member(self, v)

    def issubset(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(subspace_member(other, row) for row in self.basis)

    def is_graded(self, dim_even: int) -> bool:
        """
        True when the subspace splits into its even and odd parts.

        With coordinates ordered even-first, a graded subspace has an RREF
        basis of homogeneous rows, and conversely.
        """
        for row in self.basis:
            if any(row[:dim_even]) and any(row[dim_even:]):
                return False
        return True

    def elements(self) -> List[Vector]:
        """All p^rank members, sorted lexicographically."""
        if not self.basis:
            return [tuple([0] * self.ambient_dim)]
        out = set()
        for coeffs in itertools.product(range(self.p), repeat=self.rank):
            out.add(combine(self.basis, coeffs, self.p, self.ambient_dim))
        return sorted(out)

    def to_array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.rank, self.ambient_dim)

    @classmethod
    def zero(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, ())

    @classmethod
    def full(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, tuple(unit_vector(n, i) for i in range(n)))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


def combine(rows: Sequence[Vector], coeffs: Sequence[int], p: int, n: int) -> Vector:
    """Linear combination sum(coeffs[k] * rows[k]) mod p."""
    acc = [0] * n
    for a, row in zip(coeffs, rows):
        if a:
            for k, c in enumerate(row):
                acc[k] += a * c
    return tuple(c % p for c in acc)


def _check_compatible(S: Subspace, T: Subspace):
    if S.p != T.p:
        raise DimensionMismatchError(f"subspaces live over different fields (p={S.p} vs p={T.p})")
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatchError(
            f"subspaces live in different ambient spaces ({S.ambient_dim} vs {T.ambient_dim})"
        )


def rref(rows: Sequence[Sequence[int]], p: int, ambient_dim: Optional[int] = None) -> Subspace:
    """
    Row-reduce a list of vectors and return the subspace they span.

    Args:
        rows: Vectors, all of the same length
        p: Field characteristic
        ambient_dim: Required when rows is empty

    Returns:
        Subspace with canonical RREF basis

    Raises:
        DimensionMismatchError: rows of mixed lengths, or no way to infer n
    """
    rows = [tuple(r) for r in rows]
    if ambient_dim is None:
        if not rows:
            raise DimensionMismatchError("cannot infer the ambient dimension of an empty row list")
        ambient_dim = len(rows[0])
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionMismatchError(f"row of length {len(r)} in a space of dimension {ambient_dim}")
    reduced = _row_reduce([[int(c) % p for c in r] for r in rows], p, ambient_dim)
    return Subspace(p, ambient_dim, tuple(tuple(r) for r in reduced))


def _residual(S: Subspace, v: Sequence[int]) -> List[int]:
    p = S.p
    w = [int(c) % p for c in v]
    for row, col in zip(S.basis, S.pivots):
        factor = w[col]
        if factor:
            w = [(a - factor * b) % p for a, b in zip(w, row)]
    return w


def subspace_member(S: Subspace, v: Sequence[int]) -> bool:
    """True iff v lies in the span of S."""
    if len(v) != S.ambient_dim:
        raise DimensionMismatchError(f"vector of length {len(v)} tested against a subspace of GF(p)^{S.ambient_dim}")
    return not any(_residual(S, v))


def coordinates_in(S: Subspace, v: Sequence[int]) -> Vector:
    """
    Coordinates of v with respect to the RREF basis of S.

    Raises:
        ValueError: v is not in S
    """
    if not subspace_member(S, v):
        raise ValueError(f"{tuple(v)} is not in the subspace")
    return tuple(int(v[col]) % S.p for col in S.pivots)


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check_compatible(S, T)
    return rref(S.basis + T.basis, S.p, S.ambient_dim)


def subspace_intersection(S: Subspace, T: Subspace) -> Subspace:
    """
    S ∩ T from the kernel of the stacked system a·S + b·T = 0.

    Every kernel vector (a, b) gives the common element a·S = -b·T.
    """
    _check_compatible(S, T)
    p, n = S.p, S.ambient_dim
    if S.is_zero() or T.is_zero():
        return Subspace.zero(p, n)
    stacked = list(S.basis) + list(T.basis)
    columns = [tuple(row[k] for row in stacked) for k in range(n)]
    kernel = nullspace(columns, p, len(stacked))
    common = [combine(S.basis, sol[:S.rank], p, n) for sol in kernel.basis]
    return rref(common, p, n)


def nullspace(matrix: Sequence[Sequence[int]], p: int, columns: Optional[int] = None) -> Subspace:
    """
    Kernel {v : M v = 0} of an m x k matrix given by rows.

    Args:
        matrix: Rows of M
        p: Field characteristic
        columns: k, required when the matrix has no rows

    Returns:
        Kernel as a Subspace of GF(p)^k
    """
    rows = [tuple(r) for r in matrix]
    if columns is None:
        if not rows:
            raise DimensionMismatchError("cannot infer the column count of an empty matrix")
        columns = len(rows[0])
    reduced = rref(rows, p, columns)
    pivots = reduced.pivots
    free = [c for c in range(columns) if c not in pivots]
    vectors = []
    for f in free:
        v = [0] * columns
        v[f] = 1
        for row, col in zip(reduced.basis, pivots):
            v[col] = (-row[f]) % p
        vectors.append(tuple(v))
    return rref(vectors, p, columns)


def inverse(matrix: Sequence[Sequence[int]], p: int) -> np.ndarray:
    """
    Inverse of a square matrix over GF(p), via RREF of [M | I].

    Raises:
        ValueError: the matrix is not square or not invertible
    """
    mat = np.array(matrix, dtype=np.int64) % p
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square to compute an inverse")
    n = mat.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    augmented = np.hstack((mat, np.eye(n, dtype=np.int64)))
    reduced = _row_reduce(augmented.tolist(), p, 2 * n)
    if len(reduced) < n or any(reduced[i][i] != 1 for i in range(n)) \
            or any(reduced[i][j] for i in range(n) for j in range(n) if i != j):
        raise ValueError("matrix is not invertible over GF(p)")
    return np.array([row[n:] for row in reduced], dtype=np.int64)


def matmul(a, b, p: int) -> np.ndarray:
    """Matrix product reduced mod p."""
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def all_vectors(p: int, n: int) -> Iterator[Vector]:
    """Every vector of GF(p)^n in lexicographic order."""
    return itertools.product(range(p), repeat=n)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(p: int, n: int, k: Optional[int] = None) -> Iterator[Subspace]:
    """
    Enumerate subspaces of GF(p)^n by pivot pattern and free entries.

    Each RREF basis is produced exactly once: choose the pivot columns, then
    fill every non-pivot position to the right of a row's pivot freely.

    Args:
        p: Field characteristic
        n: Ambient dimension
        k: Restrict to one dimension (None = all dimensions, ascending)
    """
    dims = range(n + 1) if k is None else [k]
    for dim in dims:
        for pivots in itertools.combinations(range(n), dim):
            pivot_set = set(pivots)
            free = [(i, j) for i, col in enumerate(pivots)
                    for j in range(col + 1, n) if j not in pivot_set]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(dim)]
                for i, col in enumerate(pivots):
                    rows[i][col] = 1
                for (i, j), value in zip(free, values):
                    rows[i][j] = value
                yield Subspace(p, n, tuple(tuple(r) for r in rows))
