"""
Simple data models for computed results: element sets, measures and
formula inputs. No algebra logic here - just what we need to store,
compare and print results.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, FrozenSet, Iterable, Iterator, Optional, Tuple

if TYPE_CHECKING:
    from .superalgebra import Morphism, SuperAlgebra


Vector = Tuple[int, ...]


def format_fraction(value: Fraction) -> str:
    """Exact fraction with a decimal view, e.g. '17/26 (≈ 0.653846)'"""
    return f"{value.numerator}/{value.denominator} (≈ {float(value):.6f})"


@dataclass(frozen=True)
class ElementSet:
    """
    A set of elements of one algebra, kept sorted so that equal sets print
    and compare identically.
    """
    algebra: "SuperAlgebra"
    members: Tuple[Vector, ...]

    @classmethod
    def of(cls, algebra: "SuperAlgebra", items: Iterable[Vector]) -> "ElementSet":
        return cls(algebra, tuple(sorted({tuple(int(c) for c in v) for v in items})))

    @classmethod
    def everything(cls, algebra: "SuperAlgebra") -> "ElementSet":
        return cls(algebra, tuple(algebra.elements()))

    @classmethod
    def empty(cls, algebra: "SuperAlgebra") -> "ElementSet":
        return cls(algebra, ())

    @cached_property
    def _lookup(self) -> FrozenSet[Vector]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._lookup

    def is_empty(self) -> bool:
        return not self.members

    def _check_same(self, other: "ElementSet"):
        if self.algebra != other.algebra:
            raise ValueError("element sets belong to different algebras")

    def intersection(self, other: "ElementSet") -> "ElementSet":
        self._check_same(other)
        return ElementSet(self.algebra, tuple(v for v in self.members if v in other))

    def union(self, other: "ElementSet") -> "ElementSet":
        self._check_same(other)
        return ElementSet.of(self.algebra, self._lookup | other._lookup)

    def difference(self, other: "ElementSet") -> "ElementSet":
        self._check_same(other)
        return ElementSet(self.algebra, tuple(v for v in self.members if v not in other))

    def issubset(self, other: "ElementSet") -> bool:
        self._check_same(other)
        return self._lookup <= other._lookup

    def image(self, morphism: "Morphism") -> "ElementSet":
        """Pointwise image under an algebra morphism"""
        if morphism.source != self.algebra:
            raise ValueError("morphism source differs from the set's algebra")
        return ElementSet.of(morphism.target, (morphism(v) for v in self.members))

    def format(self, limit: Optional[int] = None) -> str:
        """
        Render as '{0, h, 2h}', or '{} (empty)'.

        Args:
            limit: Show at most this many members, then '...'
        """
        if not self.members:
            return "{} (empty)"
        shown = self.members if limit is None else self.members[:limit]
        body = ", ".join(self.algebra.format_element(v) for v in shown)
        if len(shown) < len(self.members):
            body += ", ..."
        return "{" + body + "}"


@dataclass(frozen=True)
class Measure:
    """Exact solvability measure of a graph"""
    value: Fraction
    vertex_count: int
    edge_count: int

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def pair_count(self) -> int:
        """Unreduced denominator |V|(|V|-1)/2"""
        return self.vertex_count * (self.vertex_count - 1) // 2

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return format_fraction(self.value)


@dataclass(frozen=True)
class MeasureFormulaInputs:
    """
    Per-algebra quantities feeding the direct-sum measure prediction.

    a = |A| (nonzero elements outside sol(L)), b = |sol(L)|,
    alpha = 1 - measure, sigma = share of A generating a solvable subalgebra alone.
    """
    a: int
    b: int
    alpha: Fraction
    sigma: Fraction
    zero_in_sol: bool


@dataclass(frozen=True)
class DirectSumMeasureReport:
    """Predicted versus computed measure of a direct sum"""
    left: str
    right: str
    inputs: Tuple[MeasureFormulaInputs, MeasureFormulaInputs]
    predicted_vertices: int
    predicted_edges: Fraction
    predicted_measure: Optional[Fraction]
    actual_vertices: int
    actual_edges: int
    actual_measure: Measure

    @property
    def vertex_formula_applies(self) -> bool:
        """The vertex count formula assumes 0 lies in both solvabilizers"""
        return all(inp.zero_in_sol for inp in self.inputs)

    @property
    def vertices_match(self) -> bool:
        return self.predicted_vertices == self.actual_vertices

    @property
    def edges_match(self) -> bool:
        return self.predicted_edges == self.actual_edges

    @property
    def measure_match(self) -> bool:
        return self.predicted_measure == self.actual_measure.value

    def lines(self):
        """Human-readable summary lines"""
        predicted = format_fraction(self.predicted_measure) if self.predicted_measure is not None else "undefined"
        out = [
            f"direct sum {self.left} + {self.right}",
            f"  |V| predicted {self.predicted_vertices}, actual {self.actual_vertices}"
            f" ({'match' if self.vertices_match else 'MISMATCH'})",
            f"  |E| predicted {self.predicted_edges}, actual {self.actual_edges}"
            f" ({'match' if self.edges_match else 'MISMATCH'})",
            f"  measure predicted {predicted}, actual {self.actual_measure}"
            f" ({'match' if self.measure_match else 'MISMATCH'})",
        ]
        if not self.vertex_formula_applies:
            out.append("  note: 0 is not in the solvabilizer of a summand, the vertex formula does not apply")
        return out
