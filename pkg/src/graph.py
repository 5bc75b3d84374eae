"""
Solvable and non-solvable graphs, the solvability measure, and the
direct-sum measure prediction.

Vertices are the nonzero elements outside sol(L), in lexicographic order.
Two distinct vertices are adjacent in the solvable graph when they generate
a solvable subalgebra; the non-solvable graph is its complement.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .models import DirectSumMeasureReport, Measure, MeasureFormulaInputs
from .progress import create_progress_tracker
from .solvabilizer import get_oracle, solvabilizer
from .superalgebra import Morphism, SuperAlgebra, direct_sum, is_solvable
from .utils import parallel_map


logger = logging.getLogger(__name__)


class GraphKind(str, Enum):
    SOLVABLE = "solvable"
    NONSOLVABLE = "nonsolvable"


class GraphUndefinedError(ValueError):
    """Raised for a solvable algebra or an empty vertex set"""


class IsomorphismCapError(RuntimeError):
    """Raised when a graph is too large for the isomorphism search"""


@dataclass(frozen=True, eq=False)
class SolvGraph:
    """Vertices with a symmetric boolean adjacency matrix (no loops)"""
    algebra: SuperAlgebra
    kind: GraphKind
    vertices: Tuple[Tuple[int, ...], ...]
    adjacency: np.ndarray

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=bool)
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @cached_property
    def _positions(self) -> Dict[Tuple[int, ...], int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: Sequence[int]) -> Optional[int]:
        """Position of a vertex, None if v is not a vertex"""
        return self._positions.get(tuple(v))

    def edges(self) -> List[Tuple[int, int]]:
        """Index pairs (u, v) with u < v, sorted"""
        upper = np.triu(self.adjacency, k=1)
        return [(int(u), int(v)) for u, v in np.argwhere(upper)]

    def degrees(self) -> List[int]:
        return [int(d) for d in self.adjacency.sum(axis=1)]

    def complement(self) -> "SolvGraph":
        adj = ~self.adjacency
        np.fill_diagonal(adj, False)
        other = GraphKind.NONSOLVABLE if self.kind == GraphKind.SOLVABLE else GraphKind.SOLVABLE
        return SolvGraph(self.algebra, other, self.vertices, adj)

    def label(self, i: int) -> str:
        return self.algebra.format_element(self.vertices[i])


def build_graph(L: SuperAlgebra, kind=GraphKind.SOLVABLE, closure: Optional[str] = None, workers: int = 1,
                show_progress: bool = False) -> SolvGraph:
    """
    Build the solvable or non-solvable graph of a non-solvable algebra.

    Args:
        L: Algebra
        kind: GraphKind or its string value
        closure: Subalgebra closure mode
        workers: Thread-pool size over adjacency rows
        show_progress: Draw a progress bar

    Raises:
        GraphUndefinedError: L is solvable, or every nonzero element is in sol(L)
    """
    kind = GraphKind(kind)
    if is_solvable(L, L.full_space()):
        raise GraphUndefinedError(f"{L.label} is solvable; its graph is undefined")
    sol = solvabilizer(L, closure, workers)
    vertices = tuple(v for v in L.elements() if any(v) and v not in sol)
    if not vertices:
        raise GraphUndefinedError(f"{L.label} has no vertices outside its solvabilizer")

    oracle = get_oracle(L, "solvable", closure)
    m = len(vertices)
    adjacency = np.zeros((m, m), dtype=bool)

    def row(i):
        return [oracle(vertices[i], vertices[j]) for j in range(i + 1, m)]

    logger.info(f"Building {kind.value} graph of {L.label}: {m} vertices")
    with create_progress_tracker(m, f"Adjacency {L.label}", disable=not show_progress, unit="vertices") as progress:
        for i, flags in enumerate(parallel_map(row, range(m), workers)):
            adjacency[i, i + 1:] = flags
            progress.update()
            progress.note(spans=len(oracle.cache))
    adjacency |= adjacency.T
    logger.debug(f"{L.label}: pair cache {oracle.cache.stats()}")

    graph = SolvGraph(L, GraphKind.SOLVABLE, vertices, adjacency)
    return graph if kind == GraphKind.SOLVABLE else graph.complement()


def measure(G: SolvGraph) -> Measure:
    """
    nu = 1 - |E| / (|V| choose 2), exact.

    Raises:
        ValueError: G is not a solvable graph, or has fewer than 2 vertices
    """
    if G.kind != GraphKind.SOLVABLE:
        raise ValueError("the measure is defined on the solvable graph")
    if G.order < 2:
        raise ValueError(f"the measure needs at least 2 vertices, got {G.order}")
    pairs = G.order * (G.order - 1) // 2
    return Measure(1 - Fraction(G.edge_count, pairs), G.order, G.edge_count)


def components(G: SolvGraph) -> int:
    """Number of connected components"""
    return nx.number_connected_components(nx.from_numpy_array(G.adjacency.astype(np.int8)))


def find_isomorphism(G1: SolvGraph, G2: SolvGraph, cap: int = 64) -> Optional[List[int]]:
    """
    Vertex bijection preserving adjacency, or None.

    Backtracking over candidates with equal degree and equal multiset of
    neighbour degrees, most constrained vertex first.

    Raises:
        IsomorphismCapError: graphs of equal size with more than cap vertices
    """
    n = G1.order
    if n != G2.order or G1.edge_count != G2.edge_count:
        return None
    if n > cap:
        raise IsomorphismCapError(f"isomorphism search capped at {cap} vertices, got {G1.order} and {G2.order}")
    A = G1.adjacency
    B = G2.adjacency
    deg1, deg2 = G1.degrees(), G2.degrees()

    def signature(adj, deg, v):
        return deg[v], tuple(sorted(deg[u] for u in np.flatnonzero(adj[v])))

    sig1 = [signature(A, deg1, v) for v in range(n)]
    sig2 = [signature(B, deg2, w) for w in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(candidates[v]), -deg1[v], v))

    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in candidates[v]:
            if used[w]:
                continue
            if all(A[v, order[t]] == B[w, mapping[order[t]]] for t in range(k)):
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return mapping if extend(0) else None


def graphs_isomorphic(G1: SolvGraph, G2: SolvGraph, cap: int = 64) -> bool:
    return find_isomorphism(G1, G2, cap) is not None


def indicator(L: SuperAlgebra, x: Sequence[int], y: Sequence[int], closure: Optional[str] = None) -> int:
    """1 if <x, y> is solvable, else 0"""
    return 1 if get_oracle(L, "solvable", closure)(tuple(x), tuple(y)) else 0


def formula_inputs(L: SuperAlgebra, closure: Optional[str] = None, workers: int = 1,
                   graph: Optional[SolvGraph] = None) -> MeasureFormulaInputs:
    """
    a, b, alpha and sigma for one summand of a direct sum.

    Raises:
        GraphUndefinedError: L is solvable
        ValueError: fewer than 2 vertices
    """
    sol = solvabilizer(L, closure, workers)
    graph = graph or build_graph(L, GraphKind.SOLVABLE, closure, workers)
    a = graph.order
    alpha = 1 - measure(graph).value
    oracle = get_oracle(L, "solvable", closure)
    omega = sum(1 for v in graph.vertices if oracle.single(v))
    return MeasureFormulaInputs(
        a=a,
        b=len(sol),
        alpha=alpha,
        sigma=Fraction(omega, a),
        zero_in_sol=L.zero_vector() in sol,
    )


def evaluate_direct_sum_formula(in1: MeasureFormulaInputs,
                                in2: MeasureFormulaInputs) -> Tuple[int, Fraction, Optional[Fraction]]:
    """
    Predicted (|V|, |E|, measure) of L1 ⊕ L2 from per-summand inputs.

    The measure is None when the predicted vertex count is below 2.
    """
    a1, b1, al1, s1 = in1.a, in1.b, in1.alpha, in1.sigma
    a2, b2, al2, s2 = in2.a, in2.b, in2.alpha, in2.sigma
    half = Fraction(1, 2)
    vertices = a1 * a2 + a1 * b2 + b1 * a2
    edges = (
        half * a1 * a2 * (al1 * al2 * (a1 - 1) * (a2 - 1) + s1 * al2 * (a2 - 1) + al1 * s2 * (a1 - 1))
        + half * a1 * b2 * (al1 * b2 * (a1 - 1) + s1 * (b2 - 1))
        + half * a2 * b1 * (al2 * b1 * (a2 - 1) + s2 * (b1 - 1))
        + a1 * a2 * b2 * (al1 * (a1 - 1) + s1)
        + a1 * a2 * b1 * (al2 * (a2 - 1) + s2)
        + a1 * a2 * b1 * b2
    )
    if vertices < 2:
        return vertices, edges, None
    return vertices, edges, 1 - 2 * edges / (vertices * (vertices - 1))


def predicted_direct_sum_measure(L1: SuperAlgebra, L2: SuperAlgebra, closure: Optional[str] = None,
                                 workers: int = 1) -> DirectSumMeasureReport:
    """
    Compare the direct-sum prediction against the directly computed graph.

    Raises:
        GraphUndefinedError: a summand is solvable
    """
    in1 = formula_inputs(L1, closure, workers)
    in2 = formula_inputs(L2, closure, workers)
    vertices, edges, predicted = evaluate_direct_sum_formula(in1, in2)
    D = direct_sum(L1, L2)
    graph = build_graph(D.algebra, GraphKind.SOLVABLE, closure, workers)
    report = DirectSumMeasureReport(
        left=L1.label,
        right=L2.label,
        inputs=(in1, in2),
        predicted_vertices=vertices,
        predicted_edges=edges,
        predicted_measure=predicted,
        actual_vertices=graph.order,
        actual_edges=graph.edge_count,
        actual_measure=measure(graph),
    )
    if not report.measure_match:
        logger.warning(f"direct-sum prediction for {L1.label}+{L2.label} differs from the computed measure")
    return report


def induced_vertex_map(G1: SolvGraph, G2: SolvGraph, phi: Morphism) -> Tuple[List[Optional[int]], List[int]]:
    """
    Restrict an algebra morphism to the vertex sets.

    Returns:
        (images, leaving): images[i] is the G2 index of phi(v_i) or None;
        leaving lists the G1 indices whose image is not a vertex of G2
    """
    if phi.source != G1.algebra or phi.target != G2.algebra:
        raise ValueError("morphism does not connect the two graphs' algebras")
    images = [G2.index(phi(v)) for v in G1.vertices]
    leaving = [i for i, w in enumerate(images) if w is None]
    return images, leaving
