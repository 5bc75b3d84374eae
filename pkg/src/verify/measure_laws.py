"""
Graphs and measures under morphisms, isomorphisms and direct sums.
"""

import logging
import random
from typing import Optional

from ..config import Config
from ..graph import (
    GraphKind,
    GraphUndefinedError,
    IsomorphismCapError,
    build_graph,
    graphs_isomorphic,
    indicator,
    induced_vertex_map,
    measure,
    predicted_direct_sum_measure,
)
from ..solvabilizer import solvabilizer
from ..superalgebra import Morphism, SuperAlgebra, direct_sum, identity_morphism, is_solvable
from .generator import Instance
from .morphism_laws import kernel_outside
from .report import Report


logger = logging.getLogger(__name__)

MEASURE_CLAIMS = (
    ("measure-bounds", "0 ≤ ν(L) ≤ 1"),
    ("measure-monotone", "ν(L1) ≤ ν(L2)"),
    ("measure-equality", "ν(L1) = ν(L2) exactly when φ is injective"),
    ("vertex-fibers", "|V1| = k·|V2| with k = |ker φ|"),
    ("edge-count", "|E1| = k²·|E2| + k(k−1)·|V2|/2"),
    ("vertex-map", "φ maps V1 into V2"),
    ("admissible", "φ preserves and reflects adjacency between different fibers"),
    ("graph-identity", "id_L induces the identity of Γ(L)"),
)


def _skip_all(report: Report, reason: str):
    for claim, statement in MEASURE_CLAIMS:
        report.skipped(claim, statement, reason)


def verify_measure_laws(phi: Morphism, config: Optional[Config] = None) -> Report:
    """
    Compare the solvable graphs of the source and target of a surjective morphism.

    Hypotheses: both algebras non-solvable, φ surjective, and every nonzero
    kernel element in sol(L1). When they fail every claim is skipped.
    """
    config = config or Config()
    L1, L2 = phi.source, phi.target
    report = Report("measure", phi.name or f"{L1.label}->{L2.label}")
    closure, workers = config.closure, config.workers

    if is_solvable(L1, L1.full_space()) or is_solvable(L2, L2.full_space()):
        _skip_all(report, "both algebras must be non-solvable")
        return report
    if not phi.is_surjective():
        _skip_all(report, "φ is not surjective")
        return report
    sol1 = solvabilizer(L1, closure, workers)
    outside = kernel_outside(phi, sol1)
    if outside is not None:
        _skip_all(report, f"kernel element {L1.format_element(outside)} is not in sol(L1)")
        return report

    G1 = build_graph(L1, GraphKind.SOLVABLE, closure, workers, config.show_progress)
    G2 = build_graph(L2, GraphKind.SOLVABLE, closure, workers, config.show_progress)
    nu1, nu2 = measure(G1), measure(G2)
    k = L1.p ** phi.kernel.rank
    detail = f"ν1 = {nu1}, ν2 = {nu2}, k = {k}"

    report.record("measure-bounds", "0 ≤ ν(L) ≤ 1", all(0 <= m.value <= 1 for m in (nu1, nu2)),
                  f"ν1 = {nu1}, ν2 = {nu2}")
    report.record("measure-monotone", "ν(L1) ≤ ν(L2)", nu1.value <= nu2.value, f"ν1 = {nu1} > ν2 = {nu2}", detail)
    if G2.edge_count == G2.order * (G2.order - 1) // 2:
        # a complete Γ(L2) forces a complete Γ(L1), so both measures are 0 for every k
        report.skipped("measure-equality", "ν(L1) = ν(L2) exactly when φ is injective",
                       f"Γ(L2) is complete; {detail}")
    else:
        report.record("measure-equality", "ν(L1) = ν(L2) exactly when φ is injective",
                      (nu1.value == nu2.value) == (k == 1), detail, detail)
    report.record("vertex-fibers", "|V1| = k·|V2| with k = |ker φ|", G1.order == k * G2.order,
                  f"|V1| = {G1.order}, |V2| = {G2.order}, k = {k}", f"|V1| = {G1.order}, |V2| = {G2.order}")
    expected_edges = k * k * G2.edge_count + k * (k - 1) * G2.order // 2
    report.record("edge-count", "|E1| = k²·|E2| + k(k−1)·|V2|/2", G1.edge_count == expected_edges,
                  f"|E1| = {G1.edge_count}, predicted {expected_edges}", f"|E1| = {G1.edge_count}, |E2| = {G2.edge_count}")

    images, leaving = induced_vertex_map(G1, G2, phi)
    report.record("vertex-map", "φ maps V1 into V2", not leaving,
                  f"{G1.label(leaving[0])} maps outside V2" if leaving else "")

    witness = ""
    same_fiber = 0
    for i in range(G1.order):
        for j in range(i + 1, G1.order):
            a, b = images[i], images[j]
            if a is None or b is None:
                continue
            if a == b:
                same_fiber += 1
                continue
            if G1.adjacency[i, j] != G2.adjacency[a, b]:
                witness = f"{G1.label(i)} and {G1.label(j)}"
                break
        if witness:
            break
    report.record("admissible", "φ preserves and reflects adjacency between different fibers", not witness, witness,
                  f"{same_fiber} same-fiber pairs not compared")

    ident, _ = induced_vertex_map(G1, G1, identity_morphism(L1))
    report.record("graph-identity", "id_L induces the identity of Γ(L)", ident == list(range(G1.order)),
                  "vertex map of id_L moves a vertex")
    return report


def verify_isomorphism_invariance(instance: Instance, config: Optional[Config] = None) -> Report:
    """
    Graphs and measure of an instance agree with those of the algebra it is isomorphic to.
    """
    config = config or Config()
    report = Report("isomorphism", instance.descriptor)
    statements = (
        ("induced-isomorphism", "an isomorphism maps the solvable graph onto the solvable graph"),
        ("graph-isomorphic", "isomorphic algebras have isomorphic solvable and non-solvable graphs"),
        ("measure-invariant", "isomorphic algebras have equal ν"),
    )
    iso = instance.isomorphism
    L = instance.algebra
    reason = None
    if iso is None:
        reason = "instance carries no isomorphism"
    elif is_solvable(L, L.full_space()):
        reason = "algebra is solvable"
    if reason:
        for claim, statement in statements:
            report.skipped(claim, statement, reason)
        return report

    G = build_graph(L, GraphKind.SOLVABLE, config.closure, config.workers)
    H = build_graph(iso.target, GraphKind.SOLVABLE, config.closure, config.workers)
    images, leaving = induced_vertex_map(G, H, iso)
    witness = ""
    if leaving or sorted(images) != list(range(H.order)):
        witness = "vertex map is not a bijection"
    else:
        for i in range(G.order):
            for j in range(i + 1, G.order):
                if G.adjacency[i, j] != H.adjacency[images[i], images[j]]:
                    witness = f"{G.label(i)} and {G.label(j)}"
                    break
            if witness:
                break
    report.record(statements[0][0], statements[0][1], not witness, witness)

    try:
        witness = ""
        if not graphs_isomorphic(G, H, config.iso_vertex_cap):
            witness = "no isomorphism between the solvable graphs"
        elif not graphs_isomorphic(G.complement(), H.complement(), config.iso_vertex_cap):
            witness = "no isomorphism between the non-solvable graphs"
        report.record(statements[1][0], statements[1][1], not witness, witness, f"|V| = {G.order}")
    except IsomorphismCapError as e:
        report.skipped(statements[1][0], statements[1][1], str(e))

    nu, nu_base = measure(G), measure(H)
    report.record(statements[2][0], statements[2][1], nu.value == nu_base.value, f"{nu} vs {nu_base}")
    return report


def verify_indicator_product(L1: SuperAlgebra, L2: SuperAlgebra, samples: int = 10000, seed: int = 1,
                             config: Optional[Config] = None) -> Report:
    """
    The solvability indicator of L1 ⊕ L2 is the product of the summands' indicators.
    """
    config = config or Config()
    D = direct_sum(L1, L2)
    S = D.algebra
    report = Report("indicator", S.label)
    rng = random.Random(f"{seed}:{S.label}")
    elements = list(S.elements())
    exhaustive = len(elements) ** 2 <= samples
    if exhaustive:
        pairs = [(u, v) for u in elements for v in elements]
    else:
        pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(samples)]
    witness = ""
    for u, v in pairs:
        (u1, u2), (v1, v2) = D.split(u), D.split(v)
        combined = indicator(S, u, v, config.closure)
        product = indicator(L1, u1, v1, config.closure) * indicator(L2, u2, v2, config.closure)
        if combined != product:
            witness = f"u={S.format_element(u)}, v={S.format_element(v)}"
            break
    report.record("indicator-product", "χ(u, v) = χ(u1, v1)·χ(u2, v2)", not witness, witness,
                  f"{len(pairs)} pairs ({'all' if exhaustive else 'sampled'})")
    return report


def verify_direct_sum_measure(L1: SuperAlgebra, L2: SuperAlgebra, config: Optional[Config] = None) -> Report:
    """
    Compare the predicted vertex count, edge count and measure of L1 ⊕ L2
    with the computed graph. The prediction assumes both summands are
    non-solvable and 0 lies in both solvabilizers; when either fails the
    comparison is reported as skipped.
    """
    config = config or Config()
    report = Report("direct-sum-measure", f"{L1.label}+{L2.label}")
    claims = (
        ("formula-vertices", "predicted |V| of the sum"),
        ("formula-edges", "predicted |E| of the sum"),
        ("formula-measure", "predicted ν of the sum"),
    )
    try:
        result = predicted_direct_sum_measure(L1, L2, config.closure, config.workers)
    except GraphUndefinedError as e:
        for claim, statement in claims:
            report.skipped(claim, statement, str(e))
        return report
    outcomes = (
        (result.vertices_match, f"predicted {result.predicted_vertices}, actual {result.actual_vertices}"),
        (result.edges_match, f"predicted {result.predicted_edges}, actual {result.actual_edges}"),
        (result.measure_match, f"predicted {result.predicted_measure}, actual {result.actual_measure}"),
    )
    for (claim, statement), (holds, detail) in zip(claims, outcomes):
        if not result.vertex_formula_applies:
            report.skipped(claim, statement, f"0 is not in the solvabilizer of a summand; {detail}")
        else:
            report.record(claim, statement, holds, detail, detail)
    return report
