"""
Solvabilizers of direct sums: sol and sol_L(x) split along the summands,
derived series of sums of subalgebras split termwise, and the n-fold version
on a triple sum.
"""

import logging
import random
from typing import List, Optional

from ..config import Config
from ..gf_linalg import Subspace, rref
from ..models import ElementSet
from ..solvabilizer import solvabilizer, solvabilizer_of
from ..superalgebra import DirectSum, SuperAlgebra, derived_series, direct_sum, generated_subalgebra
from ..utils import sample_items
from .report import Report, difference_witness


logger = logging.getLogger(__name__)


def _product(D: DirectSum, left: ElementSet, right: ElementSet) -> ElementSet:
    return ElementSet.of(D.algebra, (D.join(a, b) for a in left for b in right))


def _embed(D: DirectSum, S1: Subspace, S2: Subspace) -> Subspace:
    rows = [D.injections[0](v) for v in S1.basis] + [D.injections[1](v) for v in S2.basis]
    return rref(rows, D.algebra.p, D.algebra.n)


def _padded(terms: List[Subspace], length: int) -> List[Subspace]:
    return terms + [terms[-1]] * (length - len(terms))


def _check_derived_series(report: Report, D: DirectSum, rng: random.Random, config: Config):
    L1, L2 = D.left, D.right
    elements1, elements2 = list(L1.elements()), list(L2.elements())
    witness = ""
    for _ in range(config.trials):
        x1, y1 = rng.choice(elements1), rng.choice(elements1)
        x2, y2 = rng.choice(elements2), rng.choice(elements2)
        S1 = generated_subalgebra(L1, [x1, y1], config.closure)
        S2 = generated_subalgebra(L2, [x2, y2], config.closure)
        series1 = derived_series(L1, S1)
        series2 = derived_series(L2, S2)
        combined = derived_series(D.algebra, _embed(D, S1.space, S2.space))
        length = max(len(series1), len(series2), len(combined))
        expected = [_embed(D, a, b) for a, b in zip(_padded(series1, length), _padded(series2, length))]
        if _padded(combined, length) != expected:
            witness = (f"S1=<{L1.format_element(x1)}, {L1.format_element(y1)}>, "
                       f"S2=<{L2.format_element(x2)}, {L2.format_element(y2)}>: "
                       f"dimensions {[t.rank for t in combined]} vs {[t.rank for t in expected]}")
            break
    report.record("derived-series-sum", "(S1 ⊕ S2)^(k) = S1^(k) ⊕ S2^(k) for subalgebras S1, S2",
                  not witness, witness, f"{config.trials} random pairs of subalgebras")


def verify_direct_sum_laws(L1: SuperAlgebra, L2: SuperAlgebra, L3: Optional[SuperAlgebra] = None,
                           config: Optional[Config] = None) -> Report:
    """
    Check that solvabilizers split along a direct sum.

    Args:
        L1, L2: Summands
        L3: Optional third summand for the n-fold identity
        config: Sampling limits and closure mode

    Returns:
        Report of the "direct-sum" suite
    """
    config = config or Config()
    D = direct_sum(L1, L2)
    S = D.algebra
    report = Report("direct-sum", S.label)
    rng = random.Random(f"{config.seed}:{S.label}")
    closure, workers = config.closure, config.workers

    sol = solvabilizer(S, closure, workers)
    expected = _product(D, solvabilizer(L1, closure, workers), solvabilizer(L2, closure, workers))
    report.record("sol-sum", "sol(L1 ⊕ L2) = sol(L1) ⊕ sol(L2)", sol == expected,
                  difference_witness(sol, expected, "sol(L1 ⊕ L2)", "sol(L1) ⊕ sol(L2)"), f"|sol| = {len(sol)}")

    elements = list(S.elements())
    sample = elements if config.is_exhaustive(len(elements)) else sample_items(elements, config.trials, rng)
    witness = ""
    for x in sample:
        x1, x2 = D.split(x)
        lhs = solvabilizer_of(S, x, closure)
        rhs = _product(D, solvabilizer_of(L1, x1, closure), solvabilizer_of(L2, x2, closure))
        diff = difference_witness(lhs, rhs, "sol_L(x)", "sol_L1(x1) ⊕ sol_L2(x2)")
        if diff:
            witness = f"x={S.format_element(x)}: {diff}"
            break
    report.record("sol-element-sum", "sol_{L1⊕L2}(x1 + x2) = sol_L1(x1) ⊕ sol_L2(x2)", not witness, witness,
                  f"{len(sample)} elements x")

    _check_derived_series(report, D, rng, config)

    statement = "sol(L1 ⊕ L2 ⊕ L3) = sol(L1) ⊕ sol(L2) ⊕ sol(L3)"
    if L3 is None:
        report.skipped("sol-nfold", statement, "no third summand given")
    else:
        T = direct_sum(S, L3)
        sol3 = solvabilizer(T.algebra, closure, workers)
        expected3 = _product(T, sol, solvabilizer(L3, closure, workers))
        report.record("sol-nfold", statement, sol3 == expected3,
                      difference_witness(sol3, expected3, "sol of the triple sum", "product of sols"),
                      f"{T.algebra.label}, |sol| = {len(sol3)}")
    return report
