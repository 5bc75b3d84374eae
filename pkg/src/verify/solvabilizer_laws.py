"""
Elementary solvabilizer laws on one algebra: relative monotonicity,
restriction and union rules, sol(L) as an intersection, nilpotentizer
inclusions, the solvable case, ideals, quotients, maximal solvable
subalgebras and the extension rule for subalgebras.
"""

import logging
import random
from typing import List, Optional, Union

from ..config import Config
from ..gf_linalg import Subspace, coordinates_in, enumerate_subspaces
from ..models import ElementSet
from ..solvabilizer import (
    PairOracle,
    get_oracle,
    maximal_solvable_subalgebras,
    nilpotentizer,
    nilpotentizer_of,
    solvabilizer,
    solvabilizer_of,
    solvabilizer_rel,
)
from ..superalgebra import SuperAlgebra, is_ideal, is_solvable, is_subalgebra, quotient, subalgebra_algebra
from ..utils import sample_items
from .generator import Instance
from .report import Report, difference_witness, subset_witness


logger = logging.getLogger(__name__)

SUBSET_SIZE = 6


def _random_subset(rng: random.Random, L: SuperAlgebra, pool, low: int, high: int) -> ElementSet:
    size = rng.randint(low, min(high, len(pool)))
    return ElementSet.of(L, rng.sample(pool, size))


def _describe(label: str, S: ElementSet) -> str:
    return f"{label}={S.format()}"


def _check_relative_laws(report: Report, L: SuperAlgebra, oracle: PairOracle, rng: random.Random, trials: int):
    pool = list(L.elements())
    monotone = restriction = union = None
    for t in range(trials):
        B = _random_subset(rng, L, pool, 1, SUBSET_SIZE)
        A = _random_subset(rng, L, list(B), 0, len(B))
        C = _random_subset(rng, L, pool, 0, 4)
        D = _random_subset(rng, L, pool, 0, 4)
        context = ", ".join([f"trial {t}", _describe("A", A), _describe("B", B), _describe("C", C)])

        sol_AC = solvabilizer_rel(L, A, C, oracle=oracle)
        sol_BC = solvabilizer_rel(L, B, C, oracle=oracle)
        miss = subset_witness(sol_AC, sol_BC, "sol_A(C)", "sol_B(C)")
        if not miss:
            miss = subset_witness(solvabilizer_rel(L, C, B, oracle=oracle), solvabilizer_rel(L, C, A, oracle=oracle),
                                  "sol_C(B)", "sol_C(A)")
        if miss and monotone is None:
            monotone = f"{context}: {miss}"

        diff = difference_witness(sol_AC, A.intersection(sol_BC), "sol_A(C)", "A ∩ sol_B(C)")
        if diff and restriction is None:
            restriction = f"{context}: {diff}"

        lhs = solvabilizer_rel(L, C, A.union(D), oracle=oracle)
        rhs = solvabilizer_rel(L, C, A, oracle=oracle).intersection(solvabilizer_rel(L, C, D, oracle=oracle))
        diff = difference_witness(lhs, rhs, "sol_C(A∪D)", "sol_C(A) ∩ sol_C(D)")
        if diff and union is None:
            union = f"{context}, {_describe('D', D)}: {diff}"

    detail = f"{trials} random subset triples"
    report.record("relative-monotone", "A ⊆ B implies sol_A(C) ⊆ sol_B(C) and sol_C(B) ⊆ sol_C(A)",
                  monotone is None, monotone or "", detail)
    report.record("relative-restriction", "A ⊆ B implies sol_A(C) = A ∩ sol_B(C)",
                  restriction is None, restriction or "", detail)
    report.record("relative-union", "sol_C(A ∪ D) = sol_C(A) ∩ sol_C(D)", union is None, union or "", detail)


def _check_intersection(report: Report, L: SuperAlgebra, sol: ElementSet, oracle: PairOracle):
    members = list(L.elements())
    for z in L.elements():
        members = [x for x in members if oracle(x, z)]
    reference = ElementSet.of(L, members)
    report.record("sol-intersection", "sol(L) is the intersection of sol_L(z) over all z",
                  sol == reference, difference_witness(sol, reference, "sol(L)", "∩ sol_L(z)"))


def _check_nilpotent(report: Report, L: SuperAlgebra, sol: ElementSet, oracle: PairOracle, sample, config: Config):
    witness = ""
    for z in sample:
        nil_z = nilpotentizer_of(L, z, config.closure, config.workers)
        sol_z = solvabilizer_of(L, z, oracle=oracle)
        miss = subset_witness(nil_z, sol_z, "nil_L(z)", "sol_L(z)")
        if miss:
            witness = f"z={L.format_element(z)}: {miss}"
            break
    report.record("nil-in-sol-element", "nil_L(z) ⊆ sol_L(z)", not witness, witness, f"{len(sample)} elements z")
    nil = nilpotentizer(L, config.closure, config.workers)
    report.record("nil-in-sol", "nil(L) ⊆ sol(L)", nil.issubset(sol), subset_witness(nil, sol, "nil(L)", "sol(L)"))


def _check_solvable_case(report: Report, L: SuperAlgebra, sol: ElementSet):
    statement = "L solvable implies sol(L) = L"
    if not is_solvable(L, L.full_space()):
        report.skipped("solvable-case", statement, "L is not solvable")
        return
    everything = ElementSet.everything(L)
    report.record("solvable-case", statement, sol == everything, difference_witness(sol, everything, "sol(L)", "L"))


def _intrinsic_solvabilizer(L: SuperAlgebra, S: Subspace, oracle: PairOracle, config: Config) -> ElementSet:
    """sol of a bracket-closed subspace computed inside it"""
    if S.is_graded(L.dim_even):
        algebra, inclusion = subalgebra_algebra(L, S)
        return solvabilizer(algebra, config.closure, config.workers).image(inclusion)
    elements = S.elements()
    return ElementSet.of(L, [x for x in elements if all(oracle(x, z) for z in elements)])


def _check_ideals(report: Report, L: SuperAlgebra, sol: ElementSet, oracle: PairOracle, subspaces: List[Subspace],
                  sample, exhaustive: bool, rng: random.Random, config: Config):
    ideals = [S for S in subspaces if not S.is_zero() and is_ideal(L, S)]
    graded = [S for S in ideals if S.is_graded(L.dim_even)]

    witness = ""
    for S in ideals:
        inside = ElementSet.of(L, [x for x in sol if x in S])
        miss = subset_witness(inside, _intrinsic_solvabilizer(L, S, oracle, config), "sol(L) ∩ I", "sol(I)")
        if miss:
            witness = f"I spanned by {[L.format_element(b) for b in S.basis]}: {miss}"
            break
    report.record("ideal-restriction", "sol(L) ∩ I ⊆ sol(I) for every ideal I", not witness, witness,
                  f"{len(ideals)} ideals ({len(graded)} graded)")

    witness = ""
    checked = 0
    for J in graded:
        if J.is_full():
            continue
        Q = quotient(L, J)
        pi = Q.projection
        for z in (sample if exhaustive else sample_items(sample, config.trials, rng)):
            image = solvabilizer_of(L, z, oracle=oracle).image(pi)
            target = solvabilizer_of(Q.algebra, pi(z), config.closure)
            checked += 1
            miss = subset_witness(image, target, "π(sol_L(z))", "sol_{L/J}(π z)")
            if miss:
                witness = f"J spanned by {[L.format_element(b) for b in J.basis]}, z={L.format_element(z)}: {miss}"
                break
        if witness:
            break
    report.record("quotient-inclusion", "π(sol_L(z)) ⊆ sol_{L/J}(π(z)) for graded ideals J",
                  not witness, witness, f"{checked} (J, z) pairs ({'all' if exhaustive else 'sampled'})")


def _check_maximal(report: Report, L: SuperAlgebra, oracle: PairOracle, sample, config: Config):
    maximal = [frozenset(M.elements()) for M in maximal_solvable_subalgebras(L, config=config)]
    witness = ""
    for z in sample:
        union = ElementSet.of(L, [x for M in maximal if z in M for x in M])
        row = solvabilizer_of(L, z, oracle=oracle)
        diff = difference_witness(row, union, "sol_L(z)", "union of maximal solvable subalgebras")
        if diff:
            witness = f"z={L.format_element(z)}: {diff}"
            break
    report.record("maximal-union", "sol_L(z) is the union of the maximal solvable subalgebras containing z",
                  not witness, witness, f"{len(maximal)} maximal solvable subalgebras, {len(sample)} elements z")


def _check_extension(report: Report, L: SuperAlgebra, oracle: PairOracle, subspaces: List[Subspace],
                     exhaustive: bool, rng: random.Random, config: Config):
    subalgebras = [S for S in subspaces
                   if not S.is_zero() and S.is_graded(L.dim_even) and is_subalgebra(L, S)]
    chosen = subalgebras if exhaustive else sample_items(subalgebras, config.trials, rng)
    witness = ""
    checked = 0
    for S in chosen:
        algebra, inclusion = subalgebra_algebra(L, S)
        for x in (S.elements() if exhaustive else sample_items(S.elements(), 3, rng)):
            inside = ElementSet.of(L, [y for y in solvabilizer_of(L, x, oracle=oracle) if y in S])
            intrinsic = solvabilizer_of(algebra, coordinates_in(S, x), config.closure).image(inclusion)
            checked += 1
            diff = difference_witness(inside, intrinsic, "sol_L(x) ∩ g", "sol_g(x)")
            if diff:
                witness = f"g spanned by {[L.format_element(b) for b in S.basis]}, x={L.format_element(x)}: {diff}"
                break
        if witness:
            break
    report.record("extension", "sol_g(x) = sol_L(x) ∩ g for graded subalgebras g and x in g",
                  not witness, witness,
                  f"{checked} (g, x) pairs from {len(subalgebras)} graded subalgebras "
                  f"({'all' if exhaustive else 'sampled'})")


def _check_closure_modes(report: Report, L: SuperAlgebra, sol: ElementSet, config: Config):
    # the graded closure of {x, z} contains the plain one, so it is solvable less often
    other = "graded" if config.closure == "plain" else "plain"
    alternative = solvabilizer(L, other, config.workers)
    plain, graded = (sol, alternative) if config.closure == "plain" else (alternative, sol)
    detail = "modes agree" if plain == graded else \
        f"modes differ: {difference_witness(plain, graded, 'plain', 'graded')}"
    report.record("closure-modes", "sol(L) under graded closure ⊆ sol(L) under plain closure",
                  graded.issubset(plain), subset_witness(graded, plain, "graded sol(L)", "plain sol(L)"), detail)


def verify_solvabilizer_laws(instance: Union[Instance, SuperAlgebra], config: Optional[Config] = None,
                             oracle: Optional[PairOracle] = None) -> Report:
    """
    Check the elementary solvabilizer laws on one algebra.

    Args:
        instance: Instance or bare algebra
        config: Sampling limits, caps and closure mode
        oracle: Pair oracle to test against the library (defaults to the shared one)

    Returns:
        Report of the "solvabilizer" suite
    """
    config = config or Config()
    if isinstance(instance, SuperAlgebra):
        instance = Instance(instance.label, instance)
    L = instance.algebra
    report = Report("solvabilizer", instance.descriptor)
    oracle = oracle or get_oracle(L, "solvable", config.closure)
    rng = random.Random(f"{config.seed}:{instance.descriptor}")
    elements = list(L.elements())
    exhaustive = config.is_exhaustive(len(elements))
    sample = elements if exhaustive else sample_items(elements, config.trials, rng)
    if not exhaustive:
        logger.warning(f"{L.label}: sampling {len(sample)} of {len(elements)} elements")

    sol = solvabilizer(L, config.closure, config.workers)
    _check_relative_laws(report, L, oracle, rng, config.trials)
    _check_intersection(report, L, sol, oracle)
    _check_nilpotent(report, L, sol, oracle, sample, config)
    _check_solvable_case(report, L, sol)

    if config.allows_subspace_enumeration(L.n, L.p):
        subspaces = list(enumerate_subspaces(L.p, L.n))
        _check_ideals(report, L, sol, oracle, subspaces, sample, exhaustive, rng, config)
        _check_maximal(report, L, oracle, sample, config)
        _check_extension(report, L, oracle, subspaces, exhaustive, rng, config)
    else:
        reason = f"n={L.n}, p={L.p} past the subspace enumeration caps"
        for claim, statement in (
            ("ideal-restriction", "sol(L) ∩ I ⊆ sol(I) for every ideal I"),
            ("quotient-inclusion", "π(sol_L(z)) ⊆ sol_{L/J}(π(z)) for graded ideals J"),
            ("maximal-union", "sol_L(z) is the union of the maximal solvable subalgebras containing z"),
            ("extension", "sol_g(x) = sol_L(x) ∩ g for graded subalgebras g and x in g"),
        ):
            report.skipped(claim, statement, reason)

    _check_closure_modes(report, L, sol, config)
    return report
