"""
Morphisms and solvabilizers: images, the functor restricting morphisms to
solvabilizers, direct sums of morphisms, short exact sequences and pullbacks.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from ..config import Config
from ..gf_linalg import coordinates_in
from ..models import ElementSet
from ..solvabilizer import nilpotentizer, solvabilizer
from ..superalgebra import (
    Morphism,
    MorphismError,
    SuperAlgebra,
    direct_sum_morphism,
    identity_morphism,
    make_morphism,
    pullback,
    subalgebra_algebra,
)
from .report import PreconditionError, Report, difference_witness, subset_witness


logger = logging.getLogger(__name__)


def _label(phi: Morphism) -> str:
    return phi.name or f"{phi.source.label}->{phi.target.label}"


def kernel_outside(phi: Morphism, members: ElementSet) -> Optional[Tuple[int, ...]]:
    """First nonzero kernel element not in members, None if there is none"""
    for v in phi.kernel.elements():
        if any(v) and v not in members:
            return v
    return None


def image_solvabilizer(phi: Morphism, config: Config) -> ElementSet:
    """sol(φ(L)) as a subset of the target, computed inside the image"""
    if phi.is_surjective():
        return solvabilizer(phi.target, config.closure, config.workers)
    algebra, inclusion = subalgebra_algebra(phi.target, phi.image)
    return solvabilizer(algebra, config.closure, config.workers).image(inclusion)


def verify_morphism_laws(phi: Morphism, then: Optional[Morphism] = None, config: Optional[Config] = None) -> Report:
    """
    Check image inclusion/equality and the functor laws for one morphism.

    Args:
        phi: Morphism L1 -> L2
        then: Optional morphism L2 -> L3 for the composition law
        config: Closure mode and workers

    Raises:
        PreconditionError: then does not start where phi ends
    """
    config = config or Config()
    if then is not None and then.source != phi.target:
        raise PreconditionError(f"{_label(then)} does not start at the target of {_label(phi)}")
    report = Report("morphism", _label(phi) if then is None else f"{_label(then)} after {_label(phi)}")
    L1 = phi.source
    sol1 = solvabilizer(L1, config.closure, config.workers)
    image = sol1.image(phi)
    sol_image = image_solvabilizer(phi, config)

    report.record("image-inclusion", "φ(sol(L1)) ⊆ sol(φ(L1))", image.issubset(sol_image),
                  subset_witness(image, sol_image, "φ(sol(L1))", "sol(φ(L1))"))

    statement = "ker φ ⊆ sol(L1) implies φ(sol(L1)) = sol(φ(L1))"
    outside = kernel_outside(phi, sol1)
    if outside is not None:
        report.skipped("image-equality", statement, f"kernel element {L1.format_element(outside)} is not in sol(L1)")
    else:
        report.record("image-equality", statement, image == sol_image,
                      difference_witness(image, sol_image, "φ(sol(L1))", "sol(φ(L1))"))

    identity = identity_morphism(L1)
    report.record("functor-identity", "the restriction of id_L to sol(L) is id_sol(L)",
                  sol1.image(identity) == sol1, difference_witness(sol1.image(identity), sol1, "id(sol)", "sol"))

    statement = "restriction to solvabilizers preserves composition"
    if then is None:
        return report
    if not (phi.is_surjective() and then.is_surjective()):
        report.skipped("functor-composition", statement, "both morphisms must be surjective")
        return report
    composite = then.compose(phi)
    sol2 = solvabilizer(phi.target, config.closure, config.workers)
    sol3 = solvabilizer(then.target, config.closure, config.workers)
    witness = ""
    for x in sol1:
        y = phi(x)
        if y not in sol2 or then(y) not in sol3 or then(y) != composite(x):
            witness = f"x={L1.format_element(x)}"
            break
    report.record("functor-composition", statement, not witness, witness, f"{len(sol1)} elements of sol(L1)")
    return report


def verify_direct_sum_morphism(phi1: Morphism, phi2: Morphism, config: Optional[Config] = None) -> Report:
    """
    sol(φ(L)) = φ1(sol(L1)) ⊕ φ2(sol(L2)) for φ = φ1 ⊕ φ2 when ker φ ⊆ nil(L).
    """
    config = config or Config()
    phi, src, tgt = direct_sum_morphism(phi1, phi2)
    report = Report("direct-sum-morphism", f"{_label(phi1)} + {_label(phi2)}")
    statement = "ker φ ⊆ nil(L) implies sol(φ(L)) = φ1(sol(L1)) ⊕ φ2(sol(L2))"
    nil = nilpotentizer(src.algebra, config.closure, config.workers)
    outside = kernel_outside(phi, nil)
    if outside is not None:
        report.skipped("sum-image", statement,
                       f"kernel element {src.algebra.format_element(outside)} is not in nil(L)")
        return report
    lhs = image_solvabilizer(phi, config)
    part1 = solvabilizer(phi1.source, config.closure, config.workers).image(phi1)
    part2 = solvabilizer(phi2.source, config.closure, config.workers).image(phi2)
    rhs = ElementSet.of(tgt.algebra, (tgt.join(a, b) for a in part1 for b in part2))
    report.record("sum-image", statement, lhs == rhs, difference_witness(lhs, rhs, "sol(φ(L))", "φ1(sol) ⊕ φ2(sol)"))
    return report


def verify_ses(alpha: Morphism, beta: Morphism, config: Optional[Config] = None) -> Report:
    """
    For an exact 0 -> A -> B -> C -> 0: β(sol(B)) ⊆ sol(C) and
    ker(β restricted to sol(B)) ⊆ α(sol(A)).

    Raises:
        PreconditionError: the sequence is not short exact
    """
    config = config or Config()
    if alpha.target != beta.source:
        raise PreconditionError("α must end where β starts")
    if not alpha.is_injective():
        raise PreconditionError(f"{_label(alpha)} is not injective")
    if not beta.is_surjective():
        raise PreconditionError(f"{_label(beta)} is not surjective")
    if alpha.image != beta.kernel:
        raise PreconditionError(f"image of {_label(alpha)} differs from the kernel of {_label(beta)}")

    report = Report("ses", f"0 -> {alpha.source.label} -> {alpha.target.label} -> {beta.target.label} -> 0")
    sol_a = solvabilizer(alpha.source, config.closure, config.workers)
    sol_b = solvabilizer(beta.source, config.closure, config.workers)
    sol_c = solvabilizer(beta.target, config.closure, config.workers)

    pushed = sol_b.image(beta)
    report.record("ses-image", "β(sol(B)) ⊆ sol(C)", pushed.issubset(sol_c),
                  subset_witness(pushed, sol_c, "β(sol(B))", "sol(C)"))
    zero = beta.target.zero_vector()
    kernel = ElementSet.of(beta.source, [x for x in sol_b if beta(x) == zero])
    lifted = sol_a.image(alpha)
    report.record("ses-kernel", "ker(β|sol(B)) ⊆ α(sol(A))", kernel.issubset(lifted),
                  subset_witness(kernel, lifted, "ker(β|sol(B))", "α(sol(A))"), f"|ker| = {len(kernel)}")
    return report


def verify_pullback(f: Morphism, g: Morphism, cone: Optional[Tuple[SuperAlgebra, Morphism, Morphism]] = None,
                    config: Optional[Config] = None) -> Report:
    """
    Check the fiber product P = L ×_M N: surjective legs, the universal
    property against a cone (K, u, v), and sol(P) = sol(L) ×_sol(M) sol(N).

    Args:
        f: Surjective L -> M
        g: Surjective N -> M
        cone: (K, u, v) with f∘u = g∘v; defaults to the pullback's own legs
        config: Closure mode and workers

    Raises:
        PreconditionError: different targets, non-surjective legs, or a cone that does not commute
    """
    config = config or Config()
    if f.target != g.target:
        raise PreconditionError("pullback legs must share their target")
    if not (f.is_surjective() and g.is_surjective()):
        raise PreconditionError("pullback legs must be surjective")
    pb = pullback(f, g)
    report = Report("pullback", f"{_label(f)} x {_label(g)}")
    P = pb.algebra

    report.record("legs-surjective", "p_L and p_N are surjective",
                  pb.left.is_surjective() and pb.right.is_surjective(),
                  "p_L" if not pb.left.is_surjective() else "p_N")
    report.record("square-commutes", "f ∘ p_L = g ∘ p_N", f.compose(pb.left) == g.compose(pb.right),
                  "basis images differ")

    K, u, v = cone if cone is not None else (P, pb.left, pb.right)
    if u.source != K or v.source != K or u.target != f.source or v.target != g.source:
        raise PreconditionError("cone morphisms must go from K to the sources of f and g")
    if f.compose(u) != g.compose(v):
        raise PreconditionError("cone does not commute: f ∘ u differs from g ∘ v")
    fiber = pb.inclusion.image
    rows = [coordinates_in(fiber, pb.ambient.join(u(e), v(e))) for e in (K.basis_vector(k) for k in range(K.n))]
    statement = "a cone (K, u, v) factors through P by a unique h"
    try:
        h = make_morphism(K, P, np.array(rows, dtype=np.int64).reshape(K.n, P.n), "h")
        holds = pb.left.compose(h) == u and pb.right.compose(h) == v and pb.inclusion.is_injective()
        report.record("universal-property", statement, holds, "legs of h differ from (u, v)")
    except MorphismError as e:
        report.failed("universal-property", statement, str(e))

    sol_p = solvabilizer(P, config.closure, config.workers).image(pb.inclusion)
    sol_l = solvabilizer(f.source, config.closure, config.workers)
    sol_n = solvabilizer(g.source, config.closure, config.workers)
    expected = ElementSet.of(pb.ambient.algebra,
                             (pb.ambient.join(x, y) for x in sol_l for y in sol_n if f(x) == g(y)))
    report.record("sol-fiber-product", "sol(P) = sol(L) ×_sol(M) sol(N)", sol_p == expected,
                  difference_witness(sol_p, expected, "sol(P)", "fiber product of sols"), f"|sol(P)| = {len(sol_p)}")
    return report
