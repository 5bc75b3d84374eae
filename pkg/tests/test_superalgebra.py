import numpy as np
import pytest

from src.catalog import catalog_get
from src.gf_linalg import FieldError, enumerate_subspaces, rref
from src.superalgebra import (
    AxiomViolationError,
    MorphismError,
    NotGradedError,
    NotIdealError,
    bracket,
    bracket_table,
    change_basis,
    derived_series,
    direct_sum,
    from_brackets,
    generated_subalgebra,
    identity_morphism,
    is_graded_ideal,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    lower_central_series,
    make_morphism,
    pullback,
    quotient,
    subalgebra_algebra,
    validate,
)

H, X, Y = (1, 0, 0), (0, 1, 0), (0, 0, 1)
E2_BRACKETS = {(0, 1): {1: 1}, (0, 2): {2: 2}, (1, 2): {0: 1}}


def kinds(error):
    return {v.kind for v in error.violations}


def test_bracket_signs(e1, e2):
    assert bracket(e1, (1, 0), (0, 1)) == (0, 1)
    assert bracket(e1, (0, 1), (1, 0)) == (0, 2)
    # odd-odd brackets are symmetric
    assert bracket(e2, X, Y) == H
    assert bracket(e2, Y, X) == H
    assert bracket(e2, H, Y) == (0, 0, 2)


def test_e2_needs_waiver():
    with pytest.raises(AxiomViolationError) as info:
        from_brackets(3, 1, 2, E2_BRACKETS, ("h", "x", "y"))
    assert {"jacobi", "cubic"} <= kinds(info.value)


def test_e2_waived_violations_are_kept(e2):
    assert e2.waived == ("cubic", "jacobi")
    assert {v.kind for v in e2.waived_violations} == {"cubic", "jacobi"}


def test_only_jacobi_and_cubic_can_be_waived():
    with pytest.raises(ValueError):
        from_brackets(3, 1, 1, {(0, 1): {1: 1}}, waive=("skew",))


def test_skew_violation_is_reported():
    table = np.zeros((2, 2, 2), dtype=np.int64)
    table[0, 1, 0] = 1
    table[1, 0, 0] = 1
    with pytest.raises(AxiomViolationError) as info:
        validate(3, 2, 0, table)
    assert "skew" in kinds(info.value)


def test_grading_violation_is_reported():
    table = np.zeros((2, 2, 2), dtype=np.int64)
    table[0, 0, 1] = 1
    with pytest.raises(AxiomViolationError) as info:
        validate(3, 1, 1, table)
    assert "grading" in kinds(info.value)


def test_even_diagonal_rejected():
    with pytest.raises(ValueError):
        from_brackets(3, 1, 0, {(0, 0): {0: 1}})


def test_characteristic_two_rejected():
    with pytest.raises(FieldError):
        from_brackets(2, 1, 1, {(0, 1): {1: 1}})


def test_sl2_is_a_lie_algebra(sl2):
    assert sl2.waived == ()
    assert not is_solvable(sl2, sl2.full_space())


def test_series_of_e1(e1):
    full = e1.full_space()
    assert [S.rank for S in derived_series(e1, full)] == [2, 1, 0]
    assert [S.rank for S in lower_central_series(e1, full)] == [2, 1, 1]
    assert is_solvable(e1, full)
    assert not is_nilpotent(e1, full)


def test_e2_is_perfect(e2):
    series = derived_series(e2, e2.full_space())
    assert [S.rank for S in series] == [3, 3]
    assert not is_solvable(e2, e2.full_space())


@pytest.mark.parametrize("name", ["E1@3", "E1@5", "E2@3", "sl2@3", "gl2split@3"])
def test_series_terms_are_graded_ideals(name):
    L = catalog_get(name)
    for S in derived_series(L, L.full_space()) + lower_central_series(L, L.full_space()):
        assert is_graded_ideal(L, S), S.basis


def test_generated_subalgebra(e2):
    assert generated_subalgebra(e2, [X, Y]).dim == 3
    assert generated_subalgebra(e2, [H, X]).dim == 2
    assert generated_subalgebra(e2, []).dim == 0


def test_graded_closure(e1):
    plain = generated_subalgebra(e1, [(1, 1)], "plain")
    graded = generated_subalgebra(e1, [(1, 1)], "graded")
    assert plain.dim == 1 and not plain.graded
    assert graded.dim == 2 and graded.graded


def test_generated_subalgebra_is_monotone_and_idempotent(e2):
    elements = list(e2.elements())
    for x in elements:
        one = generated_subalgebra(e2, [x])
        assert generated_subalgebra(e2, one.space.basis).space == one.space
        for y in elements:
            both = generated_subalgebra(e2, [x, y])
            assert one.space.issubset(both.space)
            assert rref([x, y], 3, 3).issubset(both.space)
            assert is_subalgebra(e2, both)


def test_closed_span_generates_itself(e2, gl2split):
    for L in (e2, gl2split):
        for S in enumerate_subspaces(L.p, L.n):
            if is_subalgebra(L, S):
                assert generated_subalgebra(L, S.basis).space == S


def test_unknown_closure_mode(e1):
    with pytest.raises(ValueError):
        generated_subalgebra(e1, [(1, 0)], "loose")


def test_ideals(e1):
    assert is_ideal(e1, rref([(0, 1)], 3))
    assert not is_ideal(e1, rref([(1, 0)], 3))


def test_make_morphism_checks_parity(e1):
    with pytest.raises(MorphismError):
        make_morphism(e1, e1, [[0, 1], [0, 1]])


def test_make_morphism_checks_brackets(e1):
    with pytest.raises(MorphismError):
        make_morphism(e1, e1, [[2, 0], [0, 1]])


def test_make_morphism_checks_shape(e1, e2):
    with pytest.raises(MorphismError):
        make_morphism(e1, e2, [[1, 0], [0, 1]])


def test_projection_kernel_and_image(gl2split, sl2):
    images = np.zeros((4, 3), dtype=np.int64)
    images[:3, :3] = np.eye(3, dtype=np.int64)
    phi = make_morphism(gl2split, sl2, images)
    assert phi.kernel == rref([(0, 0, 0, 1)], 3)
    assert phi.is_surjective()
    assert not phi.is_injective()
    assert phi.compose(identity_morphism(gl2split)) == phi


def test_direct_sum_layout(e1):
    D = direct_sum(e1, e1)
    S = D.algebra
    assert (S.dim_even, S.dim_odd) == (2, 2)
    assert S.basis_names == ("h_1", "h_2", "x_1", "x_2")
    v = D.join((1, 2), (2, 1))
    assert v == (1, 2, 2, 1)
    assert D.split(v) == ((1, 2), (2, 1))
    # summands commute
    assert bracket(S, (1, 0, 0, 0), (0, 0, 0, 1)) == (0, 0, 0, 0)


def test_direct_sum_needs_one_field():
    with pytest.raises(FieldError):
        direct_sum(catalog_get("E1@3"), catalog_get("E1@5"))


def test_direct_sum_keeps_waivers(e1, e2):
    assert direct_sum(e2, e1).algebra.waived == ("cubic", "jacobi")


def test_quotient_by_centre(gl2split, sl2):
    Q = quotient(gl2split, rref([(0, 0, 0, 1)], 3))
    assert Q.algebra == sl2
    assert Q.complement == (0, 1, 2)
    assert Q.projection.kernel == Q.ideal


def test_quotient_rejects_bad_subspaces(e1):
    with pytest.raises(NotGradedError):
        quotient(e1, rref([(1, 1)], 3))
    with pytest.raises(NotIdealError):
        quotient(e1, rref([(1, 0)], 3))


def test_subalgebra_algebra(e2):
    algebra, inclusion = subalgebra_algebra(e2, rref([H, X], 3))
    assert (algebra.dim_even, algebra.dim_odd) == (1, 1)
    assert algebra.basis_names == ("h", "x")
    assert is_solvable(algebra, algebra.full_space())
    assert inclusion.is_injective()


def test_change_basis_gives_isomorphism(e2):
    algebra, iso = change_basis(e2, [[2, 0, 0], [0, 0, 1], [0, 2, 0]])
    assert iso.is_injective() and iso.is_surjective()
    assert algebra.basis_names == ("h'", "x'", "y'")
    # images of brackets agree with brackets of images
    for a in range(3):
        for b in range(3):
            u, v = algebra.basis_vector(a), algebra.basis_vector(b)
            assert iso(bracket(algebra, u, v)) == bracket(e2, iso(u), iso(v))


def test_change_basis_must_be_graded(e1):
    with pytest.raises(NotGradedError):
        change_basis(e1, [[1, 1], [0, 1]])


def test_pullback_of_projection_and_identity(gl2split, sl2):
    images = np.zeros((4, 3), dtype=np.int64)
    images[:3, :3] = np.eye(3, dtype=np.int64)
    phi = make_morphism(gl2split, sl2, images)
    pb = pullback(phi, identity_morphism(sl2))
    assert pb.algebra.n == 4
    assert pb.left.is_surjective() and pb.right.is_surjective()
    assert phi.compose(pb.left) == identity_morphism(sl2).compose(pb.right)


def test_pullback_needs_surjective_legs(e1, gl2split):
    inclusion = catalog_get("c->gl2split@3")
    with pytest.raises(MorphismError):
        pullback(inclusion, inclusion)


def test_bracket_table(e1):
    assert bracket_table(e1) == {(0, 1): {1: 1}}


def test_format_element(e2):
    assert e2.format_element((1, 0, 2)) == "h+2y"
    assert e2.format_element((0, 0, 0)) == "0"
