import pytest

from src.catalog import UnknownCatalogEntryError, catalog_entry, catalog_get, catalog_morphism_pairs, catalog_names
from src.superalgebra import Morphism, SuperAlgebra


def test_names_and_kinds():
    names = catalog_names()
    assert {"E1@3", "E2@3", "sl2@3", "gl2split@3", "E1@5"} <= set(names)
    assert set(catalog_names("morphism")) == {"gl2split->sl2@3", "sl2-chevalley@3", "E2-psi@3", "c->gl2split@3"}
    assert catalog_entry("E2@3").kind == "algebra"


def test_entries_are_cached():
    assert catalog_get("E2@3") is catalog_get("E2@3")


def test_e2_waives_jacobi_and_cubic(e2):
    assert isinstance(e2, SuperAlgebra)
    assert e2.waived == ("cubic", "jacobi")
    assert e2.waived_violations


def test_gl2split_is_sl2_plus_centre(gl2split, sl2):
    assert gl2split.n == 4
    assert gl2split.basis_names[-1] == "c"
    assert not gl2split.waived


def test_identity_entries(e1):
    phi = catalog_get("id:E1@3")
    assert isinstance(phi, Morphism)
    assert phi.source == phi.target == e1
    with pytest.raises(UnknownCatalogEntryError):
        catalog_get("id:E2-psi@3")


def test_unknown_entry():
    with pytest.raises(UnknownCatalogEntryError):
        catalog_get("E9@3")
    with pytest.raises(UnknownCatalogEntryError):
        catalog_entry("E9@3")


def test_morphism_pairs_compose():
    pairs = catalog_morphism_pairs()
    assert pairs
    for f, g in pairs:
        assert g.source == f.target
        assert f.is_surjective() and g.is_surjective()
