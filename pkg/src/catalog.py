"""
Named algebras and morphisms used as worked examples and verification seeds.

Entries are built on first request and cached. Names carry the field, e.g.
"E2@3"; identity morphisms are available as "id:<algebra name>".
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from .superalgebra import Morphism, SuperAlgebra, abelian_algebra, direct_sum, from_brackets, \
    identity_morphism, make_morphism


logger = logging.getLogger(__name__)


class UnknownCatalogEntryError(KeyError):
    """Raised for a name the catalog does not know"""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "algebra" or "morphism"
    provenance: str
    builder: Callable[[], Union[SuperAlgebra, Morphism]]


def _e1(p: int) -> SuperAlgebra:
    # [h, x] = x
    return from_brackets(p, 1, 1, {(0, 1): {1: 1}}, ("h", "x"), f"E1@{p}")


def _e2(p: int) -> SuperAlgebra:
    # [h, x] = x, [h, y] = -y, [x, y] = h; Jacobi and the p=3 cubic identity fail
    brackets = {(0, 1): {1: 1}, (0, 2): {2: p - 1}, (1, 2): {0: 1}}
    return from_brackets(p, 1, 2, brackets, ("h", "x", "y"), f"E2@{p}", waive=("jacobi", "cubic"))


def _sl2(p: int) -> SuperAlgebra:
    # [h, e] = 2e, [h, f] = -2f, [e, f] = h
    brackets = {(0, 1): {1: 2 % p}, (0, 2): {2: (-2) % p}, (1, 2): {0: 1}}
    return from_brackets(p, 3, 0, brackets, ("h", "e", "f"), f"sl2@{p}")


def _ab1(p: int) -> SuperAlgebra:
    return abelian_algebra(p, 1, 0, name=f"ab1@{p}", basis_names=("c",))


def _gl2split(p: int) -> SuperAlgebra:
    return direct_sum(catalog_get(f"sl2@{p}"), catalog_get(f"ab1@{p}"), name=f"gl2split@{p}").algebra


def _gl2_to_sl2() -> Morphism:
    images = np.zeros((4, 3), dtype=np.int64)
    images[:3, :3] = np.eye(3, dtype=np.int64)
    return make_morphism(catalog_get("gl2split@3"), catalog_get("sl2@3"), images, "gl2split->sl2@3")


def _chevalley() -> Morphism:
    # h -> -h, e -> -f, f -> -e
    images = [[2, 0, 0], [0, 0, 2], [0, 2, 0]]
    L = catalog_get("sl2@3")
    return make_morphism(L, L, images, "sl2-chevalley@3")


def _psi() -> Morphism:
    # h -> 2h, x -> y, y -> 2x
    images = [[2, 0, 0], [0, 0, 1], [0, 2, 0]]
    L = catalog_get("E2@3")
    return make_morphism(L, L, images, "E2-psi@3")


def _center_inclusion() -> Morphism:
    return make_morphism(catalog_get("c@3"), catalog_get("gl2split@3"), [[0, 0, 0, 1]], "c->gl2split@3")


def _registry() -> Dict[str, CatalogEntry]:
    entries = []
    for p in (3, 5):
        entries += [
            CatalogEntry(f"E1@{p}", "algebra", "two-dimensional example, [h,x]=x with x odd",
                         lambda p=p: _e1(p)),
            CatalogEntry(f"E2@{p}", "algebra", "three-dimensional example with odd x, y; Jacobi/cubic waived",
                         lambda p=p: _e2(p)),
            CatalogEntry(f"sl2@{p}", "algebra", "sl(2) in the Chevalley basis", lambda p=p: _sl2(p)),
            CatalogEntry(f"ab1@{p}", "algebra", "one-dimensional abelian algebra", lambda p=p: _ab1(p)),
        ]
    entries += [
        CatalogEntry("c@3", "algebra", "centre span{c} of gl2split@3",
                     lambda: abelian_algebra(3, 1, 0, name="c@3", basis_names=("c",))),
        CatalogEntry("gl2split@3", "algebra", "sl2@3 ⊕ span{c}", lambda: _gl2split(3)),
        CatalogEntry("gl2split->sl2@3", "morphism", "projection killing the centre", _gl2_to_sl2),
        CatalogEntry("sl2-chevalley@3", "morphism", "Chevalley involution of sl2@3", _chevalley),
        CatalogEntry("E2-psi@3", "morphism", "automorphism of E2@3", _psi),
        CatalogEntry("c->gl2split@3", "morphism", "inclusion of the centre", _center_inclusion),
    ]
    return {entry.name: entry for entry in entries}


_REGISTRY = _registry()


@lru_cache(maxsize=None)
def catalog_get(name: str) -> Union[SuperAlgebra, Morphism]:
    """
    Build (once) the catalog entry with this name.

    Raises:
        UnknownCatalogEntryError: no such entry
    """
    if name.startswith("id:"):
        target = catalog_get(name[3:])
        if not isinstance(target, SuperAlgebra):
            raise UnknownCatalogEntryError(name)
        return identity_morphism(target)
    entry = _REGISTRY.get(name)
    if entry is None:
        raise UnknownCatalogEntryError(name)
    logger.debug(f"Building catalog entry {name}")
    return entry.builder()


def catalog_entry(name: str) -> CatalogEntry:
    entry = _REGISTRY.get(name)
    if entry is None:
        raise UnknownCatalogEntryError(name)
    return entry


def catalog_names(kind: Optional[str] = None) -> List[str]:
    """Entry names in registration order, optionally filtered by kind"""
    return [name for name, entry in _REGISTRY.items() if kind is None or entry.kind == kind]


def catalog_morphism_pairs() -> List[Tuple[Morphism, Morphism]]:
    """
    Composable pairs (f, g) of surjective catalog morphisms, g.source == f.target.

    Identity morphisms on the sources and targets involved are included.
    """
    morphisms = [catalog_get(name) for name in catalog_names("morphism")]
    morphisms = [m for m in morphisms if m.is_surjective()]
    algebras = []
    for m in morphisms:
        for L in (m.source, m.target):
            if L not in algebras:
                algebras.append(L)
    morphisms += [identity_morphism(L) for L in algebras]
    return [(f, g) for f in morphisms for g in morphisms if g.source == f.target]
