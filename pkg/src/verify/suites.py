"""
Named verification suites over the catalog and generated instances.
"""

import logging
from typing import Callable, Dict, List, Optional

from ..catalog import catalog_get, catalog_morphism_pairs
from ..config import Config
from ..progress import create_progress_tracker
from ..superalgebra import identity_morphism, make_morphism, zero_algebra
from .direct_sum_laws import verify_direct_sum_laws
from .generator import Instance, InstanceGenerator
from .measure_laws import (
    verify_direct_sum_measure,
    verify_indicator_product,
    verify_isomorphism_invariance,
    verify_measure_laws,
)
from .morphism_laws import verify_direct_sum_morphism, verify_morphism_laws, verify_pullback, verify_ses
from .report import Report
from .solvabilizer_laws import verify_solvabilizer_laws


logger = logging.getLogger(__name__)


def _instances(config: Config, primes) -> List[Instance]:
    generator = InstanceGenerator(seed=config.seed, primes=primes, max_dim=config.subspace_max_dim)
    return generator.generate(config.instance_count)


def _solvabilizer_suite(config: Config, primes) -> List[Report]:
    catalog = [Instance(name, catalog_get(name)) for name in ("E1@3", "E2@3", "gl2split@3")]
    instances = catalog + _instances(config, primes)
    reports = []
    with create_progress_tracker(len(instances), "solvabilizer laws", disable=not config.show_progress,
                                 unit="instances") as progress:
        for instance in instances:
            reports.append(verify_solvabilizer_laws(instance, config))
            progress.update()
    return reports


def _direct_sum_suite(config: Config, primes) -> List[Report]:
    e1, e2, ab1 = catalog_get("E1@3"), catalog_get("E2@3"), catalog_get("ab1@3")
    return [
        verify_direct_sum_laws(e2, e1, ab1, config),
        verify_direct_sum_laws(e1, e1, config=config),
    ]


def _morphism_suite(config: Config, primes) -> List[Report]:
    reports = [verify_morphism_laws(catalog_get("c->gl2split@3"), config=config)]
    reports += [verify_morphism_laws(f, g, config) for f, g in catalog_morphism_pairs()]
    projection = catalog_get("gl2split->sl2@3")
    reports.append(verify_direct_sum_morphism(projection, identity_morphism(catalog_get("ab1@3")), config))
    return reports


def _ses_suite(config: Config, primes) -> List[Report]:
    e2 = catalog_get("E2@3")
    zero = zero_algebra(3)
    return [
        verify_ses(catalog_get("c->gl2split@3"), catalog_get("gl2split->sl2@3"), config),
        verify_ses(make_morphism(zero, e2, [], "0->E2@3"), identity_morphism(e2), config),
    ]


def _pullback_suite(config: Config, primes) -> List[Report]:
    e2 = catalog_get("E2@3")
    sl2 = catalog_get("sl2@3")
    identity = identity_morphism(e2)
    return [
        verify_pullback(identity, identity, (e2, identity, identity), config),
        verify_pullback(catalog_get("gl2split->sl2@3"), identity_morphism(sl2), config=config),
        verify_pullback(catalog_get("gl2split->sl2@3"), catalog_get("sl2-chevalley@3"), config=config),
    ]


def _measure_suite(config: Config, primes) -> List[Report]:
    return [
        verify_measure_laws(catalog_get("gl2split->sl2@3"), config),
        verify_measure_laws(catalog_get("E2-psi@3"), config),
        verify_measure_laws(catalog_get("sl2-chevalley@3"), config),
    ]


def _isomorphism_suite(config: Config, primes) -> List[Report]:
    psi = catalog_get("E2-psi@3")
    instances = [Instance(psi.name, psi.source, psi)]
    instances += [i for i in _instances(config, primes) if i.isomorphism is not None]
    return [verify_isomorphism_invariance(instance, config) for instance in instances]


def _indicator_suite(config: Config, primes) -> List[Report]:
    return [verify_indicator_product(catalog_get("E2@3"), catalog_get("E1@3"), seed=config.seed, config=config)]


def _direct_sum_measure_suite(config: Config, primes) -> List[Report]:
    e2, sl2 = catalog_get("E2@3"), catalog_get("sl2@3")
    return [
        verify_direct_sum_measure(sl2, sl2, config),
        verify_direct_sum_measure(e2, e2, config),
        verify_direct_sum_measure(sl2, catalog_get("E1@3"), config),
    ]


SUITES: Dict[str, Callable[[Config, tuple], List[Report]]] = {
    "solvabilizer": _solvabilizer_suite,
    "direct-sum": _direct_sum_suite,
    "morphism": _morphism_suite,
    "ses": _ses_suite,
    "pullback": _pullback_suite,
    "measure": _measure_suite,
    "isomorphism": _isomorphism_suite,
    "indicator": _indicator_suite,
    "direct-sum-measure": _direct_sum_measure_suite,
}


def run_suite(name: str, config: Optional[Config] = None, primes=(3, 5)) -> List[Report]:
    """
    Run one named suite.

    Raises:
        KeyError: unknown suite name
    """
    config = config or Config()
    if name not in SUITES:
        raise KeyError(f"Unknown suite '{name}', expected one of {sorted(SUITES)} or 'all'")
    logger.info(f"Running suite {name}")
    return SUITES[name](config, tuple(primes))


def run_all(config: Optional[Config] = None, primes=(3, 5)) -> List[Report]:
    """Every suite in registration order"""
    config = config or Config()
    reports: List[Report] = []
    for name in SUITES:
        reports += run_suite(name, config, primes)
    return reports
