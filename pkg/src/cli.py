"""
Command-line interface.

    solvgraph.py validate <algebra>
    solvgraph.py info <algebra>
    solvgraph.py sol <algebra> [--element 1,0,2] [--nil]
    solvgraph.py graph <algebra> --kind solvable|nonsolvable [--dot PATH] [--csv PATH] [--measure]
    solvgraph.py verify <suite|all> [--seed N] [--p 3|5] [--max-dim 4] [--trials T]
    solvgraph.py catalog list|show <name>|export <dir> [--p 3|5]

<algebra> is a definition file or a catalog name such as E2@3.
Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .algebra_io import AlgebraFileError, parse_algebra, save_algebra, save_graph
from .catalog import UnknownCatalogEntryError, catalog_entry, catalog_get, catalog_names
from .config import CLOSURE_MODES, Config
from .graph import GraphKind, build_graph, components, measure
from .solvabilizer import nilpotentizer, nilpotentizer_of, solvabilizer, solvabilizer_of
from .superalgebra import SuperAlgebra, bracket_table, derived_series, is_nilpotent, is_solvable, \
    lower_central_series
from .utils import parse_element
from .verify import run_all, run_suite, summarize
from .verify.suites import SUITES


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def load_algebra(source: str) -> SuperAlgebra:
    """
    Load an algebra from a definition file, or from the catalog when no such file exists.

    Raises:
        AlgebraFileError: unreadable or invalid file, or unknown catalog name
    """
    path = Path(source)
    if path.exists():
        return parse_algebra(path)
    try:
        algebra = catalog_get(source)
    except UnknownCatalogEntryError:
        raise AlgebraFileError("no such file or catalog algebra", source)
    if not isinstance(algebra, SuperAlgebra):
        raise AlgebraFileError("catalog entry is a morphism, not an algebra", source)
    return algebra


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solvgraph",
                                     description="Solvabilizers and solvable graphs of Lie superalgebras over GF(p)")
    parser.add_argument("--workers", type=int, default=None, help="Thread-pool size (default: SOLVGRAPH_WORKERS or 1)")
    parser.add_argument("--closure", choices=CLOSURE_MODES, default=None,
                        help="Subalgebra closure (default: SOLVGRAPH_CLOSURE or plain)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="Check the axioms of an algebra")
    p_validate.add_argument("algebra")

    p_info = sub.add_parser("info", help="Dimensions, series, solvability and nilpotency")
    p_info.add_argument("algebra")

    p_sol = sub.add_parser("sol", help="Solvabilizer of the algebra or of one element")
    p_sol.add_argument("algebra")
    p_sol.add_argument("--element", help="Comma-separated coordinates of z, e.g. 1,0,2")
    p_sol.add_argument("--nil", action="store_true", help="Nilpotentizer instead of solvabilizer")

    p_graph = sub.add_parser("graph", help="Solvable or non-solvable graph")
    p_graph.add_argument("algebra")
    p_graph.add_argument("--kind", choices=[k.value for k in GraphKind], default=GraphKind.SOLVABLE.value)
    p_graph.add_argument("--dot", type=Path, help="Write the graph as DOT")
    p_graph.add_argument("--csv", type=Path, help="Write the edge list as CSV")
    p_graph.add_argument("--measure", action="store_true", help="Print the solvability measure")

    p_verify = sub.add_parser("verify", help="Run verification suites")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--p", type=int, choices=(3, 5), default=None, help="Restrict generated instances to one prime")
    p_verify.add_argument("--max-dim", type=int, default=4)
    p_verify.add_argument("--trials", type=int, default=8)
    p_verify.add_argument("--instances", type=int, default=20, help="Number of generated instances")

    p_catalog = sub.add_parser("catalog", help="Named algebras and morphisms")
    catalog_sub = p_catalog.add_subparsers(dest="action", required=True)
    catalog_sub.add_parser("list")
    p_show = catalog_sub.add_parser("show")
    p_show.add_argument("name")
    p_export = catalog_sub.add_parser("export", help="Write every catalog algebra as a definition file")
    p_export.add_argument("directory", type=Path)
    p_export.add_argument("--p", type=int, choices=(3, 5), default=3)
    return parser


def _cmd_validate(args, config: Config) -> int:
    L = load_algebra(args.algebra)
    print(f"{L.label}: valid Lie superalgebra over GF({L.p}), dimension ({L.dim_even}|{L.dim_odd})")
    for violation in L.waived_violations:
        print(f"  waived {violation.kind}: {violation.message}")
    return EXIT_OK


def _cmd_info(args, config: Config) -> int:
    L = load_algebra(args.algebra)
    full = L.full_space()
    print(f"{L.label}: p = {L.p}, dim = ({L.dim_even}|{L.dim_odd}), basis = {', '.join(L.basis_names)}")
    if L.waived:
        print(f"waived axioms: {', '.join(L.waived)}")
    print(f"derived series dims: {[S.rank for S in derived_series(L, full)]}")
    print(f"lower central series dims: {[S.rank for S in lower_central_series(L, full)]}")
    print(f"solvable: {'yes' if is_solvable(L, full) else 'no'}")
    print(f"nilpotent: {'yes' if is_nilpotent(L, full) else 'no'}")
    return EXIT_OK


def _cmd_sol(args, config: Config) -> int:
    L = load_algebra(args.algebra)
    symbol = "nil" if args.nil else "sol"
    if args.element:
        z = parse_element(args.element, L.p, L.n)
        compute = nilpotentizer_of if args.nil else solvabilizer_of
        result = compute(L, z, config.closure, config.workers)
        print(f"{symbol}_L({L.format_element(z)}) = {result.format()}")
    else:
        compute = nilpotentizer if args.nil else solvabilizer
        result = compute(L, config.closure, config.workers)
        print(f"{symbol}(L) = {result.format()}")
    print(f"|{symbol}| = {len(result)} of {L.order}")
    return EXIT_OK


def _cmd_graph(args, config: Config) -> int:
    L = load_algebra(args.algebra)
    G = build_graph(L, args.kind, config.closure, config.workers, config.show_progress)
    print(f"{G.kind.value} graph of {L.label}: |V|={G.order}, |E|={G.edge_count}, components={components(G)}")
    if args.measure:
        # ν is defined on the solvable graph
        nu = measure(G if G.kind == GraphKind.SOLVABLE else G.complement())
        print(f"ν(L) = {nu}")
    if args.dot:
        save_graph(G, args.dot, "dot")
    if args.csv:
        save_graph(G, args.csv, "csv")
    return EXIT_OK


def _cmd_verify(args, config: Config) -> int:
    config.seed = args.seed
    config.subspace_max_dim = args.max_dim
    config.trials = args.trials
    config.instance_count = args.instances
    primes = (args.p,) if args.p else (3, 5)
    reports = run_all(config, primes) if args.suite == "all" else run_suite(args.suite, config, primes)
    for report in reports:
        for line in report.lines():
            print(line)
    table = summarize(reports)
    logger.info(f"\n{table.to_string()}" if not table.empty else "No checks ran")
    failed = sum(len(r.failures) for r in reports)
    if failed:
        logger.error(f"{failed} check(s) failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_catalog(args, config: Config) -> int:
    if args.action == "list":
        for name in catalog_names():
            entry = catalog_entry(name)
            print(f"{name}\t{entry.kind}\t{entry.provenance}")
        return EXIT_OK
    if args.action == "export":
        suffix = f"@{args.p}"
        for name in catalog_names("algebra"):
            if name.endswith(suffix):
                save_algebra(catalog_get(name), args.directory / f"{name[:-len(suffix)]}.json")
        return EXIT_OK
    entry = catalog_entry(args.name)
    item = catalog_get(args.name)
    print(f"{entry.name} ({entry.kind}): {entry.provenance}")
    if isinstance(item, SuperAlgebra):
        print(f"p = {item.p}, dim = ({item.dim_even}|{item.dim_odd}), basis = {', '.join(item.basis_names)}")
        for (i, j), coeffs in bracket_table(item).items():
            value = item.format_element([coeffs.get(k, 0) for k in range(item.n)])
            print(f"[{item.basis_names[i]},{item.basis_names[j]}] = {value}")
    else:
        for i in range(item.source.n):
            image = item.target.format_element(item.images[i])
            print(f"{item.source.basis_names[i]} -> {image}")
    return EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "info": _cmd_info,
    "sol": _cmd_sol,
    "graph": _cmd_graph,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        config = Config(workers=args.workers, closure=args.closure)
        return COMMANDS[args.command](args, config)
    except (ValueError, UnknownCatalogEntryError) as e:
        # input errors: files, elements, catalog names, graph or suite preconditions
        logger.error(f"Error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
