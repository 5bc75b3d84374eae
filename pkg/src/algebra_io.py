"""
Algebra definition files (JSON) and graph export (DOT, CSV).

An algebra file looks like:

    {
      "name": "E1@3",
      "p": 3,
      "dim_even": 1,
      "dim_odd": 1,
      "basis_names": ["h", "x"],
      "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 1}}]
    }

Only [e_i, e_j] with i <= j is listed; the other half follows from super
skew-symmetry. Missing pairs bracket to zero.
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import pandas as pd

from .gf_linalg import FieldError, check_field_prime
from .graph import SolvGraph
from .superalgebra import AxiomViolationError, SuperAlgebra, UnvalidatedAxiomError, bracket_table, \
    expand_brackets, validate


logger = logging.getLogger(__name__)

GRAPH_FORMATS = ("dot", "csv")


class AlgebraFileError(ValueError):
    """Raised for unreadable or invalid algebra files, with the offending location"""

    def __init__(self, message: str, location: Optional[str] = None, violations=None):
        self.location = location
        self.violations = list(violations or [])
        super().__init__(f"{location}: {message}" if location else message)


def _require_int(doc: Dict[str, Any], key: str, where: str) -> int:
    if key not in doc:
        raise AlgebraFileError(f"missing required key '{key}'", where)
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise AlgebraFileError(f"'{key}' must be an integer, got {value!r}", f"{where}.{key}" if where else key)
    return value


def _parse_brackets(records: Any, source: str, p: int, n: int) -> Dict[Tuple[int, int], Dict[int, int]]:
    if not isinstance(records, list):
        raise AlgebraFileError("'brackets' must be a list", f"{source}: brackets")
    brackets: Dict[Tuple[int, int], Dict[int, int]] = {}
    for idx, record in enumerate(records):
        where = f"{source}: brackets[{idx}]"
        if not isinstance(record, dict):
            raise AlgebraFileError("bracket record must be an object with i, j, coeffs", where)
        i = _require_int(record, "i", where)
        j = _require_int(record, "j", where)
        if not (0 <= i < n and 0 <= j < n):
            raise AlgebraFileError(f"index pair ({i}, {j}) out of range for dimension {n}", where)
        if i > j:
            raise AlgebraFileError(f"pair ({i}, {j}) must be listed with i <= j", where)
        if (i, j) in brackets:
            raise AlgebraFileError(f"pair ({i}, {j}) listed twice", where)
        coeffs = record.get("coeffs", {})
        if not isinstance(coeffs, dict):
            raise AlgebraFileError("'coeffs' must map basis indices to integers", where)
        parsed = {}
        for key, value in coeffs.items():
            try:
                k = int(key)
            except (TypeError, ValueError):
                raise AlgebraFileError(f"coefficient key {key!r} is not a basis index", where)
            if not 0 <= k < n:
                raise AlgebraFileError(f"coefficient index {k} out of range for dimension {n}", where)
            if isinstance(value, bool) or not isinstance(value, int):
                raise AlgebraFileError(f"coefficient {value!r} is not an integer", where)
            parsed[k] = value % p
        brackets[(i, j)] = parsed
    return brackets


def parse_algebra_text(text: str, source: str = "<string>") -> SuperAlgebra:
    """
    Parse and validate an algebra definition.

    Args:
        text: JSON document
        source: Name used in error locations

    Raises:
        AlgebraFileError: malformed JSON, bad fields, or failed axioms
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(e.msg, f"{source}: line {e.lineno} col {e.colno}")
    if not isinstance(doc, dict):
        raise AlgebraFileError("top level must be an object", source)

    p = _require_int(doc, "p", source)
    try:
        check_field_prime(p)
    except FieldError as e:
        raise AlgebraFileError(str(e), f"{source}: p")
    d0 = _require_int(doc, "dim_even", source)
    d1 = _require_int(doc, "dim_odd", source)
    if d0 < 0 or d1 < 0:
        raise AlgebraFileError("dimensions must be non-negative", f"{source}: dim_even/dim_odd")
    n = d0 + d1

    names = doc.get("basis_names")
    if names is not None and (not isinstance(names, list) or len(names) != n
                              or not all(isinstance(nm, str) and nm for nm in names)):
        raise AlgebraFileError(f"basis_names must list {n} non-empty strings", f"{source}: basis_names")
    waive = doc.get("waive", [])
    if not isinstance(waive, list):
        raise AlgebraFileError("waive must be a list of axiom names", f"{source}: waive")

    brackets = _parse_brackets(doc.get("brackets", []), source, p, n)
    for (i, j), coeffs in brackets.items():
        if i == j and i < d0 and any(coeffs.values()):
            idx = list(brackets).index((i, j))
            raise AlgebraFileError(f"[e{i},e{i}] must vanish for an even basis element",
                                   f"{source}: brackets[{idx}]")

    table = expand_brackets(p, d0, d1, brackets)
    try:
        return validate(p, d0, d1, table, names, doc.get("name"), waive)
    except AxiomViolationError as e:
        summary = "; ".join(v.message for v in e.violations[:5])
        raise AlgebraFileError(f"axiom violations: {summary}", f"{source}: brackets", e.violations)
    except (UnvalidatedAxiomError, ValueError) as e:
        raise AlgebraFileError(str(e), source)


def parse_algebra(path) -> SuperAlgebra:
    """Read and validate an algebra file"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"cannot read file: {e.strerror}", str(path))
    algebra = parse_algebra_text(text, str(path))
    logger.debug(f"Loaded {algebra.label} from {path}")
    return algebra


def emit_algebra(L: SuperAlgebra) -> str:
    """Serialise an algebra; parse_algebra_text() reads it back unchanged"""
    doc: Dict[str, Any] = {}
    if L.name:
        doc["name"] = L.name
    doc["p"] = L.p
    doc["dim_even"] = L.dim_even
    doc["dim_odd"] = L.dim_odd
    doc["basis_names"] = list(L.basis_names)
    if L.waived:
        doc["waive"] = list(L.waived)
    doc["brackets"] = [
        {"i": i, "j": j, "coeffs": {str(k): c for k, c in coeffs.items()}}
        for (i, j), coeffs in bracket_table(L).items()
    ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_algebra(L: SuperAlgebra, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_algebra(L), encoding="utf-8")
    logger.info(f"Saved {L.label} to {path}")
    return path


def _dot(G: SolvGraph) -> str:
    lines = [f'graph "{G.algebra.label} {G.kind.value}" {{', "  node [shape=circle];"]
    for i in range(G.order):
        lines.append(f'  {i} [label="{G.label(i)}"];')
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv(G: SolvGraph) -> str:
    edges = G.edges()
    if not edges:
        return ""
    frame = pd.DataFrame(edges, columns=["u", "v"])
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, header=False, lineterminator="\n")
    return buffer.getvalue()


def emit_graph(G: SolvGraph, fmt: str = "dot") -> str:
    """
    Render a graph as DOT (labelled vertices) or CSV (sorted 'u,v' index pairs, no header).
    """
    if fmt == "dot":
        return _dot(G)
    if fmt == "csv":
        return _csv(G)
    raise ValueError(f"Unknown graph format '{fmt}', expected one of {GRAPH_FORMATS}")


def save_graph(G: SolvGraph, path, fmt: str = "dot") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_graph(G, fmt), encoding="utf-8")
    logger.info(f"Saved {fmt} graph ({G.order} vertices, {G.edge_count} edges) to {path}")
    return path
