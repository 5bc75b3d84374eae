import json

import pytest

from src.algebra_io import AlgebraFileError, emit_algebra, emit_graph, parse_algebra, parse_algebra_text, save_graph
from src.catalog import catalog_get
from src.graph import build_graph


def document(**overrides):
    doc = {"name": "T", "p": 3, "dim_even": 1, "dim_odd": 1, "basis_names": ["h", "x"],
           "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 1}}]}
    doc.update(overrides)
    return json.dumps(doc)


@pytest.mark.parametrize("stem,name", [
    ("E1", "E1@3"), ("E2", "E2@3"), ("sl2", "sl2@3"), ("gl2split", "gl2split@3"), ("ab1", "ab1@3"), ("c", "c@3"),
])
def test_bundled_files_match_the_catalog(data_dir, stem, name):
    assert parse_algebra(data_dir / f"{stem}.json") == catalog_get(name)


def test_emitted_text_reads_back(e2, gl2split):
    for L in (e2, gl2split):
        again = parse_algebra_text(emit_algebra(L))
        assert again == L
        assert again.name == L.name


def test_missing_pairs_bracket_to_zero():
    L = parse_algebra_text(document(brackets=[]))
    assert not L.constants.any()


def test_malformed_json_reports_position():
    with pytest.raises(AlgebraFileError) as err:
        parse_algebra_text("{", "bad.json")
    assert "bad.json: line 1 col" in str(err.value)


def test_bad_prime_is_located():
    with pytest.raises(AlgebraFileError) as err:
        parse_algebra_text(document(p=2), "f.json")
    assert err.value.location == "f.json: p"


def test_missing_key():
    with pytest.raises(AlgebraFileError, match="missing required key 'dim_odd'"):
        parse_algebra_text(json.dumps({"p": 3, "dim_even": 1}))


@pytest.mark.parametrize("record,message", [
    ({"i": 1, "j": 0, "coeffs": {}}, "i <= j"),
    ({"i": 0, "j": 5, "coeffs": {}}, "out of range"),
    ({"i": 0, "j": 1, "coeffs": {"z": 1}}, "not a basis index"),
    ({"i": 0, "j": 1, "coeffs": {"1": 1.5}}, "not an integer"),
])
def test_bad_bracket_records(record, message):
    with pytest.raises(AlgebraFileError, match=message) as err:
        parse_algebra_text(document(brackets=[record]), "f.json")
    assert err.value.location == "f.json: brackets[0]"


def test_duplicate_pair():
    record = {"i": 0, "j": 1, "coeffs": {"1": 1}}
    with pytest.raises(AlgebraFileError, match="listed twice"):
        parse_algebra_text(document(brackets=[record, record]))


def test_even_square_must_vanish():
    with pytest.raises(AlgebraFileError) as err:
        parse_algebra_text(document(brackets=[{"i": 0, "j": 0, "coeffs": {"0": 1}}]), "f.json")
    assert err.value.location == "f.json: brackets[0]"


def test_axiom_violations_are_reported(data_dir):
    doc = json.loads((data_dir / "E2.json").read_text())
    del doc["waive"]
    with pytest.raises(AlgebraFileError) as err:
        parse_algebra_text(json.dumps(doc))
    assert err.value.violations


def test_unreadable_file(tmp_path):
    with pytest.raises(AlgebraFileError, match="cannot read file"):
        parse_algebra(tmp_path / "missing.json")


def test_dot_export(e2):
    G = build_graph(e2)
    text = emit_graph(G, "dot")
    assert text.startswith('graph "E2@3 solvable" {')
    assert sum(1 for line in text.splitlines() if "[label=" in line) == 26
    assert sum(1 for line in text.splitlines() if " -- " in line) == G.edge_count


def test_csv_export(e2, tmp_path):
    G = build_graph(e2)
    path = save_graph(G, tmp_path / "out" / "e2.csv", "csv")
    lines = path.read_text().splitlines()
    assert len(lines) == G.edge_count
    assert lines == sorted(lines, key=lambda s: tuple(int(c) for c in s.split(",")))


def test_unknown_graph_format(e2):
    with pytest.raises(ValueError):
        emit_graph(build_graph(e2), "svg")
