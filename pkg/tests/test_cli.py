from src.algebra_io import parse_algebra
from src.cli import EXIT_OK, EXIT_USAGE, main


def test_sol_of_e2_file(data_dir, capsys):
    assert main(["sol", str(data_dir / "E2.json")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "sol(L) = {} (empty)" in out
    assert "|sol| = 0 of 27" in out


def test_element_solvabilizer(capsys):
    assert main(["sol", "E1@3", "--element", "1,0", "--nil"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "nil_L(h) = {0, h, 2h}" in out


def test_graph_with_measure_and_exports(tmp_path, capsys):
    dot, csv = tmp_path / "g.dot", tmp_path / "g.csv"
    assert main(["graph", "E2@3", "--measure", "--dot", str(dot), "--csv", str(csv)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "solvable graph of E2@3: |V|=26" in out
    assert "ν(L) = " in out
    assert dot.exists() and csv.exists()


def test_graph_of_solvable_algebra_fails(capsys):
    assert main(["graph", "E1@3"]) == EXIT_USAGE


def test_info(capsys):
    assert main(["info", "E1@3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "derived series dims: [2, 1, 0]" in out
    assert "solvable: yes" in out
    assert "nilpotent: no" in out


def test_validate_lists_waivers(capsys):
    assert main(["validate", "E2@3"]) == EXIT_OK
    assert "waived" in capsys.readouterr().out


def test_catalog(capsys):
    assert main(["catalog", "list"]) == EXIT_OK
    assert "E2@3\talgebra" in capsys.readouterr().out
    assert main(["catalog", "show", "E2@3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[x,y] = h" in out
    assert main(["catalog", "show", "E2-psi@3"]) == EXIT_OK
    assert "x -> y" in capsys.readouterr().out


def test_unknown_catalog_entry(capsys):
    assert main(["catalog", "show", "E9@3"]) == EXIT_USAGE


def test_unknown_algebra(capsys):
    assert main(["info", "no-such-algebra"]) == EXIT_USAGE


def test_bad_element(capsys):
    assert main(["sol", "E1@3", "--element", "1,2,3"]) == EXIT_USAGE


def test_usage_errors(capsys):
    assert main([]) == EXIT_USAGE
    assert main(["verify", "nope"]) == EXIT_USAGE
    assert main(["--closure", "weird", "info", "E1@3"]) == EXIT_USAGE


def test_verify_suite(capsys):
    assert main(["verify", "direct-sum"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines
    assert all(line.split("\t")[0] == "direct-sum" for line in lines)


def test_verify_direct_sum_measure_exits_cleanly(capsys):
    assert main(["verify", "direct-sum-measure"]) == EXIT_OK
    statuses = [line.split("\t")[3] for line in capsys.readouterr().out.splitlines()]
    assert statuses.count("pass") == 3
    assert "fail" not in statuses


def test_catalog_export_matches_bundled_files(tmp_path, data_dir):
    assert main(["catalog", "export", str(tmp_path)]) == EXIT_OK
    written = sorted(path.name for path in tmp_path.glob("*.json"))
    assert written == sorted(path.name for path in data_dir.glob("*.json"))
    for path in tmp_path.glob("*.json"):
        assert parse_algebra(path) == parse_algebra(data_dir / path.name)
