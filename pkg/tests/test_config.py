import pytest

from src.config import Config
from src.progress import create_progress_tracker


def test_defaults(monkeypatch):
    monkeypatch.delenv("SOLVGRAPH_WORKERS", raising=False)
    monkeypatch.delenv("SOLVGRAPH_CLOSURE", raising=False)
    config = Config()
    assert config.workers == 1
    assert config.closure == "plain"
    assert config.allows_subspace_enumeration(4, 5)
    assert not config.allows_subspace_enumeration(5, 3)
    assert config.is_exhaustive(243)
    assert not config.is_exhaustive(729)


def test_environment_values_lose_their_quotes(monkeypatch):
    monkeypatch.setenv("SOLVGRAPH_WORKERS", '"4"')
    monkeypatch.setenv("SOLVGRAPH_CLOSURE", "'graded'")
    config = Config()
    assert config.workers == 4
    assert config.closure == "graded"


def test_arguments_override_environment(monkeypatch):
    monkeypatch.setenv("SOLVGRAPH_WORKERS", "4")
    assert Config(workers=2).workers == 2
    assert Config(workers=0).workers == 1


def test_unknown_closure(monkeypatch):
    monkeypatch.delenv("SOLVGRAPH_CLOSURE", raising=False)
    with pytest.raises(ValueError):
        Config(closure="weird")


def test_disabled_tracker_still_counts():
    with create_progress_tracker(5, "demo", disable=True, unit="vertices") as progress:
        for _ in range(5):
            progress.update()
        progress.note(spans=3)
    assert progress.done == 5
