import pytest
from click.testing import CliRunner

from pythforms.core.config import get_settings
from pythforms.main import cli


@pytest.fixture(autouse=True)
def test_settings(monkeypatch):
    """Single-worker settings with no ledger, rebuilt for every test"""
    monkeypatch.setenv("PYTHFORMS_JOBS", "1")
    monkeypatch.delenv("PYTHFORMS_LEDGER_PATH", raising=False)
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture(scope="function")
def ledger_path(tmp_path):
    return str(tmp_path / "runs.json")


@pytest.fixture(scope="function")
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture(scope="function")
def invoke(runner):
    def _invoke(*args):
        return runner.invoke(cli, list(args), catch_exceptions=False)

    return _invoke
