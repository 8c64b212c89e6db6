import pytest

from abacus_partitions.config import ENV_VARS, load_settings, use_settings
from abacus_partitions.enumeration import p_table
from abacus_partitions.logger import set_verbose


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Every test starts from the built-in defaults, whatever the shell exports."""
    for name in ENV_VARS.values():
        monkeypatch.delenv(name, raising=False)
    use_settings(load_settings())
    set_verbose(False)
    yield
    use_settings(None)
    set_verbose(False)


@pytest.fixture(scope="session")
def p5000():
    return p_table(5000)
