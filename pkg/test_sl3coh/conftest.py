import io
from pathlib import Path

import pytest

from sl3coh import app_factory, run
from sl3coh.config import AppConfig
from sl3coh.components import Engine


@pytest.fixture(scope="session", name="fixtures")
def _fixtures():
    return Path("test_sl3coh/fixtures")


@pytest.fixture(scope="session", name="data_dir")
def _data_dir():
    return AppConfig.DATA_DIR


@pytest.fixture(name="testing_config")
def _testing_config():
    """Returns test-config"""

    # setup config-class
    class TestingConfig(AppConfig):
        ERRATA_ACTIVE = True
        MAX_DIGITS = 64
        WORKERS = 1
        VALIDATE_RECORDS = True

    return TestingConfig


@pytest.fixture(scope="session", name="engine")
def _engine(data_dir):
    """Returns engine with the errata overlay applied."""
    return Engine(data_dir)


@pytest.fixture(scope="session", name="engine_no_errata")
def _engine_no_errata(data_dir):
    """Returns engine reading the tables as printed."""
    return Engine(data_dir, errata=False)


@pytest.fixture(name="cli")
def _cli(testing_config):
    """Returns callable running the app; returns status and stdout."""
    parser = app_factory(testing_config())

    def _run(*argv):
        stdout = io.StringIO()
        status = run(parser, list(argv), stdout=stdout)
        return status, stdout.getvalue()

    return _run
