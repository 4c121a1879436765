import logging

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--extended",
        action="store_true",
        default=False,
        help="run the long reproduction scans (lengths 22-28, k=5 covers)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip_extended = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip_extended)


@pytest.fixture(autouse=True)
def _single_worker(monkeypatch):
    """Keep scans in-process unless a test asks for workers explicitly."""
    monkeypatch.delenv("SHUFSQ_WORKERS", raising=False)
    logging.getLogger("shufsq").propagate = True
