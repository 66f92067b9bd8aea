"""Shared fixtures."""

import csv

import numpy as np
import pytest

from oamparity.config.settings import get_settings


@pytest.fixture(autouse=True)
def quiet_settings(monkeypatch):
    """Keep log lines off the captured streams and start from fresh settings."""
    monkeypatch.setenv("OAMPARITY_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def read_columns():
    """Load a written CSV file as a mapping from column name to float array."""

    def load(path):
        with open(path, encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            columns = next(reader)
            rows = [[float(value) for value in row] for row in reader]
        return {name: np.array([row[i] for row in rows]) for i, name in enumerate(columns)}

    return load
