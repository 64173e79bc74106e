import pytest

from src.config import settings
from src.graphs.families import generate_from_text


@pytest.fixture(autouse=True)
def restore_budget(monkeypatch):
    """Budget overrides made by a test (or by --budget-faces) end with the test."""
    monkeypatch.setattr(settings, "budget", settings.budget)


@pytest.fixture
def petersen():
    return generate_from_text("petersen")


@pytest.fixture
def c4():
    return generate_from_text("cycle:4")


@pytest.fixture
def c5():
    return generate_from_text("cycle:5")
