import pytest
from hypothesis import strategies as st

from keyslide.composition import StrongComposition, WeakComposition
from keyslide.config import Bounds


def weak_compositions(max_length=4, max_part=3):
    return st.lists(st.integers(0, max_part), max_size=max_length).map(WeakComposition)


def strong_compositions(max_length=4, max_part=3):
    return st.lists(st.integers(1, max_part), max_size=max_length).map(StrongComposition)


@pytest.fixture
def bounds():
    return Bounds()


@pytest.fixture(autouse=True)
def clear_bound_env(monkeypatch):
    for name in ("KEYSLIDE_BOUND_SUM", "KEYSLIDE_BOUND_LENGTH", "KEYSLIDE_MMAX", "KEYSLIDE_WORKERS"):
        monkeypatch.delenv(name, raising=False)
