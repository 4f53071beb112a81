import pytest

from keyslide.config import DEFAULT_MAX_SUM, Bounds, check_enumeration_bounds, load_bounds
from keyslide.exceptions import BoundExceededError, UsageError


def test_defaults():
    bounds = load_bounds()
    assert bounds == Bounds()
    assert bounds.max_sum == DEFAULT_MAX_SUM


def test_environment_overrides_default(monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_SUM", "7")
    assert load_bounds().max_sum == 7


def test_explicit_overrides_environment(monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_SUM", "7")
    assert load_bounds(max_sum=9).max_sum == 9


def test_malformed_environment(monkeypatch):
    monkeypatch.setenv("KEYSLIDE_BOUND_LENGTH", "many")
    with pytest.raises(UsageError, match="KEYSLIDE_BOUND_LENGTH"):
        load_bounds()


def test_unsafe_removes_bounds(caplog):
    bounds = load_bounds(unsafe=True)
    assert bounds.max_sum is None and bounds.max_length is None
    assert "disabled" in caplog.text
    check_enumeration_bounds((50,) * 50, bounds)


def test_workers_must_be_positive():
    with pytest.raises(UsageError):
        load_bounds(workers=0)


def test_check_enumeration_bounds():
    with pytest.raises(BoundExceededError) as info:
        check_enumeration_bounds((5, 5), Bounds(max_sum=9))
    assert info.value.bound == "sum"
    assert info.value.value == 10
    with pytest.raises(BoundExceededError) as info:
        check_enumeration_bounds((0,) * 4, Bounds(max_length=3))
    assert info.value.bound == "length"
