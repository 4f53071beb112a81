import pytest
from hypothesis import given, settings

from keyslide.composition import dominates
from keyslide.config import Bounds
from keyslide.exceptions import BoundExceededError, UsageError
from keyslide.tableau import (
    Cell,
    KohnertTableau,
    basic_tableau,
    enumerate_kohnert,
    enumerate_qkt,
    is_quasi_yamanouchi,
    validate_kohnert,
)

from .conftest import weak_compositions


def tableau(content, rows):
    """Build a tableau from {row: [(col, label), ...]}."""
    cells = [Cell(row, col, label) for row, entries in rows.items() for col, label in entries]
    return KohnertTableau(tuple(content), tuple(cells))


CONTENT = (0, 0, 3, 2)

# the five quasi-Yamanouchi tableaux of content (0,0,3,2), keyed by weight
QKT_0032 = {
    (0, 0, 3, 2): {4: [(1, 4), (2, 4)], 3: [(1, 3), (2, 3), (3, 3)]},
    (0, 2, 2, 1): {4: [(1, 4)], 3: [(1, 3), (2, 4)], 2: [(2, 3), (3, 3)]},
    (0, 1, 3, 1): {4: [(1, 4)], 3: [(1, 3), (2, 3), (3, 3)], 2: [(2, 4)]},
    (0, 2, 3, 0): {3: [(1, 3), (2, 3), (3, 3)], 2: [(1, 4), (2, 4)]},
    (1, 2, 2, 0): {3: [(1, 3), (2, 3)], 2: [(1, 4), (3, 3)], 1: [(2, 4)]},
}

# Kohnert tableaux of the same content that fail the row condition
NOT_QY_0032 = [
    {4: [(1, 4), (2, 4)], 3: [(1, 3), (2, 3)], 2: [(3, 3)]},
    {4: [(1, 4)], 3: [(2, 4)], 2: [(1, 3), (2, 3), (3, 3)]},
    {3: [(1, 4), (2, 4)], 2: [(1, 3), (2, 3), (3, 3)]},
    {4: [(1, 4)], 3: [(1, 3)], 2: [(2, 3), (3, 3)], 1: [(2, 4)]},
    {4: [(1, 4)], 3: [(1, 3), (2, 4)], 2: [(2, 3)], 1: [(3, 3)]},
]


def test_basic_tableau():
    t = basic_tableau((2, 0, 1))
    assert t.cells == (Cell(1, 1, 1), Cell(1, 2, 1), Cell(3, 1, 3))
    assert t.weight == (2, 0, 1)
    assert validate_kohnert(t)
    assert is_quasi_yamanouchi(t)


def test_basic_tableau_empty():
    t = basic_tableau(())
    assert t.cells == ()
    assert t.weight == ()


@pytest.mark.parametrize("weight", sorted(QKT_0032))
def test_content_0032_tableaux_are_quasi_yamanouchi(weight):
    t = tableau(CONTENT, QKT_0032[weight])
    assert validate_kohnert(t)
    assert is_quasi_yamanouchi(t)
    assert t.weight == weight


@pytest.mark.parametrize("rows", NOT_QY_0032)
def test_kohnert_but_not_quasi_yamanouchi(rows):
    t = tableau(CONTENT, rows)
    assert validate_kohnert(t)
    assert not is_quasi_yamanouchi(t)


def test_validate_reports_condition():
    # label 2 sits in row 3
    check = validate_kohnert(tableau((0, 1), {3: [(1, 2)]}))
    assert not check
    assert check.condition == "ii"

    check = validate_kohnert(tableau((0, 2), {2: [(1, 2)], 1: [(2, 2)]}))
    assert check.valid

    check = validate_kohnert(tableau((0, 2), {1: [(1, 2)], 2: [(2, 2)]}))
    assert check.condition == "iii"

    check = validate_kohnert(tableau((0, 1), {1: [(1, 2)], 2: [(2, 2)]}))
    assert check.condition == "i"


def test_validate_condition_ii():
    check = validate_kohnert(tableau((1, 0), {2: [(1, 1)]}))
    assert check.condition == "ii"


def test_validate_condition_iv():
    # 2 above 3 in column 1, but 2 has no cell in column 2
    check = validate_kohnert(tableau((0, 1, 1), {2: [(1, 2)], 1: [(1, 3)]}))
    assert check.condition == "iv"
    check = validate_kohnert(tableau((0, 2, 1), {2: [(1, 2), (2, 2)], 1: [(1, 3)]}))
    assert check.valid


def test_is_quasi_yamanouchi_rejects_non_kohnert():
    with pytest.raises(UsageError):
        is_quasi_yamanouchi(tableau((1,), {2: [(1, 1)]}))


def test_enumerate_small():
    assert [t.weight for t in enumerate_kohnert((2, 3))] == [(2, 3), (3, 2)]
    assert [t.weight for t in enumerate_kohnert((0, 2))] == [(0, 2), (1, 1), (2, 0)]
    assert [t.weight for t in enumerate_qkt((0, 2))] == [(0, 2)]
    assert len(enumerate_kohnert((3, 2))) == 1


def test_qkt_0032_is_exactly_five_tableaux():
    tableaux = enumerate_qkt(CONTENT)
    assert sorted(t.weight for t in tableaux) == sorted(QKT_0032)
    for t in tableaux:
        assert t.cells == tableau(CONTENT, QKT_0032[tuple(t.weight)]).cells


def test_kt_0032_includes_non_quasi_yamanouchi_tableaux():
    cells = {t.cells for t in enumerate_kohnert(CONTENT)}
    for rows in NOT_QY_0032:
        assert tableau(CONTENT, rows).cells in cells


def test_trailing_zero_does_not_change_qkt_count():
    assert len(enumerate_qkt((2, 0, 1, 0))) == 1
    assert len(enumerate_qkt((2, 0, 1))) == 1


def test_row_limit():
    limited = enumerate_kohnert((0, 0, 2), row_limit=2)
    assert all(c.row <= 2 for t in limited for c in t.cells)
    assert [t.weight for t in limited] == [(0, 2, 0), (1, 1, 0), (2, 0, 0)]


def test_bounds_enforced():
    with pytest.raises(BoundExceededError):
        enumerate_kohnert((3, 3, 3), Bounds(max_sum=8))


def test_round_trip_dict():
    t = tableau(CONTENT, QKT_0032[(1, 2, 2, 0)])
    assert KohnertTableau.from_dict(t.to_dict()) == t


def test_render_ascii():
    t = tableau(CONTENT, QKT_0032[(0, 0, 3, 2)])
    assert t.render_ascii().splitlines() == ["4 4 .", "3 3 3", ". . .", ". . .", "-----"]


@settings(max_examples=60, deadline=None)
@given(weak_compositions(max_length=4, max_part=3))
def test_enumeration_invariants(a):
    kt = enumerate_kohnert(a)
    qkt = enumerate_qkt(a)
    assert basic_tableau(a) in kt
    assert basic_tableau(a) in qkt
    assert all(validate_kohnert(t) for t in kt)
    assert all(dominates(t.weight, a) for t in kt)
    assert [t.sort_key for t in kt] == sorted(t.sort_key for t in kt)
    assert len({t.cells for t in kt}) == len(kt)
    assert {t.cells for t in qkt} == {t.cells for t in kt if is_quasi_yamanouchi(t)}
