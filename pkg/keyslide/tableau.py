"""
Kohnert tableaux and quasi-Yamanouchi Kohnert tableaux.

Coordinates follow the diagram convention: a cell (row, col) is in the
row-th row counted from the bottom and the col-th column counted from the
left, both starting at 1. A Kohnert tableau of content a holds a_i cells
labelled i and satisfies:

  (i)   label i occupies exactly columns 1..a_i, once each;
  (ii)  every entry in row r is at least r;
  (iii) the cells of each label weakly descend from left to right;
  (iv)  if labels i < j share a column with i above j, then i also occurs
        in the next column to the right, in a row strictly above the j.

It is quasi-Yamanouchi when additionally

  (v)   every nonempty row r contains an r, or row r+1 has a cell weakly
        right of some cell of row r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from .composition import WeakComposition
from .config import Bounds, check_enumeration_bounds
from .exceptions import UsageError

logger = logging.getLogger(__name__)


class Cell(NamedTuple):
    row: int
    col: int
    label: int


@dataclass(frozen=True)
class KohnertCheck:
    """Outcome of validate_kohnert: truthy iff valid, else names the first failed condition."""

    valid: bool
    condition: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class KohnertTableau:
    """A labelled diagram with declared content. Cells are kept in canonical (row, col, label) order."""

    content: WeakComposition
    cells: tuple[Cell, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "content", WeakComposition(self.content))
        object.__setattr__(self, "cells", tuple(sorted(Cell(*cell) for cell in self.cells)))

    @cached_property
    def grid(self) -> tuple[tuple[Optional[int], ...], ...]:
        """Dense grid of labels, grid[row - 1][col - 1], None where empty."""
        height = max([len(self.content)] + [cell.row for cell in self.cells])
        width = max([0] + list(self.content) + [cell.col for cell in self.cells])
        rows = [[None] * width for _ in range(height)]
        for cell in self.cells:
            if cell.row >= 1 and cell.col >= 1:
                rows[cell.row - 1][cell.col - 1] = cell.label
        return tuple(tuple(row) for row in rows)

    def label_at(self, row: int, col: int) -> Optional[int]:
        if row < 1 or col < 1 or row > len(self.grid):
            return None
        line = self.grid[row - 1]
        return line[col - 1] if col <= len(line) else None

    @cached_property
    def weight(self) -> WeakComposition:
        """wt(T): the number of cells in each row, as long as the content."""
        counts = [0] * len(self.content)
        for cell in self.cells:
            if 1 <= cell.row <= len(counts):
                counts[cell.row - 1] += 1
        return WeakComposition(counts)

    @property
    def sort_key(self) -> tuple:
        """Canonical order: weight first, then the sorted cell list."""
        return (tuple(self.weight), self.cells)

    def relabel(self, mapping: dict[int, int], min_col: int = 1) -> "KohnertTableau":
        """Apply a label mapping to every cell in columns >= min_col."""
        cells = [
            Cell(c.row, c.col, mapping.get(c.label, c.label)) if c.col >= min_col else c
            for c in self.cells
        ]
        return KohnertTableau(self.content, tuple(cells))

    def with_content(self, content: Sequence[int]) -> "KohnertTableau":
        return KohnertTableau(WeakComposition(content), self.cells)

    def to_dict(self) -> dict:
        return {
            "content": list(self.content),
            "cells": [{"row": c.row, "col": c.col, "label": c.label} for c in self.cells],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KohnertTableau":
        try:
            return cls(
                WeakComposition(data["content"]),
                tuple(Cell(int(c["row"]), int(c["col"]), int(c["label"])) for c in data["cells"]),
            )
        except (KeyError, TypeError) as e:
            raise UsageError(f"malformed tableau record: {e}")

    def render_ascii(self) -> str:
        """Rows top to bottom as usually drawn; '.' marks an empty cell."""
        width = max([1] + [len(str(c.label)) for c in self.cells])
        lines = []
        for row in reversed(self.grid):
            lines.append(" ".join(("." if v is None else str(v)).rjust(width) for v in row).rstrip())
        columns = len(self.grid[0]) if self.grid else 0
        lines.append("-" * max(1, columns * (width + 1) - 1))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render_ascii()


def basic_tableau(a: Sequence[int]) -> KohnertTableau:
    """The tableau with a_i cells labelled i in row i, columns 1..a_i."""
    a = WeakComposition(a)
    cells = tuple(Cell(i, c, i) for i, part in enumerate(a, start=1) for c in range(1, part + 1))
    return KohnertTableau(a, cells)


def _label_rows(tableau: KohnertTableau) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for cell in tableau.cells:
        rows.setdefault(cell.label, {})[cell.col] = cell.row
    return rows


def validate_kohnert(tableau: KohnertTableau) -> KohnertCheck:
    """
    Check conditions (i)-(iv) against the tableau's declared content.

    Returns:
        KohnertCheck, falsy with the first violated condition tag when invalid
    """
    content = tableau.content
    ell = len(content)
    seen = set()
    for cell in tableau.cells:
        if (cell.row, cell.col) in seen:
            return KohnertCheck(False, "i", f"two cells at row {cell.row}, column {cell.col}")
        seen.add((cell.row, cell.col))
        if cell.row < 1 or cell.col < 1:
            return KohnertCheck(False, "i", f"cell {tuple(cell)} outside the first quadrant")
        if not 1 <= cell.label <= ell:
            return KohnertCheck(False, "i", f"label {cell.label} outside 1..{ell}")

    by_label = _label_rows(tableau)
    for label in range(1, ell + 1):
        cols = by_label.get(label, {})
        count = sum(1 for c in tableau.cells if c.label == label)
        if count != content[label - 1] or set(cols) != set(range(1, content[label - 1] + 1)):
            return KohnertCheck(False, "i", f"label {label} does not fill columns 1..{content[label - 1]} once each")

    for cell in tableau.cells:
        if cell.label < cell.row:
            return KohnertCheck(False, "ii", f"entry {cell.label} sits in row {cell.row}")

    for label, cols in by_label.items():
        for col in range(1, content[label - 1]):
            if cols[col] < cols[col + 1]:
                return KohnertCheck(False, "iii", f"label {label} rises between columns {col} and {col + 1}")

    by_column: dict[int, list[Cell]] = {}
    for cell in tableau.cells:
        by_column.setdefault(cell.col, []).append(cell)
    for col, column_cells in sorted(by_column.items()):
        for upper in column_cells:
            for lower in column_cells:
                if upper.label < lower.label and upper.row > lower.row:
                    right = by_label[upper.label].get(col + 1)
                    if right is None or right <= lower.row:
                        return KohnertCheck(
                            False,
                            "iv",
                            f"column {col}: {upper.label} above {lower.label} without a "
                            f"{upper.label} strictly above it in column {col + 1}",
                        )
    return KohnertCheck(True)


def _row_extents(tableau: KohnertTableau) -> dict[int, tuple[int, int]]:
    extents: dict[int, tuple[int, int]] = {}
    for cell in tableau.cells:
        lo, hi = extents.get(cell.row, (cell.col, cell.col))
        extents[cell.row] = (min(lo, cell.col), max(hi, cell.col))
    return extents


def _satisfies_row_condition(tableau: KohnertTableau) -> bool:
    extents = _row_extents(tableau)
    own_label_rows = {cell.row for cell in tableau.cells if cell.label == cell.row}
    for row, (lo, _) in extents.items():
        if row in own_label_rows:
            continue
        above = extents.get(row + 1)
        if above is None or above[1] < lo:
            return False
    return True


def is_quasi_yamanouchi(tableau: KohnertTableau) -> bool:
    """
    Condition (v) for a Kohnert tableau.

    Raises:
        UsageError: if the tableau is not a Kohnert tableau
    """
    check = validate_kohnert(tableau)
    if not check:
        raise UsageError(f"not a Kohnert tableau (condition {check.condition}): {check.detail}")
    return _satisfies_row_condition(tableau)


def _generate_kohnert(content: tuple[int, ...], row_limit: Optional[int]) -> list[KohnertTableau]:
    """
    Backtracking over labels 1..l, placing label i column by column on a
    weakly decreasing row sequence. Conditions (i)-(iii) hold by construction;
    (iv) is checked at placement time against the earlier, completed labels.
    """
    ell = len(content)
    occupied: set[tuple[int, int]] = set()
    column_cells: dict[int, list[tuple[int, int]]] = {}
    label_rows: list[list[int]] = [[] for _ in range(ell + 1)]
    results: list[KohnertTableau] = []

    def column_condition_holds(label: int, row: int, col: int) -> bool:
        for other_row, other_label in column_cells.get(col, ()):
            if other_row > row:
                rows = label_rows[other_label]
                if len(rows) <= col or rows[col] <= row:
                    return False
        return True

    def place(label: int, col: int, ceiling: int):
        if label > ell:
            cells = tuple(
                Cell(r, c, lab)
                for lab in range(1, ell + 1)
                for c, r in enumerate(label_rows[lab], start=1)
            )
            results.append(KohnertTableau(WeakComposition(content), cells))
            return
        if col > content[label - 1]:
            place(label + 1, 1, label + 1 if row_limit is None else min(label + 1, row_limit))
            return
        for row in range(ceiling, 0, -1):
            if (row, col) in occupied or not column_condition_holds(label, row, col):
                continue
            occupied.add((row, col))
            column_cells.setdefault(col, []).append((row, label))
            label_rows[label].append(row)
            place(label, col + 1, row)
            label_rows[label].pop()
            column_cells[col].pop()
            occupied.discard((row, col))

    if ell == 0:
        return [KohnertTableau(WeakComposition(()), ())]
    place(1, 1, 1 if row_limit is None else min(1, row_limit))
    return results


@lru_cache(maxsize=4096)
def _kohnert_cached(content: tuple[int, ...], row_limit: Optional[int]) -> tuple[KohnertTableau, ...]:
    tableaux = _generate_kohnert(content, row_limit)
    tableaux.sort(key=lambda t: t.sort_key)
    logger.debug("enumerated %d Kohnert tableaux of content %s", len(tableaux), content)
    return tuple(tableaux)


def enumerate_kohnert(
    a: Sequence[int],
    bounds: Optional[Bounds] = None,
    row_limit: Optional[int] = None,
) -> list[KohnertTableau]:
    """
    KT(a) in canonical order.

    Args:
        a: The content
        bounds: Enumeration bounds (module defaults when omitted)
        row_limit: Keep only tableaux whose cells all lie in rows <= row_limit

    Raises:
        BoundExceededError: if a is larger than the bounds allow
    """
    a = WeakComposition(a)
    check_enumeration_bounds(a, bounds)
    if row_limit is not None and row_limit < 0:
        raise UsageError(f"row limit must be nonnegative, got {row_limit}")
    return list(_kohnert_cached(tuple(a), row_limit))


def enumerate_qkt(a: Sequence[int], bounds: Optional[Bounds] = None) -> list[KohnertTableau]:
    """QKT(a) in canonical order: the quasi-Yamanouchi members of KT(a)."""
    return [t for t in enumerate_kohnert(a, bounds) if _satisfies_row_condition(t)]


def canonical(tableaux: Iterable[KohnertTableau]) -> list[KohnertTableau]:
    """Deduplicate and sort into canonical order."""
    unique = {(t.content, t.cells): t for t in tableaux}
    return sorted(unique.values(), key=lambda t: t.sort_key)
