"""
Formatter for lists of Kohnert tableaux.
"""

from typing import Sequence

from ..composition import WeakComposition
from ..tableau import KohnertTableau
from .base import BaseFormatter


def ytableau_rows(tableau: KohnertTableau) -> list[str]:
    """Rows top to bottom in \\ytableaushort syntax, \\none for an empty cell."""
    rows = []
    for line in reversed(tableau.grid):
        entries = list(line)
        while entries and entries[-1] is None:
            entries.pop()
        rows.append("".join("\\none" if v is None else "{" + str(v) + "}" for v in entries) or "\\none")
    return rows


class TableauFormatter(BaseFormatter):
    """KT(a) or QKT(a) with each tableau's weight."""

    template_name = "tableaux"

    def __init__(self, index: Sequence[int], tableaux: Sequence[KohnertTableau], kind: str = "QKT"):
        super().__init__()
        self.index = WeakComposition(index)
        self.tableaux = list(tableaux)
        self.kind = kind

    def _build_payload(self) -> dict:
        return {
            "index": list(self.index),
            "kind": self.kind,
            "count": len(self.tableaux),
            "tableaux": [
                dict(t.to_dict(), weight=list(t.weight)) for t in self.tableaux
            ],
        }

    def _template_context(self, payload: dict) -> dict:
        return {
            "drawings": [t.render_ascii() for t in self.tableaux],
            "ytableau": [ytableau_rows(t) for t in self.tableaux],
        }
