"""
Formatter for key and slide polynomials.
"""

from typing import Sequence

from ..composition import WeakComposition
from ..exceptions import UsageError
from ..polynomial import MonomialPolynomial
from .base import BaseFormatter

SYMBOLS = {
    "key": {"text": "κ", "latex": "\\kappa"},
    "slide": {"text": "𝔉", "latex": "\\mathfrak{F}"},
}


class PolynomialFormatter(BaseFormatter):
    """A single polynomial with the index it was computed from."""

    template_name = "polynomial"

    def __init__(self, index: Sequence[int], polynomial: MonomialPolynomial, kind: str = "key"):
        super().__init__()
        if kind not in SYMBOLS:
            raise UsageError(f"unknown polynomial kind {kind!r}")
        self.index = WeakComposition(index)
        self.polynomial = polynomial
        self.kind = kind

    def _build_payload(self) -> dict:
        return {
            "index": list(self.index),
            "kind": self.kind,
            "polynomial": self.polynomial.to_dict(),
            "value_at_ones": self.polynomial.evaluate_all_ones(),
        }

    def _template_context(self, payload: dict) -> dict:
        return {
            "symbol": SYMBOLS[self.kind],
            "text_body": self.polynomial.to_text(),
            "latex_body": self.polynomial.to_latex(),
        }
