"""
Formatter for slide expansions.
"""

from ..expansion import SlideExpansion
from .base import BaseFormatter


class ExpansionFormatter(BaseFormatter):
    """kappa_a = sum of F_b, one term per distinct weight with its multiplicity."""

    template_name = "expansion"

    def __init__(self, expansion: SlideExpansion):
        super().__init__()
        self.expansion = expansion

    def _build_payload(self) -> dict:
        payload = self.expansion.to_dict()
        payload["total_multiplicity"] = self.expansion.total_multiplicity
        payload["max_multiplicity"] = self.expansion.max_multiplicity
        payload["multiplicity_free"] = self.expansion.is_multiplicity_free
        return payload
