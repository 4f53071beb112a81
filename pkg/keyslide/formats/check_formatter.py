"""
Formatters for verification results: the expansion identity and the
stable limit checks.
"""

from ..composition import flatten, sort_to_partition
from ..expansion import ExpansionCheck
from ..oracle import LimitCheck
from .base import BaseFormatter, composition_label


class VerifyFormatter(BaseFormatter):
    """Both sides of kappa_a = sum F_wt(T) and whether they agree."""

    template_name = "verify"

    def __init__(self, check: ExpansionCheck):
        super().__init__()
        self.check = check

    def _build_payload(self) -> dict:
        return {
            "index": list(self.check.expansion.index),
            "holds": self.check.holds,
            "terms": self.check.expansion.to_dict()["terms"],
            "key": self.check.key.to_dict(),
            "slide_sum": self.check.slide_sum.to_dict(),
        }

    def _template_context(self, payload: dict) -> dict:
        return {
            "key_text": self.check.key.to_text(),
            "slide_text": self.check.slide_sum.to_text(),
            "key_latex": self.check.key.to_latex(),
        }


class LimitFormatter(BaseFormatter):
    """Outcome of a stable limit check, key or slide."""

    template_name = "limit"

    def __init__(self, check: LimitCheck, kind: str = "key"):
        super().__init__()
        self.check = check
        self.kind = kind

    def _build_payload(self) -> dict:
        payload = self.check.to_dict()
        payload["kind"] = self.kind
        payload["passed"] = self.check.passed
        return payload

    def _template_context(self, payload: dict) -> dict:
        index = self.check.index
        target_index = sort_to_partition(index) if self.kind == "key" else flatten(index)
        return {
            "target_symbol": "s" if self.kind == "key" else "F",
            "target_index": composition_label(target_index),
            "target_text": self.check.target.to_text(),
            "target_latex": self.check.target.to_latex(),
            "limit_text": self.check.limit.to_text() if self.check.limit is not None else None,
        }
