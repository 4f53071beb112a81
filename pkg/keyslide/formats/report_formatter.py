"""
Formatter for classification reports.
"""

from ..rules import ClassificationReport, Verdict
from .base import BaseFormatter

VERDICT_PHRASES = {
    Verdict.SINGLE_TERM: "is a single fundamental slide",
    Verdict.TWO_TERMS: "is a sum of two fundamental slides",
    Verdict.MULTIPLICITY_FREE: "is multiplicity free",
    Verdict.NOT_MULTIPLICITY_FREE: "is not multiplicity free",
    Verdict.UNKNOWN_FAST_PATH: "is not decided by any fast criterion",
}


class ReportFormatter(BaseFormatter):
    template_name = "report"

    def __init__(self, report: ClassificationReport):
        super().__init__()
        self.report = report

    def _build_payload(self) -> dict:
        return self.report.to_dict()

    def _template_context(self, payload: dict) -> dict:
        return {"phrase": VERDICT_PHRASES[self.report.verdict]}
