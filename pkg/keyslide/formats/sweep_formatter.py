"""
Formatter for brute-force sweeps. JSON output is newline-delimited, one
compact record per index, so runs can be diffed line by line.
"""

import json
from typing import Iterable

from ..oracle import SweepRecord
from .base import BaseFormatter


class SweepFormatter(BaseFormatter):
    template_name = "sweep"

    def __init__(self, records: Iterable[SweepRecord]):
        super().__init__()
        self.records = list(records)

    def _build_payload(self) -> dict:
        return {
            "records": [record.to_dict() for record in self.records],
            "count": len(self.records),
            "inconsistent": [list(r.index) for r in self.records if not r.consistent],
        }

    def to_json(self) -> str:
        lines = [
            json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
            for record in self.render()["records"]
        ]
        return "".join(line + "\n" for line in lines)
