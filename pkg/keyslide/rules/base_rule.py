"""
Abstract base class for classification rules.
Every rule wraps one proved criterion and either decides an index or
declines it.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from ..composition import WeakComposition


class Verdict(str, Enum):
    SINGLE_TERM = "SINGLE_TERM"
    TWO_TERMS = "TWO_TERMS"
    MULTIPLICITY_FREE = "MULTIPLICITY_FREE"
    NOT_MULTIPLICITY_FREE = "NOT_MULTIPLICITY_FREE"
    UNKNOWN_FAST_PATH = "UNKNOWN_FAST_PATH"


@dataclass(frozen=True)
class ClassificationReport:
    """Which criterion fired for an index, its verdict, and supporting witness data."""

    index: WeakComposition
    verdict: Verdict
    theorem: str
    witness: Optional[dict] = None

    @property
    def multiplicity_free(self) -> Optional[bool]:
        """True or False when decided, None for UNKNOWN_FAST_PATH."""
        if self.verdict is Verdict.UNKNOWN_FAST_PATH:
            return None
        return self.verdict is not Verdict.NOT_MULTIPLICITY_FREE

    def to_dict(self) -> dict:
        """Convert report to dictionary for JSON serialization."""
        return {
            "index": list(self.index),
            "verdict": self.verdict.value,
            "theorem": self.theorem,
            "witness": self.witness,
        }


class BaseRule(ABC):
    """Abstract base class for classification rules."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the stable name of this rule."""
        pass

    @abstractmethod
    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        """
        Decide the index if this rule's hypothesis covers it.

        Args:
            a: The index to classify

        Returns:
            A ClassificationReport, or None when the rule does not apply
        """
        pass

    def report(
        self,
        a: Sequence[int],
        verdict: Verdict,
        theorem: Optional[str] = None,
        witness: Optional[dict] = None,
    ) -> ClassificationReport:
        return ClassificationReport(WeakComposition(a), verdict, theorem or self.name, witness)
