"""
Classification rules for keyslide.
Each rule turns one proved criterion into a ClassificationReport.
"""

from .base_rule import BaseRule, ClassificationReport, Verdict
from .rule_registry import RuleRegistry, get_rules

__all__ = [
    "BaseRule",
    "ClassificationReport",
    "Verdict",
    "RuleRegistry",
    "get_rules",
]
