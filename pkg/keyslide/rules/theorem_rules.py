"""
Built-in classification rules, listed in the order classify() tries them.
"""

from typing import Optional

from ..classify import (
    find_pattern,
    is_hook,
    schur_fund_mf,
    single_term_case,
    strong_multiplicity_free,
    two_nonzero_mf,
    two_term_theorem,
)
from ..composition import WeakComposition, flatten, is_strong, nonzero_positions, sort0, sort_to_partition
from .base_rule import BaseRule, ClassificationReport, Verdict


class SingleTermRule(BaseRule):
    """kappa_a = F_a for the four single-term shapes."""

    rule_name = "single_term"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        case = single_term_case(a)
        if case is None:
            return None
        return self.report(a, Verdict.SINGLE_TERM, f"thm_k_eq_f_case_{case}", {"terms": [list(a)]})


class TwoTermRule(BaseRule):
    """kappa_a = F_a + F_sort0(a)."""

    rule_name = "two_terms"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        theorem = two_term_theorem(a)
        if theorem is None:
            return None
        return self.report(a, Verdict.TWO_TERMS, theorem, {"terms": [list(a), list(sort0(a))]})


class StrongCompositionRule(BaseRule):
    """Pattern avoidance decides every strong composition."""

    rule_name = "strong_patterns"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        if not is_strong(a):
            return None
        return strong_multiplicity_free(a)


class TwoNonzeroPartsRule(BaseRule):
    """Indices with exactly two nonzero parts, split by leading zeros."""

    rule_name = "two_nonzero_parts"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        if len(flatten(a)) != 2:
            return None
        return two_nonzero_mf(a)


class SchurShortcutRule(BaseRule):
    """Free whenever s_sort(a) is free in the fundamental basis; hooks are a named special case."""

    rule_name = "schur_shortcut"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        lam = sort_to_partition(a)
        if not schur_fund_mf(lam):
            return None
        theorem = "cor_hooks" if is_hook(lam) else "lem_mf"
        return self.report(a, Verdict.MULTIPLICITY_FREE, theorem, {"partition": list(lam)})


class FlatPatternRule(BaseRule):
    """Not free whenever flat(a) already contains a forbidden pattern."""

    rule_name = "flat_patterns"

    @property
    def name(self) -> str:
        return self.rule_name

    def evaluate(self, a: WeakComposition) -> Optional[ClassificationReport]:
        found = find_pattern(flatten(a))
        if found is None:
            return None
        pattern, positions = found
        lookup = nonzero_positions(a)
        return self.report(
            a,
            Verdict.NOT_MULTIPLICITY_FREE,
            f"lem_not_mf_pattern_{pattern}",
            {"pattern": pattern, "positions": [lookup[p - 1] for p in positions]},
        )


DEFAULT_RULES = (
    SingleTermRule,
    TwoTermRule,
    StrongCompositionRule,
    TwoNonzeroPartsRule,
    SchurShortcutRule,
    FlatPatternRule,
)
