"""
Ordered registry of classification rules.
"""

from typing import Type

from .base_rule import BaseRule


class RuleRegistry:
    """Registry class holding the rules classify() tries, in order."""

    _rules: dict[str, Type[BaseRule]] = {}

    @classmethod
    def register(cls, name: str, rule_class: Type[BaseRule]) -> None:
        """Register a rule class; rules run in registration order."""
        cls._rules[name.lower()] = rule_class

    @classmethod
    def get_rules(cls) -> list[BaseRule]:
        """Instantiate every registered rule, loading the built-in ones on first use."""
        if not cls._rules:
            cls._load_default_rules()
        return [rule_class() for rule_class in cls._rules.values()]

    @classmethod
    def _load_default_rules(cls) -> None:
        # imported here: the rules depend on keyslide.classify, which imports this package
        from .theorem_rules import DEFAULT_RULES

        for rule_class in DEFAULT_RULES:
            cls.register(rule_class.rule_name, rule_class)

    @classmethod
    def list_rules(cls) -> list[str]:
        """List registered rule names in the order they are tried."""
        return [rule.name for rule in cls.get_rules()]


def get_rules() -> list[BaseRule]:
    """Convenience function to get the ordered rule instances."""
    return RuleRegistry.get_rules()
