"""
Formatter registry for keyslide.
Maps CLI subcommands to their formatter classes and default output formats.
"""
from __future__ import annotations

from .base import OUTPUT_FORMATS, BaseFormatter
from .check_formatter import LimitFormatter, VerifyFormatter
from .expansion_formatter import ExpansionFormatter
from .polynomial_formatter import PolynomialFormatter
from .report_formatter import ReportFormatter
from .sweep_formatter import SweepFormatter
from .tableau_formatter import TableauFormatter

# Registry mapping subcommands to formatter classes
FORMATTER_REGISTRY = {
    "expand": ExpansionFormatter,
    "key": PolynomialFormatter,
    "slide": PolynomialFormatter,
    "tableaux": TableauFormatter,
    "classify": ReportFormatter,
    "verify": VerifyFormatter,
    "limit": LimitFormatter,
    "sweep": SweepFormatter,
}

# Default output formats for each subcommand
DEFAULT_OUTPUT_FORMATS = {
    "expand": "json",
    "key": "json",
    "slide": "json",
    "tableaux": "text",
    "classify": "json",
    "verify": "json",
    "limit": "json",
    "sweep": "json",
}


def get_formatter(subcommand: str) -> type[BaseFormatter] | None:
    """Get the formatter class for a given subcommand."""
    return FORMATTER_REGISTRY.get(subcommand.lower())


def get_default_format(subcommand: str) -> str:
    """Get the default output format for a given subcommand."""
    return DEFAULT_OUTPUT_FORMATS.get(subcommand.lower(), "json")


__all__ = [
    "BaseFormatter",
    "ExpansionFormatter",
    "LimitFormatter",
    "PolynomialFormatter",
    "ReportFormatter",
    "SweepFormatter",
    "TableauFormatter",
    "VerifyFormatter",
    "FORMATTER_REGISTRY",
    "DEFAULT_OUTPUT_FORMATS",
    "OUTPUT_FORMATS",
    "get_formatter",
    "get_default_format",
]
