"""
Base formatter class for keyslide output.
Every CLI result is turned into a payload dictionary once and rendered from
it as JSON, plain text or LaTeX.
"""

import json
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..config import get_resource_path
from ..exceptions import UsageError

OUTPUT_FORMATS = ("json", "text", "latex")


def composition_label(parts: Sequence[int]) -> str:
    """(0,0,3,2) style, as used in subscripts."""
    return "(" + ",".join(str(p) for p in parts) + ")"


@lru_cache(maxsize=1)
def get_environment() -> Environment:
    """Jinja2 environment over the templates shipped inside the package."""
    env = Environment(
        loader=FileSystemLoader(str(get_resource_path("templates"))),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        autoescape=False,
    )
    env.filters["comp"] = composition_label
    env.filters["brace"] = lambda text: "{" + str(text) + "}"
    return env


class BaseFormatter(ABC):
    """Abstract base class for all output formatters."""

    # templates/<template_name>.txt.j2 and templates/<template_name>.tex.j2
    template_name: str = ""

    def __init__(self):
        self._payload = None

    @abstractmethod
    def _build_payload(self) -> dict:
        """
        Build the JSON-ready description of the result.

        Returns:
            Dictionary of plain lists, numbers and strings
        """
        pass

    def _template_context(self, payload: dict) -> dict:
        """Extra values the text and LaTeX templates need beyond the payload."""
        return {}

    def render(self) -> dict:
        """
        Build and cache the payload.

        Returns:
            The payload dictionary
        """
        if self._payload is None:
            self._payload = self._build_payload()
        return self._payload

    def _render_template(self, suffix: str) -> str:
        payload = self.render()
        template = get_environment().get_template(f"{self.template_name}.{suffix}.j2")
        return template.render(payload=payload, **self._template_context(payload))

    def to_json(self) -> str:
        """Deterministic JSON: sorted keys, no timestamps."""
        return json.dumps(self.render(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        return self._render_template("txt")

    def to_latex(self) -> str:
        return self._render_template("tex")

    def get_output(self, format: str = "json") -> str:
        """
        Get the rendered output in the specified format.

        Args:
            format: One of 'json', 'text' or 'latex'

        Returns:
            Rendered output as a string ending in a newline
        """
        fmt = format.lower()
        if fmt == "json":
            return self.to_json()
        if fmt == "text":
            return self.to_text()
        if fmt == "latex":
            return self.to_latex()
        raise UsageError(f"unknown output format {format!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
