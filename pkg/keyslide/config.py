"""
Configuration for keyslide.
Module-level defaults, overridable through environment variables and then
through explicit (command-line) overrides.
"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Sequence

from .exceptions import BoundExceededError, UsageError

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUM = 24
DEFAULT_MAX_LENGTH = 12
DEFAULT_M_MAX = 6
DEFAULT_WORKERS = 1

ENV_BOUND_SUM = "KEYSLIDE_BOUND_SUM"
ENV_BOUND_LENGTH = "KEYSLIDE_BOUND_LENGTH"
ENV_M_MAX = "KEYSLIDE_MMAX"
ENV_WORKERS = "KEYSLIDE_WORKERS"


@dataclass(frozen=True)
class Bounds:
    """Resource bounds applied before any exhaustive enumeration."""

    max_sum: Optional[int] = DEFAULT_MAX_SUM
    max_length: Optional[int] = DEFAULT_MAX_LENGTH
    m_max: int = DEFAULT_M_MAX
    workers: int = DEFAULT_WORKERS

    def unbounded(self) -> "Bounds":
        """Return a copy with the sum and length bounds removed."""
        return replace(self, max_sum=None, max_length=None)


DEFAULT_BOUNDS = Bounds()


def _read_env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError(f"environment variable {name} must be nonnegative, got {value}")
    return value


def load_bounds(
    max_sum: Optional[int] = None,
    max_length: Optional[int] = None,
    m_max: Optional[int] = None,
    workers: Optional[int] = None,
    unsafe: bool = False,
) -> Bounds:
    """
    Build the effective bounds.

    Explicit arguments win over environment variables, which win over the
    module defaults.

    Args:
        max_sum: Override for the sum bound
        max_length: Override for the length bound
        m_max: Override for the stable-limit padding bound
        workers: Override for the sweep worker count
        unsafe: Remove the sum and length bounds entirely

    Returns:
        The effective Bounds
    """
    bounds = Bounds(
        max_sum=max_sum if max_sum is not None else _read_env_int(ENV_BOUND_SUM, DEFAULT_MAX_SUM),
        max_length=max_length if max_length is not None else _read_env_int(ENV_BOUND_LENGTH, DEFAULT_MAX_LENGTH),
        m_max=m_max if m_max is not None else _read_env_int(ENV_M_MAX, DEFAULT_M_MAX),
        workers=workers if workers is not None else _read_env_int(ENV_WORKERS, DEFAULT_WORKERS),
    )
    for name in ("max_sum", "max_length", "m_max"):
        value = getattr(bounds, name)
        if value is not None and value < 0:
            raise UsageError(f"{name.replace('_', ' ')} must be nonnegative, got {value}")
    if bounds.workers < 1:
        raise UsageError(f"worker count must be at least 1, got {bounds.workers}")
    if unsafe:
        logger.warning("enumeration bounds disabled; large indices may not terminate in practice")
        bounds = bounds.unbounded()
    return bounds


def check_enumeration_bounds(parts: Sequence[int], bounds: Optional[Bounds] = None) -> None:
    """
    Raise BoundExceededError if an index is too large to enumerate.

    Args:
        parts: The index being enumerated (any sequence of part sizes)
        bounds: Bounds to enforce; the module defaults when omitted
    """
    bounds = bounds or DEFAULT_BOUNDS
    total = sum(parts)
    if bounds.max_sum is not None and total > bounds.max_sum:
        raise BoundExceededError("sum", bounds.max_sum, total)
    if bounds.max_length is not None and len(parts) > bounds.max_length:
        raise BoundExceededError("length", bounds.max_length, len(parts))


def get_resource_path(relative_path: str) -> Path:
    """Get the path of a resource shipped inside the package, independent of the working directory."""
    return Path(__file__).parent / relative_path
