"""Resource limits, overridable through environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass


class ResourceLimitError(RuntimeError):
    """An invariant was refused because the input exceeds a configured limit."""


@dataclass(frozen=True)
class Limits:
    tl_max_strands: int = 10
    max_crossings: int = 400


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def limits() -> Limits:
    """Current limits (read on every call so tests and the CLI can override them)."""
    return Limits(
        tl_max_strands=_env_int("TWISTKNOT_TL_MAX_STRANDS", Limits.tl_max_strands),
        max_crossings=_env_int("TWISTKNOT_MAX_CROSSINGS", Limits.max_crossings),
    )
