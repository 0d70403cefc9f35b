"""Shared defaults for search budgets."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 50_000


def effective_budget(explicit: int | None = None) -> int:
    """Explicit value if given, else the CQT_BUDGET env var, else the default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("CQT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"CQT_BUDGET must be an integer, got {env!r}") from exc
    return DEFAULT_BUDGET
