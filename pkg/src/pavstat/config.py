"""Runtime limits for enumeration-backed commands.

Full enumeration cost grows by roughly 3.5x per unit of length, so the CLI
refuses lengths above a configurable cap.  Resolution order: an explicit
command-line value wins, then the PAVSTAT_MAX_N environment variable, then
the default (12, or 15 when extended mode is requested).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_N = 12
EXTENDED_MAX_N = 15
ENV_MAX_N = "PAVSTAT_MAX_N"


@dataclass(frozen=True)
class Limits:
    """Effective length cap plus the extended-mode flag that produced it."""

    max_n: int
    extended: bool = False


def resolve_limits(
    flag: int | None = None,
    extended: bool = False,
    env: dict[str, str] | None = None,
) -> Limits:
    env = os.environ if env is None else env
    if flag is not None:
        return Limits(flag, extended)
    raw = env.get(ENV_MAX_N)
    if raw is not None:
        try:
            return Limits(int(raw), extended)
        except ValueError:
            raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    return Limits(EXTENDED_MAX_N if extended else DEFAULT_MAX_N, extended)
