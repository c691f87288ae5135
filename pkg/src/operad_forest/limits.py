"""Resource bounds for the certified suites.

The combinatorics grow like n^(n-1), so every expensive entry point checks
an explicit arity bound instead of letting a typo eat all memory.  The
defaults are:

* ``DEFAULT_MAX_N`` (6): ceiling for certified paths in ordinary runs;
* ``BIG_MAX_N`` (7): ceiling when a caller opts in with ``--big``;
* ``SERIES_MAX_ORDER`` (10) and ``DUP_SERIES_MAX_ORDER`` (14): truncation
  ceilings for the dimension-series computations.

The environment variable ``OPERAD_FOREST_MAX_N`` overrides the arity
ceiling for both ordinary and ``--big`` runs.
"""

from __future__ import annotations

import os

DEFAULT_MAX_N = 6
BIG_MAX_N = 7
SERIES_MAX_ORDER = 10
DUP_SERIES_MAX_ORDER = 14

ENV_MAX_N = "OPERAD_FOREST_MAX_N"


class ResourceBoundError(ValueError):
    """A requested size exceeds the configured bound."""


def max_arity(big: bool = False) -> int:
    override = os.environ.get(ENV_MAX_N)
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise ResourceBoundError("%s must be an integer, got %r"
                                     % (ENV_MAX_N, override)) from None
    return BIG_MAX_N if big else DEFAULT_MAX_N


def check_arity(n: int, big: bool = False, what: str = "arity"):
    bound = max_arity(big)
    if n > bound:
        raise ResourceBoundError(
            "%s %d exceeds the configured bound %d (use --big or set %s)"
            % (what, n, bound, ENV_MAX_N))
    return n


def check_series_order(order: int, bound: int = SERIES_MAX_ORDER):
    if order > bound:
        raise ResourceBoundError("series order %d exceeds the configured bound %d"
                                 % (order, bound))
    return order
