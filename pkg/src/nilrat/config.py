"""Resource limits shared by the table and solver layers."""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator, Optional

from .errors import RankBoundError

DEFAULT_MAX_RANK = {"A": 8, "B": 6, "C": 6, "D": 5}

_override: Optional[int] = None


def max_rank(family: str) -> int:
    if _override is not None:
        return _override
    return DEFAULT_MAX_RANK[family]


def check_rank(alg) -> None:
    limit = max_rank(alg.family)
    if alg.rank > limit:
        raise RankBoundError(
            f"{alg.name} exceeds the configured rank bound {limit} for type "
            f"{alg.family}; raise it with --max-rank")


@contextmanager
def override_max_rank(limit: Optional[int]) -> Iterator[None]:
    """Temporarily replace every per-family rank bound by ``limit``."""
    global _override
    previous = _override
    _override = limit
    try:
        yield
    finally:
        _override = previous
