"""
In-memory store for computed series.

Named series are expensive to rebuild (fixed points, plethysms), and many
identity checkers share them. The store memoizes them per (name, context).
Checkers may run in worker threads, so every access takes the lock.
"""

import logging
import threading
from typing import Dict, List, Optional, Tuple

from ncseries.models.series import NCSeries, TruncationContext

Key = Tuple[str, int, int]

db: Dict[str, Dict[Key, NCSeries]] = {
    "series": {},  # (name, max_len, max_weight) -> NCSeries
}

_lock = threading.Lock()

logger = logging.getLogger(__name__)


def _key(name: str, ctx: TruncationContext) -> Key:
    return name, ctx.max_len, ctx.max_weight


class SeriesStore:
    """Access layer over the in-memory store."""

    @staticmethod
    def get(name: str, ctx: TruncationContext) -> Optional[NCSeries]:
        with _lock:
            return db["series"].get(_key(name, ctx))

    @staticmethod
    def put(name: str, ctx: TruncationContext, series: NCSeries) -> NCSeries:
        with _lock:
            db["series"][_key(name, ctx)] = series
        return series

    @staticmethod
    def names() -> List[str]:
        with _lock:
            return sorted({name for name, _, _ in db["series"]})

    @staticmethod
    def size() -> int:
        with _lock:
            return len(db["series"])

    @staticmethod
    def clear() -> None:
        with _lock:
            count = len(db["series"])
            db["series"] = {}
        logger.debug(f"Cleared {count} stored series")
