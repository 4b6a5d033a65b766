"""Grow-only memo tables for recoupling constants."""
from __future__ import annotations

import threading
from typing import Callable, Dict, Hashable, Tuple

from src.utils.logger import get_logger

logger = get_logger(__name__)

TABLES = ("delta", "theta", "tet", "sixj")


class RecouplingCache:
    """
    One table per constant, keyed by canonical label tuples.

    A value is computed at most once per key: the compute callback runs under
    the cache lock, so concurrent readers never race on a miss.
    """

    def __init__(self) -> None:
        self._tables: Dict[str, Dict[Hashable, object]] = {name: {} for name in TABLES}
        self._lock = threading.RLock()
        self.misses = 0

    def get(self, table: str, key: Tuple[int, ...], compute: Callable[[], object]):
        entries = self._tables[table]
        value = entries.get(key)
        if value is not None:
            return value
        with self._lock:
            value = entries.get(key)
            if value is None:
                logger.debug("recoupling miss %s%s", table, key)
                value = compute()
                entries[key] = value
                self.misses += 1
        return value

    def size(self, table: str) -> int:
        return len(self._tables[table])

    def items(self, table: str):
        return list(self._tables[table].items())

    def clear(self) -> None:
        with self._lock:
            for entries in self._tables.values():
                entries.clear()
            self.misses = 0


DEFAULT_CACHE = RecouplingCache()
