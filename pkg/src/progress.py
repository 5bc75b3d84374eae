"""
Progress bars for long enumerations: adjacency rows and verification instances.

Bars are drawn on stderr so that command output on stdout stays machine-readable.
"""

import logging
import sys
import time

try:
    from tqdm import tqdm
except ImportError:
    tqdm = None


logger = logging.getLogger(__name__)


class ProgressTracker:
    """
    Counts finished work units and shows them as a tqdm bar.

    Without tqdm a log line is written every tenth of the total. A disabled
    tracker still counts, so callers can read `done` afterwards.
    """

    def __init__(self, total: int, desc: str, disable: bool = False, unit: str = "items"):
        """
        Args:
            total: Number of units expected
            desc: Bar label
            disable: Count silently
            unit: Unit label ("vertices", "instances", ...)
        """
        self.total = max(0, total)
        self.desc = desc
        self.unit = unit
        self.disable = disable
        self.done = 0
        self._started = time.monotonic()
        self._stride = max(1, self.total // 10)
        self._next_log = self._stride
        self._bar = None
        if not disable and tqdm is not None:
            self._bar = tqdm(total=self.total, desc=desc, unit=unit, file=sys.stderr, ncols=80, leave=False)

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._started

    def update(self, n: int = 1):
        self.done += n
        if self.disable:
            return
        if self._bar is not None:
            self._bar.update(n)
        elif self.done >= self._next_log or self.done == self.total:
            logger.info(f"{self.desc}: {self.done}/{self.total} {self.unit}")
            self._next_log = self.done + self._stride

    def note(self, **counters):
        """Show extra counters beside the bar, e.g. cached spans"""
        if self._bar is not None:
            self._bar.set_postfix(counters, refresh=False)

    def close(self):
        if self._bar is not None:
            self._bar.close()
            self._bar = None
        if not self.disable:
            logger.debug(f"{self.desc}: {self.done} {self.unit} in {self.elapsed:.1f}s")

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()


def create_progress_tracker(total: int, desc: str, disable: bool = False, unit: str = "items") -> ProgressTracker:
    return ProgressTracker(total, desc, disable, unit)
