"""
FusedHecke Monitoring
Resource tracking for long verification runs and ordered parallel maps
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, TypeVar

import psutil

from config import get_config
from logging_config import get_logger

T = TypeVar("T")
R = TypeVar("R")


class CheckStatus(Enum):
    """Outcome of a verification check."""

    VERIFIED = "verified"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class Metric:
    """Resource usage of a tracked block."""

    operation: str
    wall_seconds: float
    cpu_seconds: float
    rss_bytes: int
    timestamp: float = field(default_factory=time.time)
    labels: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert metric to dictionary."""
        return {
            "operation": self.operation,
            "wall_time": self.wall_seconds,
            "cpu_time": self.cpu_seconds,
            "memory": self.rss_bytes,
            "timestamp": self.timestamp,
            "labels": self.labels,
        }


class ResourceMonitor:
    """Records wall time, CPU time and resident memory per operation."""

    def __init__(self, logger=None):
        self.logger = logger or get_logger()
        self.process = psutil.Process()
        self.metrics: List[Metric] = []
        self._lock = threading.Lock()

    def _cpu_seconds(self) -> float:
        times = self.process.cpu_times()
        return times.user + times.system

    @contextmanager
    def track(self, operation: str, **labels) -> Iterator[None]:
        """Record a Metric for the enclosed block."""
        wall_start = time.perf_counter()
        cpu_start = self._cpu_seconds()
        try:
            yield
        finally:
            metric = Metric(
                operation=operation,
                wall_seconds=time.perf_counter() - wall_start,
                cpu_seconds=self._cpu_seconds() - cpu_start,
                rss_bytes=self.process.memory_info().rss,
                labels=labels,
            )
            with self._lock:
                self.metrics.append(metric)
            self.logger.debug(f"Tracked {operation}", **metric.to_dict())

    def summary(self) -> Dict[str, Any]:
        """Aggregate recorded metrics."""
        with self._lock:
            metrics = list(self.metrics)
        return {
            "operations": len(metrics),
            "wall_seconds": sum(m.wall_seconds for m in metrics),
            "cpu_seconds": sum(m.cpu_seconds for m in metrics),
            "peak_rss_bytes": max((m.rss_bytes for m in metrics), default=0),
            "slowest": max(metrics, key=lambda m: m.wall_seconds).operation
            if metrics
            else None,
        }

    def log_summary(self, title: str = "Resource summary"):
        """Write the aggregate to the log; never to stdout."""
        self.logger.info(title, **self.summary())


def parallel_map(
    func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None
) -> List[R]:
    """Map preserving input order; serial when one thread is configured."""
    items = list(items)
    workers = threads if threads is not None else get_config().execution.threads
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
