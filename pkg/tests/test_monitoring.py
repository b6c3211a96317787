"""
Tests for resource tracking and the ordered parallel map.
"""

import threading

import pytest

from config import get_config
from monitoring import Metric, ResourceMonitor, parallel_map


@pytest.fixture
def monitor(mocker):
    return ResourceMonitor(mocker.Mock())


@pytest.mark.unit
class TestResourceMonitor:
    """Metrics of tracked blocks."""

    def test_track_records_metric(self, monitor):
        with monitor.track("bratteli.build", k=[2, 2]):
            sum(range(1000))
        (metric,) = monitor.metrics
        assert metric.operation == "bratteli.build"
        assert metric.labels == {"k": [2, 2]}
        assert metric.wall_seconds >= 0
        assert metric.rss_bytes > 0
        monitor.logger.debug.assert_called_once()

    def test_track_records_on_error(self, monitor):
        with pytest.raises(RuntimeError):
            with monitor.track("failing"):
                raise RuntimeError("stop")
        assert [m.operation for m in monitor.metrics] == ["failing"]

    def test_summary(self, monitor):
        monitor.metrics = [
            Metric("a", wall_seconds=1.0, cpu_seconds=0.5, rss_bytes=10),
            Metric("b", wall_seconds=2.0, cpu_seconds=1.5, rss_bytes=30),
        ]
        assert monitor.summary() == {
            "operations": 2,
            "wall_seconds": 3.0,
            "cpu_seconds": 2.0,
            "peak_rss_bytes": 30,
            "slowest": "b",
        }

    def test_empty_summary(self, monitor):
        assert monitor.summary()["slowest"] is None
        monitor.log_summary("Nothing")
        monitor.logger.info.assert_called_once_with("Nothing", **monitor.summary())

    def test_metric_to_dict(self):
        data = Metric("op", 1.0, 2.0, 3, timestamp=5.0).to_dict()
        assert data == {
            "operation": "op",
            "wall_time": 1.0,
            "cpu_time": 2.0,
            "memory": 3,
            "timestamp": 5.0,
            "labels": {},
        }


@pytest.mark.unit
class TestParallelMap:
    """Order-preserving maps."""

    def test_serial(self):
        assert parallel_map(lambda x: x * x, range(5), 1) == [0, 1, 4, 9, 16]

    def test_threaded_preserves_order(self):
        names = parallel_map(lambda x: (x, threading.current_thread().name), range(20), 4)
        assert [x for x, _ in names] == list(range(20))

    def test_uses_configured_threads(self, mocker):
        get_config().execution.threads = 3
        executor = mocker.patch("monitoring.ThreadPoolExecutor")
        executor.return_value.__enter__.return_value.map.return_value = iter([1, 2])
        assert parallel_map(abs, [-1, -2]) == [1, 2]
        executor.assert_called_once_with(max_workers=3)

    def test_empty(self):
        assert parallel_map(abs, [], 4) == []
