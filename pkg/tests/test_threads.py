import logging
import queue
import time
from unittest import mock

import pytest

from primexp.checks import Check
from primexp.errors import WorkerError
from primexp.report import VerificationRow
from primexp.thread_base import ThreadBase
from primexp.thread_manager import ThreadManager
from primexp.thread_statsd import strtobool, ThreadFakeStatsd, ThreadStatsd
from primexp.thread_verify import ThreadVerify


class MockedStatsd(ThreadStatsd):
    def make_client(self, host, port, prefix):
        self.address = (host, port, prefix)
        return mock.Mock()


class Sleeper(ThreadBase):
    def run(self):
        while self.is_running:
            time.sleep(0.01)


class Failing(ThreadBase):
    def run(self):
        self.error = RuntimeError('broken')


class RowCheck(Check):
    name = 'rows'

    def size(self):
        return 6

    def process(self, index):
        return [VerificationRow('L2.2', [('i', index)], 4, index, asserted=True)]


class TestStrtobool:
    @pytest.mark.parametrize('value,expected', [
        ('true', True), ('Yes', True), ('1', True), (' on ', True),
        ('false', False), ('0', False), ('', False), ('nope', False),
    ])
    def test_values(self, value, expected):
        assert strtobool(value) is expected


class TestThreadStatsd:
    def test_configure(self):
        thread = MockedStatsd(queue.Queue(), host='stats.local', port='9125', prefix='pe')
        assert thread.address == ('stats.local', 9125, 'pe')

    def test_senders(self):
        thread = MockedStatsd(queue.Queue())
        assert thread.get_sender('g') == thread.client.gauge
        assert thread.get_sender('c') == thread.client.update_stats
        assert thread.get_sender('x') is None
        thread.get_sender('t')('verify.bounds.seconds', 1.5)
        thread.client.timing.assert_called_once_with('verify.bounds.seconds', 1500.0)

    def test_send_stat(self):
        thread = MockedStatsd(queue.Queue())
        assert thread.send_stat(('verify.L2.2.rows', 3, 'c'))
        thread.client.update_stats.assert_called_once_with('verify.L2.2.rows', 3)
        assert not thread.send_stat(('verify.L2.2.rows', None, 'c'))
        assert not thread.send_stat(('verify.L2.2.rows', 1, 'x'))

    def test_drains_queue_on_stop(self):
        metrics = queue.Queue()
        thread = MockedStatsd(metrics)
        for i in range(5):
            metrics.put(('verify.L2.2.rows', i + 1, 'c'))
        thread.start()
        thread.stop()
        thread.join(5)
        assert not thread.is_alive()
        assert thread.client.update_stats.call_count == 5

    def test_fake_logs(self, caplog):
        thread = ThreadFakeStatsd(queue.Queue(), prefix='pe')
        with caplog.at_level(logging.INFO, logger='primexp.thread_statsd'):
            thread.send_stat(('verify.census.seconds', 2, 't'))
        assert 'metric pe.verify.census.seconds 2|t' in caplog.text


class TestThreadVerify:
    def test_processes_blocks_and_counts_rows(self):
        work = queue.Queue()
        work.put((0, 3))
        work.put((3, 6))
        metrics = queue.Queue()
        worker = ThreadVerify(queue=work, check=RowCheck(), metrics=metrics)
        worker.run()
        assert sorted(dict(r.instance)['i'] for r in worker.results) == list(range(6))
        sent = []
        while not metrics.empty():
            sent.append(metrics.get())
        assert ('verify.L2.2.rows', 3, 'c') in sent
        assert ('verify.L2.2.failures', 1, 'c') in sent

    def test_records_errors(self):
        class Broken(RowCheck):
            def process(self, index):
                raise ValueError(index)
        work = queue.Queue()
        work.put((0, 1))
        worker = ThreadVerify(queue=work, check=Broken())
        worker.run()
        assert isinstance(worker.error, ValueError)
        assert worker.results == []


class TestThreadManager:
    def test_runs_to_completion(self):
        work = queue.Queue()
        work.put((0, 6))
        worker = ThreadVerify(queue=work, check=RowCheck())
        manager = ThreadManager(threads=[worker])
        manager.run()
        assert len(worker.results) == 6
        assert not manager.interrupted

    def test_failure_stops_everyone(self):
        sleeper = Sleeper(queue.Queue())
        manager = ThreadManager(threads=[Failing(queue.Queue()), sleeper])
        with pytest.raises(WorkerError) as excinfo:
            manager.run()
        assert isinstance(excinfo.value.original, RuntimeError)
        assert not sleeper.is_alive()

    def test_signal_stops_threads(self):
        sleeper = Sleeper(queue.Queue())
        manager = ThreadManager(threads=[sleeper])
        manager.start_threads()
        manager.signal_handler(2, None)
        assert manager.interrupted
        assert manager.quit
        assert not sleeper.is_alive()


class TestThreadBase:
    def test_take(self):
        work = queue.Queue()
        work.put((0, 4))
        thread = Sleeper(work)
        assert thread.take() == (0, 4)
        assert thread.take() is None
        assert thread.take(0.01) is None

    def test_stop(self):
        thread = Sleeper(queue.Queue())
        thread.stop()
        assert not thread.is_running
        assert Sleeper.is_running
