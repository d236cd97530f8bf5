"""
Verification runs.

A :class:`Runner` splits a check's index space into contiguous blocks, hands
them to :class:`~primexp.thread_verify.ThreadVerify` workers through a queue
and merges what they return. Rows are sorted before anything is written, so
reports do not depend on the number of workers or on scheduling.
"""
import logging
import queue as queue_module
import time
from pathlib import Path

from .checks import BoundsCheck, CensusCheck, Lemma24Check, Lemma34Check, Thm33Check, Thm36Check
from .config import get_int
from .digraph import DEFAULT_CYCLE_CAP
from .errors import WorkerError
from .report import CensusTable, Report
from .thread_manager import ThreadManager
from .thread_statsd import strtobool, ThreadFakeStatsd, ThreadStatsd
from .thread_verify import ThreadVerify

log = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 256


class Runner(object):
    """Runs checks over a pool of worker threads, optionally flushing progress metrics to statsd."""

    def __init__(self, jobs=1, block_size=DEFAULT_BLOCK_SIZE, cycle_cap=DEFAULT_CYCLE_CAP,
                 statsd=None, handle_signals=False):
        self.jobs = max(1, int(jobs))
        self.block_size = max(1, int(block_size))
        self.cycle_cap = cycle_cap
        self.statsd = statsd
        self.metrics = statsd.queue if statsd is not None else None
        self.handle_signals = handle_signals

    @classmethod
    def from_config(cls, config, dry_run=False, **overrides):
        """Build a runner from a get_config() dict; keyword overrides win over config values."""
        settings = {
            'jobs': get_int(config, 'verify', 'jobs'),
            'block_size': get_int(config, 'verify', 'block_size'),
            'cycle_cap': get_int(config, 'verify', 'cycle_cap'),
        }
        settings.update((key, value) for key, value in overrides.items() if value is not None)

        statsd_config = config.get('statsd', {})
        statsd = None
        if dry_run:
            statsd = ThreadFakeStatsd(queue=queue_module.Queue(), **statsd_config)
        elif strtobool(statsd_config.get('enabled', 'false')):
            statsd = ThreadStatsd(queue=queue_module.Queue(), **statsd_config)
        return cls(statsd=statsd, **settings)

    def __enter__(self):
        if self.statsd is not None:
            self.statsd.start()
        return self

    def __exit__(self, exc_type, exc_value, tb):
        if self.statsd is not None:
            self.statsd.stop()
            self.statsd.join()
            if self.statsd.error is not None:
                log.warning('statsd flushing stopped early (%s); %d metrics were not sent',
                            self.statsd.error, self.statsd.queue.qsize())
        return False

    def blocks(self, size):
        for start in range(0, size, self.block_size):
            yield start, min(start + self.block_size, size)

    def run_check(self, check):
        """Process every index of ``check`` and return the concatenated results, unsorted."""
        work = queue_module.Queue()
        count = 0
        for block in self.blocks(check.size()):
            work.put(block)
            count += 1
        workers = [ThreadVerify(queue=work, check=check, metrics=self.metrics)
                   for _ in range(max(1, min(self.jobs, count)))]
        log.info('running %s over %d indices in %d blocks with %d workers',
                 check.name, check.size(), count, len(workers))

        manager = ThreadManager(threads=workers, handle_signals=self.handle_signals)
        try:
            manager.run()
        except Exception:
            try:
                manager.stop_threads()
            except Exception:
                pass
            raise
        if manager.interrupted:
            raise WorkerError('{0} interrupted'.format(check.name))

        results = []
        for worker in workers:
            results.extend(worker.results)
        return results

    def timing(self, verb, seconds):
        if self.metrics is not None:
            self.metrics.put(('verify.{0}.seconds'.format(verb), seconds, 't'))

    def report(self, check):
        started = time.time()
        rows = self.run_check(check)
        rows.extend(check.finalize(rows))
        findings = check.summarize(rows)
        report = Report(check.name, check.params(), rows, findings)
        for row in report.failures:
            log.error('assert failed: %s', row.to_json())
        self.timing(check.name, time.time() - started)
        return report

    def check(self, cls, **params):
        return cls(cycle_cap=self.cycle_cap, **params)


def verify_bounds(runner, n_max=8, samples=10000, seed=0, **kwargs):
    log.info('verify bounds: n_max=%d samples=%d seed=%d', n_max, samples, seed)
    return runner.report(runner.check(BoundsCheck, n_max=n_max, samples=samples, seed=seed, **kwargs))


def verify_lemma24(runner, n=4):
    log.info('verify lemma24: n=%d', n)
    return runner.report(runner.check(Lemma24Check, n=n))


def verify_thm33(runner, n_min=5, n_max=12):
    log.info('verify thm33: n=%d..%d', n_min, n_max)
    return runner.report(runner.check(Thm33Check, n_min=n_min, n_max=n_max))


def verify_lemma34(runner, n_max=12):
    log.info('verify lemma34: n_max=%d', n_max)
    return runner.report(runner.check(Lemma34Check, n_max=n_max))


def verify_thm36(runner, n=10, g=3):
    log.info('verify thm36: n=%d g=%d', n, g)
    return runner.report(runner.check(Thm36Check, n=n, g=g))


def census(runner, n=4, start=0, stop=None, append_to=None):
    """Census table of primitive matrices of order n over enumeration indices start..stop.

    With ``append_to`` the counts are merged into the table stored there, so
    a long enumeration can be run as consecutive index ranges.
    """
    started = time.time()
    check = runner.check(CensusCheck, n=n, start=start, stop=stop)
    log.info('census: n=%d indices %d..%d', n, check.start, check.stop)
    table = CensusTable(n)
    for canonical, girth, lengths, exp in runner.run_check(check):
        table.add(canonical, girth, lengths, exp)

    if append_to is not None:
        path = Path(str(append_to))
        if path.suffix != '.jsonl':
            path = Path(str(path) + '.jsonl')
        if path.exists():
            previous = CensusTable.load(path, n)
            previous.merge(table)
            table = previous
        else:
            log.warning('nothing to append to at %s, starting a new table', path)
    runner.timing('census', time.time() - started)
    return table
