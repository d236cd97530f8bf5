import logging
from collections import Counter

from .thread_base import ThreadBase

log = logging.getLogger(__name__)


class ThreadVerify(ThreadBase):
    """Takes (start, stop) index blocks off the queue and runs the claim check over them."""

    def configure(self, config):
        self.check = config['check']
        self.metrics = config.get('metrics')
        self.results = []

    def push_metrics(self, rows):
        if self.metrics is None:
            return
        counts = Counter()
        failures = Counter()
        for row in rows:
            claim = getattr(row, 'claim', None)
            if claim is None:
                continue
            counts[claim] += 1
            if row.asserted and not row.agree:
                failures[claim] += 1
        for claim in sorted(counts):
            self.metrics.put(('verify.{0}.rows'.format(claim), counts[claim], 'c'))
        for claim in sorted(failures):
            self.metrics.put(('verify.{0}.failures'.format(claim), failures[claim], 'c'))

    def run(self):
        while self.is_running:
            block = self.take()
            if block is None:
                return
            start, stop = block
            try:
                rows = []
                for index in range(start, stop):
                    if not self.is_running:
                        break
                    rows.extend(self.check.process(index))
            except Exception as ex:
                log.exception('check %s failed in block %d..%d', self.check.name, start, stop)
                self.error = ex
                return
            self.results.extend(rows)
            self.push_metrics(rows)
