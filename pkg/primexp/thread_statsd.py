import logging
import socket

from .thread_base import ThreadBase

log = logging.getLogger(__name__)


def strtobool(value):
    return str(value).strip().lower() in ('1', 'true', 'yes', 'on', 'y', 't')


class ThreadStatsd(ThreadBase):
    """Flushes (key, value, type) verification metrics to statsd.

    Types: c = counter, t = timer (seconds), g = gauge.
    """
    debug = False
    poll_timeout = 0.2

    def configure(self, config):
        host = config.get('host', 'localhost')
        port = int(config.get('port', 8125))
        prefix = config.get('prefix', 'primexp')
        if strtobool(config.get('include_hostname', 'false')):
            prefix += "." + socket.gethostname().replace('.', '_')
        self.client = self.make_client(host, port, prefix)

    def make_client(self, host, port, prefix):
        from pystatsd import statsd
        return statsd.Client(host, port, prefix=prefix)

    def get_sender(self, t):
        if t == 'g':
            return self.client.gauge
        elif t == 'c':
            return self.client.update_stats
        elif t == 't':
            return lambda key, value: self.client.timing(key, value * 1000.0)

    def send_stat(self, item):
        (k, v, t) = item

        # Don't proceed if we don't have data
        if v is None:
            return False
        sender = self.get_sender(t)
        if sender is None:
            log.warning('unknown metric type %r for %s', t, k)
            return False
        sender(k, v)
        return True

    def run(self):
        # drain what is queued even after stop() so counters are complete
        while self.is_running or not self.queue.empty():
            item = self.take(self.poll_timeout)
            if item is None:
                continue
            if self.debug:
                log.debug('metric %r', item)
            try:
                self.send_stat(item)
            except Exception as ex:
                self.error = ex
                log.exception('statsd send failed')
                return


class ThreadFakeStatsd(ThreadStatsd):
    """Logs metrics instead of sending them to statsd."""
    def make_client(self, host, port, prefix):
        self.prefix = prefix
        return None

    def send_stat(self, item):
        (k, v, t) = item
        log.info('metric %s.%s %s|%s', self.prefix, k, v, t)
        return True
