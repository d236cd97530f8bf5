import logging
import signal
import threading

from .errors import WorkerError

log = logging.getLogger(__name__)


class ThreadManager(object):
    """Knows how to manage the verification threads"""
    poll_interval = 0.1

    def __init__(self, threads=None, handle_signals=False):
        self.threads = list(threads or [])
        self.quit = False
        self.quitting = False
        self.interrupted = False
        if handle_signals and threading.current_thread() is threading.main_thread():
            self.register_signal_handlers()

    def register_signal_handlers(self):
        signal.signal(signal.SIGINT, self.signal_handler)
        signal.signal(signal.SIGTERM, self.signal_handler)

    def run(self):
        """Start every thread and wait until all have finished.

        A thread that stops with an error takes the others down with it and
        the error is re-raised as WorkerError.
        """
        self.start_threads()
        while not self.quit:
            for thread in self.threads:
                thread.join(self.poll_interval)
                if thread.error is not None and not self.quitting:
                    log.error('Thread %r has stopped unexpectedly: %s', thread.name, thread.error)
                    self.stop_threads()
                    raise WorkerError('worker {0} failed: {1}'.format(thread.name, thread.error),
                                      thread.error)
            if not any(thread.is_alive() for thread in self.threads):
                return

    def start_threads(self):
        for t in self.threads:
            t.start()

    def signal_handler(self, signum, frame):
        log.warning('Caught signal %d, stopping workers', signum)
        if not self.quitting:
            self.interrupted = True
            self.stop_threads()
        else:
            log.warning('Already stopping, be patient')

    def stop_threads(self):
        """Stops all threads and waits for them to quit"""
        self.quitting = True
        log.debug('Stopping threads')
        for thread in self.threads:
            thread.stop()
        for thread in self.threads:
            if thread.is_alive() and thread is not threading.current_thread():
                thread.join()
        self.quit = True
        log.debug('All threads stopped')
