import queue as queue_module
import threading


class ThreadBase(threading.Thread):
    """Worker thread fed from a queue; subclasses take their settings through configure()."""
    is_running = True

    def __init__(self, queue, **kwargs):
        threading.Thread.__init__(self)
        self.daemon = True
        self.queue = queue
        self.error = None
        if getattr(self, 'configure', None):
            self.configure(kwargs)

    def take(self, timeout=None):
        """Next queue item, or None when nothing arrives within ``timeout`` (no waiting when None)."""
        try:
            if timeout is None:
                return self.queue.get_nowait()
            return self.queue.get(True, timeout)
        except queue_module.Empty:
            return None

    def stop(self):
        self.is_running = False
