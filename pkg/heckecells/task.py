#! cd .. && python3 -m heckecells.task

"""
# Process pool for independent checks

Checks of the acceptance suite do not share state, so `verify --jobs k`
hands them to a `TaskPool`. Results come back through callbacks, which run
on the thread that calls `update()` or `join()`, never on a pool thread.
"""

import time
from threading import Lock
from multiprocessing import Pool

from .logger import hklogger

class TaskPool(object):
    """ a pool of worker processes with callbacks collected on the caller's thread

    :param processes: the number of worker processes
    :param maxtasksperchild: recycle a worker after this many tasks
    """
    def __init__(self, processes=1, maxtasksperchild=None):
        super(TaskPool, self).__init__()
        hklogger.info("creating multiprocessing pool (n=%s)", processes)
        self.pool = Pool(processes, maxtasksperchild=maxtasksperchild)

        self._lk_result = Lock()
        self._results = []
        self._pending = 0

    def submit(self, fn, args=(), kwargs=None, callback=None, error_callback=None):
        """ run fn(*args, **kwargs) in a worker process

        :param callback: called with the return value when fn succeeds
        :param error_callback: called with the exception when fn raises
        """
        with self._lk_result:
            self._pending += 1
        self.pool.apply_async(fn, args, kwargs or {},
            lambda result: self._onDone(result, callback),
            lambda ex: self._onDone(ex, error_callback))

    def _onDone(self, value, callback):
        with self._lk_result:
            self._results.append((value, callback))

    def update(self):
        """ run the callbacks of completed tasks; returns the number processed """
        results = []
        if self._results:
            with self._lk_result:
                results = self._results
                self._results = []
                self._pending -= len(results)

            for value, callback in results:
                if callback:
                    try:
                        callback(value)
                    except Exception:
                        hklogger.exception("task callback failed")
        return len(results)

    def pending(self):
        with self._lk_result:
            return self._pending

    def join(self, interval=0.05):
        """ wait for every submitted task, running callbacks as they finish """
        while self.pending():
            if not self.update():
                time.sleep(interval)
        self.update()

    def shutdown(self):
        """ cancel running tasks and stop the pool """
        self.pool.terminate()
        self.pool.join()
