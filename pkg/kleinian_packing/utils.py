# MIT License

# Copyright (c) 2026-present kleinian-packing contributors

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import logging
import threading
import queue
from pathlib import Path
from pathvalidate import sanitize_filename
from concurrent.futures import Future

log = logging.getLogger(__name__)

def create_directory(path) -> Path:
    """Create the output directory (and its parents) if needed"""
    path = Path(path or ".")
    path.mkdir(parents=True, exist_ok=True)
    return path

def safe_file_name(name: str, suffix: str = "") -> str:
    """File name derived from a user label (region names, packing labels)"""
    return sanitize_filename(f"{name}{suffix}", replacement_text="_")

class QueueWorker(threading.Thread):
    """Daemon thread that runs queued jobs and resolves their futures"""
    def __init__(self, name=None) -> None:
        threading.Thread.__init__(self, name=name, daemon=True)
        self._queue = queue.Queue()

    def submit(self, job) -> Future:
        """Queue ``job`` (a callable without parameters) and return its future"""
        fut = Future()
        self._queue.put([fut, job])
        return fut

    def shutdown(self, blocking=False):
        """Shutdown the thread by passing ``None`` value to queue"""
        self._queue.put(None)

        if blocking:
            self.join()

    def run(self):
        while True:
            data = self._queue.get()
            if data is None:
                # Shutdown signal is received
                return

            fut, job = data
            if not fut.set_running_or_notify_cancel():
                continue
            try:
                result = job()
            except Exception as err:
                log.debug(f"Job failed in {self.name}: {err!r}")
                fut.set_exception(err)
            else:
                fut.set_result(result)

class WorkerPool:
    """Fixed set of :class:`QueueWorker` threads fed round-robin

    Use as a context manager; the workers are shut down on exit.
    """
    def __init__(self, workers: int, name="worker"):
        if workers < 1:
            raise ValueError(f"worker count must be at least 1, got {workers}")
        self._workers = [QueueWorker(name=f"{name}-{i}") for i in range(workers)]
        self._next = 0

    def __len__(self):
        return len(self._workers)

    def __enter__(self):
        for worker in self._workers:
            worker.start()
        return self

    def __exit__(self, *exc):
        for worker in self._workers:
            worker.shutdown(blocking=True)

    def submit(self, job) -> Future:
        worker = self._workers[self._next]
        self._next = (self._next + 1) % len(self._workers)
        return worker.submit(job)

    def map(self, jobs):
        """Run ``jobs`` and return their results in submission order"""
        futures = [self.submit(job) for job in jobs]
        return [fut.result() for fut in futures]

def convert_int_or_float(value):
    err_int = None

    try:
        return int(value)
    except ValueError as e:
        err_int = e

    try:
        return float(value)
    except ValueError as e:
        raise e from err_int

def split_comma_separated(text):
    return [i.strip() for i in text.split(',') if i.strip()]

def cap_workers(requested: int) -> int:
    """Worker count limited by ``CIRCLES_THREADS``"""
    # "Circular Imports" problem
    from .config import env

    requested = max(1, int(requested))
    limit = env.threads
    if limit is not None and requested > limit:
        log.debug(f"Worker count capped from {requested} to {limit} by CIRCLES_THREADS")
        return limit
    return requested
