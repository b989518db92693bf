import threading

from .errors import Cancelled


class CancelToken:
    """Cooperative cancellation flag shared between a caller and a long computation."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self):
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise Cancelled("computation cancelled")


def check(token):
    if token is not None:
        token.check()
