"""Runtime certification of post-conditions.

Every exact identity an operation promises is checked with :func:`certify`.
Inside a :func:`recording` block the labels of the checks that actually ran
are collected, which is how the command-line reports list what was verified.
"""

from contextlib import contextmanager
from contextvars import ContextVar

from .errors import CertificationError

_log = ContextVar("algspec_certificates", default=None)


def certify(label, ok, exc=CertificationError):
    if not ok:
        raise exc(f"certification failed: {label}")
    log = _log.get()
    if log is not None:
        log.append(label)


@contextmanager
def recording():
    """Collect certification labels raised within the block.

    >>> with recording() as log:
    ...     certify("1 = 1", 1 == 1)
    >>> log
    ['1 = 1']
    """
    log = []
    token = _log.set(log)
    try:
        yield log
    finally:
        _log.reset(token)
