"""Compilation switch for the hot kernels.

Every performance-critical loop in :mod:`turan.kernels` is written in
nopython-compatible Python.  By default those functions are compiled with
numba's ``@njit``.  Setting the environment variable ``TURAN_NO_NUMBA=1``
before import (or running on an interpreter without numba) selects the
interpreted fallback instead: the same source runs as plain Python over
numpy scalars, and the counting wrappers switch to vectorized numpy paths
where one exists.

The flag is read once at import time because numba decoration happens at
module load.  ``NUMBA_ACTIVE`` records which path was taken.
"""

from __future__ import annotations

import os


def _flag_disabled() -> bool:
    value = os.environ.get("TURAN_NO_NUMBA", "").strip().lower()
    return value in {"1", "true", "yes", "on"}


NUMBA_ACTIVE = False
_njit = None

if not _flag_disabled():
    try:
        from numba import njit as _njit  # type: ignore[no-redef]

        NUMBA_ACTIVE = True
    except ImportError:  # pragma: no cover - exercised only without numba
        _njit = None
        NUMBA_ACTIVE = False


def hot(func):
    """Compile ``func`` with numba when enabled, else return it unchanged.

    The interpreted version stays reachable either way: numba dispatchers
    keep the original under ``.py_func``, and in fallback mode the function
    itself is the original.  The benchmark harness relies on that to time
    both paths in one process.
    """
    if NUMBA_ACTIVE:
        return _njit(cache=True, nogil=True)(func)
    return func


def python_version(func):
    """Return the interpreted version of a kernel regardless of mode."""
    return getattr(func, "py_func", func)
