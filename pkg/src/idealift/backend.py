"""Kernel backend selection.

The elimination kernels in :mod:`idealift.kernels` exist in two builds: a
numba ``@njit`` one and a pure-numpy one. Which build runs is decided once,
at import time, from the ``IDEALIFT_BACKEND`` environment variable:

* ``numpy``  - force the pure-numpy path (numba never imported)
* ``numba``  - require numba, fail loudly if it cannot be imported
* ``auto``   - numba when importable, numpy otherwise (the default)

Both builds do the same exact integer arithmetic and must produce
identical results; the test suite compares them directly.
"""

import os

_choice = os.environ.get("IDEALIFT_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"IDEALIFT_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    HAS_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        HAS_NUMBA = True
    except ImportError:
        if _choice == "numba":
            raise
        HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"
