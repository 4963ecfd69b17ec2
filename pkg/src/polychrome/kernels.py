"""Hot-kernel dispatch.

The compiled module ``_ckernels`` is used when it imported and the instance
fits in 64-bit masks; otherwise the pure-Python twin runs. Setting
``POLYCHROME_PURE=1`` forces the Python path.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("POLYCHROME_PURE"):
        raise ImportError("pure mode requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _impl(n: int):
    if _ckernels is not None and n <= 64:
        return _ckernels
    return _pykernels


def containment_free(masks, n):
    return _impl(n).containment_free(masks, n)


def aba_pair(masks, n):
    return _impl(n).aba_pair(masks, n)


def poly_search(masks, n, k, m):
    impl = _impl(n) if k <= 30 else _pykernels
    return impl.poly_search(masks, n, k, m)


def shallow_search(masks, n, c):
    return _impl(n).shallow_search(masks, n, c)
