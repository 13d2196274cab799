"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``IVDESIGN_PURE_PYTHON=1`` to force the fallback.  The DP kernel works
on int64 costs, so callers route instances whose cost bound does not fit
through the Python kernel regardless of the backend.
"""

import os

from . import _pykernels

INT64_SAFE = 2**62

_ext = None
if os.environ.get("IVDESIGN_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as _ext
    except ImportError:  # pragma: no cover - depends on build
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _pick(name, backend=None):
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernels are not available")
        return getattr(_ext, name)
    if backend == "python":
        return getattr(_pykernels, name)
    raise ValueError(f"unknown backend {backend!r}")


def mcs_order(n, indptr, indices, backend=None):
    return _pick("mcs_order", backend)(n, indptr, indices)


def peo_violation(order, indptr, indices, backend=None):
    return _pick("peo_violation", backend)(order, indptr, indices)


def dp_bag(radix, nsep, unit_cost, caps, children, inf, backend=None):
    """See :func:`ivdesign._pykernels.dp_bag`. ``inf`` must exceed every finite cost."""
    if backend is None and inf >= INT64_SAFE:
        backend = "python"
    return _pick("dp_bag", backend)(radix, nsep, unit_cost, caps, children, inf)


def available_backends():
    return ["python"] + (["cython"] if _ext is not None else [])
