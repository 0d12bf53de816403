"""Backend selection for the lattice box-scan kernels.

The compiled extension is used when it imported and the inputs fit in 64-bit
arithmetic; otherwise the pure-Python implementation runs.  Setting
``DISCMINK_PURE_PYTHON=1`` forces the fallback for the whole process.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("DISCMINK_PURE_PYTHON", "") not in ("", "0"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_LIMIT = 1 << 62


def available_backends():
    return ("cython", "python") if _ckernels is not None else ("python",)


def set_backend(name):
    """Select the process-wide default backend."""
    global BACKEND
    if name not in ("cython", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not available")
    BACKEND = name


def _box_radius(lo, hi):
    return [max(abs(a), abs(b)) for a, b in zip(lo, hi)]


def _linear_fits(A, ub_closed, ub_open, lo, hi):
    r = _box_radius(lo, hi)
    worst = max((sum(abs(a) * x for a, x in zip(row, r)) for row in A), default=0)
    bounds = max((abs(v) for v in (*ub_closed, *ub_open)), default=0)
    return max(worst, bounds) < _LIMIT


def _quadric_fits(Q, shift, scale, rhs, lo, hi):
    r = _box_radius(lo, hi)
    ymax = max((abs(scale) * x + abs(s) for x, s in zip(r, shift)), default=0)
    qmax = max((abs(c) for row in Q for c in row), default=0)
    n = len(lo)
    return n * n * qmax * ymax * ymax < _LIMIT and abs(rhs) < _LIMIT


def scan_linear(A, ub_closed, ub_open, lo, hi, backend=None):
    backend = backend or BACKEND
    if backend == "cython" and _ckernels is not None and _linear_fits(A, ub_closed, ub_open, lo, hi):
        return _ckernels.scan_linear(A, ub_closed, ub_open, lo, hi)
    return _pykernels.scan_linear(A, ub_closed, ub_open, lo, hi)


def scan_quadric(Q, shift, scale, rhs, lo, hi, backend=None):
    backend = backend or BACKEND
    if backend == "cython" and _ckernels is not None and _quadric_fits(Q, shift, scale, rhs, lo, hi):
        return _ckernels.scan_quadric(Q, shift, scale, rhs, lo, hi)
    return _pykernels.scan_quadric(Q, shift, scale, rhs, lo, hi)
