"""Hot integer kernels with a numba backend and a pure-numpy fallback.

The backend is picked once at import time from the ``PETRIE_BACKEND``
environment variable (``numba`` or ``numpy``).  Default is numba when it
imports cleanly, numpy otherwise.  Both backends implement the same
machine-word (int64) algorithms; callers must gate on the ``*_fits64``
bounds below, and fall back to exact big-integer code when they fail.
"""

import os

import numpy as np

_requested = os.environ.get("PETRIE_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"PETRIE_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    from . import _numpy_impl as _impl
    BACKEND = "numpy"
else:
    try:
        from . import _numba_impl as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import _numpy_impl as _impl
        BACKEND = "numpy"

_INT64_BOUND_SQ = 1 << 124  # (2**62)**2; squared bounds avoid half-integer powers


def det_fits64(dim: int, max_abs: int) -> bool:
    """True when every Bareiss intermediate provably fits in int64.

    Intermediates are minors of the input, so Hadamard's bound
    dim**(dim/2) * max_abs**dim applies.
    """
    if dim == 0:
        return True
    return dim**dim * max(max_abs, 1) ** (2 * dim) < _INT64_BOUND_SQ


def charpoly_fits64(dim: int, max_abs: int) -> bool:
    """True when every Berkowitz intermediate provably fits in int64.

    Conservative bound: Toeplitz accumulations are sums of at most dim+1
    products of a Krylov value (<= dim**(dim-1) * B**dim) with a principal
    minor coefficient (<= 2**dim * dim**(dim/2) * B**dim).
    """
    if dim == 0:
        return True
    b = max(max_abs, 1)
    lhs = ((dim + 1) * 2**dim) ** 2 * dim ** (3 * dim - 2) * b ** (4 * dim)
    return lhs < _INT64_BOUND_SQ


def det64(a: np.ndarray) -> int:
    """Exact determinant of an int64 square matrix (caller checked det_fits64)."""
    return int(_impl.det64(np.ascontiguousarray(a, dtype=np.int64)))


def charpoly64(a: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial coefficients, highest degree first."""
    return _impl.charpoly64(np.ascontiguousarray(a, dtype=np.int64))


def gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two 0/1 matrices over GF(2), returned as uint8."""
    return _impl.gf2_matmul(
        np.ascontiguousarray(a, dtype=np.int64),
        np.ascontiguousarray(b, dtype=np.int64),
    )


def charpoly64_batch(stack: np.ndarray) -> np.ndarray:
    """Characteristic polynomials of a stack of equal-size int64 matrices."""
    return _impl.charpoly64_batch(np.ascontiguousarray(stack, dtype=np.int64))


def det64_batch(stack: np.ndarray) -> np.ndarray:
    """Determinants of a stack of equal-size int64 matrices."""
    return _impl.det64_batch(np.ascontiguousarray(stack, dtype=np.int64))
