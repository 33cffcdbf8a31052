"""Pure-numpy backend: same int64 algorithms as the numba backend, no JIT."""

import numpy as np


def det64(a: np.ndarray) -> np.int64:
    """Bareiss fraction-free elimination with row-swap pivoting."""
    m = a.copy()
    n = m.shape[0]
    if n == 0:
        return np.int64(1)
    sign = np.int64(1)
    prev = np.int64(1)
    for k in range(n - 1):
        if m[k, k] == 0:
            nz = np.nonzero(m[k + 1:, k])[0]
            if nz.size == 0:
                return np.int64(0)
            r = k + 1 + nz[0]
            m[[k, r]] = m[[r, k]]
            sign = -sign
        piv = m[k, k]
        sub = m[k + 1:, k + 1:] * piv - np.outer(m[k + 1:, k], m[k, k + 1:])
        m[k + 1:, k + 1:] = sub // prev
        m[k + 1:, k] = 0
        prev = piv
    return sign * m[n - 1, n - 1]


def charpoly64(a: np.ndarray) -> np.ndarray:
    """Division-free Berkowitz recursion; returns n+1 coeffs, monic, descending."""
    n = a.shape[0]
    c = np.zeros(n + 1, dtype=np.int64)
    c[0] = 1
    clen = 1
    for r in range(1, n + 1):
        col = np.zeros(r + 1, dtype=np.int64)
        col[0] = 1
        col[1] = -a[r - 1, r - 1]
        if r > 1:
            row = a[r - 1, : r - 1]
            v = a[: r - 1, r - 1].copy()
            sub = a[: r - 1, : r - 1]
            for j in range(2, r + 1):
                col[j] = -row @ v
                if j < r:
                    v = sub @ v
        new = np.zeros(r + 1, dtype=np.int64)
        for i in range(r + 1):
            lo = max(0, i - clen + 1)
            for j in range(lo, i + 1):
                new[i] += col[j] * c[i - j]
        c[: r + 1] = new
        clen = r + 1
    return c


def gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return ((a @ b) & 1).astype(np.uint8)


def charpoly64_batch(stack: np.ndarray) -> np.ndarray:
    count, n, _ = stack.shape
    out = np.zeros((count, n + 1), dtype=np.int64)
    for i in range(count):
        out[i] = charpoly64(stack[i])
    return out


def det64_batch(stack: np.ndarray) -> np.ndarray:
    out = np.zeros(stack.shape[0], dtype=np.int64)
    for i in range(stack.shape[0]):
        out[i] = det64(stack[i])
    return out
