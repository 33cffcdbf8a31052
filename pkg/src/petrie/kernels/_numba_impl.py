"""Numba backend: @njit versions of the int64 kernels."""

import numpy as np
from numba import njit


@njit(cache=True)
def det64(a):
    m = a.copy()
    n = m.shape[0]
    if n == 0:
        return np.int64(1)
    sign = np.int64(1)
    prev = np.int64(1)
    for k in range(n - 1):
        if m[k, k] == 0:
            r = -1
            for i in range(k + 1, n):
                if m[i, k] != 0:
                    r = i
                    break
            if r < 0:
                return np.int64(0)
            for j in range(n):
                t = m[k, j]
                m[k, j] = m[r, j]
                m[r, j] = t
            sign = -sign
        piv = m[k, k]
        for i in range(k + 1, n):
            mik = m[i, k]
            for j in range(k + 1, n):
                m[i, j] = (m[i, j] * piv - mik * m[k, j]) // prev
            m[i, k] = 0
        prev = piv
    return sign * m[n - 1, n - 1]


@njit(cache=True)
def charpoly64(a):
    n = a.shape[0]
    c = np.zeros(n + 1, dtype=np.int64)
    c[0] = 1
    clen = 1
    v = np.zeros(n, dtype=np.int64)
    w = np.zeros(n, dtype=np.int64)
    col = np.zeros(n + 1, dtype=np.int64)
    new = np.zeros(n + 1, dtype=np.int64)
    for r in range(1, n + 1):
        for i in range(r + 1):
            col[i] = 0
        col[0] = 1
        col[1] = -a[r - 1, r - 1]
        if r > 1:
            for i in range(r - 1):
                v[i] = a[i, r - 1]
            for j in range(2, r + 1):
                s = np.int64(0)
                for i in range(r - 1):
                    s += a[r - 1, i] * v[i]
                col[j] = -s
                if j < r:
                    for i in range(r - 1):
                        t = np.int64(0)
                        for kk in range(r - 1):
                            t += a[i, kk] * v[kk]
                        w[i] = t
                    for i in range(r - 1):
                        v[i] = w[i]
        for i in range(r + 1):
            s = np.int64(0)
            lo = i - clen + 1
            if lo < 0:
                lo = 0
            for j in range(lo, i + 1):
                s += col[j] * c[i - j]
            new[i] = s
        for i in range(r + 1):
            c[i] = new[i]
        clen = r + 1
    return c


@njit(cache=True)
def gf2_matmul(a, b):
    n = a.shape[0]
    m = b.shape[1]
    kk = a.shape[1]
    out = np.zeros((n, m), dtype=np.uint8)
    for i in range(n):
        for j in range(m):
            s = np.int64(0)
            for k in range(kk):
                s += a[i, k] * b[k, j]
            out[i, j] = np.uint8(s & 1)
    return out


@njit(cache=True)
def charpoly64_batch(stack):
    count = stack.shape[0]
    n = stack.shape[1]
    out = np.zeros((count, n + 1), dtype=np.int64)
    for i in range(count):
        out[i] = charpoly64(stack[i])
    return out


@njit(cache=True)
def det64_batch(stack):
    out = np.zeros(stack.shape[0], dtype=np.int64)
    for i in range(stack.shape[0]):
        out[i] = det64(stack[i])
    return out
