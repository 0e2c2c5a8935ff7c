from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _power_table(g, modulus, count):
    out = np.empty(count, dtype=np.int64)
    x = 1 % modulus
    g %= modulus
    for i in range(count):
        out[i] = x
        x = x * g % modulus
    return out


@njit(cache=True)
def _bucket_sums(exps, limit, n):
    out = np.zeros(n, dtype=np.int64)
    for a in range(1, limit):
        e = exps[a]
        if e >= 0:
            out[e] += a
    return out


@njit(cache=True)
def _inv_mod(a, p):
    t, new_t, r, new_r = 0, 1, p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit(cache=True)
def _det_mod(mat, prime):
    n = mat.shape[0]
    m = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            m[i, j] = mat[i, j] % prime
    det = 1
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != col:
            for j in range(n):
                tmp = m[col, j]
                m[col, j] = m[piv, j]
                m[piv, j] = tmp
            det = prime - det
        pv = m[col, col]
        det = det * pv % prime
        inv = _inv_mod(pv, prime)
        for i in range(col + 1, n):
            f = m[i, col] * inv % prime
            if f != 0:
                for j in range(col, n):
                    m[i, j] = (m[i, j] - f * m[col, j]) % prime
    return det % prime


def power_table(g: int, modulus: int, count: int) -> np.ndarray:
    return _power_table(np.int64(g), np.int64(modulus), count)


def bucket_sums(exps, limit: int, n: int) -> np.ndarray:
    return _bucket_sums(np.asarray(exps, dtype=np.int64), limit, n)


def det_mod(mat, prime: int) -> int:
    return int(_det_mod(np.asarray(mat, dtype=np.int64), np.int64(prime)))
