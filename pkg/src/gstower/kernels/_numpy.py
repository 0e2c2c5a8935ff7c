from __future__ import annotations

import numpy as np


def power_table(g: int, modulus: int, count: int) -> np.ndarray:
    out = np.ones(1, dtype=np.int64)
    g %= modulus
    step = g
    # doubling: powers [0, L) -> [0, 2L) by multiplying with g**L
    while out.size < count:
        out = np.concatenate((out, (out * step) % modulus))
        step = step * step % modulus
    out = out[:count]
    if modulus == 1:
        out[:] = 0
    return out


def bucket_sums(exps: np.ndarray, limit: int, n: int) -> np.ndarray:
    a = np.arange(1, limit, dtype=np.int64)
    e = np.asarray(exps[1:limit], dtype=np.int64)
    keep = e >= 0
    out = np.zeros(n, dtype=np.int64)
    np.add.at(out, e[keep], a[keep])
    return out


def det_mod(mat: np.ndarray, prime: int) -> int:
    m = np.array(mat, dtype=np.int64) % prime
    n = m.shape[0]
    det = 1
    for col in range(n):
        nz = np.nonzero(m[col:, col])[0]
        if nz.size == 0:
            return 0
        piv = col + int(nz[0])
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            det = -det
        pv = int(m[col, col])
        det = det * pv % prime
        inv = pow(pv, prime - 2, prime)
        below = m[col + 1:, col] * inv % prime
        # row-by-row products stay below 2**62 for prime < 2**31
        m[col + 1:, col:] = (m[col + 1:, col:] - (below[:, None] * m[col, col:]) % prime) % prime
    return det % prime
