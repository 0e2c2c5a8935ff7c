"""Hot modular-arithmetic loops.

Two interchangeable backends with identical results: numba-compiled loops
(default) and vectorised numpy. Set ``GSTOWER_DISABLE_NUMBA=1`` to force the
numpy path; it is also used automatically when numba cannot be imported.
The choice never changes any computed value, only speed.
"""
from __future__ import annotations

import os

from . import _numpy

BACKEND = "numpy"
_impl = _numpy

if os.environ.get("GSTOWER_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes"):
    try:
        from . import _numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass
    else:
        _impl = _numba
        BACKEND = "numba"


def power_table(g: int, modulus: int, count: int):
    """int64 array [g**0, g**1, ..., g**(count-1)] mod modulus."""
    return _impl.power_table(g, modulus, count)


def bucket_sums(exps, limit: int, n: int):
    """int64 array s with s[j] = sum of a in [1, limit) where exps[a] == j (exps[a] < 0 skipped)."""
    return _impl.bucket_sums(exps, limit, n)


def det_mod(mat, prime: int) -> int:
    """Determinant of a square int64 matrix modulo a prime below 2**31."""
    return _impl.det_mod(mat, prime)


def backends():
    """Both backend modules, for benchmarks and cross-checks."""
    mods = {"numpy": _numpy}
    try:
        from . import _numba as nb
    except ImportError:  # pragma: no cover
        return mods
    mods["numba"] = nb
    return mods
