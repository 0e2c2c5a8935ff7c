"""Small-integer number theory shared by the class-number and Shanks modules."""
from __future__ import annotations

import random
from math import gcd

# Deterministic for n < 3317044064679887385961981 (first 13 prime bases).
_DET_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DET_LIMIT = 3317044064679887385961981
_RANDOM_ROUNDS = 64


def _strong_probable_prime(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = _RANDOM_ROUNDS) -> bool:
    """Miller-Rabin; deterministic below ~3.3e24, else `rounds` seeded random bases."""
    if n < 2:
        return False
    for q in _DET_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _DET_LIMIT:
        bases = _DET_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(max(rounds, _RANDOM_ROUNDS)))
    return all(_strong_probable_prime(n, a, d, r) for a in bases)


def factorize(n: int) -> dict[int, int]:
    """Trial division; only used on small moduli and group orders."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, s) with n = p**s, or None when n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


def euler_phi(n: int) -> int:
    result = n
    for q in factorize(n):
        result -= result // q
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    order = euler_phi(m)
    for q in factorize(order):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def smallest_primitive_root(m: int) -> int:
    """Least positive generator of (Z/m)^x; m must have a cyclic unit group."""
    phi = euler_phi(m)
    qs = list(factorize(phi))
    for g in range(1, m):
        if gcd(g, m) == 1 and all(pow(g, phi // q, m) != 1 for q in qs):
            return g
    raise ValueError(f"(Z/{m})^x is not cyclic")
