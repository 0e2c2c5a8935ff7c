"""Relative class numbers of Q(zeta_{p^s}) from generalized Bernoulli numbers.

    h^- = Q * w * prod_{chi odd} (-B_{1,chi} / 2)

with Q = 1 for prime-power conductors and w the number of roots of unity.
Odd characters are grouped into Galois orbits; the product over an orbit is
the norm from Q(zeta_n) of a single representative, n being the order.

The Maillet determinant gives an independent route for s = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

import numpy as np

from . import kernels
from .arith import CycloElement, cyclo_norm
from .cohomology import FieldParams
from .errors import ConsistencyError, DomainError
from .primes import divisors, euler_phi, is_prime, prime_power, smallest_primitive_root


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """A character mod p^s with values in mu_n.

    ``exps[x]`` is j when chi(x) = zeta_n^j and -1 when p | x.
    """

    modulus: int
    p: int
    s: int
    generator_images: tuple[int, ...]
    order: int
    orbit_size: int
    exps: np.ndarray = field(repr=False)

    def value_exponent(self, x: int) -> int:
        return int(self.exps[x % self.modulus])

    def is_odd(self) -> bool:
        return self.value_exponent(self.modulus - 1) * 2 == self.order


@lru_cache(maxsize=64)
def _index_table(modulus: int, p: int, s: int):
    """Discrete-log data for (Z/p^s)^x.

    Odd p: (g, ind) with x = g^ind[x]. p = 2, s >= 3: (u, v) arrays with
    x = (-1)^u[x] * 5^v[x]. Non-units carry -1.
    """
    if p != 2:
        g = smallest_primitive_root(p * p) % modulus
        phi = euler_phi(modulus)
        powers = kernels.power_table(g, modulus, phi)
        ind = np.full(modulus, -1, dtype=np.int64)
        ind[powers] = np.arange(phi, dtype=np.int64)
        return g, ind
    half = modulus // 4  # order of 5
    powers = kernels.power_table(5, modulus, half)
    u = np.full(modulus, -1, dtype=np.int64)
    v = np.full(modulus, -1, dtype=np.int64)
    rng = np.arange(half, dtype=np.int64)
    u[powers] = 0
    v[powers] = rng
    neg = (modulus - powers) % modulus
    u[neg] = 1
    v[neg] = rng
    return 5, (u, v)


def _split_modulus(modulus: int) -> tuple[int, int]:
    pp = prime_power(modulus)
    if pp is None:
        raise DomainError(f"{modulus} is not a prime power")
    return pp


def enumerate_odd_characters(modulus: int) -> list[DirichletCharacter]:
    """One representative per Galois orbit of odd characters mod p^s."""
    if modulus <= 2:
        return []
    p, s = _split_modulus(modulus)
    out = []
    if p != 2:
        g, ind = _index_table(modulus, p, s)
        phi = euler_phi(modulus)
        # chi_a(g) = zeta_phi^a is odd iff a is odd; orbits <-> gcd(a, phi)
        for delta in divisors(phi):
            if delta % 2 == 0:
                continue
            n = phi // delta
            exps = np.where(ind >= 0, ind % n, -1)
            out.append(DirichletCharacter(modulus, p, s, (delta,), n, euler_phi(n), exps))
        return out
    if s == 2:
        exps = np.array([-1, 0, -1, 1], dtype=np.int64)
        return [DirichletCharacter(4, 2, 2, (1,), 2, 1, exps)]
    _, (u, v) = _index_table(modulus, p, s)
    half = modulus // 4
    # chi(-1) = -1, chi(5) = zeta_half^j; orbits <-> gcd(j, half) = 2^i
    i = 0
    while (1 << i) <= half:
        j = (1 << i) % half
        m = half // gcd(j, half) if j else 1
        n = max(2, m)
        exps = np.where(u >= 0, ((n // 2) * u + (n // m) * v) % n, -1)
        out.append(DirichletCharacter(modulus, 2, s, (1, j), n, euler_phi(m) if m > 1 else 1, exps))
        i += 1
    return out


def conductor(chi: DirichletCharacter) -> int:
    """Least p^t modulo which chi is defined."""
    n, p = chi.order, chi.p
    if p == 2:
        if chi.modulus == 4:
            return 4
        j = chi.generator_images[1]
        half = chi.modulus // 4
        m = half // gcd(j, half) if j else 1
        t = 2
        while (1 << (t - 2)) % m:
            t += 1
        return 1 << t
    if n == 1:
        return 1
    t = 1
    while euler_phi(p**t) % n:
        t += 1
    return p**t


def b1_chi(chi: DirichletCharacter) -> CycloElement:
    """B_{1,chi} = (1/f) sum_{a=1}^{f} chi(a) a in Q(zeta_n), f the conductor."""
    if not chi.is_odd():
        raise DomainError("B_{1,chi} is only computed for odd characters")
    f = conductor(chi)
    # a = f is divisible by p and contributes nothing
    buckets = kernels.bucket_sums(chi.exps, f, chi.order)
    val = CycloElement.from_poly(chi.order, [Fraction(int(c), f) for c in buckets])
    if val.is_zero():
        raise ConsistencyError(f"B_1 vanished for an odd character mod {chi.modulus}")
    return val


@dataclass(frozen=True)
class HMinusResult:
    modulus: int
    h_minus: int
    orbit_count: int
    q_factor: int
    w_factor: int
    orbit_norms: tuple[Fraction, ...] = ()


def roots_of_unity_count(modulus: int) -> int:
    p, _ = _split_modulus(modulus)
    return modulus if p == 2 else 2 * modulus


def orbit_norm(chi: DirichletCharacter) -> Fraction:
    """prod over the Galois orbit of chi of (-B_{1,chi}/2)."""
    return cyclo_norm(b1_chi(chi).scale(Fraction(-1, 2)))


def relative_class_number(modulus: int, executor=None) -> HMinusResult:
    """h^- of Q(zeta_modulus) for a prime power modulus > 2."""
    if modulus <= 2:
        raise DomainError("Q(zeta_m) for m <= 2 is Q; there are no odd characters")
    _split_modulus(modulus)
    chars = enumerate_odd_characters(modulus)
    if executor is None:
        norms = [orbit_norm(c) for c in chars]
    else:
        norms = list(executor.map(orbit_norm, chars))
    w = roots_of_unity_count(modulus)
    total = w * prod(norms, start=Fraction(1))
    if total.denominator != 1 or total <= 0:
        raise ConsistencyError(f"h^- for modulus {modulus} came out as {total}")
    return HMinusResult(modulus, int(total), len(chars), 1, w, tuple(norms))


# ---------------------------------------------------------------------------
# Maillet determinant
# ---------------------------------------------------------------------------

def maillet_matrix(p: int) -> np.ndarray:
    """(p-1)/2 square matrix of least positive residues of a * b^{-1} mod p."""
    half = (p - 1) // 2
    a = np.arange(1, half + 1, dtype=np.int64)
    binv = np.array([pow(int(b), -1, p) for b in a], dtype=np.int64)
    return (a[:, None] * binv[None, :]) % p


def _modular_primes(count_bits: int) -> list[int]:
    primes, q = [], (1 << 31) - 1
    bits = 0
    while bits <= count_bits:
        if is_prime(q):
            primes.append(q)
            bits += 30
        q -= 2
    return primes


def det_multimodular(mat: np.ndarray) -> int:
    """Exact integer determinant via residues mod 31-bit primes and CRT.

    Hadamard's bound fixes how many primes are needed.
    """
    n = mat.shape[0]
    if n == 0:
        return 1
    # log2 of Hadamard bound, rounded up generously
    row_norms = [int(sum(int(x) * int(x) for x in row)) for row in mat]
    bound_bits = sum(rn.bit_length() for rn in row_norms) // 2 + n + 2
    primes = _modular_primes(bound_bits + 1)
    residue, modulus = 0, 1
    for q in primes:
        r = kernels.det_mod(mat, q)
        # incremental CRT
        t = ((r - residue) * pow(modulus, -1, q)) % q
        residue += modulus * t
        modulus *= q
    if residue > modulus // 2:
        residue -= modulus
    return residue


def maillet_hminus(p: int) -> int:
    """|det Maillet(p)| / p^((p-3)/2), with the division checked."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    det = abs(det_multimodular(maillet_matrix(p)))
    scale = p ** ((p - 3) // 2)
    h, rem = divmod(det, scale)
    if rem or h == 0:
        raise ConsistencyError(f"Maillet determinant {det} not divisible by {p}^{(p - 3) // 2}")
    return h


def cyclotomic_tower_params(p: int, s: int, h: int) -> FieldParams:
    """Splitting data of p in the Hilbert class field H of Q(zeta_{p^s}).

    (1 - zeta) is principal, so it splits completely in H: e = phi(p^s),
    f = 1 and g = [H : Q(zeta)] = h.
    """
    if s < 1 or p**s <= 2:
        raise DomainError(f"Q(zeta_{p ** s}) is not totally imaginary with mu_p inside")
    return FieldParams(p=p, e=euler_phi(p**s), f=1, g=h, dim_vs=0)
