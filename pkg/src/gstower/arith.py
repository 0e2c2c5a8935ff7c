"""Exact arithmetic: rationals, elements of Q(zeta_n), resultant norms and
certified comparisons of q**E against a bound when E is too large to expand.

Rationals are :class:`fractions.Fraction` throughout; it already keeps values
in lowest terms with a positive denominator.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError
from .primes import euler_phi

Rational = Fraction

DEFAULT_EXACT_THRESHOLD = 1 << 16
START_PRECISION = 128


# --------------------------------------------------------------------------
# integer polynomials (coefficient lists, lowest degree first)
# --------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _deg(a: Sequence[int]) -> int:
    return len(a) - 1


def _content(a: Sequence[int]) -> int:
    c = 0
    for x in a:
        c = gcd(c, x)
        if c == 1:
            break
    return c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)**(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = _deg(b)
    lb = b[-1]
    e = _deg(a) - db + 1
    while r and _deg(r) >= db:
        shift = _deg(r) - db
        lr = r[-1]
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r.pop()  # leading term cancels exactly
        _trim(r)
        e -= 1
    if e > 0:
        r = [x * lb**e for x in r]
    return r


def int_resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Res(f, g) over Z by the subresultant pseudo-remainder sequence."""
    a, b = _trim(list(f)), _trim(list(g))
    if not a or not b:
        return 0
    s = 1
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 == 1 and _deg(b) % 2 == 1:
            s = -1
    ca, cb = _content(a), _content(b)
    t = ca ** _deg(b) * cb ** _deg(a)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    gg, h = 1, 1
    while _deg(b) > 0:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 == 1 and _deg(b) % 2 == 1:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = gg * h**delta
        b = [x // div for x in r]
        gg = a[-1]
        if delta == 0:
            pass
        else:
            h = gg**delta // h ** (delta - 1)
    da = _deg(a)
    if da == 0:
        return s * t
    h = b[-1] ** da // h ** (da - 1)
    return s * t * h


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise DomainError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient of a by monic b; the division must be exact."""
    a = list(a)
    db = _deg(b)
    q = [0] * (_deg(a) - db + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


# --------------------------------------------------------------------------
# cyclotomic field elements
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CycloElement:
    """An element of Q[x]/Phi_n(x); coeffs are those of 1, x, ..., x^(phi(n)-1)."""

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.level < 1:
            raise DomainError("level must be a positive integer")
        if len(self.coeffs) != euler_phi(self.level):
            raise DomainError(
                f"need {euler_phi(self.level)} coefficients at level {self.level}, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, level: int, coeffs: Iterable) -> "CycloElement":
        """Reduce an arbitrary-length coefficient list modulo Phi_level."""
        return cls(level, tuple(_reduce_mod_cyclotomic(list(map(Fraction, coeffs)), level)))

    @classmethod
    def constant(cls, level: int, c) -> "CycloElement":
        return cls.from_poly(level, [c])

    @classmethod
    def zeta_power(cls, level: int, k: int) -> "CycloElement":
        k %= level
        return cls.from_poly(level, [0] * k + [1])

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        return cyclo_mul(self, other)

    def __add__(self, other: "CycloElement") -> "CycloElement":
        if self.level != other.level:
            raise DomainError("cannot add elements of different cyclotomic levels")
        return CycloElement(self.level, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.level, tuple(-x for x in self.coeffs))

    def scale(self, c) -> "CycloElement":
        c = Fraction(c)
        return CycloElement(self.level, tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _reduce_mod_cyclotomic(a: list, n: int) -> list:
    phi = cyclotomic_poly(n)
    m = len(phi) - 1
    a = list(a) + [Fraction(0)] * max(0, m - len(a))
    for i in range(len(a) - 1, m - 1, -1):
        c = a[i]
        if c:
            for j in range(m):
                if phi[j]:
                    a[i - m + j] -= c * phi[j]
    return a[:m]


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    """Product in Q(zeta_n), reduced modulo Phi_n."""
    if a.level != b.level:
        raise DomainError(f"level mismatch: {a.level} vs {b.level}")
    prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
    return CycloElement(a.level, tuple(_reduce_mod_cyclotomic(prod, a.level)))


def cyclo_norm(a: CycloElement) -> Fraction:
    """N_{Q(zeta_n)/Q}(a) as Res(Phi_n, A) with denominators cleared first."""
    if a.level == 1:
        return a.coeffs[0]
    if a.is_zero():
        return Fraction(0)
    den = 1
    for c in a.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a.coeffs]
    phi = cyclotomic_poly(a.level)
    res = int_resultant(phi, ints)
    # Res(Phi_n, A/den) = Res(Phi_n, A) / den**deg(Phi_n) since Phi_n is monic
    return Fraction(res, den ** (len(phi) - 1))


# --------------------------------------------------------------------------
# certified comparisons
# --------------------------------------------------------------------------

class Outcome(str, enum.Enum):
    PROVEN_LESS = "ProvenLess"
    PROVEN_GREATER_OR_EQUAL = "ProvenGreaterOrEqual"


class Method(str, enum.Enum):
    EXACT_RATIONAL = "ExactRational"
    DIRECTED_ROUNDING = "DirectedRounding"


@dataclass(frozen=True)
class ComparisonVerdict:
    outcome: Outcome
    method: Method
    precision_bits_used: int = 0

    @property
    def less(self) -> bool:
        return self.outcome is Outcome.PROVEN_LESS


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _atanh_bounds(num: int, den: int, prec: int) -> tuple[int, int]:
    """Integers (lo, hi) with lo <= 2**prec * atanh(num/den) <= hi, for 0 <= num/den <= 1/3."""
    if num == 0:
        return 0, 0
    one = 1 << prec
    z_lo = _floor_div(num << prec, den)
    z_hi = _ceil_div(num << prec, den)
    z2_lo = (z_lo * z_lo) >> prec
    z2_hi = _ceil_div(z_hi * z_hi, one)
    lo = hi = 0
    p_lo, p_hi = z_lo, z_hi  # running z**(2i+1), scaled
    i = 0
    while p_hi > 0:
        lo += p_lo // (2 * i + 1)
        hi += _ceil_div(p_hi, 2 * i + 1)
        p_lo = (p_lo * z2_lo) >> prec
        p_hi = _ceil_div(p_hi * z2_hi, one)
        i += 1
        if p_hi <= 1:
            break
    # tail: sum_{j>=i} z^(2j+1)/(2j+1) <= z^(2i+1) / (1 - z^2) <= (9/8) z^(2i+1)
    hi += _ceil_div(9 * p_hi, 8) + 1
    return lo, hi


def _ln2_bounds(prec: int) -> tuple[int, int]:
    lo, hi = _atanh_bounds(1, 3, prec)
    return 2 * lo, 2 * hi


def log_bounds(x: Fraction, prec: int) -> tuple[int, int]:
    """Integers (lo, hi) with lo <= 2**prec * ln(x) <= hi for rational x > 0."""
    if x <= 0:
        raise DomainError("logarithm of a non-positive number")
    num, den = x.numerator, x.denominator
    e = num.bit_length() - den.bit_length()
    # normalise to y = x / 2**e in [1, 2)
    if e >= 0:
        yn, yd = num, den << e
    else:
        yn, yd = num << -e, den
    if yn < yd:
        e -= 1
        yn <<= 1
    elif yn >= 2 * yd:
        e += 1
        yd <<= 1
    # ln y = 2 atanh((y-1)/(y+1)), argument in [0, 1/3)
    a_lo, a_hi = _atanh_bounds(yn - yd, yn + yd, prec)
    l2_lo, l2_hi = _ln2_bounds(prec)
    if e >= 0:
        return e * l2_lo + 2 * a_lo, e * l2_hi + 2 * a_hi
    return e * l2_hi + 2 * a_lo, e * l2_lo + 2 * a_hi


def certified_pow_compare(
    q: Fraction,
    exponent: int,
    bound: Fraction,
    *,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    force_directed: bool = False,
) -> ComparisonVerdict:
    """Decide q**exponent < bound for 0 < q < 1, bound > 0 without ever guessing.

    Small exponents are expanded exactly. Larger ones compare
    exponent*ln(q) with ln(bound) using outward-rounded fixed-point
    logarithms, doubling the precision until the intervals separate.
    """
    q, bound = Fraction(q), Fraction(bound)
    if not 0 < q < 1:
        raise DomainError(f"base must lie in (0, 1), got {q}")
    if bound <= 0:
        raise DomainError(f"bound must be positive, got {bound}")
    if exponent < 1:
        raise DomainError("exponent must be a positive integer")

    # q**E == bound forces bound.denominator == q.denominator**E >= 2**E,
    # so equality is only possible for tiny E; settle that case exactly.
    equality_possible = exponent <= bound.denominator.bit_length()
    if (not force_directed and exponent < exact_threshold) or equality_possible:
        less = q**exponent < bound
        return ComparisonVerdict(
            Outcome.PROVEN_LESS if less else Outcome.PROVEN_GREATER_OR_EQUAL,
            Method.EXACT_RATIONAL,
            0,
        )

    prec = START_PRECISION
    while True:
        lq_lo, lq_hi = log_bounds(q, prec)
        lb_lo, lb_hi = log_bounds(bound, prec)
        # ln q < 0 and exponent > 0
        lhs_lo, lhs_hi = exponent * lq_lo, exponent * lq_hi
        if lhs_hi < lb_lo:
            return ComparisonVerdict(Outcome.PROVEN_LESS, Method.DIRECTED_ROUNDING, prec)
        if lhs_lo > lb_hi:
            return ComparisonVerdict(
                Outcome.PROVEN_GREATER_OR_EQUAL, Method.DIRECTED_ROUNDING, prec
            )
        prec *= 2
