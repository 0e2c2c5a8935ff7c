"""Shanks' simplest cubic fields x^3 - a x^2 - (a+3) x - 1, attached to p = a^2 + 3a + 9.

The polynomial discriminant equals (a^2 + 3a + 9)^2 for every integer a.
Class-group data is never computed here; ``annotation`` holds whatever a
user imports from an external system, unverified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .primes import is_prime


def shanks_prime_candidate(a: int) -> int:
    return a * a + 3 * a + 9


@dataclass(frozen=True)
class ShanksRecord:
    a: int
    p: int
    cubic_coeffs: tuple[int, int, int]  # (b, c, d) of x^3 + b x^2 + c x + d
    discriminant: int
    is_prime: bool
    annotation: Optional[dict] = field(default=None, compare=False)

    @property
    def discriminant_ok(self) -> bool:
        return self.discriminant == self.p * self.p


def cubic_discriminant(b: int, c: int, d: int) -> int:
    """Discriminant of the monic cubic x^3 + b x^2 + c x + d."""
    return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d


def shanks_record(a: int) -> ShanksRecord:
    p = shanks_prime_candidate(a)
    coeffs = (-a, -(a + 3), -1)
    return ShanksRecord(a, p, coeffs, cubic_discriminant(*coeffs), is_prime(p))


def shanks_scan(a_min: int, a_max: int) -> list[ShanksRecord]:
    """Records for a_min <= a <= a_max whose p is prime, in increasing a."""
    if a_min < 1 or a_max < a_min:
        raise ValueError(f"need 1 <= a_min <= a_max, got [{a_min}, {a_max}]")
    out = []
    for a in range(a_min, a_max + 1):
        rec = shanks_record(a)
        if rec.is_prime:
            out.append(rec)
    return out
