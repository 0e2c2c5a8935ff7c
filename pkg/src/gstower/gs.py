"""Golod-Shafarevich polynomials and certified negativity witnesses.

A presentation with d generators and relations of depths w_i gives
P(t) = 1 - d*t + sum_i t**w_i.  If P(t0) < 0 for some t0 in (0, 1) the
pro-p group is infinite (finite groups have P > 0 on the whole interval).
Nothing here ever concludes finiteness.

Relations that are p**k-th powers carry their depth in factored form; exact
evaluation refuses them once p**k passes the exact threshold and the bounded
evaluator handles them through certified comparisons instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .arith import (
    DEFAULT_EXACT_THRESHOLD,
    ComparisonVerdict,
    certified_pow_compare,
)
from .errors import DomainError
from .primes import is_prime

DEFAULT_GRID_LEVEL = 12
DEFAULT_BUDGET_STEPS = 32
MAX_CUT_LEVEL = 4096


@dataclass(frozen=True)
class DepthTerm:
    """`count` relations of depth `depth`, or of depth base**exponent when factored."""

    count: int
    depth: Optional[int] = None
    base: Optional[int] = None
    exponent: Optional[int] = None

    def __post_init__(self):
        if self.count < 1:
            raise DomainError("relation count must be positive")
        if self.depth is not None:
            if self.base is not None or self.exponent is not None:
                raise DomainError("give either a plain depth or base/exponent, not both")
            if self.depth < 2:
                raise DomainError("relations of a minimal presentation have depth >= 2")
        else:
            if self.base is None or self.exponent is None:
                raise DomainError("factored depth needs base and exponent")
            if self.exponent < 0 or not is_prime(self.base):
                raise DomainError("factored depth needs a prime base and exponent >= 0")

    @classmethod
    def plain(cls, depth: int, count: int) -> "DepthTerm":
        return cls(count=count, depth=depth)

    @classmethod
    def power(cls, base: int, exponent: int, count: int) -> "DepthTerm":
        return cls(count=count, base=base, exponent=exponent)

    @property
    def factored(self) -> bool:
        return self.depth is None

    def depth_exceeds(self, limit: int) -> bool:
        """True when the depth is larger than `limit`, without expanding base**exponent."""
        if not self.factored:
            return self.depth > limit
        if self.exponent * (self.base.bit_length() - 1) > limit.bit_length():
            return True
        return self.base**self.exponent > limit

    def depth_value(self) -> int:
        return self.depth if not self.factored else self.base**self.exponent

    def __str__(self):
        if self.factored:
            return f"{self.count}*t^({self.base}^{self.exponent})"
        return f"{self.count}*t^{self.depth}"


@dataclass(frozen=True)
class GSPolynomial:
    d: int
    terms: tuple[DepthTerm, ...] = ()

    def __post_init__(self):
        if self.d < 1:
            raise DomainError("generator count d must be >= 1")
        object.__setattr__(self, "terms", tuple(self.terms))

    def with_term(self, term: DepthTerm) -> "GSPolynomial":
        return GSPolynomial(self.d, self.terms + (term,))

    def merged(self) -> "GSPolynomial":
        plain: dict[int, int] = {}
        powers: dict[tuple[int, int], int] = {}
        for t in self.terms:
            if t.factored:
                powers[(t.base, t.exponent)] = powers.get((t.base, t.exponent), 0) + t.count
            else:
                plain[t.depth] = plain.get(t.depth, 0) + t.count
        terms = [DepthTerm.plain(w, c) for w, c in sorted(plain.items())]
        terms += [DepthTerm.power(b, k, c) for (b, k), c in sorted(powers.items())]
        return GSPolynomial(self.d, tuple(terms))

    @property
    def plain_terms(self) -> tuple[DepthTerm, ...]:
        return tuple(t for t in self.terms if not t.factored)

    @property
    def factored_terms(self) -> tuple[DepthTerm, ...]:
        return tuple(t for t in self.terms if t.factored)

    def depth2_count(self) -> int:
        return sum(t.count for t in self.terms if not t.factored and t.depth == 2)

    def __str__(self):
        return " + ".join(["1", f"-{self.d}*t"] + [str(t) for t in self.terms])


@dataclass(frozen=True)
class NegativityWitness:
    t0: Fraction
    value: Fraction  # certified upper bound on P(t0), strictly negative
    tail_bounds: tuple[tuple[DepthTerm, ComparisonVerdict, Fraction], ...] = ()
    from_grid: bool = False

    def __post_init__(self):
        if not self.value < 0:
            raise DomainError("a negativity witness needs a negative value")
        if any(not v.less for _, v, _ in self.tail_bounds):
            raise DomainError("every tail bound of a witness must be proven")


@dataclass
class BoundedValue:
    upper: Fraction
    trail: list[ComparisonVerdict] = field(default_factory=list)
    tail_bounds: list[tuple[DepthTerm, ComparisonVerdict, Fraction]] = field(
        default_factory=list
    )


def _check_t(t: Fraction, lo_open: bool) -> Fraction:
    t = Fraction(t)
    if lo_open and not 0 < t < 1:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    if not lo_open and not 0 <= t <= 1:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    return t


def plain_part(poly: GSPolynomial, t) -> Fraction:
    """1 - d*t + (all plain-depth terms) at t, exactly."""
    t = Fraction(t)
    val = 1 - poly.d * t
    for term in poly.plain_terms:
        val += term.count * t**term.depth
    return val


def gs_eval(poly: GSPolynomial, t, exact_threshold: int = DEFAULT_EXACT_THRESHOLD) -> Fraction:
    """Exact P(t) for t in [0, 1]."""
    t = _check_t(t, lo_open=False)
    val = plain_part(poly, t)
    for term in poly.factored_terms:
        if term.depth_exceeds(exact_threshold):
            raise DomainError(
                f"depth {term.base}^{term.exponent} is beyond the exact threshold; "
                "use gs_eval_bounded"
            )
        val += term.count * t ** term.depth_value()
    return val


def gs_eval_bounded(
    poly: GSPolynomial,
    t,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    budget_steps: int = DEFAULT_BUDGET_STEPS,
) -> BoundedValue:
    """Certified upper bound on P(t), 0 < t < 1.

    Plain terms are exact. Each factored term count*t**(p**k) is bounded by
    count*c where c is the smallest budget in a halving sequence for which
    t**(p**k) < c is proven. The sequence starts at half of the term's equal
    share of the negative slack of the plain part (or at 1/2 when there is no
    slack). If no budget is proven the term is bounded by count*t.
    """
    t = _check_t(t, lo_open=True)
    out = BoundedValue(plain_part(poly, t))
    tails = poly.factored_terms
    if not tails:
        return out
    slack = -out.upper
    for term in tails:
        base = slack / (len(tails) * term.count) if slack > 0 else Fraction(1)
        proven: Optional[tuple[ComparisonVerdict, Fraction]] = None
        budget = base
        for _ in range(budget_steps):
            budget = budget / 2
            verdict = certified_pow_compare(
                t, term.depth_value(), budget, exact_threshold=exact_threshold
            )
            out.trail.append(verdict)
            if not verdict.less:
                break
            proven = (verdict, budget)
        if proven is None:
            out.upper += term.count * t
        else:
            out.upper += term.count * proven[1]
            out.tail_bounds.append((term, proven[0], proven[1]))
    return out


def _dyadic_grid(level: int) -> Iterable[Fraction]:
    for m in range(1, level + 1):
        for j in range(1, 1 << m, 2):
            yield Fraction(j, 1 << m)


def find_witness(
    poly: GSPolynomial,
    grid_level: int = DEFAULT_GRID_LEVEL,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
) -> Optional[NegativityWitness]:
    """A point t0 in (0, 1) with certified P(t0) < 0, or None.

    Tries d/(2r) first, r being the number of depth-2 relations (the minimiser
    of 1 - d t + r t^2), then dyadic points j/2^m in order of increasing m.
    None says nothing about the group.
    """
    candidates: list[tuple[Fraction, bool]] = []
    r = poly.depth2_count()
    if r > 0:
        t0 = Fraction(poly.d, 2 * r)
        if 0 < t0 < 1:
            candidates.append((t0, False))
    for t in _dyadic_grid(grid_level):
        candidates.append((t, True))
    for t, from_grid in candidates:
        if plain_part(poly, t) >= 0:  # tails only add positive amounts
            continue
        b = gs_eval_bounded(poly, t, exact_threshold)
        if b.upper < 0:
            return NegativityWitness(t, b.upper, tuple(b.tail_bounds), from_grid)
    return None


def min_cut_level(
    gamma_poly: GSPolynomial,
    t0,
    p: int,
    tail_count: int,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
) -> tuple[int, NegativityWitness]:
    """Least k >= 1 such that adding tail_count relations of depth p**k keeps
    the certified bound at t0 negative.

    k = 0 is never used: p**0 = 1 is not an admissible relation depth.
    """
    t0 = _check_t(t0, lo_open=True)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if gamma_poly.factored_terms:
        raise DomainError("gamma polynomial must have plain depths only")
    if not gs_eval(gamma_poly, t0) < 0:
        raise DomainError("P_Gamma(t0) must already be negative")
    for k in range(1, MAX_CUT_LEVEL + 1):
        poly = gamma_poly.with_term(DepthTerm.power(p, k, tail_count))
        b = gs_eval_bounded(poly, t0, exact_threshold)
        if b.upper < 0:
            return k, NegativityWitness(t0, b.upper, tuple(b.tail_bounds))
    raise RuntimeError(f"no cut level up to {MAX_CUT_LEVEL}")  # pragma: no cover
