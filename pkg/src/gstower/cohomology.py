"""Presentation data for G_S and its cut quotients, and the tower analysis.

K/Q is Galois, totally imaginary and contains mu_p; e, f, g describe the
splitting of p; dim_vs is the F_p-dimension of the Kummer radical V_S
modulo p-th powers (an input, never computed here).

    dim H^2(G_S) = g - 1 + dim_vs
    dim H^1(G_S) = efg/2 + 1 + dim H^2(G_S)

Gamma is G_S cut by the commutators of the ef+2 local generators at each of
the g places; Gamma_k additionally kills the p**k-th powers of those
generators.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import DEFAULT_EXACT_THRESHOLD
from .errors import DomainError
from .gs import (
    DepthTerm,
    GSPolynomial,
    find_witness,
    gs_eval,
    gs_eval_bounded,
    min_cut_level,
)
from .primes import is_prime

CAVEAT_DISJUNCTION = (
    "either the p-class field tower of K is already infinite, or the certificate "
    "applies over the top H of that tower, where p does not divide the class number"
)
CAVEAT_DIM_VS = (
    "dim V_S = 0 is the class-number-prime-to-p hypothesis at the top of the tower; "
    "it was taken as input, not computed"
)
CAVEAT_GRID = "witness t0 found by the dyadic grid fallback, not at d/(2r)"
CAVEAT_HPLUS = "g = h^- was used with h^+ = 1 assumed from published tables"


class Verdict(str, enum.Enum):
    INFINITE_BY_CUTTING = "InfiniteByCutting"
    INFINITE_TOWER_ALREADY = "InfiniteTowerAlready"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FieldParams:
    p: int
    e: int
    f: int
    g: int
    dim_vs: int = 0
    contains_mu_p: bool = True
    totally_imaginary: bool = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"p = {self.p} is not prime")
        for name in ("e", "f", "g"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be a positive integer")
        if self.dim_vs < 0:
            raise DomainError("dim V_S must be non-negative")
        if (self.e * self.f * self.g) % 2:
            raise DomainError(
                f"efg = {self.e * self.f * self.g} is odd; a totally imaginary field has even degree"
            )

    @property
    def ef(self) -> int:
        return self.e * self.f

    @property
    def degree(self) -> int:
        return self.e * self.f * self.g


@dataclass(frozen=True)
class PresentationData:
    d: int
    relation_terms: tuple[DepthTerm, ...]

    @property
    def polynomial(self) -> GSPolynomial:
        return GSPolynomial(self.d, self.relation_terms)

    @property
    def relation_count(self) -> int:
        return sum(t.count for t in self.relation_terms)


def _require_formula(params: FieldParams) -> None:
    if not (params.contains_mu_p and params.totally_imaginary):
        raise DomainError("the H^1/H^2 formulas need K totally imaginary and containing mu_p")


def h2_dim(params: FieldParams) -> int:
    _require_formula(params)
    return params.g - 1 + params.dim_vs


def h1_dim(params: FieldParams) -> int:
    _require_formula(params)
    return params.degree // 2 + 1 + h2_dim(params)


def local_commutator_count(params: FieldParams) -> int:
    """g * binom(ef + 2, 2)."""
    x = params.ef
    return params.g * (x + 2) * (x + 1) // 2


def gamma_presentation(params: FieldParams) -> PresentationData:
    r = h2_dim(params) + local_commutator_count(params)
    return PresentationData(h1_dim(params), (DepthTerm.plain(2, r),))


def gamma_k_presentation(params: FieldParams, k: int) -> PresentationData:
    if k < 1:
        raise DomainError(f"cut level k = {k} gives depth p^k < 2")
    base = gamma_presentation(params)
    tail = DepthTerm.power(params.p, k, params.g * (params.ef + 2))
    return PresentationData(base.d, base.relation_terms + (tail,))


def prop0_inequality(g: int, x: int) -> bool:
    """16 + 8(x+2)(x+1) < g(x+2)^2, the sufficient condition for d^2 > 4r."""
    return 16 + 8 * (x + 2) * (x + 1) < g * (x + 2) ** 2


@dataclass
class Certificate:
    params: FieldParams
    d: int
    r: int
    t0: Optional[Fraction]
    gamma_value: Optional[Fraction]
    cut_level_k: Optional[int]
    verdict: Verdict
    caveats: list[str] = field(default_factory=list)
    cut_value: Optional[Fraction] = None  # certified upper bound of P_{Gamma_k}(t0)
    tail_budget: Optional[Fraction] = None  # proven bound c with t0^(p^k) < c
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD

    def __post_init__(self):
        if self.verdict is Verdict.INFINITE_BY_CUTTING:
            if self.gamma_value is None or not self.gamma_value < 0 or self.cut_level_k is None:
                raise DomainError("InfiniteByCutting needs a negative gamma value and a cut level")


def analyze_tower(
    params: FieldParams,
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD,
    extra_caveats: tuple[str, ...] = (),
) -> Certificate:
    pres = gamma_presentation(params)
    poly = pres.polynomial
    caveats = [CAVEAT_DISJUNCTION]
    if params.dim_vs == 0:
        caveats.append(CAVEAT_DIM_VS)
    caveats.extend(extra_caveats)
    witness = find_witness(poly, exact_threshold=exact_threshold)
    if witness is None:
        return Certificate(params, pres.d, pres.relation_count, None, None, None,
                           Verdict.INCONCLUSIVE, caveats, exact_threshold=exact_threshold)
    if witness.from_grid:
        caveats.append(CAVEAT_GRID)
    t0 = witness.t0
    k, cut = min_cut_level(poly, t0, params.p, params.g * (params.ef + 2), exact_threshold)
    budget = cut.tail_bounds[0][2] if cut.tail_bounds else None
    return Certificate(
        params, pres.d, pres.relation_count, t0, gs_eval(poly, t0), k,
        Verdict.INFINITE_BY_CUTTING, caveats, cut.value, budget, exact_threshold,
    )


def _cut_bound(params: FieldParams, k: int, t0: Fraction, exact_threshold: int) -> Fraction:
    poly = gamma_k_presentation(params, k).polynomial
    return gs_eval_bounded(poly, t0, exact_threshold).upper


def replay_certificate(cert: Certificate) -> Verdict:
    """Re-check every recorded number, raising DomainError on any mismatch.

    No witness search runs: only the stored t0 and k are re-evaluated.
    """
    params = cert.params
    pres = gamma_presentation(params)
    if (pres.d, pres.relation_count) != (cert.d, cert.r):
        raise DomainError("recorded d, r do not match the presentation")
    if cert.verdict is not Verdict.INFINITE_BY_CUTTING:
        if cert.t0 is not None or cert.cut_level_k is not None:
            raise DomainError("an inconclusive certificate carries no witness")
        return cert.verdict
    t0 = cert.t0
    value = gs_eval(pres.polynomial, t0)
    if value != cert.gamma_value or not value < 0:
        raise DomainError("recorded P_Gamma(t0) does not replay")
    k = cert.cut_level_k
    bound = _cut_bound(params, k, t0, cert.exact_threshold)
    if not bound < 0 or (cert.cut_value is not None and bound != cert.cut_value):
        raise DomainError("recorded P_Gamma_k(t0) bound does not replay")
    if k > 1 and _cut_bound(params, k - 1, t0, cert.exact_threshold) < 0:
        raise DomainError(f"cut level {k} is not minimal")
    return cert.verdict
