"""Exact Golod-Shafarevich certificates for infinite p-class field towers."""
from .arith import (
    ComparisonVerdict,
    CycloElement,
    Method,
    Outcome,
    certified_pow_compare,
    cyclo_mul,
    cyclo_norm,
)
from .cohomology import (
    Certificate,
    FieldParams,
    PresentationData,
    Verdict,
    analyze_tower,
    gamma_k_presentation,
    gamma_presentation,
    h1_dim,
    h2_dim,
    prop0_inequality,
    replay_certificate,
)
from .cyclo_class import (
    DirichletCharacter,
    HMinusResult,
    b1_chi,
    conductor,
    cyclotomic_tower_params,
    enumerate_odd_characters,
    maillet_hminus,
    relative_class_number,
)
from .errors import ConsistencyError, DomainError
from .gs import (
    DepthTerm,
    GSPolynomial,
    NegativityWitness,
    find_witness,
    gs_eval,
    gs_eval_bounded,
    min_cut_level,
)
from .shanks import ShanksRecord, cubic_discriminant, shanks_record, shanks_scan

__version__ = "0.1.0"
