"""Deterministic JSON encoding of certificates and reports.

Rationals become {"num": "...", "den": "..."}; integers outside the exactly
representable double range become decimal strings. Keys are sorted.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from typing import Any, Optional

from .cohomology import Certificate, FieldParams, Verdict
from .cyclo_class import HMinusResult
from .shanks import ShanksRecord

_SAFE_INT = 1 << 53


def enc_int(x: int):
    return x if -_SAFE_INT < x < _SAFE_INT else str(x)


def dec_int(x) -> int:
    return int(x)


def enc_rat(x: Optional[Fraction]):
    if x is None:
        return None
    return {"num": str(x.numerator), "den": str(x.denominator)}


def dec_rat(x) -> Optional[Fraction]:
    if x is None:
        return None
    return Fraction(int(x["num"]), int(x["den"]))


def params_to_dict(p: FieldParams) -> dict:
    return {
        "p": enc_int(p.p), "e": enc_int(p.e), "f": enc_int(p.f), "g": enc_int(p.g),
        "dimVS": enc_int(p.dim_vs),
        "containsMuP": p.contains_mu_p, "totallyImaginary": p.totally_imaginary,
    }


def params_from_dict(d: dict) -> FieldParams:
    return FieldParams(
        p=dec_int(d["p"]), e=dec_int(d["e"]), f=dec_int(d["f"]), g=dec_int(d["g"]),
        dim_vs=dec_int(d["dimVS"]),
        contains_mu_p=bool(d["containsMuP"]), totally_imaginary=bool(d["totallyImaginary"]),
    )


def certificate_to_dict(c: Certificate) -> dict:
    return {
        "params": params_to_dict(c.params),
        "d": enc_int(c.d),
        "r": enc_int(c.r),
        "t0": enc_rat(c.t0),
        "gammaValue": enc_rat(c.gamma_value),
        "cutLevelK": c.cut_level_k,
        "cutValue": enc_rat(c.cut_value),
        "tailBudget": enc_rat(c.tail_budget),
        "exactThreshold": enc_int(c.exact_threshold),
        "verdict": c.verdict.value,
        "caveats": list(c.caveats),
    }


def certificate_from_dict(d: dict) -> Certificate:
    return Certificate(
        params=params_from_dict(d["params"]),
        d=dec_int(d["d"]),
        r=dec_int(d["r"]),
        t0=dec_rat(d["t0"]),
        gamma_value=dec_rat(d["gammaValue"]),
        cut_level_k=d["cutLevelK"],
        verdict=Verdict(d["verdict"]),
        caveats=list(d["caveats"]),
        cut_value=dec_rat(d["cutValue"]),
        tail_budget=dec_rat(d["tailBudget"]),
        exact_threshold=dec_int(d["exactThreshold"]),
    )


def hminus_to_dict(h: HMinusResult) -> dict:
    return {
        "modulus": enc_int(h.modulus),
        "hMinus": enc_int(h.h_minus),
        "orbitCount": h.orbit_count,
        "QFactor": h.q_factor,
        "wFactor": enc_int(h.w_factor),
        "orbitNorms": [enc_rat(x) for x in h.orbit_norms],
    }


def shanks_to_dict(r: ShanksRecord) -> dict:
    out = {
        "a": enc_int(r.a),
        "p": enc_int(r.p),
        "cubicCoeffs": [enc_int(x) for x in r.cubic_coeffs],
        "discriminant": enc_int(r.discriminant),
        "isPrime": r.is_prime,
        "discriminantIsPSquared": r.discriminant_ok,
    }
    if r.annotation is not None:
        out["annotation"] = r.annotation
    return out


def _default(o: Any):
    if isinstance(o, Fraction):
        return enc_rat(o)
    if isinstance(o, enum.Enum):
        return o.value
    raise TypeError(f"cannot serialise {type(o).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_default, ensure_ascii=False)


def make_report(command: str, inputs: dict, results, caveats=(), timing_ms: Optional[int] = None) -> dict:
    rep = {
        "command": command,
        "inputsEcho": inputs,
        "results": results,
        "caveats": sorted(set(caveats)),
    }
    if timing_ms is not None:
        rep["timingMs"] = timing_ms
    return rep
