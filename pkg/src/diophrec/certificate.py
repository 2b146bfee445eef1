"""JSON certificates: write the full derivation, read it back, re-check it.

Exact data is stored as strings: polynomial coefficients as decimal integers
(constant term first) and interval endpoints as ``"num/den"``.  Fields named
``approx`` and ``inv_cuberoot_approx`` are advisory and never read back.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import __version__
from .errors import InvalidInputError
from .exact import AlgebraicNumber, UniPoly
from .invariant import Recurrence, build_invariant, is_admissible, is_invariant
from .mpoly import MultiPoly
from .pipeline import Derivation
from .reduction import avoidance_region, dehomogenize, exact_min, search_bound
from .solver import classify_generators, enumerate_below

WIDTH = Fraction(1, 2**64)


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _unq(text: str) -> Fraction:
    num, _, den = str(text).partition("/")
    return Fraction(int(num), int(den or 1))


def encode_algebraic(x: AlgebraicNumber) -> dict:
    x = x.minimal().refine(WIDTH)
    return {
        "defining": [str(c) for c in x.defining.coeffs],
        "interval": [_q(x.lo), _q(x.hi)],
        "approx": x.approx,
    }


def decode_algebraic(d: dict) -> AlgebraicNumber:
    p = UniPoly(tuple(int(c) for c in d["defining"]))
    lo, hi = (_unq(e) for e in d["interval"])
    return AlgebraicNumber.from_interval(p, lo, hi)


def encode_polynomial(p: MultiPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [{"exp": list(e), "coeff": str(c)} for e, c in p.items()],
    }


def decode_polynomial(d: dict) -> MultiPoly:
    return MultiPoly(d["vars"], {tuple(t["exp"]): int(t["coeff"]) for t in d["terms"]})


def build_certificate(d: Derivation) -> dict:
    adm = d.admissibility
    cert: dict[str, Any] = {
        "recurrence": {"order": d.rec.order, "coeffs": list(d.rec.coeffs)},
        "polynomial": encode_polynomial(d.polynomial),
        "invariance_verified": d.invariance_verified,
        "admissibility": {
            "irreducible": adm.irreducible,
            "dominant_ok": adm.dominant_ok,
            "dominant_root": encode_algebraic(adm.dominant_root) if adm.dominant_root else None,
            "reasons": list(adm.reasons),
        },
        "status": d.status,
        "tool_version": __version__,
    }
    if d.bound is not None:
        regions = []
        for r in d.bound.per_region:
            regions.append({
                "name": r.region.name,
                "constraints": r.region.render(),
                "min": encode_algebraic(r.minimum),
                "inv_cuberoot_approx": r.inverse_cube_root().approx if r.positive else None,
                "flags": ["degenerate-critical-set"] if r.degenerate else [],
            })
        cert["reduction"] = {
            "regions": regions,
            "search_limit": d.bound.search_limit,
            "method_ok": d.bound.method_ok,
        }
    if d.solutions is not None:
        cert["solutions_below_bound"] = [list(t) for t in d.solutions]
    if d.generators is not None:
        cert["generators"] = [list(t) for t in d.generators.generators]
    return cert


def dumps(cert: dict) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(cert, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"not a certificate: {e}") from None


def verify_certificate(cert: dict) -> dict[str, bool]:
    """Re-check every claim from the exact fields; one verdict per claim.

    Advisory approximations are ignored.  Stages absent from the certificate
    are not reported.
    """
    out: dict[str, bool] = {}
    rec = Recurrence(tuple(cert["recurrence"]["coeffs"]))
    out["recurrence"] = cert["recurrence"]["order"] == rec.order
    p = decode_polynomial(cert["polynomial"])
    out["polynomial"] = p == build_invariant(rec)
    out["invariance"] = cert["invariance_verified"] == is_invariant(rec, p)

    adm = cert["admissibility"]
    report = is_admissible(rec)
    ok = adm["irreducible"] == report.irreducible and adm["dominant_ok"] == report.dominant_ok
    if adm["dominant_root"] is not None:
        alpha = decode_algebraic(adm["dominant_root"])
        chi = rec.characteristic()
        ok = ok and alpha > 1 and chi(alpha.lo) * chi(alpha.hi) <= 0 and alpha == report.dominant_root
    out["admissibility"] = ok

    if "reduction" in cert:
        a, b, _ = rec.coeffs
        f = dehomogenize(p)
        reports, ok = [], True
        for k, reg in enumerate(cert["reduction"]["regions"], start=1):
            region = avoidance_region(a, b, k)
            ok = ok and reg["constraints"] == region.render()
            m = decode_algebraic(reg["min"])
            r = exact_min(f, region)
            ok = ok and m == r.minimum
            reports.append(r)
        out["minima"] = ok
        bound = search_bound(reports)
        out["search_limit"] = (
            bound.search_limit == cert["reduction"]["search_limit"]
            and bound.method_ok == cert["reduction"]["method_ok"]
        )
        if "solutions_below_bound" in cert and bound.search_limit is not None:
            sols = enumerate_below(p, bound.search_limit)
            claimed = [tuple(t) for t in cert["solutions_below_bound"]]
            out["solutions"] = claimed == list(sols.solutions) and all(p(*t) == 1 for t in claimed)
            if "generators" in cert:
                gens = classify_generators(rec, sols).generators
                out["generators"] = [tuple(g) for g in cert["generators"]] == list(gens)
    return out
