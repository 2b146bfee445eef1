"""The full decision procedure for a third-order recurrence (a, b, 1).

admissibility -> exact region minima -> search limit -> enumeration -> generators
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .invariant import AdmissibilityReport, Recurrence, build_invariant, is_admissible, is_invariant
from .mpoly import MultiPoly
from .reduction import BoundReport, dehomogenize, reduce_recurrence
from .solver import GeneratorSet, SolutionSet, classify_generators, enumerate_below

OK = "ok"
INADMISSIBLE = "inadmissible"
METHOD_FAILURE = "method-failure"


@dataclass
class Derivation:
    rec: Recurrence
    polynomial: MultiPoly
    invariance_verified: bool
    admissibility: AdmissibilityReport
    bound: BoundReport | None = None
    solutions: SolutionSet | None = None
    generators: GeneratorSet | None = None

    @property
    def status(self) -> str:
        if not self.admissibility.admissible:
            return INADMISSIBLE
        if self.bound is None or not self.bound.method_ok:
            return METHOD_FAILURE
        return OK

    @property
    def cubic(self) -> MultiPoly:
        return dehomogenize(self.polynomial)

    @property
    def search_limit(self) -> int | None:
        return self.bound.search_limit if self.bound else None


def derive(coeffs: Sequence[int] | Recurrence) -> Derivation:
    """Run every stage that applies; stops early on inadmissible input or method failure."""
    rec = coeffs if isinstance(coeffs, Recurrence) else Recurrence(tuple(coeffs))
    p = build_invariant(rec)
    d = Derivation(rec, p, is_invariant(rec, p), is_admissible(rec))
    if d.status == INADMISSIBLE:
        return d
    d.bound = reduce_recurrence(rec)
    if not d.bound.method_ok:
        return d
    d.solutions = enumerate_below(p, d.bound.search_limit)
    d.generators = classify_generators(rec, d.solutions)
    return d
