"""Linear recurrences with unit determinant and their invariant polynomials.

A recurrence ``a(n) = c1*a(n-1) + ... + cd*a(n-d)`` with ``cd = (-1)**(d+1)``
has a companion matrix of determinant one.  The matrix whose rows are d
consecutive symbolic windows starting at ``(x1, ..., xd)`` is multiplied by that
companion matrix under a shift, so its determinant is a degree-d form that is
constant along every orbit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ConstraintError, InvalidInputError, UnsupportedInputError
from .exact import AlgebraicNumber, UniPoly, isolate_real_roots
from .mpoly import MultiPoly, PolyMatrix, determinant, substitute, variables

SolutionTuple = tuple[int, ...]


@dataclass(frozen=True)
class Recurrence:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        d = len(c)
        if d < 2:
            raise InvalidInputError("a recurrence needs at least two coefficients")
        required = (-1) ** (d + 1)
        if c[-1] != required:
            raise ConstraintError(
                f"last coefficient must be {required} for order {d}, got {c[-1]}"
            )
        if not any(c[:-1]):
            raise ConstraintError("c1, ..., c(d-1) must not all be zero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def vars(self) -> tuple[str, ...]:
        return variables(self.order)

    def characteristic(self) -> UniPoly:
        """X^d - c1 X^(d-1) - ... - cd."""
        d = self.order
        return UniPoly(tuple(-self.coeffs[d - 1 - i] for i in range(d)) + (1,))

    def next_term(self, window: Sequence) -> object:
        d = self.order
        return sum(self.coeffs[i] * window[d - 1 - i] for i in range(d))

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.coeffs)) + "]"


def validate(coeffs: Sequence[int]) -> Recurrence:
    return Recurrence(tuple(coeffs))


def window_matrix(rec: Recurrence) -> PolyMatrix:
    """Rows are the symbolic windows after 0, 1, ..., d-1 forward shifts."""
    gens = list(MultiPoly.gens(rec.vars))
    rows = [gens]
    for _ in range(rec.order - 1):
        prev = rows[-1]
        rows.append(prev[1:] + [rec.next_term(prev)])
    return PolyMatrix.from_rows(rows)


def build_invariant(rec: Recurrence) -> MultiPoly:
    """The invariant form, signed so that P(0, ..., 0, 1) = 1."""
    det = determinant(window_matrix(rec))
    seed = (0,) * (rec.order - 1) + (1,)
    v = det(*seed)
    if v not in (1, -1):
        raise AssertionError(f"seed value {v}: companion determinant is not one")
    return det if v == 1 else -det


def shift_bindings(rec: Recurrence) -> dict[str, MultiPoly]:
    gens = list(MultiPoly.gens(rec.vars))
    image = gens[1:] + [rec.next_term(gens)]
    return dict(zip(rec.vars, image))


def is_invariant(rec: Recurrence, p: MultiPoly | None = None) -> bool:
    """P - P(shift) == 0 exactly."""
    p = p if p is not None else build_invariant(rec)
    return (p - substitute(p, shift_bindings(rec))).is_zero()


def forward(rec: Recurrence, t: Sequence[int]) -> SolutionTuple:
    if len(t) != rec.order:
        raise InvalidInputError(f"expected a window of length {rec.order}")
    return tuple(t[1:]) + (rec.next_term(t),)


def backward(rec: Recurrence, t: Sequence[int]) -> SolutionTuple:
    d = rec.order
    if len(t) != d:
        raise InvalidInputError(f"expected a window of length {d}")
    # t[d-1] = c1*t[d-2] + ... + c(d-1)*t[0] + cd*prev, with cd = +-1
    rest = t[d - 1] - sum(rec.coeffs[i] * t[d - 2 - i] for i in range(d - 1))
    return (rest * rec.coeffs[-1],) + tuple(t[:-1])


# ----------------------------------------------------------------------------
# admissibility (order three only)
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibilityReport:
    irreducible: bool
    dominant_root: AlgebraicNumber | None
    dominant_ok: bool
    reasons: tuple[str, ...] = field(default_factory=tuple)
    rational_root: int | None = None
    factorization: str | None = None

    @property
    def admissible(self) -> bool:
        return self.irreducible and self.dominant_ok


def _abc(rec: Recurrence) -> tuple[int, int]:
    if rec.order != 3:
        raise UnsupportedInputError("the converse theory is implemented for order 3 only")
    a, b, _ = rec.coeffs
    if a < 1 or b < 1:
        raise UnsupportedInputError("coefficients a and b must be positive")
    return a, b


def is_admissible(rec: Recurrence) -> AdmissibilityReport:
    a, b = _abc(rec)
    chi = rec.characteristic()
    reasons: list[str] = []
    # monic with constant term -1: only +-1 can be rational roots
    rational = [r for r in (1, -1) if chi(r) == 0]
    irreducible = not rational
    rational_root = rational[0] if rational else None
    factorization = None
    if rational_root is not None:
        # synthetic division by (X - r)
        r = rational_root
        q2 = 1
        q1 = -a + r * q2
        q0 = -b + r * q1
        quad = UniPoly((q0, q1, q2))
        lin = "X - 1" if r == 1 else "X + 1"
        factorization = f"({lin})({quad})"
        reasons.append(
            f"{chi} = {factorization} is reducible "
            f"(rational root {r}, b = a + 2)"
        )
    roots = isolate_real_roots(chi)
    alpha = roots[-1]
    dominant_ok = alpha > 1
    if not dominant_ok:
        reasons.append("largest real root is not greater than 1")
    if len(roots) == 3:
        for r in roots[:-1]:
            if not (-r) < alpha:
                dominant_ok = False
                reasons.append("a negative root is at least as large in modulus as the real root")
                break
    elif len(roots) == 2:
        dominant_ok = False
        reasons.append("repeated real root")
    # one real root: the complex pair has modulus alpha**(-1/2) because the
    # roots multiply to 1, and that is below alpha exactly when alpha > 1
    if not irreducible:
        dominant_ok = False
    return AdmissibilityReport(
        irreducible=irreducible,
        dominant_root=alpha if alpha > 1 else None,
        dominant_ok=dominant_ok,
        reasons=tuple(reasons),
        rational_root=rational_root,
        factorization=factorization,
    )


def dominant_root(rec: Recurrence) -> AlgebraicNumber:
    """The unique real root > 1 of X^3 - aX^2 - bX - 1 (positive a, b)."""
    _abc(rec)
    return isolate_real_roots(rec.characteristic())[-1]
