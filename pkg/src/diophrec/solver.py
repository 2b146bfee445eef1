"""Enumeration, generator classification, orbits and the brute-force check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import CompletenessError, InvalidInputError, RefinementBudgetError
from .exact import AlgebraicNumber
from .exact.interval import enclose
from .invariant import Recurrence, SolutionTuple, backward, dominant_root, forward
from .mpoly import MultiPoly

MAX_STEPS = 10_000


@dataclass(frozen=True)
class SolutionSet:
    limit: int
    solutions: tuple[SolutionTuple, ...]

    def __contains__(self, t) -> bool:
        return tuple(t) in set(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[SolutionTuple, ...]
    # non-generator -> (generator, number of forward steps from it)
    parents: dict = field(default_factory=dict, compare=False)


# ----------------------------------------------------------------------------
# vectorized exact evaluation
# ----------------------------------------------------------------------------

def _eval_grid(p: MultiPoly, cols: Sequence[np.ndarray]) -> np.ndarray:
    """Evaluate p on integer arrays; int64 when provably safe, Python ints otherwise."""
    bound = max((int(np.abs(c).max()) if c.size else 0) for c in cols)
    worst = sum(abs(c) * bound ** sum(e) for e, c in p.terms.items())
    if worst >= 2 ** 62:
        cols = [c.astype(object) for c in cols]
    out = np.zeros(cols[0].shape, dtype=cols[0].dtype)
    for e, c in p.terms.items():
        term = np.full(cols[0].shape, c, dtype=cols[0].dtype)
        for col, k in zip(cols, e):
            if k:
                term = term * col ** k
        out = out + term
    return out


def _weakly_increasing_nonneg(t: Sequence[int]) -> bool:
    return t[0] >= 0 and all(a <= b for a, b in zip(t, t[1:]))


def enumerate_below(p: MultiPoly, limit: int) -> SolutionSet:
    """All 0 <= x <= y <= z < limit with P(x, y, z) = 1, by exhaustive evaluation."""
    if len(p.vars) != 3:
        raise InvalidInputError("enumeration is implemented for three variables")
    if limit < 1:
        raise InvalidInputError("limit must be at least 1")
    found = []
    rng = np.arange(limit, dtype=np.int64)
    for z in range(limit):
        ys = rng[: z + 1]
        xg, yg = np.meshgrid(ys, ys, indexing="ij")
        mask = xg <= yg
        xs, yv = xg[mask], yg[mask]
        zs = np.full(xs.shape, z, dtype=np.int64)
        hit = _eval_grid(p, [xs, yv, zs]) == 1
        found.extend((int(a), int(b), z) for a, b in zip(xs[hit], yv[hit]))
    return SolutionSet(limit, tuple(sorted(found)))


def classify_generators(rec: Recurrence, sols: SolutionSet) -> GeneratorSet:
    """Members whose backward image leaves the nonnegative weakly-increasing class."""
    members = set(sols.solutions)
    gens, parents = [], {}
    for t in sols.solutions:
        prev = backward(rec, t)
        if not _weakly_increasing_nonneg(prev):
            gens.append(t)
            continue
        chain, cur = 0, t
        while True:
            if chain > MAX_STEPS:
                raise RefinementBudgetError(f"backward chain from {t} did not terminate")
            prev = backward(rec, cur)
            if not _weakly_increasing_nonneg(prev):
                break
            if prev not in members:
                raise CompletenessError(
                    f"{t} reduces to {prev}, which is missing below limit {sols.limit}"
                )
            cur, chain = prev, chain + 1
        parents[t] = (cur, chain)
    return GeneratorSet(tuple(gens), parents)


def orbit(rec: Recurrence, seed: Sequence[int], steps_back: int = 0, steps_forward: int = 0) -> list[SolutionTuple]:
    """Windows R^-steps_back(seed), ..., R^steps_forward(seed), oldest first."""
    if steps_back < 0 or steps_forward < 0:
        raise InvalidInputError("step counts must be nonnegative")
    seed = tuple(int(v) for v in seed)
    if len(seed) != rec.order:
        raise InvalidInputError(f"seed must have {rec.order} entries")
    back = []
    cur = seed
    for _ in range(steps_back):
        cur = backward(rec, cur)
        back.append(cur)
    out = list(reversed(back)) + [seed]
    cur = seed
    for _ in range(steps_forward):
        cur = forward(rec, cur)
        out.append(cur)
    return out


def dominant_sign(rec: Recurrence, t: Sequence[int], alpha: AlgebraicNumber | None = None,
                  budget: int = 4096) -> int:
    """Sign of (alpha^2 - a*alpha - b)*x + (alpha - a)*y + z.

    This is the left eigenvector of the companion matrix for alpha applied to the
    window, so it decides whether the forward orbit ends up positive and
    increasing (+1) or negative (-1).
    """
    x, y, z = (int(v) for v in t)
    if x == y == z == 0:
        return 0
    a, b, _ = rec.coeffs
    alpha = alpha if alpha is not None else dominant_root(rec)
    terms = {(2,): Fraction(x), (1,): Fraction(y - a * x), (0,): Fraction(z - b * x - a * y)}
    for _ in range(budget):
        enc = enclose(terms, [alpha.box()])
        if enc.lo > 0:
            return 1
        if enc.hi < 0:
            return -1
        if alpha.is_rational:
            break
        alpha = alpha.bisected()
    raise RefinementBudgetError(f"dominant sign of {tuple(t)} not decided; please report")


def normalize(rec: Recurrence, t: Sequence[int], max_steps: int = MAX_STEPS) -> tuple[SolutionTuple, int]:
    """Walk the orbit of t to a nonnegative weakly-increasing window.

    Returns that window and the signed number of forward steps taken.
    """
    t = tuple(t)
    if _weakly_increasing_nonneg(t):
        return t, 0
    cur = t
    for n in range(1, max_steps + 1):
        cur = forward(rec, cur)
        if _weakly_increasing_nonneg(cur):
            return cur, n
    raise RefinementBudgetError(f"no increasing window within {max_steps} steps of {t}")


# ----------------------------------------------------------------------------
# brute-force verification
# ----------------------------------------------------------------------------

@dataclass
class VerificationReport:
    radius: int
    solutions: list[SolutionTuple]
    memberships: dict[SolutionTuple, tuple[SolutionTuple, int]]
    unexplained: list[SolutionTuple]
    generators: list[SolutionTuple]

    @property
    def ok(self) -> bool:
        return not self.unexplained

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "generators": [list(g) for g in self.generators],
            "solutions": [
                {
                    "tuple": list(s),
                    "generator": list(self.memberships[s][0]) if s in self.memberships else None,
                    "steps": self.memberships[s][1] if s in self.memberships else None,
                }
                for s in self.solutions
            ],
            "unexplained": [list(s) for s in self.unexplained],
            "ok": self.ok,
        }


def solutions_in_cube(p: MultiPoly, radius: int) -> list[SolutionTuple]:
    """Every integer point with all |entries| <= radius where P = 1."""
    if radius < 0:
        raise InvalidInputError("radius must be nonnegative")
    r = np.arange(-radius, radius + 1, dtype=np.int64)
    d = len(p.vars)
    grids = np.meshgrid(*([r] * d), indexing="ij")
    cols = [g.ravel() for g in grids]
    hit = _eval_grid(p, cols) == 1
    return sorted(tuple(int(c[i]) for c in cols) for i in np.flatnonzero(hit))


def _walk(rec: Recurrence, gen: SolutionTuple, radius: int, step, sign: int) -> dict:
    """Windows inside the cube along one direction of the orbit of ``gen``.

    A direction is finished after three consecutive windows whose entries all
    exceed the radius: a window inside the cube needs d consecutive small terms.
    """
    seen = {}
    cur, n, outside = gen, 0, 0
    for _ in range(MAX_STEPS):
        if all(abs(v) <= radius for v in cur):
            seen[cur] = sign * n
        outside = outside + 1 if all(abs(v) > radius for v in cur) else 0
        if outside >= 3:
            return seen
        cur = step(rec, cur)
        n += 1
    raise RefinementBudgetError(f"orbit of {gen} did not leave radius {radius}")


def brute_force_verify(rec: Recurrence, p: MultiPoly, radius: int,
                       generators: Iterable[Sequence[int]]) -> VerificationReport:
    gens = [tuple(g) for g in generators]
    sols = solutions_in_cube(p, radius)
    members: dict[SolutionTuple, tuple[SolutionTuple, int]] = {}
    for g in gens:
        for direction, sign in ((forward, 1), (backward, -1)):
            for w, n in _walk(rec, g, radius, direction, sign).items():
                members.setdefault(w, (g, n))
    unexplained = [s for s in sols if s not in members]
    explained = {s: members[s] for s in sols if s in members}
    return VerificationReport(radius, sols, explained, unexplained, gens)
