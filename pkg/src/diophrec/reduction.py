"""Search bounds from exact minimization of the dehomogenized invariant.

Dividing ``P(x, y, z) = 1`` by ``z**3`` and setting ``t = x/z``, ``s = y/z`` gives
``f(t, s) = z**-3``.  If ``f >= m > 0`` on the part of the unit square where the
backward step fails to shrink an increasing solution, then every increasing
solution with ``z**3 * m > 1`` does shrink.  The minimum ``m`` is found exactly:
a cubic on a convex polygon attains its minimum at a vertex, at a critical point
of its restriction to an edge, or at an interior critical point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DomainError, InvalidInputError
from .exact import AlgebraicNumber, UniPoly, alg_eval, isolate_real_roots
from .exact.algebraic import _affine
from .exact.interval import enclose
from .invariant import Recurrence, build_invariant, dominant_root
from .mpoly import MultiPoly, resultant, substitute

log = logging.getLogger(__name__)

TS = ("t", "s")


# ----------------------------------------------------------------------------
# dehomogenization
# ----------------------------------------------------------------------------

def dehomogenize(p: MultiPoly) -> MultiPoly:
    """f(t, s) = P(t, s, 1) for a cubic form P(x, y, z)."""
    if len(p.vars) != 3:
        raise InvalidInputError(f"expected a form in three variables, got {p.vars}")
    if p.is_zero() or not p.is_homogeneous(3):
        raise InvalidInputError("expected a homogeneous cubic")
    t, s = MultiPoly.gens(TS)
    one = MultiPoly.const(TS, 1)
    return substitute(p, dict(zip(p.vars, (t, s, one))))


# ----------------------------------------------------------------------------
# regions
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """``ct*t + cs*s + c0  (<= | >=)  0``."""

    ct: Fraction
    cs: Fraction
    c0: Fraction
    relation: str

    def __post_init__(self):
        if self.relation not in ("<=", ">="):
            raise InvalidInputError(f"relation must be '<=' or '>=', got {self.relation!r}")
        for name in ("ct", "cs", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def form(self, t, s):
        return self.ct * t + self.cs * s + self.c0

    def holds(self, t: Fraction, s: Fraction) -> bool:
        v = self.form(t, s)
        return v <= 0 if self.relation == "<=" else v >= 0

    def holds_alg(self, t: AlgebraicNumber, s: AlgebraicNumber) -> bool:
        v = alg_eval({(1, 0): self.ct, (0, 1): self.cs, (0, 0): self.c0}, [t, s]).sign()
        return v <= 0 if self.relation == "<=" else v >= 0

    def render(self) -> str:
        parts = []
        for c, name in ((self.c0, ""), (self.ct, "t"), (self.cs, "s")):
            if c == 0:
                continue
            mag = abs(c)
            if name:
                body = name if mag == 1 else f"{mag}*{name}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return f"{' '.join(parts) or '0'} {self.relation} 0"


_SQUARE = (
    Constraint(-1, 0, 0, "<="),  # t >= 0
    Constraint(1, 0, -1, "<="),  # t <= 1
    Constraint(0, -1, 0, "<="),  # s >= 0
    Constraint(0, 1, -1, "<="),  # s <= 1
)


@dataclass(frozen=True)
class Region:
    """Intersection of linear constraints, clipped to the unit square."""

    constraints: tuple[Constraint, ...]
    name: str = ""

    def all_constraints(self) -> tuple[Constraint, ...]:
        return _SQUARE + tuple(self.constraints)

    def contains(self, t, s) -> bool:
        t, s = Fraction(t), Fraction(s)
        return all(c.holds(t, s) for c in self.all_constraints())

    def vertices(self) -> list[tuple[Fraction, Fraction]]:
        pts = set()
        for c1, c2 in combinations(self.all_constraints(), 2):
            det = c1.ct * c2.cs - c1.cs * c2.ct
            if det == 0:
                continue
            t = (-c1.c0 * c2.cs + c2.c0 * c1.cs) / det
            s = (-c1.ct * c2.c0 + c2.ct * c1.c0) / det
            if self.contains(t, s):
                pts.add((t, s))
        return sorted(pts)

    def is_empty(self) -> bool:
        return not self.vertices()

    def edges(self) -> list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
        """Boundary segments of positive length, one per supporting line."""
        verts = self.vertices()
        seen, out = set(), []
        for c in self.all_constraints():
            on = sorted(v for v in verts if c.form(*v) == 0)
            if len(on) < 2:
                continue
            seg = (on[0], on[-1])
            if seg not in seen:
                seen.add(seg)
                out.append(seg)
        return out

    def render(self) -> list[str]:
        return [c.render() for c in self.constraints]


def avoidance_region(a: int, b: int, which: int | str) -> Region:
    """Region 1: the backward step would not stay positive, ``1 - a*s - b*t <= 0``.
    Region 2: it would not shrink below x, ``1 - a*s - b*t >= t``."""
    if a < 1 or b < 1:
        raise InvalidInputError("a and b must be positive")
    which = {"region-1": 1, "region-2": 2}.get(which, which)
    if which == 1:
        return Region((Constraint(-b, -a, 1, "<="),), "region-1")
    if which == 2:
        return Region((Constraint(-b - 1, -a, 1, ">="),), "region-2")
    raise InvalidInputError(f"unknown region {which!r}")


# ----------------------------------------------------------------------------
# exact minimization
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    value: AlgebraicNumber
    witness: tuple[AlgebraicNumber, AlgebraicNumber]
    kind: str


@dataclass(frozen=True)
class MinReport:
    region: Region
    minimum: AlgebraicNumber
    witness: tuple[AlgebraicNumber, AlgebraicNumber]
    positive: bool
    kind: str = "vertex"
    degenerate: bool = False
    float_guess: float | None = None
    candidates: int = 0

    def inverse_cube_root(self) -> AlgebraicNumber:
        if not self.positive:
            raise DomainError("minimum is not positive")
        return self.minimum.inv().root(3)


def _rat(q) -> AlgebraicNumber:
    return AlgebraicNumber.from_rational(q)


def _restrict_to_segment(f: MultiPoly, a, b) -> list[Fraction]:
    """Coefficients in u of f(a + u*(b - a)), constant first."""
    dt, ds = b[0] - a[0], b[1] - a[1]
    t_lin, s_lin = [a[0], dt], [a[1], ds]
    out = [Fraction(0)] * (f.total_degree() + 1)
    for (i, j), c in f.terms.items():
        poly = [Fraction(c)]
        for lin, k in ((t_lin, i), (s_lin, j)):
            for _ in range(k):
                nxt = [Fraction(0)] * (len(poly) + 1)
                for n, v in enumerate(poly):
                    nxt[n] += v * lin[0]
                    nxt[n + 1] += v * lin[1]
                poly = nxt
        for n, v in enumerate(poly):
            out[n] += v
    return out


def _edge_candidates(f: MultiPoly, region: Region) -> list[Candidate]:
    out = []
    for a, b in region.edges():
        g = _restrict_to_segment(f, a, b)
        dg = [n * c for n, c in enumerate(g)][1:]
        if not any(dg):
            continue
        for u in isolate_real_roots(UniPoly.from_rationals(dg)):
            if not (u > 0 and u < 1):
                continue
            value = alg_eval({(n,): c for n, c in enumerate(g) if c}, [u])
            if u.is_rational:
                q = u.as_rational()
                wt = _rat(a[0] + q * (b[0] - a[0]))
                ws = _rat(a[1] + q * (b[1] - a[1]))
            else:
                u = u.minimal()
                wt = _coord(u, a[0], b[0])
                ws = _coord(u, a[1], b[1])
            out.append(Candidate(value, (wt, ws), "edge"))
    return out


def _coord(u: AlgebraicNumber, p0: Fraction, p1: Fraction) -> AlgebraicNumber:
    if p1 == p0:
        return _rat(p0)
    return _affine(p1 - p0, p0, u)


def _maybe_zero(terms, xs, rounds: int = 24) -> bool:
    """False once interval enclosure proves the value nonzero."""
    for _ in range(rounds):
        enc = enclose(terms, [x.box() for x in xs])
        if not enc.contains(0):
            return False
        xs = [x.bisected() for x in xs]
    return True


def _critical_points(f: MultiPoly) -> tuple[list[tuple[AlgebraicNumber, AlgebraicNumber]], bool]:
    """Isolated common zeros of f_t and f_s inside the open unit square.

    Returns the points and a flag telling whether the gradient shares a factor
    (a non-isolated critical set, which then consists of lines; those meet the
    polygon boundary, where edge candidates already see their values).
    """
    ft, fs = f.diff("t"), f.diff("s")
    degenerate = False
    rs = resultant(ft, fs, "t")
    rt = resultant(ft, fs, "s")
    if rs.is_zero() or rt.is_zero():
        degenerate = True
        ft, fs = _cofactors(ft, fs)
        if ft.total_degree() < 1 or fs.total_degree() < 1:
            return [], degenerate
        rs = resultant(ft, fs, "t")
        rt = resultant(ft, fs, "s")
        if rs.is_zero() or rt.is_zero():
            return [], degenerate

    def roots01(r: MultiPoly) -> list[AlgebraicNumber]:
        c = r.univariate_coeffs()
        if len(c) < 2:
            return []
        return [x.minimal() for x in isolate_real_roots(UniPoly(tuple(c))) if x > 0 and x < 1]

    ts, ss = roots01(rt), roots01(rs)
    ft_terms, fs_terms = ft.rational_terms(), fs.rational_terms()
    pts = []
    for t in ts:
        for s in ss:
            if not (_maybe_zero(ft_terms, [t, s]) and _maybe_zero(fs_terms, [t, s])):
                continue
            if alg_eval(ft_terms, [t, s]).sign() == 0 and alg_eval(fs_terms, [t, s]).sign() == 0:
                pts.append((t, s))
    return pts, degenerate


def _cofactors(p: MultiPoly, q: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """p/g and q/g for g = gcd(p, q); only reached for degenerate gradients."""
    import sympy

    t, s = sympy.symbols("t s")

    def to_sym(m: MultiPoly):
        return sum(c * t ** e[0] * s ** e[1] for e, c in m.terms.items())

    def from_sym(expr) -> MultiPoly:
        poly = sympy.Poly(expr, t, s)
        return MultiPoly(TS, {e: int(c) for e, c in poly.terms()})

    sp, sq = to_sym(p), to_sym(q)
    if sp == 0:
        return MultiPoly.const(TS, 0), MultiPoly.const(TS, 1)
    if sq == 0:
        return MultiPoly.const(TS, 1), MultiPoly.const(TS, 0)
    g = sympy.gcd(sp, sq)
    return from_sym(sympy.cancel(sp / g)), from_sym(sympy.cancel(sq / g))


def _float_guess(f: MultiPoly, region: Region, n: int = 201) -> float | None:
    grid = np.linspace(0.0, 1.0, n)
    t, s = np.meshgrid(grid, grid, indexing="ij")
    val = np.zeros_like(t)
    for (i, j), c in f.terms.items():
        val += float(c) * t ** i * s ** j
    mask = np.ones_like(t, dtype=bool)
    for c in region.constraints:
        form = float(c.ct) * t + float(c.cs) * s + float(c.c0)
        mask &= (form <= 1e-12) if c.relation == "<=" else (form >= -1e-12)
    if not mask.any():
        return None
    return float(val[mask].min())


def _lex_less(p: Candidate, q: Candidate) -> bool:
    c = p.witness[0]._cmp(q.witness[0])
    if c:
        return c < 0
    return p.witness[1]._cmp(q.witness[1]) < 0


def exact_min(f: MultiPoly, region: Region) -> MinReport:
    """Global minimum of a cubic f(t, s) over ``region``, decided exactly."""
    if f.vars != TS:
        raise InvalidInputError(f"expected a polynomial in {TS}, got {f.vars}")
    if f.total_degree() > 3:
        raise InvalidInputError("only polynomials of degree <= 3 are supported")
    verts = region.vertices()
    if not verts:
        raise DomainError("empty region")
    guess = _float_guess(f, region)
    log.debug("findAbsoluteMin: floating point guess %s on %s", guess, region.name)

    cands = [Candidate(_rat(f(*v)), (_rat(v[0]), _rat(v[1])), "vertex") for v in verts]
    cands += _edge_candidates(f, region)
    pts, degenerate = _critical_points(f)
    terms = f.rational_terms()
    for t, s in pts:
        if all(c.holds_alg(t, s) for c in region.constraints):
            cands.append(Candidate(alg_eval(terms, [t, s]), (t, s), "interior"))

    best = cands[0]
    for c in cands[1:]:
        order = c.value._cmp(best.value)
        if order < 0 or (order == 0 and _lex_less(c, best)):
            best = c
    return MinReport(
        region=region,
        minimum=best.value,
        witness=best.witness,
        positive=best.value.sign() > 0,
        kind=best.kind,
        degenerate=degenerate,
        float_guess=guess,
        candidates=len(cands),
    )


# ----------------------------------------------------------------------------
# search bound
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    per_region: tuple[MinReport, ...]
    search_limit: int | None
    method_ok: bool
    binding: int | None = None

    def bounds(self) -> list[AlgebraicNumber | None]:
        return [r.inverse_cube_root() if r.positive else None for r in self.per_region]


def cube_floor_bound(m: AlgebraicNumber) -> int:
    """Largest k >= 0 with k**3 * m <= 1, i.e. floor(m**(-1/3)), for m > 0."""
    k = max(int(m.approx ** (-1.0 / 3.0)), 0)
    while k > 0 and m.compare_rational(Fraction(1, k ** 3)) > 0:
        k -= 1
    while m.compare_rational(Fraction(1, (k + 1) ** 3)) <= 0:
        k += 1
    return k


def search_bound(reports: Sequence[MinReport]) -> BoundReport:
    reports = tuple(reports)
    if not reports or not all(r.positive for r in reports):
        return BoundReport(reports, None, False)
    binding = 0
    for i, r in enumerate(reports[1:], start=1):
        if r.minimum < reports[binding].minimum:
            binding = i
    limit = 1 + cube_floor_bound(reports[binding].minimum)
    return BoundReport(reports, limit, True, binding)


def reduce_recurrence(rec: Recurrence) -> BoundReport:
    """Both avoidance regions for (a, b, 1), minimized and combined into a bound."""
    a, b, _ = rec.coeffs
    f = dehomogenize(build_invariant(rec))
    return search_bound([exact_min(f, avoidance_region(a, b, k)) for k in (1, 2)])


def asymptotic_limit(a: int, b: int) -> Fraction:
    """Truncated large-a expansion a^2 + b^2 a/12 + 3b/2 + b^4/72 (diagnostic only)."""
    if a < 1 or b < 1:
        raise InvalidInputError("a and b must be positive")
    return Fraction(a * a) + Fraction(b * b * a, 12) + Fraction(3 * b, 2) + Fraction(b ** 4, 72)


# ----------------------------------------------------------------------------
# the plane map and its fixed point
# ----------------------------------------------------------------------------

def fixed_point(rec: Recurrence) -> tuple[AlgebraicNumber, AlgebraicNumber]:
    """(1/alpha^2, 1/alpha): the image of the dominant eigenvector in the ts-plane."""
    beta = dominant_root(rec).inv()
    return beta ** 2, beta


def value_at_fixed_point(rec: Recurrence) -> AlgebraicNumber:
    """f(1/alpha^2, 1/alpha), computed as a polynomial in beta = 1/alpha."""
    f = dehomogenize(build_invariant(rec))
    beta = dominant_root(rec).inv()
    terms: dict[tuple[int], Fraction] = {}
    for (i, j), c in f.terms.items():
        k = (2 * i + j,)
        terms[k] = terms.get(k, Fraction(0)) + c
    return alg_eval(terms, [beta])


def plane_map(a: int, b: int, t: Fraction, s: Fraction) -> tuple[Fraction, Fraction] | None:
    """One forward step seen in (t, s) = (x/z, y/z); None where it is undefined."""
    den = a + b * s + t
    if den == 0:
        return None
    return s / den, 1 / den
