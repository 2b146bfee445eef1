"""Plain-text proofs that finitely many solutions generate all the others."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from .exact import AlgebraicNumber
from .pipeline import INADMISSIBLE, Derivation
from .reduction import Constraint

DIGITS = 10


def _sqrt_parts(n: int) -> tuple[int, int]:
    """n = k^2 * r with r squarefree."""
    k, r = 1, 1
    for p, e in sympy.factorint(n).items():
        k *= p ** (e // 2)
        r *= p ** (e % 2)
    return k, r


def exact_expression(x: AlgebraicNumber) -> str:
    """A radical for rationals and quadratic irrationals, else 'root of ... in [lo, hi]'."""
    x = x.minimal()
    if x.is_rational:
        return str(x.as_rational())
    p = x.defining
    if p.degree != 2:
        return f"the root of {p} in [{x.lo}, {x.hi}]"
    c0, c1, c2 = p.coeffs
    k, r = _sqrt_parts(c1 * c1 - 4 * c2 * c0)
    num, den = -c1, 2 * c2
    g = gcd(gcd(num, k), den)
    num, k, den = num // g, k // g, den // g
    if den < 0:
        num, den = -num, -den
    sign = "+" if x > Fraction(num, den) else "-"
    rad = f"sqrt({r})" if k == 1 else f"{k}*sqrt({r})"
    head = f"{num} {sign} {rad}" if num else (rad if sign == "+" else f"-{rad}")
    return f"({head})/{den}" if den != 1 else head


def _linear(ct, cs, c0, x: str, y: str, z: str) -> str:
    """Render c0*z + ct*x + cs*y; z may be "1"."""
    parts = []
    for c, name in ((c0, z), (ct, x), (cs, y)):
        c = int(c)
        if c == 0:
            continue
        mag = abs(c)
        if name == "1":
            body = str(mag)
        else:
            body = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) or "0"


def _inequalities(c: Constraint) -> tuple[str, str]:
    """The complement of an avoidance region, in (x, y, z) and in (t, s)."""
    if c.relation == "<=":
        # region 1: the previous term would be nonpositive
        return (f"0 < {_linear(c.ct, c.cs, c.c0, 'x', 'y', 'z')}",
                f"0 < {_linear(c.ct, c.cs, c.c0, 't', 's', '1')}")
    # region 2: the previous term would not be below x
    ct = c.ct + 1
    return (f"{_linear(ct, c.cs, c.c0, 'x', 'y', 'z')} < x",
            f"{_linear(ct, c.cs, c.c0, 't', 's', '1')} < t")


def render_proof(d: Derivation) -> str:
    if d.status == INADMISSIBLE:
        return render_failure(d)
    rec, p = d.rec, d.polynomial
    a, b, _ = rec.coeffs
    head = "THEOREM." if d.bound.method_ok else "CONJECTURE."
    lines = [
        f"{head} The nonnegative, increasing solutions to the diophantine equation",
        "",
        f"    {p.render()} = 1",
        "",
        f"are generated by applying the recurrence {rec} to finitely many initial solutions.",
        "",
        "PROOF. Let P be the polynomial on the left-hand side.",
        "",
        "Note that it is invariant under the recurrence:",
        "",
        f"    P - P(shift) is {0 if d.invariance_verified else 'NOT 0'}",
        "",
        "The backwards shift formula to get the previous term from the triple (x, y, z) is",
        "",
        f"    {_linear(-b, -a, 1, 'x', 'y', 'z')}",
        "",
        "We show that this backwards shift gives a smaller increasing solution for",
        "sufficiently large z.",
        "",
        "Divide both sides by z^3 and substitute t = x/z, s = y/z. This gives",
        "",
        f"    {d.cubic.reorder(('s', 't')).render()} = 1/z^3",
        "",
        "where (t, s) is in the unit square.",
        "",
    ]
    if not d.bound.method_ok:
        lines += _method_failure(d) + ["", "The argument does not go through for this recurrence."]
        return "\n".join(lines) + "\n"
    lines += ["Let (x, y, z) be a generic solution. Then:", ""]
    bounds = []
    for r in d.bound.per_region:
        xyz, ts = _inequalities(r.region.constraints[0])
        bound = r.inverse_cube_root()
        bounds.append(bound)
        lines += [
            f"the inequality {xyz}, also written {ts}, holds for",
            "",
            f"    1/({exact_expression(r.minimum)})^(1/3) <= z",
            "",
            "or more explicitly for",
            "",
            f"    {bound.to_decimal(DIGITS)} <= z",
            "",
        ]
    top = bounds[d.bound.binding]
    lines += [
        f"We only need to look for solutions with z < {top.to_decimal(DIGITS)},",
        "and there are finitely many of these.",
    ]
    if d.generators is not None:
        gens = ", ".join(str(g) for g in d.generators.generators)
        lines += [
            "",
            f"Searching z < {d.bound.search_limit} leaves the initial solutions {gens}.",
        ]
    lines += ["", "Q.E.D."]
    return "\n".join(lines) + "\n"


def _method_failure(d: Derivation) -> list[str]:
    out = []
    for r in d.bound.per_region:
        if not r.positive:
            t, s = (w.to_decimal(6) for w in r.witness)
            out.append(
                f"The method fails: the minimum of the cubic on {r.region.name} "
                f"({', '.join(r.region.render())}) is {exact_expression(r.minimum)} <= 0, "
                f"attained at (t, s) ~ ({t}, {s})."
            )
    return out


def render_failure(d: Derivation) -> str:
    adm = d.admissibility
    lines = [
        f"The recurrence {d.rec} is not admissible, so no proof is attempted.",
        "",
    ]
    lines += [f"  - {r}" for r in adm.reasons]
    return "\n".join(lines) + "\n"
