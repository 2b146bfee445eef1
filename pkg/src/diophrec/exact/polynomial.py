"""Dense univariate integer polynomials, Sturm sequences and real root isolation.

Coefficients are stored constant term first.  Arithmetic that needs a field
(remainders, gcds) runs on lists of ``Fraction`` and is converted back to a
primitive integer polynomial by a *positive* scalar, so signs are preserved
wherever they matter (Sturm sequences).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from ..errors import InvalidInputError

Number = int | Fraction


def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class UniPoly:
    """Integer polynomial ``sum(coeffs[i] * X**i)``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = []
        for a in self.coeffs:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise InvalidInputError(f"non-integer coefficient {a}")
                a = a.numerator
            c.append(int(a))
        object.__setattr__(self, "coeffs", tuple(_strip(c)))

    @classmethod
    def from_rationals(cls, coeffs: Iterable[Number]) -> "UniPoly":
        """Clear denominators by a positive factor and take the primitive part."""
        fr = [Fraction(a) for a in coeffs]
        den = reduce(lcm, (a.denominator for a in fr), 1)
        return cls(tuple(int(a * den) for a in fr)).primitive()

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def sign_at(self, x: Number) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(a * other for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * a for i, a in enumerate(self.coeffs) if i))

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "UniPoly":
        """Divide by the (positive) content; the sign is kept."""
        g = self.content()
        if g <= 1:
            return self
        return UniPoly(tuple(a // g for a in self.coeffs))

    def normalized(self) -> "UniPoly":
        """Primitive part with positive leading coefficient."""
        p = self.primitive()
        return -p if p.lc < 0 else p

    def reflect(self) -> "UniPoly":
        """Polynomial whose roots are the negatives of ours."""
        return UniPoly(tuple(a if i % 2 == 0 else -a for i, a in enumerate(self.coeffs)))

    def reverse(self) -> "UniPoly":
        """Polynomial whose nonzero roots are the reciprocals of ours."""
        c = list(self.coeffs)
        while c and c[0] == 0:
            c.pop(0)
        return UniPoly(tuple(reversed(c)))

    def compose_power(self, k: int) -> "UniPoly":
        """p(X**k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[k * i] = a
        return UniPoly(tuple(out))

    def taylor_shift(self, q: Number) -> list[Fraction]:
        """Coefficients of p(X + q) as fractions."""
        out = [Fraction(0)] * len(self.coeffs)
        for a in reversed(self.coeffs):
            # out = out * (X + q) + a
            nxt = [Fraction(0)] * len(out)
            for i, c in enumerate(out):
                if c:
                    nxt[i] += c * q
                    if i + 1 < len(nxt):
                        nxt[i + 1] += c
            nxt[0] += a
            out = nxt
        return out

    def __str__(self) -> str:
        return render_univariate(self.coeffs, "X")

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


def render_univariate(coeffs: Sequence[int], var: str = "X") -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        a = coeffs[i]
        if not a:
            continue
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if a > 0 else "-" + body)
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


# ----------------------------------------------------------------------------
# Field arithmetic on fraction lists
# ----------------------------------------------------------------------------

def _q(p: UniPoly | Sequence[Number]) -> list[Fraction]:
    c = p.coeffs if isinstance(p, UniPoly) else p
    return _strip([Fraction(a) for a in c])


def qdivmod(a: Sequence[Number], b: Sequence[Number]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _q(a), _q(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = a[:]
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] * inv
        quo[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    return _strip(quo), _strip(rem[: len(b) - 1])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    a, b = _q(p), _q(q)
    while b:
        a, b = b, qdivmod(a, b)[1]
    if not a:
        return UniPoly()
    return UniPoly.from_rationals(a).normalized()


def exact_quotient(p: UniPoly, q: UniPoly) -> UniPoly:
    quo, rem = qdivmod(p.coeffs, q.coeffs)
    if rem:
        raise ArithmeticError("division is not exact")
    return UniPoly.from_rationals(quo)


def squarefree(p: UniPoly) -> UniPoly:
    """Square-free part, primitive with positive leading coefficient."""
    if p.is_zero():
        raise InvalidInputError("zero polynomial")
    if p.degree == 0:
        return UniPoly((1,))
    g = poly_gcd(p, p.derivative())
    return exact_quotient(p, g).normalized()


# ----------------------------------------------------------------------------
# Sturm sequences
# ----------------------------------------------------------------------------

def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        rem = qdivmod(seq[-2].coeffs, seq[-1].coeffs)[1]
        if not rem:
            break
        seq.append(-UniPoly.from_rationals(rem))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(signs: Iterable[int]) -> int:
    prev, n = 0, 0
    for s in signs:
        if s:
            if prev and s != prev:
                n += 1
            prev = s
    return n


def _variations_at(seq: Sequence[UniPoly], x: Number | None, side: int = 1) -> int:
    """Sign variations at ``x``; ``x=None`` means +inf (side=1) or -inf (side=-1)."""
    if x is None:
        return _variations(
            (1 if p.lc > 0 else -1) * (side ** p.degree) for p in seq
        )
    return _variations(p.sign_at(x) for p in seq)


def count_roots(seq: Sequence[UniPoly], lo: Number | None, hi: Number | None) -> int:
    """Distinct real roots in the half-open interval (lo, hi]; ``None`` is infinite."""
    return _variations_at(seq, lo, -1) - _variations_at(seq, hi, 1)


def count_roots_closed(p: UniPoly, lo: Number, hi: Number, seq=None) -> int:
    seq = seq if seq is not None else sturm_sequence(p)
    return count_roots(seq, lo, hi) + (1 if p(lo) == 0 else 0)


def root_bound(p: UniPoly) -> int:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lc = abs(p.lc)
    m = max((abs(a) for a in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc)


def snap_rational(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction | None:
    """Return the root in (lo, hi) if it is rational, else None.

    ``p`` must be square-free with exactly one root in the open interval and a
    sign change across it.  A rational root ``u/v`` of an integer polynomial has
    ``v | lc``, so ``lc * root`` is an integer; once the interval is narrower
    than ``1/|lc|`` at most one integer candidate remains to test.
    """
    lc = abs(p.lc)
    slo = p.sign_at(lo)
    while (hi - lo) * lc >= 1:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    cand = Fraction(-((-lo.numerator * lc) // lo.denominator), lc)  # ceil(lc*lo)/lc
    if lo < cand < hi and p(cand) == 0:
        return cand
    return None


def isolate_intervals(p: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the distinct real roots, increasing.

    Rational roots come back as point intervals ``(r, r)``; irrational roots as
    open intervals whose rational endpoints are not roots and where ``p`` changes
    sign.
    """
    if p.is_zero():
        raise InvalidInputError("cannot isolate the roots of the zero polynomial")
    sq = squarefree(p)
    if sq.degree == 0:
        return []
    seq = sturm_sequence(sq)
    b = Fraction(root_bound(sq))
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(-b, b, count_roots(seq, -b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            r = snap_rational(sq, lo, hi)
            found.append((r, r) if r is not None else (lo, hi))
            continue
        mid = (lo + hi) / 2
        if sq(mid) == 0:
            delta = (hi - lo) / 4
            while (
                sq(mid - delta) == 0
                or sq(mid + delta) == 0
                or count_roots(seq, mid - delta, mid + delta) != 1
            ):
                delta /= 2
            found.append((mid, mid))
            stack.append((lo, mid - delta, count_roots(seq, lo, mid - delta)))
            stack.append((mid + delta, hi, count_roots(seq, mid + delta, hi)))
        else:
            stack.append((lo, mid, count_roots(seq, lo, mid)))
            stack.append((mid, hi, count_roots(seq, mid, hi)))
    found.sort()
    return found


def real_root_count(p: UniPoly) -> int:
    """Number of distinct real roots, from the Sturm sequence over (-inf, inf)."""
    sq = squarefree(p)
    return count_roots(sturm_sequence(sq), None, None)


# ----------------------------------------------------------------------------
# Linear algebra over Q used by the algebraic-number kernel
# ----------------------------------------------------------------------------

def charpoly(m: Sequence[Sequence[Number]]) -> list[Fraction]:
    """Characteristic polynomial det(X*I - M), constant term first.

    Reduces to upper Hessenberg form by similarity transforms and runs the
    standard determinant recurrence on the result; O(n^3) field operations.
    """
    n = len(m)
    h = [[Fraction(v) for v in row] for row in m]
    for col in range(n - 2):
        piv = next((i for i in range(col + 1, n) if h[i][col] != 0), None)
        if piv is None:
            continue
        t = h[piv][col]
        r = col + 1
        if piv != r:
            h[piv], h[r] = h[r], h[piv]
            for row in h:
                row[piv], row[r] = row[r], row[piv]
        for i in range(r + 1, n):
            if h[i][col] != 0:
                u = h[i][col] / t
                hi, hr = h[i], h[r]
                for j in range(n):
                    hi[j] -= u * hr[j]
                for row in h:
                    row[r] += u * row[i]
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(n):
        prev = polys[-1]
        nxt = [Fraction(0)] + prev  # X * prev
        for i, c in enumerate(prev):
            nxt[i] -= h[k][k] * c
        t = Fraction(1)
        for i in range(1, k + 1):
            t *= h[k - i + 1][k - i]
            if t == 0:
                break
            c = t * h[k - i][k]
            if c:
                for j, v in enumerate(polys[k - i]):
                    nxt[j] -= c * v
        polys.append(nxt)
    return polys[-1]
