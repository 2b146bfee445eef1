"""Real algebraic numbers: an integer polynomial plus a rational isolating interval.

Arithmetic is done with the characteristic polynomial of the multiplication map
in ``Q[x1, ..., xk] / (p1(x1), ..., pk(xk))``.  For ``g(x1, ..., xk)`` that
polynomial vanishes at ``g(r1, ..., rk)`` for every choice of roots ``ri`` of the
``pi``; it agrees with the iterated resultant up to a constant.  The right root is
then picked out by interval enclosure and a Sturm count, refining the operands
until exactly one candidate remains.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import prod
from typing import Mapping, Sequence, Union

from ..errors import DomainError, InvalidInputError, RefinementBudgetError
from .interval import Interval, enclose
from .polynomial import (
    UniPoly,
    charpoly,
    count_roots,
    isolate_intervals,
    snap_rational,
    squarefree,
    sturm_sequence,
)

Scalar = Union[int, Fraction]
Operand = Union["AlgebraicNumber", int, Fraction]

_SELECT_BUDGET = 400
_CMP_ROUNDS = 40


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """A real root of ``defining`` located by ``lo <= root <= hi``.

    Either ``lo == hi`` and the number is that rational (then ``defining`` is the
    primitive linear polynomial), or ``lo < hi``, neither endpoint is a root and
    ``defining`` changes sign across the interval with exactly one root inside.
    """

    defining: UniPoly
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        p = self.defining.normalized()
        if lo > hi:
            raise InvalidInputError(f"empty interval [{lo}, {hi}]")
        if lo == hi:
            if p(lo) != 0:
                raise InvalidInputError(f"{lo} is not a root of {p}")
            p = UniPoly((-lo.numerator, lo.denominator))
        elif p.sign_at(lo) * p.sign_at(hi) >= 0:
            raise InvalidInputError(f"{p} has no sign change on [{lo}, {hi}]")
        object.__setattr__(self, "defining", p)

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Scalar) -> "AlgebraicNumber":
        q = Fraction(q)
        return cls(UniPoly((-q.numerator, q.denominator)), q, q)

    @classmethod
    def from_interval(cls, p: UniPoly, lo: Scalar, hi: Scalar) -> "AlgebraicNumber":
        """Validated constructor: ``p`` must have exactly one real root in [lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        sq = squarefree(p)
        if lo == hi:
            return cls(sq, lo, hi)
        seq = sturm_sequence(sq)
        n = count_roots(seq, lo, hi) + (sq(lo) == 0)
        if n != 1:
            raise InvalidInputError(f"{p} has {n} roots in [{lo}, {hi}], expected 1")
        if sq(lo) == 0:
            return cls.from_rational(lo)
        if sq(hi) == 0:
            return cls.from_rational(hi)
        r = snap_rational(sq, lo, hi)
        return cls.from_rational(r) if r is not None else cls(sq, lo, hi)

    # -- basic accessors ------------------------------------------------------

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational number")
        return self.lo

    def box(self) -> Interval:
        return Interval(self.lo, self.hi)

    @cached_property
    def approx(self) -> float:
        if self.is_rational:
            return float(self.lo)
        x = self
        scale = max(abs(self.lo), abs(self.hi), Fraction(1, 2**40))
        x = x.refine(scale / 2**60)
        return float((x.lo + x.hi) / 2)

    def __float__(self) -> float:
        return self.approx

    def __repr__(self) -> str:
        if self.is_rational:
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber({self.defining}, [{self.lo}, {self.hi}] ~ {self.approx!r})"

    def to_decimal(self, digits: int = 10) -> str:
        """Correctly rounded decimal with ``digits`` significant digits."""
        x = self
        while True:
            lo, hi = _round_sig(x.lo, digits), _round_sig(x.hi, digits)
            if lo == hi:
                return lo
            x = x.bisected()

    # -- refinement -----------------------------------------------------------

    def bisected(self) -> "AlgebraicNumber":
        """Halve the isolating interval once."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        sm = self.defining.sign_at(mid)
        if sm == 0:
            return AlgebraicNumber.from_rational(mid)
        if sm == self.defining.sign_at(self.lo):
            return AlgebraicNumber(self.defining, mid, self.hi)
        return AlgebraicNumber(self.defining, self.lo, mid)

    def refine(self, eps: Scalar) -> "AlgebraicNumber":
        eps = Fraction(eps)
        if eps <= 0:
            raise InvalidInputError("refinement width must be positive")
        # stop at eps/2 so the result is comfortably narrower than asked
        x = self
        while not x.is_rational and x.hi - x.lo >= eps / 2:
            x = x.bisected()
        return x

    def minimal(self) -> "AlgebraicNumber":
        """Same number with its defining polynomial cut down to the irreducible factor."""
        if self.is_rational:
            return self
        factors = _factor(self.defining)
        if len(factors) == 1:
            return self
        for f in factors:
            if count_roots(sturm_sequence(f), self.lo, self.hi) == 1:
                return AlgebraicNumber(f, self.lo, self.hi)
        raise AssertionError("no factor owns the isolated root")

    # -- order ----------------------------------------------------------------

    def compare_rational(self, q: Scalar) -> int:
        """-1, 0 or 1 as self <, ==, > q."""
        q = Fraction(q)
        if self.is_rational:
            return (self.lo > q) - (self.lo < q)
        if q < self.lo:
            return 1
        if q > self.hi:
            return -1
        sq = self.defining.sign_at(q)
        if sq == 0:
            return 0
        return 1 if sq == self.defining.sign_at(self.lo) else -1

    def sign(self) -> int:
        if self.is_rational:
            return (self.lo > 0) - (self.lo < 0)
        x = self
        while True:
            if x.lo >= 0:
                return 1
            if x.hi <= 0:
                return -1
            x = x.bisected()

    def _cmp(self, other: Operand) -> int:
        if not isinstance(other, AlgebraicNumber):
            return self.compare_rational(other)
        if other.is_rational:
            return self.compare_rational(other.lo)
        if self.is_rational:
            return -other.compare_rational(self.lo)
        x, y = self, other
        for _ in range(_CMP_ROUNDS):
            if x.hi < y.lo:
                return -1
            if y.hi < x.lo:
                return 1
            x, y = x.bisected(), y.bisected()
        return (x - y).sign()

    def __lt__(self, other: Operand) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Operand) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Operand) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Operand) -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.defining.reflect(), -self.hi, -self.lo)

    def __add__(self, other: Operand) -> "AlgebraicNumber":
        return alg_eval({(1, 0): 1, (0, 1): 1}, [self, other])

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "AlgebraicNumber":
        return alg_eval({(1, 0): 1, (0, 1): -1}, [self, other])

    def __rsub__(self, other: Operand) -> "AlgebraicNumber":
        return alg_eval({(1, 0): -1, (0, 1): 1}, [self, other])

    def __mul__(self, other: Operand) -> "AlgebraicNumber":
        return alg_eval({(1, 1): 1}, [self, other])

    __rmul__ = __mul__

    def inv(self) -> "AlgebraicNumber":
        if self.is_rational:
            if self.lo == 0:
                raise DomainError("inversion of zero")
            return AlgebraicNumber.from_rational(1 / self.lo)
        x = self
        while x.lo <= 0 <= x.hi and not x.is_rational:
            x = x.bisected()
        if x.is_rational:
            return x.inv()
        return AlgebraicNumber(x.defining.reverse(), 1 / x.hi, 1 / x.lo)

    def __truediv__(self, other: Operand) -> "AlgebraicNumber":
        if isinstance(other, AlgebraicNumber):
            return self * other.inv()
        if other == 0:
            raise DomainError("division by zero")
        return alg_eval({(1,): Fraction(1) / Fraction(other)}, [self])

    def __rtruediv__(self, other: Operand) -> "AlgebraicNumber":
        return self.inv() * other

    def __pow__(self, k: int) -> "AlgebraicNumber":
        if k < 0:
            return self.inv() ** (-k)
        return alg_eval({(k,): 1}, [self])

    def root(self, k: int) -> "AlgebraicNumber":
        """The positive real k-th root of a positive number."""
        if k < 1:
            raise InvalidInputError("root index must be positive")
        if self.sign() <= 0:
            raise DomainError("root of a non-positive number")
        if k == 1:
            return self
        x = self.minimal()
        if x.is_rational:
            e = _exact_root(x.lo, k)
            if e is not None:
                return AlgebraicNumber.from_rational(e)
            return AlgebraicNumber.from_interval(
                UniPoly((-x.lo.numerator,) + (0,) * (k - 1) + (x.lo.denominator,)),
                *_root_bounds(x.lo, x.lo, k, 8),
            )
        e = squarefree(x.defining.compose_power(k))
        seq = sturm_sequence(e)
        bits = 8
        for _ in range(_SELECT_BUDGET):
            while x.lo <= 0:
                x = x.bisected()
            a, b = _root_bounds(x.lo, x.hi, k, bits)
            n = count_roots(seq, a, b) + (e(a) == 0)
            if n == 1:
                return AlgebraicNumber.from_interval(e, a, b).minimal()
            x = x.bisected()
            bits += 2
        raise RefinementBudgetError("could not isolate the k-th root")


# ----------------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------------

def _round_sig(q: Fraction, digits: int) -> str:
    if q == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits + 30
        d = Decimal(q.numerator) / Decimal(q.denominator)
        exp = d.adjusted() - digits + 1
        r = d.quantize(Decimal(1).scaleb(exp), rounding=ROUND_HALF_EVEN)
    return format(r, "f") if exp <= 0 else str(int(r))


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _exact_root(q: Fraction, k: int) -> Fraction | None:
    a, b = _iroot(q.numerator, k), _iroot(q.denominator, k)
    if a ** k == q.numerator and b ** k == q.denominator:
        return Fraction(a, b)
    return None


def _root_bounds(lo: Fraction, hi: Fraction, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic a <= lo**(1/k) and b >= hi**(1/k)."""
    s = 1 << bits
    a = _iroot(lo.numerator * s ** k // lo.denominator, k)
    b = _iroot(-(-hi.numerator * s ** k // hi.denominator), k) + 1
    return Fraction(a, s), Fraction(b, s)


@lru_cache(maxsize=4096)
def _factor_coeffs(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    _, facs = poly.factor_list()
    return tuple(tuple(int(c) for c in reversed(f.all_coeffs())) for f, _ in facs)


def _factor(p: UniPoly) -> list[UniPoly]:
    """Irreducible factors over Z (without multiplicity)."""
    if p.degree <= 1:
        return [p]
    return [UniPoly(c).normalized() for c in _factor_coeffs(p.coeffs)]


def _reduction_table(p: UniPoly, top: int) -> list[list[Fraction]]:
    """Coordinates of X**e modulo p in the basis 1, X, ..., X**(n-1), e <= top."""
    n = p.degree
    monic = [Fraction(c, p.lc) for c in p.coeffs[:-1]]
    rows = []
    for e in range(top + 1):
        if e < n:
            v = [Fraction(0)] * n
            v[e] = Fraction(1)
        else:
            prev = rows[-1]
            carry = prev[-1]
            v = [Fraction(0)] + prev[:-1]
            if carry:
                for i in range(n):
                    v[i] -= carry * monic[i]
        rows.append(v)
    return rows


def annihilator(terms: Mapping[tuple[int, ...], Fraction], defs: Sequence[UniPoly]) -> UniPoly:
    """Square-free polynomial vanishing at g(r1, ..., rk) for all roots ri of defs[i]."""
    k = len(defs)
    ns = [p.degree for p in defs]
    tops = [max(e[i] for e in terms) + ns[i] - 1 for i in range(k)]
    tables = [_reduction_table(p, t) for p, t in zip(defs, tops)]
    basis = list(product(*(range(n) for n in ns)))
    index = {b: j for j, b in enumerate(basis)}
    size = len(basis)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for j, b in enumerate(basis):
        col: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for e, c in terms.items():
            partial = {(): Fraction(c)}
            for i in range(k):
                row = tables[i][e[i] + b[i]]
                partial = {
                    key + (d,): v * r
                    for key, v in partial.items()
                    for d, r in enumerate(row)
                    if r
                }
            for key, v in partial.items():
                col[key] += v
        for key, v in col.items():
            if v:
                mat[index[key]][j] = v
    return squarefree(UniPoly.from_rationals(charpoly(mat)))


def alg_eval(terms: Mapping[tuple[int, ...], Scalar], args: Sequence[Operand]) -> AlgebraicNumber:
    """Exact value of ``sum(c * prod(args[i]**e[i]))`` as an algebraic number."""
    args = [a if isinstance(a, AlgebraicNumber) else AlgebraicNumber.from_rational(a) for a in args]
    for e in terms:
        if len(e) != len(args):
            raise InvalidInputError("exponent tuple length does not match argument count")
    alg = [i for i, a in enumerate(args) if not a.is_rational]
    reduced: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for e, c in terms.items():
        coef = Fraction(c) * prod(
            (args[i].lo ** e[i] for i in range(len(args)) if args[i].is_rational),
            start=Fraction(1),
        )
        reduced[tuple(e[i] for i in alg)] += coef
    reduced = {e: c for e, c in reduced.items() if c}
    used = [j for j in range(len(alg)) if any(e[j] for e in reduced)]
    if not used:
        return AlgebraicNumber.from_rational(sum(reduced.values(), Fraction(0)))
    poly: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for e, c in reduced.items():
        poly[tuple(e[j] for j in used)] += c
    xs = [args[alg[j]].minimal() for j in used]
    if len(xs) == 1 and set(poly) <= {(0,), (1,)}:
        return _affine(poly.get((1,), Fraction(0)), poly.get((0,), Fraction(0)), xs[0])
    target = annihilator(poly, [x.defining for x in xs])
    return _select_root(target, poly, xs)


def _affine(a: Fraction, b: Fraction, x: AlgebraicNumber) -> AlgebraicNumber:
    """a*x + b without building an algebra."""
    p = x.defining
    n = p.degree
    # q(Y) = a**n * p((Y - b) / a), scaled to integers
    shifted = [Fraction(0)] * (n + 1)
    lin = [-b / a, 1 / a]
    power = [Fraction(1)]
    for i, c in enumerate(p.coeffs):
        if c:
            for j, v in enumerate(power):
                shifted[j] += c * v
        nxt = [Fraction(0)] * (len(power) + 1)
        for j, v in enumerate(power):
            nxt[j] += v * lin[0]
            nxt[j + 1] += v * lin[1]
        power = nxt
    q = UniPoly.from_rationals(shifted)
    lo, hi = a * x.lo + b, a * x.hi + b
    return AlgebraicNumber(q, min(lo, hi), max(lo, hi))


def _select_root(
    target: UniPoly,
    terms: Mapping[tuple[int, ...], Fraction],
    xs: Sequence[AlgebraicNumber],
) -> AlgebraicNumber:
    seq = sturm_sequence(target)
    for _ in range(_SELECT_BUDGET):
        enc = enclose(terms, [x.box() for x in xs])
        lo, hi = enc.lo, enc.hi
        n = count_roots(seq, lo, hi) + (target(lo) == 0)
        if n == 0:
            raise AssertionError("enclosure lost the root; interval arithmetic bug")
        if n == 1:
            if target(lo) == 0:
                return AlgebraicNumber.from_rational(lo)
            if target(hi) == 0:
                return AlgebraicNumber.from_rational(hi)
            r = snap_rational(target, lo, hi)
            if r is not None:
                return AlgebraicNumber.from_rational(r)
            return AlgebraicNumber(target, lo, hi).minimal()
        xs = [x.bisected() for x in xs]
    raise RefinementBudgetError("could not separate the candidate values")


# ----------------------------------------------------------------------------
# functional surface
# ----------------------------------------------------------------------------

def isolate_real_roots(p: UniPoly) -> list[AlgebraicNumber]:
    """All distinct real roots of ``p`` in increasing order."""
    sq = squarefree(p) if not p.is_zero() else p
    out = []
    for lo, hi in isolate_intervals(p):
        if lo == hi:
            out.append(AlgebraicNumber.from_rational(lo))
        else:
            out.append(AlgebraicNumber(sq, lo, hi))
    return out


def refine(x: AlgebraicNumber, eps: Scalar) -> AlgebraicNumber:
    return x.refine(eps)


def alg_compare(x: AlgebraicNumber, q: Operand) -> int:
    """-1, 0, 1 for less, equal, greater."""
    return x._cmp(q)


def alg_arith(x: AlgebraicNumber, y: Operand | None, op: str) -> AlgebraicNumber:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    raise InvalidInputError(f"unknown operation {op!r}")


def sqrt(q: Scalar) -> AlgebraicNumber:
    return AlgebraicNumber.from_rational(q).root(2)
