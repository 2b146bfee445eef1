"""Sparse multivariate polynomials over Z and small symbolic matrices.

Terms are kept in a dict from exponent tuples to nonzero ints.  The canonical
order (used for rendering and serialization) is graded lexicographic,
descending, with the variable order given by ``vars``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInputError


def _check_int(c) -> int:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise InvalidInputError(f"integer coefficients only, got {c!r}")


def _order_key(e: tuple[int, ...]):
    return (-sum(e), tuple(-x for x in e))


class MultiPoly:
    __slots__ = ("vars", "_terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n or any(x < 0 for x in e):
                raise InvalidInputError(f"bad exponent tuple {e} for variables {self.vars}")
            c = _check_int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise InvalidInputError(f"unknown variable {name!r}")
        return cls(vars, {tuple(int(v == name) for v in vars): 1})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(vars, v) for v in vars)

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in canonical order."""
        for e in sorted(self._terms, key=_order_key):
            yield e, self._terms[e]

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise InvalidInputError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, _check_int(other))

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        t: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise InvalidInputError("negative powers would leave the polynomial ring")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        raise InvalidInputError("division would introduce denominators")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self._terms.items())))

    # -- calculus and substitution --------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        t = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return MultiPoly(self.vars, t)

    def __call__(self, *point):
        return poly_eval(self, point)

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        return substitute(self, bindings)

    def reorder(self, vars: Sequence[str]) -> "MultiPoly":
        """Same polynomial over a permuted (or extended) variable list."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        for v in missing:
            if self.degree(v) > 0:
                raise InvalidInputError(f"variable {v!r} is used")
        pos = [self.vars.index(v) if v in self.vars else None for v in vars]
        t = {tuple(e[p] if p is not None else 0 for p in pos): c for e, c in self._terms.items()}
        return MultiPoly(vars, t)

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients as a polynomial in ``var`` (constant first) over the same variables."""
        i = self.vars.index(var)
        out: list[dict] = [{} for _ in range(self.degree(var) + 1)]
        for e, c in self._terms.items():
            ne = list(e)
            ne[i] = 0
            out[e[i]][tuple(ne)] = c
        return [MultiPoly(self.vars, t) for t in out]

    def univariate_coeffs(self) -> list[int]:
        """Dense coefficient list when at most one variable actually occurs."""
        live = [i for i in range(len(self.vars)) if any(e[i] for e in self._terms)]
        if len(live) > 1:
            raise InvalidInputError("polynomial is not univariate")
        if not self._terms:
            return []
        i = live[0] if live else 0
        out = [0] * (max(e[i] for e in self._terms) + 1)
        for e, c in self._terms.items():
            out[e[i]] = c
        return out

    def rational_terms(self) -> dict[tuple[int, ...], Fraction]:
        return {e: Fraction(c) for e, c in self._terms.items()}

    # -- text -----------------------------------------------------------------

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {render(self)!r})"


def poly_eval(p: MultiPoly, point: Sequence) -> int | Fraction:
    """Exact value of ``p`` at ``point`` (ints give ints, Fractions give Fractions)."""
    if len(point) != len(p.vars):
        raise InvalidInputError(f"expected {len(p.vars)} coordinates, got {len(point)}")
    total = 0
    for e, c in p._terms.items():
        term = c
        for x, k in zip(point, e):
            if k:
                term *= x ** k
        total += term
    return total


def substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly]) -> MultiPoly:
    """Compose ``p`` with the given bindings; every variable of ``p`` must be bound
    unless it does not occur."""
    targets = {b.vars for b in bindings.values()}
    if len(targets) != 1:
        raise InvalidInputError("bindings must share one variable list")
    (tvars,) = targets
    for v in p.vars:
        if v not in bindings and p.degree(v) > 0:
            raise InvalidInputError(f"variable {v!r} is unbound")
    cache: dict[tuple[str, int], MultiPoly] = {}

    def power(v: str, k: int) -> MultiPoly:
        key = (v, k)
        if key not in cache:
            cache[key] = bindings[v] ** k
        return cache[key]

    out = MultiPoly(tvars)
    for e, c in p._terms.items():
        term = MultiPoly.const(tvars, c)
        for v, k in zip(p.vars, e):
            if k:
                term = term * power(v, k)
        out = out + term
    return out


def _mono(vars: Sequence[str], e: Sequence[int]) -> str:
    return "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(vars, e) if k)


def render(p: MultiPoly) -> str:
    """Canonical text, e.g. ``x^3 + 2*x^2*y - z^3``."""
    parts = []
    for e, c in p.items():
        mono = _mono(p.vars, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse(text: str, vars: Sequence[str]) -> MultiPoly:
    """Inverse of :func:`render` for the given variable list."""
    vars = tuple(vars)
    index = {v: i for i, v in enumerate(vars)}
    s = text.strip()
    if s == "0":
        return MultiPoly(vars)
    terms: dict[tuple[int, ...], int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (m.group(1) is None and not first):
            raise InvalidInputError(f"cannot parse polynomial near {s[pos:]!r}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        coeff, exps = 1, [0] * len(vars)
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index or (power and not power.isdigit()):
                raise InvalidInputError(f"bad factor {factor!r}")
            exps[index[name]] += int(power) if power else 1
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + sign * coeff
        pos = m.end()
    return MultiPoly(vars, terms)


# ----------------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[MultiPoly, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or len(self.entries) != self.rows * self.cols:
            raise InvalidInputError("entry count does not match shape")
        if len({e.vars for e in self.entries}) != 1:
            raise InvalidInputError("entries must share one variable list")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[MultiPoly]]) -> "PolyMatrix":
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[MultiPoly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[MultiPoly]]:
        return [self.row(i) for i in range(self.rows)]

    def swap_rows(self, i: int, j: int) -> "PolyMatrix":
        r = self.to_rows()
        r[i], r[j] = r[j], r[i]
        return PolyMatrix.from_rows(r)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.entries[0].vars


def determinant(m: PolyMatrix) -> MultiPoly:
    """Laplace expansion along rows, memoized on the remaining column set."""
    if m.rows != m.cols:
        raise InvalidInputError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    vars = m.vars

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> MultiPoly:
        if row == n:
            return MultiPoly.const(vars, 1)
        out = MultiPoly(vars)
        for k, j in enumerate(sorted(cols)):
            a = m[row, j]
            if a.is_zero():
                continue
            term = a * minor(row + 1, cols - {j})
            out = out - term if k % 2 else out + term
        return out

    return minor(0, frozenset(range(n)))


def sylvester(p: Sequence[MultiPoly], q: Sequence[MultiPoly]) -> PolyMatrix:
    """Sylvester matrix of two polynomials given by coefficient lists (constant first)."""
    m, n = len(p) - 1, len(q) - 1
    if m < 0 or n < 0:
        raise InvalidInputError("empty coefficient list")
    vars = p[0].vars
    zero = MultiPoly(vars)
    size = m + n
    rows = []
    for i in range(n):
        r = [zero] * size
        for k, c in enumerate(reversed(p)):
            r[i + k] = c
        rows.append(r)
    for i in range(m):
        r = [zero] * size
        for k, c in enumerate(reversed(q)):
            r[i + k] = c
        rows.append(r)
    return PolyMatrix.from_rows(rows)


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Res_var(p, q) via the Sylvester determinant (small degrees only)."""
    pc, qc = p.coefficients_in(var), q.coefficients_in(var)
    if not pc or not qc:
        return MultiPoly(p.vars)
    if len(pc) == 1 and len(qc) == 1:
        return MultiPoly.const(p.vars, 1)
    return determinant(sylvester(pc, qc))


def variables(n: int) -> tuple[str, ...]:
    """Default variable names: x, y, z, w, v, u, then x1.. for larger n."""
    names = ("x", "y", "z", "w", "v", "u")
    if n <= len(names):
        return names[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def as_multipoly(vars: Sequence[str], rows: Iterable[tuple[Sequence[int], int]]) -> MultiPoly:
    return MultiPoly(vars, {tuple(e): c for e, c in rows})
