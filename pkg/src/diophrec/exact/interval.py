"""Closed rational intervals, just enough to enclose polynomial values on boxes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, q) -> "Interval":
        q = Fraction(q)
        return cls(q, q)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: Fraction) -> "Interval":
        a, b = self.lo * c, self.hi * c
        return Interval(a, b) if a <= b else Interval(b, a)

    def __mul__(self, other: "Interval") -> "Interval":
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(p), max(p))

    def __pow__(self, k: int) -> "Interval":
        if k == 0:
            return Interval.point(1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2 == 0 and self.lo <= 0 <= self.hi:
            return Interval(Fraction(0), max(a, b))
        return Interval(a, b) if a <= b else Interval(b, a)

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def enclose(terms: Mapping[tuple[int, ...], Fraction], box: Sequence[Interval]) -> Interval:
    """Naive interval extension of ``sum(c * prod(x_i**e_i))`` over ``box``."""
    acc = Interval.point(0)
    for exps, c in terms.items():
        mono = Interval.point(c)
        for iv, e in zip(box, exps):
            if e:
                mono = mono * (iv ** e)
        acc = acc + mono
    return acc
