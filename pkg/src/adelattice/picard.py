"""Arithmetic in the Picard lattice Z^{1,n} of a plane blown up at n points.

A class is an integer vector (a; a_1..a_n) meaning a*h + sum_i a_i*l_i,
where h is the line class and l_i the exceptional classes.  The pairing is
diagonal: h.h = 1, l_i.l_i = -1, mixed products 0, so the signature is
(1, n).  All coefficients are Python ints and never overflow.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional


class DivisorClass:
    """Immutable lattice vector (a; a_1..a_n) in Z^{1,n}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if len(cs) < 2:
            raise ValueError("need a degree and at least one exceptional coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def __reduce__(self):
        return (DivisorClass, (self.coeffs,))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Coefficient of h."""
        return self.coeffs[0]

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("classes live in different lattices")
        return DivisorClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("classes live in different lattices")
        return DivisorClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-a for a in self.coeffs)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * a for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, DivisorClass) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "DivisorClass") -> bool:
        return self.coeffs < other.coeffs

    def __le__(self, other: "DivisorClass") -> bool:
        return self.coeffs <= other.coeffs

    def __repr__(self) -> str:
        return f"DivisorClass({list(self.coeffs)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json(self) -> list:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "DivisorClass":
        return cls(data)


class SurfaceLattice:
    """Z^{1,n} with its basis classes h, l_1..l_n."""

    def __init__(self, n: int):
        if not 1 <= n <= 9:
            raise ValueError(f"number of blown-up points must be 1..9, got {n}")
        self.n = n

    @property
    def h(self) -> DivisorClass:
        return DivisorClass((1,) + (0,) * self.n)

    def l(self, i: int) -> DivisorClass:
        if not 1 <= i <= self.n:
            raise ValueError(f"exceptional index out of range: {i}")
        return DivisorClass(tuple(int(j == i) for j in range(self.n + 1)))

    @property
    def basis(self) -> list[DivisorClass]:
        return [self.h] + [self.l(i) for i in range(1, self.n + 1)]

    @property
    def canonical(self) -> DivisorClass:
        return canonical_class(self)

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * (self.n + 1))

    def __repr__(self) -> str:
        return f"SurfaceLattice(n={self.n})"


def intersect(d: DivisorClass, e: DivisorClass) -> int:
    """Intersection pairing a*a' - sum a_i*a_i'; symmetric and bilinear."""
    if len(d.coeffs) != len(e.coeffs):
        raise ValueError("classes live in different lattices")
    total = d.coeffs[0] * e.coeffs[0]
    for a, b in zip(d.coeffs[1:], e.coeffs[1:]):
        total -= a * b
    return total


def canonical_class(lattice) -> DivisorClass:
    """K = -3h + l_1 + ... + l_n."""
    n = lattice.n if isinstance(lattice, SurfaceLattice) else int(lattice)
    if not 1 <= n <= 9:
        raise ValueError(f"number of blown-up points must be 1..9, got {n}")
    return DivisorClass((-3,) + (1,) * n)


def class_kind(d: DivisorClass) -> Optional[int]:
    """m such that D.D = -m and D.K = m - 2, or None if no such m exists."""
    k = canonical_class(d.n)
    m = -intersect(d, d)
    if intersect(d, k) == m - 2:
        return m
    return None


def euler_characteristic(d: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic 1 + (D.D - D.K)/2."""
    k = canonical_class(d.n)
    chi = 1 + Fraction(intersect(d, d) - intersect(d, k), 2)
    if chi.denominator != 1:
        raise ValueError(f"non-integral Euler characteristic {chi} (malformed class)")
    return int(chi)
