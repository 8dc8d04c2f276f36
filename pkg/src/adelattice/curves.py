"""Negative-class enumeration, Weyl reflections and orbits, and the unique
(-1)-class perpendicular to an E_8 base in Z^{1,9}.

Effectivity is never decided here: "curve" means an effective class, which
depends on the blown-up points, so these routines enumerate and verify
classes only.  For m >= 3 on the nine-point lattice, the enumeration is
restricted to the coefficient bounds that an effective class must satisfy
(0 <= a <= 3, each a_i in [-1, 2] writing D = a*h - sum a_i l_i, some
a_j = 1, and for a = 0 additionally every |a_i| <= 1 with exactly one
a_i = -1); the degree-zero refinement is what makes m >= 10 come out empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import solve_rational
from .picard import DivisorClass, SurfaceLattice, canonical_class, class_kind, intersect
from .roots import classify_diagram


@dataclass
class NegativeClassQuery:
    m: int
    n: int = 9
    cap: Optional[int] = None


@dataclass
class NegativeClassResult:
    m: int
    n: int
    cap: Optional[int]
    bounds_checked: bool
    truncated: bool
    classes: list

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "cap": self.cap,
            "count": self.count,
            "bounds_checked": self.bounds_checked,
            "truncated": self.truncated,
            "classes": [d.to_json() for d in self.classes],
        }


def _exceptional_vectors(length, target_sum, target_sq, lo, hi):
    """Integer vectors with entries in [lo, hi], given sum and sum of squares."""
    out = []
    vec = [0] * length

    def rec(pos, rem_sum, rem_sq):
        slots = length - pos
        if pos == length:
            if rem_sum == 0 and rem_sq == 0:
                out.append(tuple(vec))
            return
        if rem_sum > hi * slots or rem_sum < lo * slots:
            return
        if rem_sq < 0 or rem_sq > max(lo * lo, hi * hi) * slots:
            return
        for c in range(lo, hi + 1):
            vec[pos] = c
            rec(pos + 1, rem_sum - c, rem_sq - c * c)
        vec[pos] = 0

    rec(0, target_sum, target_sq)
    return out


def enumerate_negative_classes(query: NegativeClassQuery) -> NegativeClassResult:
    """All D with D.D = -m and D.K = m-2 within the active bounds.

    Writing D = a*h - sum a_i l_i, the defining equations read
    sum a_i = 3a + m - 2 and sum a_i^2 = a^2 + m.  On the nine-point lattice
    the m <= 2 sets are infinite, so a degree cap |a| <= cap is mandatory
    there; for m >= 3 the effectivity bounds above apply instead.
    """
    m, n, cap = query.m, query.n, query.cap
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 1 <= n <= 9:
        raise ValueError("lattice size must be 1..9")
    bounded = n == 9 and m >= 3
    if n == 9 and m <= 2 and cap is None:
        raise ValueError(f"(-{m})-classes on the nine-point lattice are infinite: a degree cap is required")

    classes = []
    if bounded:
        degrees = range(0, 4)
    else:
        # Cauchy-Schwarz feasibility: (3a + m - 2)^2 <= n (a^2 + m)
        window = 3 * (abs(m) + 10)
        degrees = [
            a
            for a in range(-window, window + 1)
            if (3 * a + m - 2) ** 2 <= n * (a * a + m)
        ]
        if cap is not None:
            degrees = [a for a in degrees if abs(a) <= cap]
    for a in degrees:
        target_sum = 3 * a + m - 2
        target_sq = a * a + m
        if bounded:
            vecs = _exceptional_vectors(n, target_sum, target_sq, -1, 2)
        else:
            bound = int(target_sq ** 0.5) + 1
            vecs = _exceptional_vectors(n, target_sum, target_sq, -bound, bound)
        for v in vecs:
            if bounded:
                if 1 not in v:
                    continue
                if a == 0 and (any(abs(x) > 1 for x in v) or v.count(-1) != 1):
                    continue
            d = DivisorClass((a,) + tuple(-x for x in v))
            if class_kind(d) != m:
                raise AssertionError(f"enumerated class fails its defining equations: {d}")
            classes.append(d)
    classes.sort(key=lambda d: d.coeffs)
    return NegativeClassResult(m, n, cap, bounded, False, classes)


def corollary_step(d: DivisorClass) -> DivisorClass:
    """Add the exceptional class at the smallest index with coefficient 1 in
    D = a*h - sum a_i l_i; the result is a (-m+1)-class.

    Stated classically for m >= 3; the same computation steps a (-2)-class
    down to a (-1)-class, which is what lets chains run all the way down.
    """
    m = class_kind(d)
    if m is None or m < 2:
        raise ValueError(f"input must be a (-m)-class with m >= 2, got kind {m}")
    j = next((i for i, c in enumerate(d.coeffs[1:], start=1) if c == -1), None)
    if j is None:
        raise ValueError(f"no coefficient a_j = 1 in {d}: not a curve class")
    lat = SurfaceLattice(d.n)
    out = d + lat.l(j)
    if class_kind(out) != m - 1:
        raise AssertionError(f"corollary step failed: {out}")
    return out


def reflect(alpha: DivisorClass, d: DivisorClass) -> DivisorClass:
    """Weyl reflection D -> D + (D.alpha) alpha in the (-2)-class alpha."""
    if intersect(alpha, alpha) != -2:
        raise ValueError("reflections need a (-2)-class")
    return d + intersect(d, alpha) * alpha


@dataclass
class WeylOrbit:
    classes: list
    truncated: bool

    def __len__(self) -> int:
        return len(self.classes)

    def __contains__(self, d) -> bool:
        return d in set(self.classes)

    def to_json(self) -> dict:
        return {
            "count": len(self.classes),
            "truncated": self.truncated,
            "classes": [d.to_json() for d in self.classes],
        }


def weyl_orbit(d: DivisorClass, base, cap: int) -> WeylOrbit:
    """Closure of {D} under the simple reflections of the base, halted with a
    truncation flag once the orbit exceeds the cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    base = list(base)
    seen = {d}
    frontier = [d]
    truncated = False
    while frontier and not truncated:
        nxt = []
        for cur in frontier:
            for alpha in base:
                img = reflect(alpha, cur)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > cap:
                        truncated = True
                        break
            if truncated:
                break
        frontier = nxt
    return WeylOrbit(sorted(seen, key=lambda c: c.coeffs), truncated)


def perpendicular_minus_one_class(base) -> DivisorClass:
    """The unique l in Z^{1,9} with l.l = -1 = l.K and l perpendicular to an
    E_8 base, via exact rational solving with integrality asserted."""
    base = list(base)
    if len(base) != 8 or base[0].n != 9:
        raise ValueError("need eight classes in the nine-point lattice")
    inter = [[intersect(a, b) for b in base] for a in base]
    report = classify_diagram(inter)
    if report.verdict != "ADE" or [c.type_name for c in report.components] != ["E8"]:
        raise ValueError("the given classes are not an E_8 base")
    k = canonical_class(9)
    gram = [[1] + [0] * 9]
    for i in range(1, 10):
        row = [0] * 10
        row[i] = -1
        gram.append(row)
    # rows: pairing of the unknown with each base class and with K
    rows = []
    rhs = []
    for alpha in base:
        rows.append([alpha.coeffs[0]] + [-c for c in alpha.coeffs[1:]])
        rhs.append(0)
    rows.append([k.coeffs[0]] + [-c for c in k.coeffs[1:]])
    rhs.append(-1)
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise AssertionError("perpendicularity system is inconsistent for an E_8 base")
    # solutions form sol + t*K; fix t by l.l = -1
    l0 = sol
    l0_sq = l0[0] * l0[0] - sum(x * x for x in l0[1:])
    # (l0 + tK)^2 = l0^2 + 2t(l0.K); l0.K = -1 by construction
    t = Fraction(l0_sq + 1, 2)
    vec = [a + t * kc for a, kc in zip(l0, k.coeffs)]
    if any(x.denominator != 1 for x in vec):
        raise AssertionError("no integral perpendicular (-1)-class (internal error)")
    out = DivisorClass(int(x) for x in vec)
    if intersect(out, out) != -1 or intersect(out, k) != -1:
        raise AssertionError("solved class fails the (-1) equations")
    if any(intersect(out, alpha) != 0 for alpha in base):
        raise AssertionError("solved class is not perpendicular to the base")
    return out
