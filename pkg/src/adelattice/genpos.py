"""Exact general-position checks for nine points in the projective plane.

Coordinates are homogeneous rationals; each point is canonicalized to
coprime integers with the first nonzero coordinate positive, so every rank
and determinant below is computed fraction-free over the integers.  The
conditions checked are the finite ones: distinctness, no line through three
points, no conic through six, no cubic through eight with a double point at
one of them, and a unique cubic through all nine.  (The Cremona-transform
formulation of non-specialness is used only through this finite
eight-point characterization.)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from .linalg import bareiss_determinant, rational_rank


class PlanePoint:
    """A plane point (X : Y : Z) stored in canonical integer form."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        fracs = [Fraction(v) for v in (x, y, z)]
        if all(f == 0 for f in fracs):
            raise ValueError("(0:0:0) is not a point")
        denom = 1
        for f in fracs:
            denom = denom * f.denominator // gcd(denom, f.denominator)
        ints = [int(f * denom) for f in fracs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        object.__setattr__(self, "coords", tuple(ints))

    def __setattr__(self, name, value):
        raise AttributeError("PlanePoint is immutable")

    def __reduce__(self):
        return (PlanePoint, self.coords)

    def __eq__(self, other):
        return isinstance(other, PlanePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        x, y, z = self.coords
        return f"PlanePoint({x}:{y}:{z})"

    @classmethod
    def from_json(cls, data) -> "PlanePoint":
        return cls(*[Fraction(str(v)) for v in data])

    def to_json(self) -> list:
        return list(self.coords)


CUBIC_MONOMIALS = [
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
]


def _monomial_row(p: PlanePoint, monomials) -> list[int]:
    x, y, z = p.coords
    return [x**a * y**b * z**c for a, b, c in monomials]


def _cubic_gradient_rows(p: PlanePoint) -> list[list[int]]:
    """Two partial-derivative rows of the cubic at p.

    The omitted partial is the one paired with a nonzero coordinate of p:
    the degree-3 Euler relation 3f = X f_X + Y f_Y + Z f_Z makes it vanish
    automatically once f(p) = 0 and the other two partials vanish.
    """
    x, y, z = p.coords
    skip = max(i for i, v in enumerate((x, y, z)) if v != 0)
    rows = []
    for var in range(3):
        if var == skip:
            continue
        row = []
        for a, b, c in CUBIC_MONOMIALS:
            exps = [a, b, c]
            e = exps[var]
            if e == 0:
                row.append(0)
                continue
            exps[var] = e - 1
            row.append(e * x ** exps[0] * y ** exps[1] * z ** exps[2])
        rows.append(row)
    return rows


def _require_distinct(points) -> None:
    dupes = _duplicate_pairs(points)
    if dupes:
        raise ValueError(f"points are not pairwise distinct: {dupes}")


def _duplicate_pairs(points) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i, j in combinations(range(len(points)), 2)
        if points[i] == points[j]
    ]


def check_collinear_triples(points) -> list[tuple[int, int, int]]:
    """Index triples whose coordinate matrix is singular."""
    _require_distinct(points)
    out = []
    for triple in combinations(range(len(points)), 3):
        m = [list(points[i].coords) for i in triple]
        if bareiss_determinant(m) == 0:
            out.append(triple)
    return out


CONIC_MONOMIALS = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


def check_conic_sextuples(points) -> list[tuple[int, ...]]:
    """Index sextuples through which some nonzero conic passes."""
    _require_distinct(points)
    out = []
    for six in combinations(range(len(points)), 6):
        m = [_monomial_row(points[i], CONIC_MONOMIALS) for i in six]
        if bareiss_determinant(m) == 0:
            out.append(six)
    return out


def check_singular_cubic_octuples(points) -> list[tuple[tuple[int, ...], int]]:
    """Pairs (octuple, designated index) admitting a cubic through all eight
    points with a double point at the designated one."""
    _require_distinct(points)
    out = []
    for eight in combinations(range(len(points)), 8):
        rows_eval = {i: _monomial_row(points[i], CUBIC_MONOMIALS) for i in eight}
        for dp in eight:
            m = [rows_eval[i] for i in eight] + _cubic_gradient_rows(points[dp])
            if bareiss_determinant(m) == 0:
                out.append((eight, dp))
    return out


def cubic_space_dimension(points) -> int:
    """Dimension of the space of cubics through all the points."""
    _require_distinct(points)
    m = [_monomial_row(p, CUBIC_MONOMIALS) for p in points]
    return 10 - rational_rank(m)


@dataclass
class GeneralPositionReport:
    distinct: bool
    duplicate_pairs: list
    collinear_triples: list
    conic_sextuples: list
    singular_cubic_octuples: list
    cubic_space_dimension: Optional[int]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "distinct": self.distinct,
            "duplicate_pairs": [list(p) for p in self.duplicate_pairs],
            "collinear_triples": [list(t) for t in self.collinear_triples],
            "conic_sextuples": [list(s) for s in self.conic_sextuples],
            "singular_cubic_octuples": [
                {"octuple": list(o), "double_point": dp}
                for o, dp in self.singular_cubic_octuples
            ],
            "cubic_space_dimension": self.cubic_space_dimension,
            "verdict": self.verdict,
        }


def is_general_position(points) -> GeneralPositionReport:
    """Full report for nine points: distinct, no 3 collinear, no 6 on a
    conic, no 8 on a cubic double at one of them, unique cubic through all."""
    points = list(points)
    if len(points) != 9:
        raise ValueError(f"need exactly nine points, got {len(points)}")
    dupes = _duplicate_pairs(points)
    if dupes:
        return GeneralPositionReport(False, dupes, [], [], [], None, False)
    collinear = check_collinear_triples(points)
    conics = check_conic_sextuples(points)
    octuples = check_singular_cubic_octuples(points)
    dim = cubic_space_dimension(points)
    verdict = not collinear and not conics and not octuples and dim == 1
    return GeneralPositionReport(True, [], collinear, conics, octuples, dim, verdict)
