"""Root systems inside Z^{1,n}: enumeration, bases, Dynkin classification.

Roots are lattice classes with alpha.alpha = -2 and alpha.K = 0.  For
n <= 8 they form the finite system E_n; for n = 9 the real roots of the
affine system, with imaginary roots m*K.  Diagram classification consumes
intersection matrices (diagonal -2) and recognizes A/D/E and their affine
extensions by graph isomorphism against explicit catalogs, never by
floating-point eigenvalues.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import (
    bareiss_determinant,
    invert_rational,
    nullspace_rational,
    primitive_integer_vector,
    rational_rank,
)
from .picard import DivisorClass, SurfaceLattice, canonical_class, intersect


# ---------------------------------------------------------------------------
# enumeration of root classes


def _coeff_vectors(length: int, target_sum: int, target_sq: int):
    """All integer vectors with the given length, sum and sum of squares."""
    out = []
    vec = [0] * length

    def rec(pos: int, rem_sum: int, rem_sq: int):
        if pos == length:
            if rem_sum == 0 and rem_sq == 0:
                out.append(tuple(vec))
            return
        slots = length - pos
        # Cauchy-Schwarz prune: rem_sum^2 <= slots * rem_sq
        if rem_sum * rem_sum > slots * rem_sq:
            return
        bound = int(rem_sq**0.5) + 1
        while bound * bound > rem_sq:
            bound -= 1
        for c in range(-bound, bound + 1):
            nsq = rem_sq - c * c
            if nsq < 0:
                continue
            vec[pos] = c
            rec(pos + 1, rem_sum - c, nsq)
        vec[pos] = 0

    rec(0, target_sum, target_sq)
    return out


def _root_classes_of_degree(n: int, d: int):
    """Classes a*h + sum c_i l_i with degree d, square -2 and K-product 0."""
    # alpha.K = 0  <=>  sum c_i = -3d;  alpha^2 = -2  <=>  sum c_i^2 = d^2 + 2.
    return [DivisorClass((d,) + cs) for cs in _coeff_vectors(n, -3 * d, d * d + 2)]


def enumerate_en_roots(lattice) -> "RootSystem":
    """All roots of Z^{1,n} for 3 <= n <= 8, with a canonical base."""
    n = lattice.n if isinstance(lattice, SurfaceLattice) else int(lattice)
    if not 3 <= n <= 8:
        raise ValueError(
            f"finite enumeration needs 3 <= n <= 8, got {n}"
            " (n = 9 has infinitely many roots; use enumerate_affine_real_roots)"
        )
    roots = []
    d = 0
    while d * d * (9 - n) <= 2 * n:
        roots.extend(_root_classes_of_degree(n, d))
        if d > 0:
            roots.extend(_root_classes_of_degree(n, -d))
        d += 1
    return RootSystem.from_roots(roots)


def _is_lex_positive(alpha: DivisorClass) -> bool:
    """Positivity by the fixed generic functional: first nonzero coefficient,
    scanning the h-coefficient first, must be positive."""
    for c in alpha.coeffs:
        if c != 0:
            return c > 0
    return False


def find_base(roots) -> list[DivisorClass]:
    """Simple roots: lex-positive roots not expressible as a sum of two
    lex-positive roots, ordered by descending coefficient vector."""
    root_set = set(roots)
    if not root_set:
        raise ValueError("empty root set")
    for alpha in root_set:
        if -alpha not in root_set:
            raise ValueError(f"root set not closed under negation at {alpha}")
        if intersect(alpha, alpha) != -2:
            raise ValueError(f"not a (-2)-class: {alpha}")
    positives = [a for a in root_set if _is_lex_positive(a)]
    pos_set = set(positives)
    simples = []
    for p in positives:
        if not any((p - q) in pos_set for q in positives if q != p):
            simples.append(p)
    simples.sort(key=lambda a: a.coeffs, reverse=True)
    return simples


def height(alpha: DivisorClass, base) -> int:
    """Sum of the coefficients of alpha over the given base."""
    return sum(_coords_over_base(alpha, list(base)))


def _coords_over_base(alpha: DivisorClass, base: list[DivisorClass]) -> tuple[int, ...]:
    """Integer coordinates of alpha over the base, via the Cartan pairing."""
    cartan = [[-intersect(a, b) for b in base] for a in base]
    inv = invert_rational(cartan)
    pair = [-intersect(alpha, b) for b in base]
    coords = []
    for row in inv:
        v = sum(r * p for r, p in zip(row, pair))
        if v.denominator != 1:
            raise ValueError(f"{alpha} is not in the integer span of the base")
        coords.append(int(v))
    # The pairing only sees the span; confirm the class itself matches.
    recon = base[0] * 0
    for c, b in zip(coords, base):
        recon = recon + c * b
    if recon != alpha:
        raise ValueError(f"{alpha} is not in the span of the base")
    return tuple(coords)


class RootSystem:
    """A finite simply-laced root system realized in Z^{1,n}."""

    def __init__(self, roots, base):
        self.roots = tuple(sorted(roots, key=lambda a: a.coeffs))
        self.base = tuple(base)
        self.rank = len(self.base)
        self.n = self.base[0].n
        self.cartan = tuple(
            tuple(-intersect(a, b) for b in self.base) for a in self.base
        )
        for i, row in enumerate(self.cartan):
            if row[i] != 2:
                raise ValueError("base classes must have square -2")
            for j, v in enumerate(row):
                if i != j and v not in (0, -1):
                    raise ValueError("base is not simply laced")
        self._cartan_inv = invert_rational([list(r) for r in self.cartan])
        self._coords: dict[DivisorClass, tuple[int, ...]] = {}
        for alpha in self.roots:
            cs = self.coords(alpha)
            if not (all(c >= 0 for c in cs) or all(c <= 0 for c in cs)):
                raise ValueError(
                    f"root {alpha} has mixed-sign coordinates {cs}: not a base"
                )

    # -- construction ------------------------------------------------------

    @classmethod
    def from_roots(cls, roots) -> "RootSystem":
        return cls(roots, find_base(roots))

    @classmethod
    def from_base(cls, base, max_roots: int = 100000) -> "RootSystem":
        """Close the base under its own reflections (finite systems only)."""
        base = list(base)
        roots = set(base) | {-a for a in base}
        frontier = list(roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for alpha in base:
                    img = beta + intersect(beta, alpha) * alpha
                    if img not in roots:
                        roots.add(img)
                        nxt.append(img)
            if len(roots) > max_roots:
                raise ValueError("reflection closure did not terminate: base is not finite type")
            frontier = nxt
        return cls(sorted(roots, key=lambda a: a.coeffs), base)

    # -- queries -----------------------------------------------------------

    def coords(self, alpha: DivisorClass) -> tuple[int, ...]:
        cached = self._coords.get(alpha)
        if cached is not None:
            return cached
        pair = [-intersect(alpha, b) for b in self.base]
        coords = []
        for row in self._cartan_inv:
            v = sum(r * p for r, p in zip(row, pair))
            if v.denominator != 1:
                raise ValueError(f"{alpha} is not an integer combination of the base")
            coords.append(int(v))
        recon = self.base[0] * 0
        for c, b in zip(coords, self.base):
            recon = recon + c * b
        if recon != alpha:
            raise ValueError(f"{alpha} is not in the span of the base")
        cs = tuple(coords)
        self._coords[alpha] = cs
        return cs

    def is_positive(self, alpha: DivisorClass) -> bool:
        cs = self.coords(alpha)
        return any(c != 0 for c in cs) and all(c >= 0 for c in cs)

    @property
    def positive_roots(self) -> tuple[DivisorClass, ...]:
        return tuple(a for a in self.roots if self.is_positive(a))

    def height(self, alpha: DivisorClass) -> int:
        return sum(self.coords(alpha))

    @property
    def highest_root(self) -> DivisorClass:
        best = max(self.positive_roots, key=self.height)
        ties = [a for a in self.positive_roots if self.height(a) == self.height(best)]
        if len(ties) != 1:
            raise ValueError("highest root is not unique (reducible system)")
        return best

    def contains(self, alpha: DivisorClass) -> bool:
        return alpha in set(self.roots)

    @property
    def intersection_matrix(self) -> list[list[int]]:
        return [[intersect(a, b) for b in self.base] for a in self.base]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "base": [a.to_json() for a in self.base],
            "cartan": [list(r) for r in self.cartan],
            "roots": [a.to_json() for a in self.roots],
        }

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, |roots|={len(self.roots)})"


# ---------------------------------------------------------------------------
# diagram classification


@dataclass
class DiagramComponent:
    type_name: str
    nodes: list[int]
    marks: Optional[list[int]]

    def to_json(self) -> dict:
        return {"type": self.type_name, "nodes": self.nodes, "marks": self.marks}


@dataclass
class DynkinReport:
    verdict: str  # "ADE" | "affine" | "not-ADE"
    components: list[DiagramComponent]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "components": [c.to_json() for c in self.components],
        }

    @property
    def marks(self) -> Optional[list[int]]:
        """Marks of the unique affine component, if the verdict is affine."""
        for c in self.components:
            if c.marks is not None:
                return c.marks
        return None


def _catalog_edges(kind: str, size: int) -> Optional[set[frozenset[int]]]:
    """Edge set of the catalog diagram of the given kind on `size` nodes."""
    path = lambda k: {frozenset((i, i + 1)) for i in range(k - 1)}
    if kind == "A":
        return path(size)
    if kind == "D":
        if size < 4:
            return None
        e = path(size - 1)
        e.add(frozenset((1, size - 1)))
        return e
    if kind == "E":
        if size not in (6, 7, 8):
            return None
        e = path(size - 1)
        e.add(frozenset((2, size - 1)))
        return e
    if kind == "A~":
        if size < 3:
            return None  # the 2-node affine A_1 needs a double edge, rejected upstream
        e = path(size)
        e.add(frozenset((size - 1, 0)))
        return e
    if kind == "D~":
        if size < 5:
            return None
        if size == 5:
            return {frozenset((2, i)) for i in (0, 1, 3, 4)}
        e = {frozenset((i, i + 1)) for i in range(2, size - 3)}
        e |= {frozenset((0, 2)), frozenset((1, 2))}
        e |= {frozenset((size - 3, size - 2)), frozenset((size - 3, size - 1))}
        return e
    if kind == "E~":
        if size == 7:  # affine E6: three arms of length 2
            return {frozenset(p) for p in ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6))}
        if size == 8:  # affine E7: chain of 7 with a branch at the middle
            e = path(7)
            e.add(frozenset((3, 7)))
            return e
        if size == 9:  # affine E8: chain of 8 with a branch at the sixth node
            e = path(8)
            e.add(frozenset((5, 8)))
            return e
        return None
    raise ValueError(kind)


def _graphs_isomorphic(edges1, edges2, size: int) -> bool:
    """Backtracking isomorphism test for the tiny diagram graphs used here."""
    if len(edges1) != len(edges2):
        return False
    adj1 = [set() for _ in range(size)]
    adj2 = [set() for _ in range(size)]
    for a, b in (tuple(e) for e in edges1):
        adj1[a].add(b)
        adj1[b].add(a)
    for a, b in (tuple(e) for e in edges2):
        adj2[a].add(b)
        adj2[b].add(a)
    deg1 = sorted(len(s) for s in adj1)
    deg2 = sorted(len(s) for s in adj2)
    if deg1 != deg2:
        return False
    order = sorted(range(size), key=lambda v: -len(adj1[v]))
    mapping: dict[int, int] = {}
    used = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(size):
            if w in used or len(adj2[w]) != len(adj1[v]):
                continue
            ok = True
            for u in adj1[v]:
                if u in mapping and mapping[u] not in adj2[w]:
                    ok = False
                    break
            for u, mu in mapping.items():
                if u not in adj1[v] and mu in adj2[w]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def _negative_definite(m: list[list[int]]) -> bool:
    """Exact test via leading principal minors of -M."""
    k = len(m)
    neg = [[-x for x in row] for row in m]
    for size in range(1, k + 1):
        sub = [row[:size] for row in neg[:size]]
        if bareiss_determinant(sub) <= 0:
            return False
    return True


def classify_diagram(matrix) -> DynkinReport:
    """Classify an intersection matrix (diagonal -2, off-diagonal 0 or 1)."""
    m = [[int(x) for x in row] for row in matrix]
    k = len(m)
    if any(len(row) != k for row in m):
        raise ValueError("matrix must be square")
    for i in range(k):
        for j in range(k):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix must be symmetric")
            if i == j and m[i][j] != -2:
                raise ValueError("diagonal entries must all be -2")
            if i != j and m[i][j] not in (0, 1):
                if m[i][j] >= 2:
                    raise ValueError(
                        "off-diagonal entries > 1 (tangent/degenerate configurations)"
                        " are not supported"
                    )
                raise ValueError("off-diagonal entries must be 0 or 1")

    # connected components of the dual graph
    seen = [False] * k
    comps: list[list[int]] = []
    for start in range(k):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(k):
                if w != v and m[v][w] == 1 and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))

    components: list[DiagramComponent] = []
    n_affine = 0
    any_bad = False
    for comp in comps:
        size = len(comp)
        local = {v: i for i, v in enumerate(comp)}
        edges = {
            frozenset((local[a], local[b]))
            for a in comp
            for b in comp
            if a < b and m[a][b] == 1
        }
        sub = [[m[a][b] for b in comp] for a in comp]
        type_name = None
        marks = None
        for kind in ("A", "D", "E"):
            cat = _catalog_edges(kind, size)
            if cat is not None and _graphs_isomorphic(edges, cat, size):
                type_name = f"{kind}{size}"
                if not _negative_definite(sub):
                    raise AssertionError(f"catalog match {type_name} is not negative definite")
                break
        if type_name is None:
            for kind in ("A~", "D~", "E~"):
                cat = _catalog_edges(kind, size)
                if cat is not None and _graphs_isomorphic(edges, cat, size):
                    type_name = f"{kind[0]}~{size - 1}"
                    kernel = nullspace_rational([[Fraction(x) for x in row] for row in sub])
                    if len(kernel) != 1:
                        raise AssertionError(f"affine match {type_name} has kernel dim {len(kernel)}")
                    marks = primitive_integer_vector(kernel[0])
                    if any(v <= 0 for v in marks):
                        raise AssertionError(f"marks of {type_name} are not positive: {marks}")
                    n_affine += 1
                    break
        if type_name is None:
            any_bad = True
            type_name = "not-ADE"
        components.append(DiagramComponent(type_name, comp, marks))

    if any_bad:
        verdict = "not-ADE"
    elif n_affine == 0:
        verdict = "ADE"
    elif n_affine == 1:
        # negative semidefinite with one-dimensional kernel overall
        verdict = "affine"
    else:
        verdict = "not-ADE"
    return DynkinReport(verdict, components)


# ---------------------------------------------------------------------------
# affine system on Z^{1,9}


class AffineRootSystem:
    """Real roots of Z^{1,9} up to a degree cap, split over an embedded E_8.

    F = -K is the null class; every real root decomposes as alpha + m*F with
    alpha a root of the E_8 perpendicular to the chosen (-1)-class l.
    """

    def __init__(self, cap: int, l: DivisorClass, real_roots, finite: RootSystem):
        self.cap = cap
        self.l = l
        self.lattice = SurfaceLattice(9)
        self.F = -canonical_class(9)
        self.real_roots = tuple(sorted(real_roots, key=lambda a: a.coeffs))
        self.finite = finite
        self.imaginary_levels = tuple(
            m for m in range(-cap, cap + 1) if m != 0
        )

    def level(self, beta: DivisorClass) -> int:
        """Level of beta relative to the embedding: beta = alpha + level*F."""
        return intersect(beta, self.l)

    def finite_part(self, beta: DivisorClass) -> DivisorClass:
        alpha = beta - self.level(beta) * self.F
        if intersect(alpha, self.l) != 0 or intersect(alpha, alpha) != -2:
            raise AssertionError(f"decomposition failed for {beta}")
        return alpha

    def decompose(self, beta: DivisorClass) -> tuple[DivisorClass, int]:
        return self.finite_part(beta), self.level(beta)

    def is_positive_real(self, beta: DivisorClass) -> bool:
        alpha, m = self.decompose(beta)
        if m >= 1:
            return True
        return m == 0 and self.finite.is_positive(alpha)

    def imaginary_root(self, m: int) -> DivisorClass:
        if m == 0:
            raise ValueError("0 is not an imaginary root level")
        return m * canonical_class(9)

    def is_positive_imaginary(self, m: int) -> bool:
        """m*K is positive exactly when m*K is a positive multiple of F = -K."""
        return m <= -1

    def positive_count_up_to_level(self, max_level: int) -> int:
        """Positive roots (real and imaginary) with level <= max_level."""
        count = 0
        for beta in self.real_roots:
            alpha, m = self.decompose(beta)
            if 0 <= m <= max_level and self.is_positive_real(beta):
                count += 1
        count += max_level  # imaginary roots F, 2F, ..., max_level*F
        return count

    def to_json(self) -> dict:
        reals = []
        for beta in self.real_roots:
            alpha, m = self.decompose(beta)
            reals.append({"class": beta.to_json(), "finite": alpha.to_json(), "level": m})
        return {
            "n": 9,
            "cap": self.cap,
            "l": self.l.to_json(),
            "F": self.F.to_json(),
            "finite_base": [a.to_json() for a in self.finite.base],
            "real_roots": reals,
            "imaginary_levels": list(self.imaginary_levels),
        }


def enumerate_affine_real_roots(lattice, cap: int, l: Optional[DivisorClass] = None) -> AffineRootSystem:
    """All real roots of Z^{1,9} with |h-degree| <= cap.

    The truncation cap is mandatory: the full set is infinite.
    """
    n = lattice.n if isinstance(lattice, SurfaceLattice) else int(lattice)
    if n != 9:
        raise ValueError("affine enumeration lives on the nine-point lattice")
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if l is None:
        l = SurfaceLattice(9).l(9)
    if intersect(l, l) != -1 or intersect(l, canonical_class(9)) != -1:
        raise ValueError("l must be a (-1)-class")
    reals = []
    for d in range(-cap, cap + 1):
        reals.extend(_root_classes_of_degree(9, d))
    finite_roots = [a for a in _all_perp_roots(l)]
    finite = RootSystem.from_roots(finite_roots)
    return AffineRootSystem(cap, l, reals, finite)


def _all_perp_roots(l: DivisorClass):
    """Roots of Z^{1,9} perpendicular to the (-1)-class l (an E_8 copy)."""
    # The sublattice {x : x.K = 0 = x.l} is negative definite of rank 8.
    # Project h into it: h' = h + (h.l + 3)K - 3l satisfies h'.K = h'.l = 0,
    # and alpha.h = alpha.h' for perp roots, so Cauchy-Schwarz bounds the
    # degree by sqrt(2 * (-h'.h')).
    lat = SurfaceLattice(9)
    k = canonical_class(9)
    t = intersect(lat.h, l)
    h_proj = lat.h + (t + 3) * k + (-3) * l
    norm = -intersect(h_proj, h_proj)
    bound = 0
    while (bound + 1) * (bound + 1) <= 2 * norm:
        bound += 1
    out = []
    for d in range(-bound, bound + 1):
        for beta in _root_classes_of_degree(9, d):
            if intersect(beta, l) == 0:
                out.append(beta)
    return out


# ---------------------------------------------------------------------------
# affine curve configurations and the extended-root bijection


class AffineCurveConfig:
    """Classes C_0..C_r realizing a connected affine diagram, with marks n_i
    and null class F = sum n_i C_i (F.F = 0, F.C_i = 0)."""

    def __init__(self, nodes):
        self.nodes = tuple(nodes)
        m = [[intersect(a, b) for b in self.nodes] for a in self.nodes]
        report = classify_diagram(m)
        if report.verdict != "affine" or len(report.components) != 1:
            raise ValueError(f"nodes do not form a connected affine diagram: {report.verdict}")
        self.type_name = report.components[0].type_name
        self.marks = tuple(report.components[0].marks)
        f = self.nodes[0] * 0
        for nm, c in zip(self.marks, self.nodes):
            f = f + nm * c
        self.F = f
        if intersect(f, f) != 0 or any(intersect(f, c) != 0 for c in self.nodes):
            raise AssertionError("null class of the configuration is not isotropic")

    @classmethod
    def from_finite_base(cls, base, F: Optional[DivisorClass] = None) -> "AffineCurveConfig":
        """Extend a finite base inside Z^{1,9} by C_0 = F - (highest root)."""
        base = list(base)
        if F is None:
            F = -canonical_class(base[0].n)
        finite = RootSystem.from_base(base)
        alpha0 = finite.highest_root
        c0 = F - alpha0
        return cls([c0] + base)

    def finite_system(self, k: int = 0) -> RootSystem:
        """Root system spanned by the nodes other than C_k."""
        return RootSystem.from_base([c for i, c in enumerate(self.nodes) if i != k])

    def to_json(self) -> dict:
        return {
            "type": self.type_name,
            "nodes": [c.to_json() for c in self.nodes],
            "marks": list(self.marks),
            "F": self.F.to_json(),
        }


@dataclass
class ExtendedRootChange:
    """Result of re-choosing the extended node: the root bijection and the
    base of the new finite system."""

    k: int
    table: dict
    new_base: list
    old_base: list

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "new_base": [c.to_json() for c in self.new_base],
            "table": [
                {"from": a.to_json(), "to": b.to_json()}
                for a, b in sorted(self.table.items(), key=lambda kv: kv[0].coeffs)
            ],
        }


def change_extended_root(config: AffineCurveConfig, k: int) -> ExtendedRootChange:
    """Bijection alpha -> alpha - a_k(alpha)*F onto the system with C_k as
    the new extended node.  Only mark-1 nodes are legal choices."""
    if not 0 <= k < len(config.nodes):
        raise ValueError(f"node index out of range: {k}")
    if config.marks[k] != 1:
        raise ValueError(f"node C_{k} has mark {config.marks[k]} != 1: not a legal extended root")
    old_base = [c for i, c in enumerate(config.nodes) if i != 0]
    new_base = [c for i, c in enumerate(config.nodes) if i != k]
    phi = RootSystem.from_base(old_base)
    if k == 0:
        return ExtendedRootChange(0, {a: a for a in phi.roots}, new_base, old_base)
    psi = RootSystem.from_base(new_base)
    pos_k = k - 1  # position of C_k inside the old base
    table = {}
    for alpha in phi.roots:
        ak = phi.coords(alpha)[pos_k]
        if ak not in (-1, 0, 1):
            raise AssertionError(f"coefficient of mark-1 node out of range at {alpha}: {ak}")
        beta = alpha - ak * config.F
        if intersect(beta, beta) != -2:
            raise AssertionError(f"image {beta} is not a (-2)-class")
        table[alpha] = beta
    images = set(table.values())
    if images != set(psi.roots) or len(images) != len(phi.roots):
        raise AssertionError("the map is not a bijection onto the new root system")
    return ExtendedRootChange(k, table, new_base, old_base)


# ---------------------------------------------------------------------------
# standard realizations


def e8_chain_base_order(rs: RootSystem) -> list[DivisorClass]:
    """Reorder an E_8 base so the affine node would extend a chain:
    C_1..C_7 along the long path (C_1 next to the extended node) and C_8 the
    branch node attached to C_5."""
    base = list(rs.base)
    if len(base) != 8:
        raise ValueError("need an E_8 base")
    alpha0 = rs.highest_root
    attach = [b for b in base if intersect(alpha0, b) != 0]
    if len(attach) != 1:
        raise ValueError("base is not of type E_8 (highest root attaches to one node)")
    adj = {
        b: [c for c in base if c != b and intersect(b, c) == 1] for b in base
    }
    order = [attach[0]]
    prev = None
    cur = attach[0]
    branch = None
    while True:
        nxts = [c for c in adj[cur] if c != prev]
        if len(nxts) == 0:
            break
        if len(nxts) == 1:
            order.append(nxts[0])
            prev, cur = cur, nxts[0]
            continue
        if len(nxts) != 2:
            raise ValueError("unexpected diagram shape")
        leafs = [c for c in nxts if len(adj[c]) == 1]
        chains = [c for c in nxts if len(adj[c]) > 1]
        if len(leafs) != 1 or len(chains) != 1:
            raise ValueError("unexpected branch shape for E_8")
        branch = leafs[0]
        order.append(chains[0])
        prev, cur = cur, chains[0]
    order.append(branch)
    if len(order) != 8:
        raise ValueError("failed to linearize the E_8 diagram")
    return order


def standard_base(type_name: str) -> tuple[int, list[DivisorClass]]:
    """Canonical lattice realization of a finite simply-laced type.

    A_r lives in Z^{1,r+1} on differences of exceptional classes; D_r in
    Z^{1,r+1} with one cubic node; E_r (3 <= r <= 8) in Z^{1,r} via the full
    root enumeration.
    """
    kind, rank = type_name[0].upper(), int(type_name[1:])
    if kind == "A":
        if not 1 <= rank <= 8:
            raise ValueError(f"A-rank out of range: {rank}")
        lat = SurfaceLattice(rank + 1)
        return rank + 1, [lat.l(i) - lat.l(i + 1) for i in range(1, rank + 1)]
    if kind == "D":
        if not 4 <= rank <= 8:
            raise ValueError(f"D-rank out of range: {rank}")
        lat = SurfaceLattice(rank + 1)
        h = lat.h
        node = h - lat.l(1) - lat.l(2) - lat.l(3)
        chain = [lat.l(i) - lat.l(i + 1) for i in range(2, rank + 1)]
        return rank + 1, [node] + chain
    if kind == "E":
        if not 3 <= rank <= 8:
            raise ValueError(f"E-rank out of range: {rank}")
        return rank, list(enumerate_en_roots(rank).base)
    raise ValueError(f"unknown type: {type_name}")


def standard_root_system(type_name: str) -> RootSystem:
    kind = type_name[0].upper()
    rank = int(type_name[1:])
    if kind == "E":
        return enumerate_en_roots(rank)
    _, base = standard_base(type_name)
    return RootSystem.from_base(base)


def e8_affine_configuration() -> AffineCurveConfig:
    """The affine E_8 configuration in Z^{1,9}: the E_8 perpendicular to l_9,
    base in chain order, extended by C_0 = -K - (highest root)."""
    lat = SurfaceLattice(9)
    l9 = lat.l(9)
    finite = RootSystem.from_roots(_all_perp_roots(l9))
    ordered = e8_chain_base_order(finite)
    return AffineCurveConfig.from_finite_base(ordered)


def affine_configuration(type_name: str) -> AffineCurveConfig:
    """Affine extension of a standard finite base, realized in Z^{1,9} with
    F = -K (every root class of Z^{1,9} is perpendicular to K)."""
    kind, rank = type_name[0].upper(), int(type_name[1:])
    if kind == "E" and rank == 8:
        return e8_affine_configuration()
    _, base = standard_base(type_name)
    n = base[0].n
    if n < 9:
        base = [DivisorClass(tuple(b.coeffs) + (0,) * (9 - n)) for b in base]
    return AffineCurveConfig.from_finite_base(base)
