"""Chevalley bases with concrete integer structure constants, their loop and
centrally extended brackets, and the extended-root relabeling checker.

Signs are resolved by a bimultiplicative cocycle eps on the root lattice:
eps(a,b)*eps(b,a) = (-1)^<a,b> and eps(a,a) = (-1)^(<a,a>/2), pinned on
ordered simple-root pairs by eps(a_i,a_j) = -1 for i <= j adjacent (the
diagonal is forced to -1 by the self-pairing rule) and +1 otherwise.  Any
two such choices differ by a coboundary and give isomorphic algebras; the
chosen table is recorded by every export.

Brackets on the finite algebra:
  [h_i, h_j] = 0
  [h_i, x_a] = <a, C_i> x_a
  [x_a, x_-a] = h_a  (integer combination of the h_i)
  [x_a, x_b] = n(a,b) x_{a+b}  when a+b is a root, else 0,

with n(a,b) = eps(a,b) * u(a)u(b)u(a+b) where u is -1 exactly on negative
roots.  The positivity twist is forced: a raw bimultiplicative eps satisfies
the Jacobi identity only with [x_a, x_-a] = -h_a, while the normalization
[x_a, x_-a] = +h_a (and the Killing value k(x_a, x_-a) = +2m^*) requires
rescaling the negative root vectors by -1.  On pairs of positive roots with
positive sum, n(a,b) = eps(a,b) on the nose.

Loop and affine brackets follow the level-additive rule, the affine one with
central term n * delta_{n+m,0} * k(x,y) * c, where k is the Killing trace
form with values 2m^* on coroot-normalized pairs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .picard import DivisorClass, intersect
from .roots import AffineCurveConfig, RootSystem

Element = dict  # finite-algebra element: {label_index: int}
LoopElement = dict  # {(label_index, level): int}


class SignCocycle:
    """Bimultiplicative sign function on a root lattice, stored as its values
    on ordered pairs of simple roots."""

    def __init__(self, cartan):
        r = len(cartan)
        self.rank = r
        self.simple_pairs = [[1] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                if i == j:
                    self.simple_pairs[i][j] = -1
                elif i < j and cartan[i][j] == -1:
                    self.simple_pairs[i][j] = -1
        # parity matrix: entry 1 where the simple-pair value is -1
        self._parity = [
            [1 if self.simple_pairs[i][j] == -1 else 0 for j in range(r)]
            for i in range(r)
        ]

    def eps_coords(self, a_coords, b_coords) -> int:
        """Sign for lattice vectors given by coordinates over the base."""
        par = self._parity
        total = 0
        for i, ai in enumerate(a_coords):
            if ai & 1:
                row = par[i]
                for j, bj in enumerate(b_coords):
                    if bj & 1:
                        total ^= row[j]
        return -1 if total else 1

    def to_json(self) -> dict:
        return {"simple_pairs": [list(r) for r in self.simple_pairs]}


def build_cocycle(base, cartan=None) -> SignCocycle:
    """Cocycle for an ordered simply-laced base."""
    if cartan is None:
        cartan = [[-intersect(a, b) for b in base] for a in base]
    for i, row in enumerate(cartan):
        for j, v in enumerate(row):
            if i == j and v != 2:
                raise ValueError("base vectors must have self-pairing 2")
            if i != j and v not in (0, -1):
                raise ValueError("cocycle needs a simply-laced Cartan matrix")
    return SignCocycle(cartan)


class ChevalleyAlgebra:
    """Structure constants of the finite algebra attached to a root system.

    Basis labels are ("h", i) for 0 <= i < rank and ("x", alpha) for roots
    alpha; elements are sparse integer dicts over basis indices.
    """

    def __init__(self, rs: RootSystem, sign: Optional[Callable] = None):
        self.rs = rs
        self.cocycle = None
        if sign is None:
            self.cocycle = build_cocycle(rs.base, [list(r) for r in rs.cartan])
            eps = lambda a, b: self.cocycle.eps_coords(rs.coords(a), rs.coords(b))
            u = {a: (1 if rs.is_positive(a) else -1) for a in rs.roots}
            sign = lambda a, b: eps(a, b) * u[a] * u[b] * u[a + b]
        self.structure_sign = sign
        self.rank = rs.rank
        self.labels: list = [("h", i) for i in range(self.rank)]
        self.labels += [("x", a) for a in rs.roots]
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.dim = len(self.labels)
        root_set = set(rs.roots)

        table: list[dict] = [dict() for _ in range(self.dim)]
        for ia, alpha in enumerate(rs.roots):
            i_alpha = self.rank + ia
            # Cartan rows/columns
            for i in range(self.rank):
                pairing = -intersect(alpha, rs.base[i])
                if pairing:
                    table[i][i_alpha] = ((i_alpha, pairing),)
                    table[i_alpha][i] = ((i_alpha, -pairing),)
            # root-root rows
            for ib, beta in enumerate(rs.roots):
                if ib == ia:
                    continue
                i_beta = self.rank + ib
                s = alpha + beta
                if s.is_zero():
                    coords = rs.coords(alpha)
                    terms = tuple((i, c) for i, c in enumerate(coords) if c)
                    table[i_alpha][i_beta] = terms
                elif s in root_set:
                    e = sign(alpha, beta)
                    table[i_alpha][i_beta] = ((self.index[("x", s)], e),)
        self.table = [dict(row) for row in table]
        self._dual_coxeter: Optional[int] = None

    # -- basic elements ------------------------------------------------

    def h(self, i: int) -> Element:
        return {i: 1}

    def x(self, alpha: DivisorClass) -> Element:
        return {self.index[("x", alpha)]: 1}

    def basis_element(self, idx: int) -> Element:
        return {idx: 1}

    def label_str(self, idx: int) -> str:
        kind, payload = self.labels[idx]
        if kind == "h":
            return f"h{payload + 1}"
        return "x[" + ",".join(str(c) for c in payload.coeffs) + "]"

    def coroot(self, alpha: DivisorClass) -> tuple[int, ...]:
        """Coefficients of h_alpha over the h_i (equal to the coordinates of
        alpha over the base in the simply-laced case)."""
        if alpha not in self.index_root_set():
            raise ValueError(f"{alpha} is not a root of this algebra")
        return self.rs.coords(alpha)

    def index_root_set(self):
        return set(self.rs.roots)

    # -- brackets --------------------------------------------------------

    def bracket(self, x: Element, y: Element) -> Element:
        out: dict = {}
        table = self.table
        for i, ci in x.items():
            row = table[i]
            for j, cj in y.items():
                terms = row.get(j)
                if terms is None:
                    continue
                c = ci * cj
                for k, ck in terms:
                    v = out.get(k, 0) + c * ck
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    # -- Killing form ------------------------------------------------------

    def killing_trace(self, x: Element, y: Element) -> int:
        """Brute-force Tr(ad x . ad y) over the whole basis."""
        total = 0
        for z in range(self.dim):
            w = self.bracket(x, self.bracket(y, {z: 1}))
            total += w.get(z, 0)
        return total

    def dual_coxeter(self) -> int:
        """m^* = Tr(ad x_a . ad x_-a)/2, asserted constant over all roots."""
        if self._dual_coxeter is not None:
            return self._dual_coxeter
        values = set()
        for alpha in self.rs.roots:
            tr = self.killing_trace(self.x(alpha), self.x(-alpha))
            if tr % 2 != 0:
                raise AssertionError(f"odd trace {tr} at root {alpha}")
            values.add(tr // 2)
            if len(values) > 1:
                raise AssertionError(f"inconsistent dual Coxeter traces: {values}")
        self._dual_coxeter = values.pop()
        return self._dual_coxeter

    def killing_basis(self, i: int, j: int) -> int:
        """Killing form on basis labels via the closed-form values."""
        m2 = 2 * self.dual_coxeter()
        ki, pi = self.labels[i]
        kj, pj = self.labels[j]
        if ki == "h" and kj == "h":
            return m2 * self.rs.cartan[pi][pj]
        if ki == "h" or kj == "h":
            return 0
        return m2 if (pi + pj).is_zero() else 0

    def killing(self, x: Element, y: Element) -> int:
        total = 0
        for i, ci in x.items():
            for j, cj in y.items():
                v = self.killing_basis(i, j)
                if v:
                    total += ci * cj * v
        return total

    # -- export ------------------------------------------------------------

    def export_rows(self):
        """Nonzero bracket rows (label_x, label_y, [(label, coeff), ...])."""
        rows = []
        for i in range(self.dim):
            for j, terms in sorted(self.table[i].items()):
                rows.append(
                    (
                        self.label_str(i),
                        self.label_str(j),
                        [(self.label_str(k), c) for k, c in terms],
                    )
                )
        rows.sort(key=lambda r: (r[0], r[1]))
        return rows

    def to_json(self) -> dict:
        data = {
            "rank": self.rank,
            "dim": self.dim,
            "base": [a.to_json() for a in self.rs.base],
            "brackets": [
                {"x": x, "y": y, "terms": [[lab, c] for lab, c in terms]}
                for x, y, terms in self.export_rows()
            ],
        }
        if self.cocycle is not None:
            data["cocycle"] = self.cocycle.to_json()
            # root-root constants are eps(a,b) twisted by the -1 rescaling of
            # negative root vectors (forced by [x_a, x_-a] = +h_a)
            data["sign_convention"] = {"negative_root_rescale": -1}
        return data

    def to_tsv(self) -> str:
        lines = []
        for x, y, terms in self.export_rows():
            rhs = ";".join(f"{c}*{lab}" for lab, c in terms)
            lines.append(f"{x}\t{y}\t{rhs}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# standalone operation wrappers


def bracket_g(x: Element, y: Element, table: ChevalleyAlgebra) -> Element:
    for el in (x, y):
        for i in el:
            if not 0 <= i < table.dim:
                raise KeyError(f"label index {i} not in the table")
    return table.bracket(x, y)


def coroot(alpha: DivisorClass, table: ChevalleyAlgebra) -> tuple[int, ...]:
    return table.coroot(alpha)


def killing_form(x: Element, y: Element, table: ChevalleyAlgebra) -> int:
    return table.killing(x, y)


def dual_coxeter(table: ChevalleyAlgebra) -> int:
    return table.dual_coxeter()


# ---------------------------------------------------------------------------
# loop and affine brackets


def loop_element(label_idx: int, level: int, coeff: int = 1) -> LoopElement:
    return {(label_idx, level): coeff}


def bracket_loop(x: LoopElement, y: LoopElement, table: ChevalleyAlgebra) -> LoopElement:
    """[a e_{nF}, b e_{mF}] = [a, b] e_{(n+m)F} on finitely supported sums."""
    out: dict = {}
    for (i, n), ci in x.items():
        for (j, m), cj in y.items():
            w = table.bracket({i: 1}, {j: 1})
            if not w:
                continue
            c = ci * cj
            lvl = n + m
            for k, ck in w.items():
                key = (k, lvl)
                v = out.get(key, 0) + c * ck
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
    return out


@dataclass
class AffineElement:
    """Finitely supported loop element plus a central coordinate."""

    terms: LoopElement
    central: int = 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineElement)
            and _pruned(self.terms) == _pruned(other.terms)
            and self.central == other.central
        )

    def is_zero(self) -> bool:
        return self.central == 0 and not _pruned(self.terms)

    @classmethod
    def basis(cls, label_idx: int, level: int) -> "AffineElement":
        return cls({(label_idx, level): 1}, 0)

    @classmethod
    def center(cls, coeff: int = 1) -> "AffineElement":
        return cls({}, coeff)

    def __add__(self, other: "AffineElement") -> "AffineElement":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return AffineElement(_pruned(terms), self.central + other.central)

    def scale(self, c: int) -> "AffineElement":
        return AffineElement({k: c * v for k, v in self.terms.items() if c * v}, c * self.central)


def _pruned(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def bracket_affine(x: AffineElement, y: AffineElement, table: ChevalleyAlgebra) -> AffineElement:
    """Centrally extended bracket: loop part plus n*delta_{n+m,0}*k(a,b)*c.

    The central coordinates of the inputs never contribute.
    """
    terms = bracket_loop(x.terms, y.terms, table)
    central = 0
    for (i, n), ci in x.terms.items():
        if n == 0:
            continue
        for (j, m), cj in y.terms.items():
            if n + m == 0:
                kv = table.killing_basis(i, j)
                if kv:
                    central += n * ci * cj * kv
    return AffineElement(_pruned(terms), central)


# ---------------------------------------------------------------------------
# Jacobi verification suites


def jacobi_witness_finite(table: ChevalleyAlgebra):
    """First failing basis triple of the finite Jacobi identity, or None.

    Runs over all unordered triples i < j < k; pairs with vanishing brackets
    are skipped via the sparse table, which is what makes the 248-dimensional
    case tractable.
    """
    dim = table.dim
    t = table.table
    for i in range(dim):
        ti = t[i]
        for j in range(i + 1, dim):
            tj = t[j]
            b_ij = ti.get(j)
            for k in range(j + 1, dim):
                b_jk = tj.get(k)
                b_ik = ti.get(k)
                if b_ij is None and b_jk is None and b_ik is None:
                    continue
                acc: dict = {}
                # [i, [j, k]]
                if b_jk is not None:
                    for m, cm in b_jk:
                        row = ti.get(m)
                        if row is None:
                            continue
                        for p, cp in row:
                            acc[p] = acc.get(p, 0) + cm * cp
                # [j, [k, i]] = -[j, [i, k]]
                if b_ik is not None:
                    for m, cm in b_ik:
                        row = tj.get(m)
                        if row is None:
                            continue
                        for p, cp in row:
                            acc[p] = acc.get(p, 0) - cm * cp
                # [k, [i, j]]
                if b_ij is not None:
                    tk = t[k]
                    for m, cm in b_ij:
                        row = tk.get(m)
                        if row is None:
                            continue
                        for p, cp in row:
                            acc[p] = acc.get(p, 0) + cm * cp
                if any(acc.values()):
                    return (
                        table.label_str(i),
                        table.label_str(j),
                        table.label_str(k),
                        {table.label_str(p): c for p, c in acc.items() if c},
                    )
    return None


def jacobi_witness_affine_sampled(
    table: ChevalleyAlgebra,
    max_level: int = 3,
    samples: int = 100000,
    seed: int = 0,
):
    """Seeded sampling of the affine Jacobi identity with central terms."""
    rng = random.Random(seed)
    basis = [
        AffineElement.basis(i, n)
        for i in range(table.dim)
        for n in range(-max_level, max_level + 1)
    ]
    basis.append(AffineElement.center())
    for _ in range(samples):
        x, y, z = (rng.choice(basis) for _ in range(3))
        t1 = bracket_affine(x, bracket_affine(y, z, table), table)
        t2 = bracket_affine(y, bracket_affine(z, x, table), table)
        t3 = bracket_affine(z, bracket_affine(x, y, table), table)
        total = t1 + t2 + t3
        if not total.is_zero():
            return (x, y, z, total)
    return None


# ---------------------------------------------------------------------------
# independence of the extended root


@dataclass
class ExtRootReport:
    mode: str
    k: int
    checked_pairs: int
    passed: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "k": self.k,
            "checked_pairs": self.checked_pairs,
            "passed": self.passed,
            "witness": self.witness,
        }


def verify_extended_root_independence(
    config: AffineCurveConfig,
    k: int,
    mode: str = "affine",
    max_level: int = 2,
    sample: Optional[int] = None,
    seed: int = 0,
) -> ExtRootReport:
    """Check that re-choosing the extended node C_k preserves the loop or
    affine bracket tables.

    The relabeling sends x_beta to x_alpha e_{nF} where beta = alpha + nF
    with alpha in the old finite system, keeps h_i for shared nodes, and maps
    the new Cartan generator attached to C_0 to -h_{alpha_0}, corrected by
    2 m^* e_c at level zero in affine mode.  The new system's own structure
    constants are built with the transported cocycle
    eps'(beta_1, beta_2) = eps(alpha_1, alpha_2), as the relabeling induces.
    """
    if mode not in ("loop", "affine"):
        raise ValueError("mode must be 'loop' or 'affine'")
    if config.marks[k] != 1:
        raise ValueError(f"node C_{k} has mark {config.marks[k]} != 1")

    old_base = [c for i, c in enumerate(config.nodes) if i != 0]
    phi = RootSystem.from_base(old_base)
    alg_phi = ChevalleyAlgebra(phi)
    F = config.F

    if k == 0:
        new_base = old_base
        psi = phi
        alg_psi = alg_phi
        levels = {beta: 0 for beta in phi.roots}
        fins = {beta: beta for beta in phi.roots}
    else:
        new_base = [c for i, c in enumerate(config.nodes) if i != k]
        psi = RootSystem.from_base(new_base)
        levels = {}
        fins = {}
        phi_roots = set(phi.roots)
        for beta in psi.roots:
            for n in (0, 1, -1):
                alpha = beta - n * F
                if alpha in phi_roots:
                    levels[beta] = n
                    fins[beta] = alpha
                    break
            else:
                raise AssertionError(f"{beta} is not a shifted old root")
        alg_psi = ChevalleyAlgebra(
            psi, sign=lambda b1, b2: alg_phi.structure_sign(fins[b1], fins[b2])
        )

    m2 = 2 * alg_phi.dual_coxeter()
    alpha0 = phi.highest_root
    h_alpha0 = {i: c for i, c in enumerate(phi.coords(alpha0)) if c}
    pos_c0 = new_base.index(config.nodes[0]) if k != 0 else None

    def tau_basis(idx: int, level: int) -> AffineElement:
        """Image of a new-system basis element at the given loop level."""
        kind, payload = alg_psi.labels[idx]
        if kind == "x":
            alpha = fins[payload]
            j = alg_phi.index[("x", alpha)]
            return AffineElement.basis(j, level + levels[payload])
        if k != 0 and payload == pos_c0:
            terms = {(i, level): -c for i, c in h_alpha0.items()}
            central = m2 if (mode == "affine" and level == 0) else 0
            return AffineElement(terms, central)
        old_node = new_base[payload]
        j = old_base.index(old_node)
        return AffineElement.basis(j, level)

    def tau(el: AffineElement) -> AffineElement:
        out = AffineElement({}, el.central)
        for (i, n), c in el.terms.items():
            out = out + tau_basis(i, n).scale(c)
        return out

    def bra(a: AffineElement, b: AffineElement, alg: ChevalleyAlgebra) -> AffineElement:
        if mode == "affine":
            return bracket_affine(a, b, alg)
        return AffineElement(bracket_loop(a.terms, b.terms, alg), 0)

    pairs = [
        (i, n)
        for i in range(alg_psi.dim)
        for n in range(-max_level, max_level + 1)
    ]
    candidates = [(u, v) for u in pairs for v in pairs]
    if mode == "affine":
        candidates += [(u, "c") for u in pairs] + [("c", u) for u in pairs]
    if sample is not None and sample < len(candidates):
        rng = random.Random(seed)
        candidates = rng.sample(candidates, sample)

    def as_element(key) -> AffineElement:
        if key == "c":
            return AffineElement.center()
        return AffineElement.basis(*key)

    checked = 0
    for u_key, v_key in candidates:
        u, v = as_element(u_key), as_element(v_key)
        lhs = bra(tau(u), tau(v), alg_phi)
        rhs = tau(bra(u, v, alg_psi))
        checked += 1
        if lhs != rhs:
            def describe(key):
                if key == "c":
                    return "c"
                return f"{alg_psi.label_str(key[0])}@n{key[1]}"
            witness = {
                "pair": [describe(u_key), describe(v_key)],
                "lhs": _loop_str(lhs, alg_phi),
                "rhs": _loop_str(rhs, alg_phi),
            }
            return ExtRootReport(mode, k, checked, False, witness)
    return ExtRootReport(mode, k, checked, True)


def _loop_str(el: AffineElement, alg: ChevalleyAlgebra) -> str:
    parts = [
        f"{c}*{alg.label_str(i)}@n{n}"
        for (i, n), c in sorted(el.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        if c
    ]
    if el.central:
        parts.append(f"{el.central}*c")
    return " + ".join(parts) if parts else "0"
