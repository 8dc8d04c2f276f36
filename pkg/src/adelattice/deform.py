"""Formal graded quadratic integrability systems over symbolic unknowns.

One unknown phi_gamma per positive (affine) root up to a truncation level,
plus Cartan-direction unknowns phi^i at each positive level.  Each equation
reads  dbar phi_w + sum_t c_t phi_{u_t} phi_{v_t} = 0  where the sum runs
over unordered factor pairs u + v = w of positive affine roots and c_t is
the coefficient of the w-basis vector in [X_u, X_v], factors written in
canonical solve order.  Nothing analytic is modeled: an equation is just its
quadratic right-hand side, and the grading by height makes the whole system
strictly triangular.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chevalley import ChevalleyAlgebra
from .picard import DivisorClass, intersect
from .roots import RootSystem


@dataclass(frozen=True)
class Unknown:
    """A symbol phi_{gamma + level*F} (kind 'root') or phi^i at a positive
    level (kind 'cartan', index 1-based)."""

    kind: str
    root: Optional[DivisorClass]
    cartan: Optional[int]
    level: int

    @property
    def label(self) -> str:
        if self.kind == "root":
            body = "phi[" + ",".join(str(c) for c in self.root.coeffs) + "]"
            return f"{body}@{self.level}"
        return f"phi^{self.cartan}@{self.level}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "root": self.root.to_json() if self.root is not None else None,
            "cartan": self.cartan,
            "level": self.level,
        }


@dataclass
class Term:
    coeff: int
    f1: Unknown
    f2: Unknown

    def to_json(self) -> dict:
        return {"coeff": self.coeff, "f1": self.f1.label, "f2": self.f2.label}


@dataclass
class Equation:
    lhs: Unknown
    terms: list

    def to_json(self) -> dict:
        return {"lhs": self.lhs.label, "terms": [t.to_json() for t in self.terms]}


@dataclass
class DeformationSystem:
    algebra: ChevalleyAlgebra
    truncation: int
    unknowns: list
    equations: list

    def equation_for(self, unknown: Unknown) -> Equation:
        for eq in self.equations:
            if eq.lhs == unknown:
                return eq
        raise KeyError(unknown.label)

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "unknowns": [u.to_json() for u in self.unknowns],
            "equations": [e.to_json() for e in self.equations],
            "order": [u.label for u in solve_order(self)],
        }


def _sort_key(system_heights, u: Unknown):
    """Solve-order key: stage, then unknown class, then affine height, with
    descending-lex tie break on the finite root part.

    Stage n gathers the positive-root unknowns at level n together with the
    negative-root and Cartan unknowns at level n+1, in that order; this is
    the order in which the equations actually close.
    """
    if u.kind == "cartan":
        return (u.level - 1, 2, 0, (), u.cartan)
    ht = system_heights[u.root]
    if ht > 0:
        stage, cls = u.level, 0
    else:
        stage, cls = u.level - 1, 1
    coxeter = system_heights["coxeter"]
    aff = u.level * coxeter + ht
    return (stage, cls, aff, tuple(-c for c in u.root.coeffs), 0)


def _heights(alg: ChevalleyAlgebra) -> dict:
    rs = alg.rs
    hts: dict = {a: rs.height(a) for a in rs.roots}
    hts["coxeter"] = rs.height(rs.highest_root) + 1
    return hts


def generate_g_system(alg: ChevalleyAlgebra) -> DeformationSystem:
    """Integrability system of the finite algebra: one equation per positive
    root, terms over positive-root pair decompositions with coefficients
    from the structure-constant table."""
    return generate_loop_system(alg, 0)


def generate_loop_system(alg: ChevalleyAlgebra, truncation: int) -> DeformationSystem:
    """Integrability system of the loop algebra up to the truncation level.

    Levels 0..N carry the positive-root unknowns; levels 1..N additionally
    the negative-root and Cartan-direction unknowns.  The level-0 slice is
    exactly the finite system.
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    rs = alg.rs
    heights = _heights(alg)
    positives = sorted(rs.positive_roots, key=lambda a: (rs.height(a), tuple(-c for c in a.coeffs)))
    unknowns = []
    for n in range(truncation + 1):
        unknowns += [Unknown("root", a, None, n) for a in positives]
    for n in range(1, truncation + 1):
        unknowns += [Unknown("root", -a, None, n) for a in positives]
        unknowns += [Unknown("cartan", None, i + 1, n) for i in range(rs.rank)]
    unknowns.sort(key=lambda u: _sort_key(heights, u))
    index = {(u.kind, u.root, u.cartan, u.level): u for u in unknowns}

    def find_root_unknown(gamma: DivisorClass, level: int) -> Optional[Unknown]:
        return index.get(("root", gamma, None, level))

    root_unknowns = [u for u in unknowns if u.kind == "root"]
    root_set = set(rs.roots)
    equations = []
    for w in unknowns:
        terms = []
        seen_pairs = set()
        if w.kind == "root":
            gamma, n = w.root, w.level
            # root-root factor pairs
            for u in root_unknowns:
                if u.level > n:
                    continue
                beta = gamma - u.root
                if not (beta in root_set):
                    continue
                v = find_root_unknown(beta, n - u.level)
                if v is None:
                    continue
                pair = tuple(sorted((u.label, v.label)))
                if pair in seen_pairs:
                    continue
                seen_pairs.add(pair)
                f1, f2 = sorted((u, v), key=lambda q: _sort_key(heights, q))
                coeff = alg.structure_sign(f1.root, f2.root)
                terms.append(Term(coeff, f1, f2))
            # Cartan cross terms
            for p in range(1, n + 1):
                v = find_root_unknown(gamma, n - p)
                if v is None:
                    continue
                for i in range(rs.rank):
                    pairing = -intersect(gamma, rs.base[i])
                    if pairing == 0:
                        continue
                    cu = index[("cartan", None, i + 1, p)]
                    f1, f2 = sorted((v, cu), key=lambda q: _sort_key(heights, q))
                    # coefficient of x_gamma in [X_f1, X_f2]
                    coeff = -pairing if f1.kind == "root" else pairing
                    terms.append(Term(coeff, f1, f2))
        else:
            n, i = w.level, w.cartan - 1
            for alpha in positives:
                a_i = rs.coords(alpha)[i]
                if a_i == 0:
                    continue
                for p in range(0, n):
                    u = find_root_unknown(alpha, p)
                    v = find_root_unknown(-alpha, n - p)
                    if u is None or v is None:
                        continue
                    # [x_alpha e_p, x_{-alpha} e_q] = h_alpha e_{p+q}
                    f1, f2 = sorted((u, v), key=lambda q: _sort_key(heights, q))
                    terms.append(Term(a_i if f1 is u else -a_i, f1, f2))
        terms.sort(key=lambda t: (_sort_key(heights, t.f1), _sort_key(heights, t.f2)))
        equations.append(Equation(w, terms))
    return DeformationSystem(alg, truncation, unknowns, equations)


def solve_order(system: DeformationSystem) -> list:
    """Topological order of the unknowns; every equation must reference only
    strictly earlier unknowns, else the generator is broken."""
    heights = _heights(system.algebra)
    order = sorted(system.unknowns, key=lambda u: _sort_key(heights, u))
    pos = {u.label: i for i, u in enumerate(order)}
    for eq in system.equations:
        w = pos[eq.lhs.label]
        for t in eq.terms:
            if pos[t.f1.label] >= w or pos[t.f2.label] >= w:
                raise ValueError(
                    f"cyclic dependency: equation for {eq.lhs.label} references "
                    f"{t.f1.label} * {t.f2.label}"
                )
    return order


@dataclass
class FiltrationReport:
    ok: bool
    violations: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": self.violations}


def filtration_check(system: DeformationSystem) -> FiltrationReport:
    """Verify the strict upper-triangular shape: every term's factors are
    positive (affine) roots whose weights sum to the equation's weight, so
    each factor sits at strictly smaller affine height than the target."""
    heights = _heights(system.algebra)
    coxeter = heights["coxeter"]
    rs = system.algebra.rs

    def weight(u: Unknown):
        if u.kind == "cartan":
            return (None, u.level)
        return (u.root, u.level)

    def aff_height(u: Unknown) -> int:
        if u.kind == "cartan":
            return u.level * coxeter
        return u.level * coxeter + heights[u.root]

    violations = []
    for eq in system.equations:
        hw = aff_height(eq.lhs)
        wroot, wlevel = weight(eq.lhs)
        for t in eq.terms:
            r1, n1 = weight(t.f1)
            r2, n2 = weight(t.f2)
            total = (r1 or system.algebra.rs.base[0] * 0) + (r2 or system.algebra.rs.base[0] * 0)
            target = wroot if wroot is not None else system.algebra.rs.base[0] * 0
            if total != target or n1 + n2 != wlevel:
                violations.append(
                    {"equation": eq.lhs.label, "term": [t.f1.label, t.f2.label],
                     "reason": "weights do not sum to the target"}
                )
                continue
            for f in (t.f1, t.f2):
                if aff_height(f) >= hw or aff_height(f) <= 0:
                    violations.append(
                        {"equation": eq.lhs.label, "term": [t.f1.label, t.f2.label],
                         "reason": f"factor {f.label} does not strictly lower the height"}
                    )
    return FiltrationReport(not violations, violations)


# ---------------------------------------------------------------------------
# grading of E_8 by the node next to the extended one


def restriction_degree(d: DivisorClass, c: DivisorClass) -> int:
    """Degree of the line bundle O(D) restricted to the (-2)-curve C."""
    return intersect(d, c)


@dataclass
class GradingReport:
    base: list  # chain-ordered base C_1..C_8
    distinguished: DivisorClass  # C_1
    positive_counts: dict
    full_counts: dict
    strata: dict
    highest_root: DivisorClass

    def to_json(self) -> dict:
        return {
            "base": [b.to_json() for b in self.base],
            "distinguished": self.distinguished.to_json(),
            "positive_counts": {str(k): v for k, v in sorted(self.positive_counts.items())},
            "full_counts": {str(k): v for k, v in sorted(self.full_counts.items())},
            "highest_root": self.highest_root.to_json(),
        }


def a1_grading(rs: RootSystem, chain_base: Optional[list] = None) -> GradingReport:
    """Partition the E_8 roots by their coefficient on the node adjacent to
    the extended one (the end of the long chain).

    The positive roots split 63 / 56 / 1 over coefficient values 0 / 1 / 2:
    the positive roots of the E_7 subalgebra, the weights of its
    56-dimensional representation, and the highest root.
    """
    from .roots import e8_chain_base_order

    if chain_base is None:
        chain_base = e8_chain_base_order(rs)
    if len(chain_base) != 8:
        raise ValueError("grading needs an E_8 base")
    ordered = RootSystem(rs.roots, chain_base)
    c1 = chain_base[0]
    strata: dict = {}
    for alpha in ordered.roots:
        a1 = ordered.coords(alpha)[0]
        strata.setdefault(a1, []).append(alpha)
    positive_counts = {}
    for a1, roots_list in strata.items():
        cnt = sum(1 for a in roots_list if ordered.is_positive(a))
        if a1 >= 0 and cnt:
            positive_counts[a1] = cnt
    full_counts = {a1: len(v) for a1, v in strata.items()}
    if sorted(full_counts) != [-2, -1, 0, 1, 2]:
        raise ValueError(f"unexpected grading values {sorted(full_counts)}: wrong labeling")
    two = strata[2]
    if len(two) != 1 or two[0] != ordered.highest_root:
        raise ValueError("the coefficient-2 stratum is not the highest root: wrong labeling")
    return GradingReport(
        base=list(chain_base),
        distinguished=c1,
        positive_counts=positive_counts,
        full_counts=full_counts,
        strata=strata,
        highest_root=two[0],
    )


@dataclass
class SummandBlock:
    name: str
    rank: int
    degree: int
    members: list  # classes, or None entries for trivial summands

    def to_json(self) -> dict:
        return {"name": self.name, "rank": self.rank, "degree": self.degree}


@dataclass
class SummandReport:
    blocks: list
    degree_multiset: dict
    ok: bool

    def to_json(self) -> dict:
        return {
            "blocks": [b.to_json() for b in self.blocks],
            "degree_multiset": {str(k): v for k, v in sorted(self.degree_multiset.items())},
            "ok": self.ok,
        }


def l248_summands(
    grading: GradingReport,
    f_class: DivisorClass,
    alpha0: DivisorClass,
    c0: DivisorClass,
) -> SummandReport:
    """Block decomposition of the 248-dimensional level slice after twisting
    the negative 56-block by the null class F, with each block's restriction
    degree to the extended curve C_0 verified member by member.

    Expected ranks (133, 1, 56, 56, 1, 1) and degrees (0, 0, +1, -1, +2, -2).
    """
    if alpha0 != grading.highest_root:
        raise ValueError("alpha0 must be the highest root of the graded system")
    strata = grading.strata

    def degrees_of(classes) -> set:
        return {restriction_degree(d, c0) for d in classes}

    blocks = []
    e7_members = list(strata.get(0, []))
    blocks.append(SummandBlock("e7-part", 7 + len(e7_members), 0, e7_members))
    blocks.append(SummandBlock("trivial", 1, 0, []))
    vplus = list(strata.get(1, []))
    blocks.append(SummandBlock("v-plus", len(vplus), 1, vplus))
    vminus = [a + f_class for a in strata.get(-1, [])]
    blocks.append(SummandBlock("v-minus-twisted", len(vminus), -1, vminus))
    blocks.append(SummandBlock("top", 1, 2, [alpha0 - f_class]))
    blocks.append(SummandBlock("bottom", 1, -2, [f_class - alpha0]))

    ok = True
    if [b.rank for b in blocks] != [133, 1, 56, 56, 1, 1]:
        ok = False
    degree_multiset: dict = {}
    for b in blocks:
        member_degrees = degrees_of(b.members) if b.members else {0}
        if member_degrees != {b.degree}:
            ok = False
        degree_multiset[b.degree] = degree_multiset.get(b.degree, 0) + b.rank
    if sum(b.rank for b in blocks) != 248:
        ok = False
    # the level-0 grading value is recovered as the restriction degree
    for a1, classes in strata.items():
        for d in classes:
            if restriction_degree(d, c0) != a1:
                ok = False
    return SummandReport(blocks, degree_multiset, ok)
