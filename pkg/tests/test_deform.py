import copy
import json
import os

import pytest

from adelattice.chevalley import ChevalleyAlgebra
from adelattice.deform import (
    Equation,
    Term,
    Unknown,
    a1_grading,
    filtration_check,
    generate_g_system,
    generate_loop_system,
    l248_summands,
    restriction_degree,
    solve_order,
)
from adelattice.picard import SurfaceLattice, intersect
from adelattice.roots import RootSystem, e8_chain_base_order, standard_root_system

DATA = os.path.join(os.path.dirname(__file__), "data")


def test_a2_finite_system(a2_algebra):
    system = generate_g_system(a2_algebra)
    rs = a2_algebra.rs
    c1, c2 = rs.base
    eqs = {eq.lhs.label: eq for eq in system.equations}
    assert len(system.unknowns) == 3
    for simple in (c1, c2):
        u = Unknown("root", simple, None, 0)
        assert eqs[u.label].terms == []
    theta_eq = eqs[Unknown("root", c1 + c2, None, 0).label]
    assert len(theta_eq.terms) == 1
    t = theta_eq.terms[0]
    assert (t.f1.root, t.f2.root) == (c1, c2)
    assert t.coeff == a2_algebra.structure_sign(c1, c2)


def test_simple_root_equations_always_empty(e8_algebra):
    system = generate_g_system(e8_algebra)
    for eq in system.equations:
        if e8_algebra.rs.height(eq.lhs.root) == 1:
            assert eq.terms == []


def _pair_partition_oracle(rs, gamma):
    """Unordered positive decompositions of gamma, enumerated directly."""
    positives = set(rs.positive_roots)
    pairs = set()
    for beta in positives:
        delta = gamma - beta
        if delta in positives:
            pairs.add(frozenset((beta, delta)))
    return pairs


def test_e6_terms_match_partition_oracle():
    alg = ChevalleyAlgebra(standard_root_system("E6"))
    system = generate_g_system(alg)
    for eq in system.equations:
        got = {frozenset((t.f1.root, t.f2.root)) for t in eq.terms}
        assert got == _pair_partition_oracle(alg.rs, eq.lhs.root)
        for t in eq.terms:
            bracket = alg.bracket(alg.x(t.f1.root), alg.x(t.f2.root))
            assert bracket == {alg.index[("x", eq.lhs.root)]: t.coeff}


def test_loop_level_zero_matches_finite(a2_algebra):
    finite = generate_g_system(a2_algebra)
    loop = generate_loop_system(a2_algebra, 1)
    finite_eqs = {eq.lhs.label: eq for eq in finite.equations}
    for eq in loop.equations:
        if eq.lhs.kind == "root" and eq.lhs.level == 0 and a2_algebra.rs.is_positive(eq.lhs.root):
            other = finite_eqs[eq.lhs.label]
            assert [(t.coeff, t.f1.label, t.f2.label) for t in eq.terms] == [
                (t.coeff, t.f1.label, t.f2.label) for t in other.terms
            ]


def test_extended_node_equation_empty(a2_algebra):
    loop = generate_loop_system(a2_algebra, 1)
    theta = a2_algebra.rs.highest_root
    c0 = Unknown("root", -theta, None, 1)
    eq = loop.equation_for(c0)
    assert eq.terms == []


def test_cartan_equation_term_count(a2_algebra):
    loop = generate_loop_system(a2_algebra, 1)
    rs = a2_algebra.rs
    for i in range(rs.rank):
        eq = loop.equation_for(Unknown("cartan", None, i + 1, 1))
        expected = sum(1 for alpha in rs.positive_roots if rs.coords(alpha)[i] != 0)
        assert len(eq.terms) == expected


def test_loop_term_coefficients_match_brackets(a2_algebra):
    from adelattice.chevalley import bracket_loop

    alg = a2_algebra
    loop = generate_loop_system(alg, 2)

    def as_loop(u):
        if u.kind == "root":
            return {(alg.index[("x", u.root)], u.level): 1}
        return {(u.cartan - 1, u.level): 1}

    for eq in loop.equations:
        for t in eq.terms:
            out = bracket_loop(as_loop(t.f1), as_loop(t.f2), alg)
            if eq.lhs.kind == "root":
                key = (alg.index[("x", eq.lhs.root)], eq.lhs.level)
            else:
                key = (eq.lhs.cartan - 1, eq.lhs.level)
            assert out.get(key) == t.coeff


def test_golden_a2_affine_level2(a2_algebra):
    with open(os.path.join(DATA, "a2_affine_level2_system.json")) as f:
        golden = json.load(f)
    system = generate_loop_system(a2_algebra, 2)
    assert system.to_json() == golden


def test_solve_order_a2(a2_algebra):
    system = generate_g_system(a2_algebra)
    rs = a2_algebra.rs
    order = [u.label for u in solve_order(system)]
    c1, c2 = rs.base
    assert order == [
        Unknown("root", c1, None, 0).label,
        Unknown("root", c2, None, 0).label,
        Unknown("root", c1 + c2, None, 0).label,
    ]


def test_solve_order_is_level_major(a2_algebra):
    system = generate_loop_system(a2_algebra, 2)
    order = solve_order(system)
    pos = {u.label: i for i, u in enumerate(order)}
    rs = a2_algebra.rs
    level0 = [u for u in system.unknowns if u.kind == "root" and u.level == 0]
    neg1 = [
        u
        for u in system.unknowns
        if u.kind == "root" and u.level == 1 and not rs.is_positive(u.root)
    ]
    cart1 = [u for u in system.unknowns if u.kind == "cartan" and u.level == 1]
    assert max(pos[u.label] for u in level0) < min(pos[u.label] for u in neg1)
    assert max(pos[u.label] for u in neg1) < min(pos[u.label] for u in cart1)


def test_solve_order_terms_reference_earlier(e8_algebra):
    system = generate_g_system(e8_algebra)
    order = solve_order(system)
    pos = {u.label: i for i, u in enumerate(order)}
    for eq in system.equations:
        for t in eq.terms:
            assert pos[t.f1.label] < pos[eq.lhs.label]
            assert pos[t.f2.label] < pos[eq.lhs.label]


def test_solve_order_detects_cycles(a2_algebra):
    system = generate_g_system(a2_algebra)
    corrupt = copy.deepcopy(system)
    theta = a2_algebra.rs.highest_root
    theta_u = Unknown("root", theta, None, 0)
    first = corrupt.equations[0]
    first.terms.append(Term(1, theta_u, theta_u))
    with pytest.raises(ValueError):
        solve_order(corrupt)


def test_filtration_check_passes():
    alg = ChevalleyAlgebra(standard_root_system("E6"))
    assert filtration_check(generate_g_system(alg)).ok


def test_filtration_check_loop(a2_algebra):
    assert filtration_check(generate_loop_system(a2_algebra, 2)).ok


def test_filtration_check_catches_corruption(a2_algebra):
    system = generate_loop_system(a2_algebra, 1)
    corrupt = copy.deepcopy(system)
    rs = a2_algebra.rs
    theta = rs.highest_root
    # plant a term that lowers the weight
    bad = Term(1, Unknown("root", theta, None, 1), Unknown("root", -theta, None, 1))
    for eq in corrupt.equations:
        if eq.lhs.kind == "root" and eq.lhs.level == 0 and rs.height(eq.lhs.root) == 1:
            eq.terms.append(bad)
            break
    report = filtration_check(corrupt)
    assert not report.ok
    assert report.violations


# ---------------------------------------------------------------------------
# grading and level-slice blocks


def test_a1_grading_counts(e8_roots):
    report = a1_grading(e8_roots)
    assert report.positive_counts == {0: 63, 1: 56, 2: 1}
    assert report.full_counts == {-2: 1, -1: 56, 0: 126, 1: 56, 2: 1}
    assert report.strata[2] == [report.highest_root]


def test_a1_grading_stratum_sizes_match_e7(e8_roots):
    report = a1_grading(e8_roots)
    # the 126 coefficient-zero roots are an E_7 system; 56 is its minuscule
    # weight count
    zero = RootSystem.from_roots(report.strata[0])
    assert len(zero.roots) == 126
    assert len(zero.base) == 7


def test_a1_grading_stable_under_tail_relabeling(e8_roots):
    chain = e8_chain_base_order(e8_roots)
    permuted = [chain[0]] + chain[1:][::-1]
    report = a1_grading(e8_roots, chain_base=permuted)
    assert report.positive_counts == {0: 63, 1: 56, 2: 1}


def test_a1_grading_rejects_wrong_rank():
    rs = standard_root_system("A2")
    with pytest.raises(ValueError):
        a1_grading(rs, chain_base=list(rs.base))


def test_restriction_degrees():
    lat = SurfaceLattice(9)
    c = lat.l(1) - lat.l(2)
    assert restriction_degree(-1 * c, c) == 2
    f = -1 * lat.h * 0  # zero class
    assert restriction_degree(f, c) == 0


def test_l248_summands(e8_affine_cfg):
    finite = RootSystem.from_base(list(e8_affine_cfg.nodes[1:]))
    grading = a1_grading(finite, chain_base=list(e8_affine_cfg.nodes[1:]))
    report = l248_summands(grading, e8_affine_cfg.F, grading.highest_root, e8_affine_cfg.nodes[0])
    assert report.ok
    assert [(b.name, b.rank, b.degree) for b in report.blocks] == [
        ("e7-part", 133, 0),
        ("trivial", 1, 0),
        ("v-plus", 56, 1),
        ("v-minus-twisted", 56, -1),
        ("top", 1, 2),
        ("bottom", 1, -2),
    ]
    assert report.degree_multiset == {0: 134, 1: 56, -1: 56, 2: 1, -2: 1}


def test_summand_degrees_are_intersections(e8_affine_cfg):
    c0 = e8_affine_cfg.nodes[0]
    f = e8_affine_cfg.F
    for c in e8_affine_cfg.nodes:
        assert restriction_degree(-1 * c, c) == 2
        assert restriction_degree(f, c) == 0
