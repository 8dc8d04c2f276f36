import random

import pytest

from adelattice.curves import (
    NegativeClassQuery,
    corollary_step,
    enumerate_negative_classes,
    perpendicular_minus_one_class,
    reflect,
    weyl_orbit,
)
from adelattice.picard import DivisorClass, SurfaceLattice, canonical_class, class_kind, intersect


def test_lemma_bounds_on_enumerated_classes():
    for m in range(3, 10):
        result = enumerate_negative_classes(NegativeClassQuery(m))
        assert result.count > 0
        assert result.bounds_checked
        for d in result.classes:
            assert class_kind(d) == m
            a = d.degree
            assert 0 <= a <= 3
            signed = [-c for c in d.coeffs[1:]]  # coefficients a_i in D = a*h - sum a_i l_i
            assert all(-1 <= x <= 2 for x in signed)
            assert 1 in signed


def test_high_m_empty():
    for m in (10, 11, 12):
        assert enumerate_negative_classes(NegativeClassQuery(m)).count == 0


def test_m3_contains_classical_class():
    result = enumerate_negative_classes(NegativeClassQuery(3))
    assert DivisorClass([3, -2] + [-1] * 8) in result.classes


def test_cap_required_for_infinite_queries():
    with pytest.raises(ValueError):
        enumerate_negative_classes(NegativeClassQuery(1))
    with pytest.raises(ValueError):
        enumerate_negative_classes(NegativeClassQuery(2))


def test_minus_one_classes_small_cap():
    result = enumerate_negative_classes(NegativeClassQuery(1, n=8, cap=1))
    lat = SurfaceLattice(8)
    expected = {lat.l(i) for i in range(1, 9)}
    expected |= {lat.h - lat.l(i) - lat.l(j) for i in range(1, 9) for j in range(i + 1, 9)}
    assert set(result.classes) == expected


def test_minus_two_classes_match_roots(e8_roots):
    result = enumerate_negative_classes(NegativeClassQuery(2, n=8, cap=4))
    assert set(result.classes) == set(e8_roots.roots)


def test_corollary_step_example():
    d = DivisorClass([3, -2] + [-1] * 8)
    out = corollary_step(d)
    assert out == DivisorClass([3, -2, 0] + [-1] * 7)
    assert class_kind(out) == 2


def test_corollary_chain_to_minus_one():
    for d in enumerate_negative_classes(NegativeClassQuery(3)).classes:
        cur = d
        while class_kind(cur) > 1:
            cur = corollary_step(cur)
        assert class_kind(cur) == 1


def test_corollary_rejects_no_unit_coefficient():
    d = DivisorClass([0, -2] + [0] * 8)  # -2 l_1: a (-4)-class without any a_j = 1
    assert class_kind(d) == 4
    with pytest.raises(ValueError):
        corollary_step(d)


def test_reflect_basics(e8_roots):
    alpha = e8_roots.base[0]
    assert reflect(alpha, alpha) == -alpha
    lat = SurfaceLattice(8)
    fixed = lat.l(5) - lat.l(6)
    beta = lat.l(1) - lat.l(2)
    assert intersect(fixed, beta) == 0
    assert reflect(beta, fixed) == fixed
    with pytest.raises(ValueError):
        reflect(lat.l(1), lat.h)


def test_reflect_preserves_form_and_kind():
    rng = random.Random(8)
    lat = SurfaceLattice(9)
    roots = [lat.l(i) - lat.l(i + 1) for i in range(1, 9)]
    roots.append(lat.h - lat.l(1) - lat.l(2) - lat.l(3))
    for _ in range(200):
        alpha = rng.choice(roots)
        d = DivisorClass([rng.randint(-4, 4) for _ in range(10)])
        e = DivisorClass([rng.randint(-4, 4) for _ in range(10)])
        assert intersect(reflect(alpha, d), reflect(alpha, e)) == intersect(d, e)
        assert class_kind(reflect(alpha, d)) == class_kind(d)
        assert reflect(alpha, reflect(alpha, d)) == d
        assert reflect(alpha, canonical_class(9)) == canonical_class(9)


def test_orbit_of_l8_is_all_minus_one_classes(e8_roots):
    lat = SurfaceLattice(8)
    orbit = weyl_orbit(lat.l(8), e8_roots.base, cap=1000)
    assert not orbit.truncated
    assert len(orbit) == 240
    brute = enumerate_negative_classes(NegativeClassQuery(1, n=8, cap=7))
    assert set(orbit.classes) == set(brute.classes)


def test_orbit_of_canonical_class_is_fixed(e8_roots):
    orbit = weyl_orbit(canonical_class(8), e8_roots.base, cap=10)
    assert orbit.classes == [canonical_class(8)]


def test_orbit_rank_one():
    lat = SurfaceLattice(2)
    alpha = lat.l(1) - lat.l(2)
    orbit = weyl_orbit(alpha, [alpha], cap=10)
    assert set(orbit.classes) == {alpha, -alpha}


def test_orbit_truncation_flag(e8_affine_cfg):
    lat = SurfaceLattice(9)
    orbit = weyl_orbit(lat.l(9), list(e8_affine_cfg.nodes), cap=400)
    assert orbit.truncated
    assert len(orbit.classes) > 400


def _standard_base_9():
    lat = SurfaceLattice(9)
    return [lat.h - lat.l(1) - lat.l(2) - lat.l(3)] + [
        lat.l(i) - lat.l(i + 1) for i in range(1, 8)
    ]


def test_perpendicular_class_standard():
    assert perpendicular_minus_one_class(_standard_base_9()) == SurfaceLattice(9).l(9)


def test_perpendicular_class_permuted():
    lat = SurfaceLattice(9)
    # relabel l_1..l_9 by a cyclic shift: i -> i+1, 9 -> 1
    perm = {i: (i % 9) + 1 for i in range(1, 10)}

    def relabel(d):
        out = [d.coeffs[0]] + [0] * 9
        for i in range(1, 10):
            out[perm[i]] = d.coeffs[i]
        return DivisorClass(out)

    base = [relabel(b) for b in _standard_base_9()]
    assert perpendicular_minus_one_class(base) == relabel(lat.l(9))


def test_perpendicular_class_equivariance():
    rng = random.Random(17)
    base = _standard_base_9()
    lat = SurfaceLattice(9)
    l9 = lat.l(9)
    roots = base
    for _ in range(25):
        word = [rng.choice(roots) for _ in range(rng.randint(1, 8))]
        wbase, wl = base, l9
        for alpha in word:
            wbase = [reflect(alpha, b) for b in wbase]
            wl = reflect(alpha, wl)
        assert perpendicular_minus_one_class(wbase) == wl


def test_perpendicular_class_rejects_non_e8():
    lat = SurfaceLattice(9)
    bad = [lat.l(i) - lat.l(i + 1) for i in range(1, 9)]  # an A_8 base
    with pytest.raises(ValueError):
        perpendicular_minus_one_class(bad)
