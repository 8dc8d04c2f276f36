import random

import pytest

from adelattice.picard import (
    DivisorClass,
    SurfaceLattice,
    canonical_class,
    class_kind,
    euler_characteristic,
    intersect,
)


def test_basis_products():
    lat = SurfaceLattice(9)
    assert intersect(lat.h, lat.h) == 1
    assert intersect(lat.l(1), lat.l(2)) == 0
    for i in range(1, 10):
        assert intersect(lat.l(i), lat.l(i)) == -1
        assert intersect(lat.h, lat.l(i)) == 0


def test_line_through_two_points_meets_canonical():
    lat = SurfaceLattice(9)
    d = lat.h - lat.l(1) - lat.l(2)
    assert intersect(d, canonical_class(9)) == -1


def test_canonical_class_squares():
    assert canonical_class(9).to_json() == [-3] + [1] * 9
    assert intersect(canonical_class(9), canonical_class(9)) == 0
    assert intersect(canonical_class(8), canonical_class(8)) == 1
    assert intersect(canonical_class(1), canonical_class(1)) == 8


def test_class_kind_examples():
    lat = SurfaceLattice(9)
    assert class_kind(lat.l(9)) == 1
    assert class_kind(lat.l(1) - lat.l(2)) == 2
    d = DivisorClass([3, -2, -1, -1, -1, -1, -1, -1, -1, -1])
    assert class_kind(d) == 3
    # h satisfies h.h = 1, h.K = -3, so it is a (-(-1))-class
    assert class_kind(lat.h) == -1
    # K itself satisfies neither pair of equations
    assert class_kind(canonical_class(9)) is None


def test_class_kinds_are_exclusive():
    rng = random.Random(3)
    for _ in range(200):
        d = DivisorClass([rng.randint(-4, 4) for _ in range(10)])
        m = class_kind(d)
        if m is not None:
            assert intersect(d, d) == -m
            assert intersect(d, canonical_class(9)) == m - 2


def test_euler_characteristic():
    lat = SurfaceLattice(9)
    alpha = lat.l(1) - lat.l(2)
    assert euler_characteristic(alpha) == 0
    assert euler_characteristic(lat.zero()) == 1
    assert euler_characteristic(-canonical_class(9)) == 1


def test_euler_characteristic_vanishes_on_roots(e8_roots):
    for alpha in e8_roots.roots:
        assert euler_characteristic(alpha) == 0


def test_bilinearity_random():
    rng = random.Random(11)
    for _ in range(300):
        d, e, g = (DivisorClass([rng.randint(-9, 9) for _ in range(10)]) for _ in range(3))
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        assert intersect(a * d + b * e, g) == a * intersect(d, g) + b * intersect(e, g)
        assert intersect(d, e) == intersect(e, d)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        intersect(SurfaceLattice(8).h, SurfaceLattice(9).h)
    with pytest.raises(ValueError):
        SurfaceLattice(8).h + SurfaceLattice(9).h


def test_serialization_roundtrip():
    d = DivisorClass([3, -2, -1, 0, 1, -1, -1, -1, -1, -1])
    assert DivisorClass.from_json(d.to_json()) == d


def test_immutability_and_hash():
    d = DivisorClass([1, 0, 0])
    with pytest.raises(AttributeError):
        d.coeffs = (0, 0, 0)
    assert len({d, DivisorClass([1, 0, 0])}) == 1


def test_lattice_bounds():
    with pytest.raises(ValueError):
        SurfaceLattice(0)
    with pytest.raises(ValueError):
        SurfaceLattice(10)
    with pytest.raises(ValueError):
        SurfaceLattice(5).l(6)
