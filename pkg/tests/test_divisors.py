import random

import pytest

from ginshape.divisors import (
    Configuration,
    DivisorClass,
    canonical_class,
    exceptional_class,
    fatpoint_class,
    intersect,
    line_class,
    neg_curves,
)


def test_configuration_rejects_small_l():
    with pytest.raises(ValueError):
        Configuration(2)
    assert Configuration(3).npoints == 4


def test_basis_intersections():
    c = Configuration(3)
    e0 = line_class(c)
    assert intersect(e0, e0) == 1
    assert intersect(exceptional_class(c, 1), exceptional_class(c, 2)) == 0
    assert intersect(exceptional_class(c, 1), exceptional_class(c, 1)) == -1
    assert intersect(e0, exceptional_class(c, 1)) == 0


def test_line_transform_self_intersection():
    # expand (e0 - e1 - e2 - e3)^2 bilinearly: 1 - 3
    c = Configuration(3)
    a = neg_curves(c).line_transform
    assert intersect(a, a) == -2


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        intersect(line_class(Configuration(3)), line_class(Configuration(4)))


def test_canonical_class_values():
    c = Configuration(3)
    k = canonical_class(c)
    assert intersect(k, line_class(c)) == -3
    assert intersect(k, k) == 5  # 9 - (l+1)
    f = DivisorClass(4, (1, 1, 3, 1))
    assert intersect(DivisorClass(4, (1, 1, 1, 3)), k) == -6
    assert intersect(f, k) == -6  # order of multiplicities is immaterial against K
    for l in (4, 5, 6):
        kk = canonical_class(Configuration(l))
        assert intersect(kk, kk) == 9 - (l + 1)


def test_neg_curve_enumeration():
    c = Configuration(3)
    curves = neg_curves(c)
    assert len(curves) == 8
    listed = curves.curves
    assert listed[0] == DivisorClass(1, (1, 1, 1, 0))
    assert listed[1] == DivisorClass(1, (1, 0, 0, 1))
    assert listed[3] == DivisorClass(1, (0, 0, 1, 1))
    assert listed[4] == exceptional_class(c, 1)
    assert all(intersect(x, x) < 0 for x in curves)
    assert len(neg_curves(Configuration(4))) == 10


@pytest.mark.parametrize("l", [3, 4, 5])
def test_neg_curve_squares_and_canonical_pairings(l):
    c = Configuration(l)
    curves = neg_curves(c)
    k = canonical_class(c)
    assert intersect(curves.line_transform, curves.line_transform) == 1 - l
    assert intersect(curves.line_transform, k) == -3 + l
    for b in curves.joining_lines:
        assert intersect(b, b) == -1
        assert intersect(b, k) == -1
    for e in curves.exceptional:
        assert intersect(e, e) == -1
        assert intersect(e, k) == -1


def test_fatpoint_class():
    c = Configuration(3)
    f = fatpoint_class(c, 12, 6)
    assert f == DivisorClass(12, (6, 6, 6, 6))
    assert intersect(f, line_class(c)) == 12
    assert intersect(f, neg_curves(c).line_transform) == -6
    with pytest.raises(ValueError):
        fatpoint_class(c, 12, 0)
    with pytest.raises(ValueError):
        fatpoint_class(c, -1, 1)


def test_class_arithmetic():
    x = DivisorClass(2, (1, 0, -1, 3))
    y = DivisorClass(1, (1, 1, 1, 1))
    assert x + y == DivisorClass(3, (2, 1, 0, 4))
    assert x - y == DivisorClass(1, (0, -1, -2, 2))
    assert 3 * y == DivisorClass(3, (3, 3, 3, 3))
    assert -x == DivisorClass(-2, (-1, 0, 1, -3))


def test_bilinearity_and_signature_random():
    rng = random.Random(1702)
    for _ in range(200):
        l = rng.choice((3, 4, 5))
        n = l + 1
        x, y, z = (
            DivisorClass(rng.randint(-30, 30), tuple(rng.randint(-30, 30) for _ in range(n)))
            for _ in range(3)
        )
        assert intersect(x + y, z) == intersect(x, z) + intersect(y, z)
        assert intersect(x, y) == intersect(y, x)
    # Gram matrix of the basis e0, e1, ..., e_{l+1} is diag(1, -1, ..., -1)
    c = Configuration(4)
    basis = [line_class(c)] + [exceptional_class(c, i) for i in range(1, 6)]
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            expected = 0 if i != j else (1 if i == 0 else -1)
            assert intersect(u, v) == expected
