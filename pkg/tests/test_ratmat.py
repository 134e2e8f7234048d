import random
from fractions import Fraction

import pytest

from ginshape.ratmat import RationalMatrix


def test_rank_of_identity_and_singular():
    eye = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert eye.rank() == 3
    singular = RationalMatrix([[1, 2], [2, 4]])
    assert singular.rank() == 1
    assert RationalMatrix([[0, 0], [0, 0]]).rank() == 0


def test_rank_with_fraction_entries():
    m = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]])
    assert m.rank() == 2
    proportional = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)],
                                   [Fraction(3, 4), Fraction(1, 2)]])
    assert proportional.rank() == 1


def test_pivot_columns_are_leftmost():
    m = RationalMatrix([
        [0, 2, 1, 0],
        [0, 4, 2, 1],
    ])
    _, pivots = m.echelon()
    assert pivots == [1, 3]


def test_kernel_basis_annihilates():
    rows = [
        [1, 2, 3, 4],
        [2, 4, 6, 8],
        [0, 1, 1, 1],
    ]
    m = RationalMatrix(rows)
    basis = m.kernel_basis()
    assert len(basis) == 4 - m.rank() == 2
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_rank_plus_nullity():
    rng = random.Random(9)
    for _ in range(25):
        rows_n = rng.randint(1, 6)
        cols_n = rng.randint(1, 6)
        m = RationalMatrix([[rng.randint(-4, 4) for _ in range(cols_n)]
                            for _ in range(rows_n)])
        assert m.rank() + len(m.kernel_basis()) == cols_n


def test_known_rank_from_row_combinations():
    # three independent rows plus random integer combinations of them
    rng = random.Random(31)
    base = [
        [1, 0, 0, 2, 5],
        [0, 1, 0, -1, 3],
        [0, 0, 1, 4, -2],
    ]
    rows = list(base)
    for _ in range(7):
        coeffs = [rng.randint(-3, 3) for _ in range(3)]
        rows.append([sum(c * r[j] for c, r in zip(coeffs, base)) for j in range(5)])
    assert RationalMatrix(rows).rank() == 3


def test_empty_and_ragged():
    empty = RationalMatrix([], cols=4)
    assert empty.rank() == 0
    assert len(empty.kernel_basis()) == 4
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [1]])
    with pytest.raises(ValueError):
        RationalMatrix([])
