"""Matrix family builder tests.

The multi-index oracle below recomputes each entry's sequence index from
the base-k digits of its position, independently of the recursive block
construction, so the two paths cross-check each other.
"""

from __future__ import annotations

import pytest

from kbonacci.builders import build_base, build_higher, build_lucas, build_q, fast_f, fast_term
from kbonacci.matrix import SquareMatrix, decompose, identity, zeros
from kbonacci.sequences import lucas_term, term

# grid shared by the structural tests: every (k, r) with dimension <= 27
GRID = [(k, r) for k in (2, 3, 4) for r in (1, 2, 3) if k**r <= 27]


def base_k_digits(position: int, k: int, r: int) -> list[int]:
    """r base-k digits of position, most significant first."""
    digits = []
    for _ in range(r):
        digits.append(position % k)
        position //= k
    return digits[::-1]


def entry_offset(row: int, col: int, k: int, r: int) -> int:
    """Index offset of entry (row, col), 0-based, from per-level digits."""
    total = 0
    for a, b in zip(base_k_digits(row, k, r), base_k_digits(col, k, r)):
        total += k - (a + 1) - (b + 1) + 1
    return total


def test_base_frozen_values():
    assert build_base(2, 1) == SquareMatrix([[1, 1], [1, 0]])
    assert build_base(2, 0) == identity(2)
    assert build_base(3, 3) == SquareMatrix([[4, 2, 1], [2, 1, 1], [1, 1, 0]])
    assert build_base(3, -2) == SquareMatrix([[0, 1, -1], [1, -1, 0], [-1, 0, 2]])


def test_higher_level_one_equals_base():
    for k in (2, 3, 4):
        for j in range(-5, 8):
            assert build_higher(k, 1, j) == build_base(k, j)


def test_higher_frozen_value():
    assert build_higher(2, 2, 1) == SquareMatrix(
        [[2, 1, 1, 1], [1, 1, 1, 0], [1, 1, 1, 0], [1, 0, 0, 1]]
    )


def test_multi_index_law():
    for k, r in GRID:
        dim = k**r
        for j in (-6, -1, 0, 1, 4, 12):
            m = build_higher(k, r, j)
            for row in range(dim):
                for col in range(dim):
                    expected = term(k, j + entry_offset(row, col, k, r))
                    assert m.entry(row, col) == expected, (k, r, j, row, col)


def test_symmetry():
    for k, r in GRID:
        for j in range(-6, 13):
            assert build_higher(k, r, j).is_symmetric(), (k, r, j)


def test_recurrence_law():
    for k, r in GRID:
        for j in range(-6, 9):
            total = zeros(k**r)
            for n in range(k):
                total = total + build_higher(k, r, j + n)
            assert total == build_higher(k, r, j + k), (k, r, j)


def test_block_structure_matches_decomposition():
    for k, r in GRID:
        if r == 1:
            continue
        for j in (-3, 0, 2, 7):
            blocks = decompose(build_higher(k, r, j), k)
            for row in range(k):
                for col in range(k):
                    expected = build_higher(k, r - 1, j + k - (row + 1) - (col + 1) + 1)
                    assert blocks[row][col] == expected, (k, r, j, row, col)


def test_q_frozen_values():
    assert build_q(2, 1) == SquareMatrix([[1, 1], [1, 0]])
    assert build_q(3, 1) == SquareMatrix([[1, 1, 0], [1, 0, 1], [1, 0, 0]])
    assert build_q(2, 2) == SquareMatrix(
        [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    )


def test_q_block_structure():
    for k, r in GRID:
        if r == 1:
            continue
        inner = k ** (r - 1)
        blocks = decompose(build_q(k, r), k)
        for row in range(k):
            for col in range(k):
                expected = identity(inner) if col == 0 or col == row + 1 else zeros(inner)
                assert blocks[row][col] == expected, (k, r, row, col)


def test_shift_law():
    for k, r in GRID:
        q = build_q(k, r)
        for j in range(-6, 13):
            assert build_higher(k, r, j) * q == build_higher(k, r, j + 1), (k, r, j)


def test_lucas_frozen_values():
    assert build_lucas(1, 1) == SquareMatrix([[3, 1], [1, 2]])
    assert build_lucas(1, 0) == SquareMatrix([[1, 2], [2, -1]])
    for j in range(-5, 8):
        expected = SquareMatrix(
            [
                [lucas_term(j + 1), lucas_term(j)],
                [lucas_term(j), lucas_term(j - 1)],
            ]
        )
        assert build_lucas(1, j) == expected


def test_lucas_block_structure():
    for r in (2, 3):
        for j in (-3, 0, 1, 5):
            blocks = decompose(build_lucas(r, j), 2)
            assert blocks[0][0] == build_lucas(r - 1, j + 1)
            assert blocks[0][1] == build_lucas(r - 1, j)
            assert blocks[1][0] == build_lucas(r - 1, j)
            assert blocks[1][1] == build_lucas(r - 1, j - 1)


def test_lucas_pair_matrix_identity():
    # L(2) + L(4) = 5 * F(3) holds at the matrix level too
    assert build_lucas(1, 2) + build_lucas(1, 4) == 5 * build_base(2, 3)
    assert build_lucas(1, 2) + build_lucas(1, 4) == SquareMatrix([[15, 10], [10, 5]])


def test_fast_f_agrees_with_direct_construction():
    for k, r in GRID:
        for j in range(1, 13):
            assert fast_f(k, r, j) == build_higher(k, r, j), (k, r, j)


def test_fast_f_frozen_and_domain():
    assert fast_f(2, 1, 5) == SquareMatrix([[8, 5], [5, 3]])
    for bad in (0, -1, 2.5):
        with pytest.raises(ValueError):
            fast_f(2, 1, bad)
    with pytest.raises(ValueError):
        fast_f(1, 1, 3)
    with pytest.raises(ValueError):
        fast_f(2, 0, 3)


def test_fast_term_examples():
    assert fast_term(2, 10) == 55
    assert fast_term(3, 6) == 7
    assert fast_term(5, 4) == 1
    assert fast_term(2, 0) == 0


def test_fast_term_matches_engine():
    for k in (2, 3, 4, 5):
        for j in range(0, 201):
            assert fast_term(k, j) == term(k, j), (k, j)


def test_fast_term_domain():
    with pytest.raises(ValueError):
        fast_term(2, -1)
    with pytest.raises(ValueError):
        fast_term(1, 3)


def test_builder_validation():
    with pytest.raises(ValueError):
        build_base(1, 0)
    with pytest.raises(ValueError):
        build_higher(2, 0, 1)
    with pytest.raises(ValueError):
        build_lucas(0, 1)
    with pytest.raises(ValueError):
        build_q(2, 0)
