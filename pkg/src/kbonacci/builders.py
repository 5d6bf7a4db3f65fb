"""Builders for the recursive k-bonacci and Lucas matrix families.

The order-k base matrix places sequence terms on anti-diagonals: entry
(row, col), 1-based, holds term(j + k - row - col + 1).  Higher levels
repeat the same layout with order-k^(r-1) blocks in place of scalars, so
the level-r matrix has dimension k^r.  The companion matrix advances the
family by one index step per right-multiplication, which gives the
logarithmic-time evaluation path.
"""

from __future__ import annotations

from functools import lru_cache

from .matrix import SquareMatrix, compose, identity, zeros
from .sequences import _validate_order, lucas_term, term


def _validate_level(r) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"level must be an integer >= 1, got {r!r}")


@lru_cache(maxsize=None)
def build_base(k: int, j: int) -> SquareMatrix:
    """Order-k matrix of sequence terms anchored at index j."""
    _validate_order(k)
    return SquareMatrix(
        tuple(
            tuple(term(k, j + k - row - col + 1) for col in range(1, k + 1))
            for row in range(1, k + 1)
        )
    )


@lru_cache(maxsize=None)
def build_higher(k: int, r: int, j: int) -> SquareMatrix:
    """Level-r family member at index j; dimension k^r."""
    _validate_order(k)
    _validate_level(r)
    if r == 1:
        return build_base(k, j)
    grid = [
        [build_higher(k, r - 1, j + k - row - col + 1) for col in range(1, k + 1)]
        for row in range(1, k + 1)
    ]
    return compose(grid)


@lru_cache(maxsize=None)
def build_lucas(r: int, j: int) -> SquareMatrix:
    """Level-r Lucas family member at index j; dimension 2^r."""
    _validate_level(r)
    if r == 1:
        return SquareMatrix(
            tuple(
                tuple(lucas_term(j + 2 - row - col + 1) for col in (1, 2))
                for row in (1, 2)
            )
        )
    grid = [
        [build_lucas(r - 1, j + 2 - row - col + 1) for col in (1, 2)]
        for row in (1, 2)
    ]
    return compose(grid)


@lru_cache(maxsize=None)
def build_q(k: int, r: int) -> SquareMatrix:
    """Level-r companion matrix: identity blocks down column one and on the
    first superdiagonal, zero blocks elsewhere."""
    _validate_order(k)
    _validate_level(r)
    if r == 1:
        return SquareMatrix(
            tuple(
                tuple(1 if col == 1 or col == row + 1 else 0 for col in range(1, k + 1))
                for row in range(1, k + 1)
            )
        )
    inner = k ** (r - 1)
    one, zero = identity(inner), zeros(inner)
    grid = [
        [one if col == 1 or col == row + 1 else zero for col in range(1, k + 1)]
        for row in range(1, k + 1)
    ]
    return compose(grid)


def fast_f(k: int, r: int, j: int) -> SquareMatrix:
    """Level-r family member at index j >= 1 via companion-matrix powers."""
    _validate_order(k)
    _validate_level(r)
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise ValueError(f"index must be an integer >= 1, got {j!r}")
    return build_higher(k, r, 1) * build_q(k, r) ** (j - 1)


def fast_term(k: int, j: int) -> int:
    """term(k, j) for j >= 0, computed with O(log j) matrix products."""
    _validate_order(k)
    if not isinstance(j, int) or isinstance(j, bool) or j < 0:
        raise ValueError(f"index must be an integer >= 0, got {j!r}")
    if j == 0:
        return 0
    # the top-right entry of the level-1 matrix at index j is term(k, j)
    return fast_f(k, 1, j).entry(0, k - 1)
