"""Dense square matrices over Python's arbitrary-precision integers.

Immutable values with exact ring arithmetic: no floats, no modular
reduction, no overflow.  Block composition and decomposition support the
recursive matrix families built elsewhere in the package.
"""

from __future__ import annotations

from operator import mul


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class SquareMatrix:
    """Immutable n-by-n integer matrix."""

    __slots__ = ("_rows",)

    def __init__(self, rows) -> None:
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"expected {n} entries per row, got {len(row)}")
            for entry in row:
                if not _is_int(entry):
                    raise ValueError(f"entries must be integers, got {entry!r}")
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j, 0-based."""
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SquareMatrix({[list(r) for r in self._rows]})"

    def _check_dim(self, other: "SquareMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_dim(other)
        return SquareMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows))
        )

    def __sub__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_dim(other)
        return SquareMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows))
        )

    def __neg__(self):
        return SquareMatrix(tuple(tuple(-a for a in row) for row in self._rows))

    def scale(self, c: int) -> "SquareMatrix":
        """Scalar multiple c * self."""
        if not _is_int(c):
            raise ValueError(f"scalar must be an integer, got {c!r}")
        return SquareMatrix(tuple(tuple(c * a for a in row) for row in self._rows))

    def __mul__(self, other):
        if _is_int(other):
            return self.scale(other)
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_dim(other)
        cols = tuple(zip(*other._rows))
        return SquareMatrix(
            tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in self._rows)
        )

    def __rmul__(self, other):
        if _is_int(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not _is_int(e) or e < 0:
            raise ValueError(f"exponent must be an integer >= 0, got {e!r}")
        result = identity(self.dim)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_symmetric(self) -> bool:
        rows = self._rows
        n = len(rows)
        return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def identity(dim: int) -> SquareMatrix:
    """Identity matrix of the given dimension."""
    if not _is_int(dim) or dim < 1:
        raise ValueError(f"dimension must be an integer >= 1, got {dim!r}")
    return SquareMatrix(tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)))


def zeros(dim: int) -> SquareMatrix:
    """Zero matrix of the given dimension."""
    if not _is_int(dim) or dim < 1:
        raise ValueError(f"dimension must be an integer >= 1, got {dim!r}")
    return SquareMatrix(tuple((0,) * dim for _ in range(dim)))


def compose(blocks) -> SquareMatrix:
    """Assemble a k-by-k grid of equal-dimension square blocks.

    blocks[i][j] becomes the block at block-row i, block-column j.
    """
    blocks = [list(row) for row in blocks]
    k = len(blocks)
    if k == 0 or any(len(row) != k for row in blocks):
        raise ValueError("block grid must be square")
    inner = blocks[0][0].dim
    for row in blocks:
        for b in row:
            if not isinstance(b, SquareMatrix):
                raise ValueError("blocks must be SquareMatrix values")
            if b.dim != inner:
                raise ValueError(f"block dimension mismatch: {b.dim} vs {inner}")
    rows = []
    for block_row in blocks:
        for i in range(inner):
            merged = []
            for b in block_row:
                merged.extend(b.rows[i])
            rows.append(tuple(merged))
    return SquareMatrix(tuple(rows))


def decompose(m: SquareMatrix, k: int) -> list[list[SquareMatrix]]:
    """Split m into a k-by-k grid of equal square blocks; inverse of compose."""
    if not _is_int(k) or k < 1:
        raise ValueError(f"grid size must be an integer >= 1, got {k!r}")
    if m.dim % k != 0:
        raise ValueError(f"dimension {m.dim} is not divisible by {k}")
    inner = m.dim // k
    grid = []
    for bi in range(k):
        row = []
        for bj in range(k):
            row.append(
                SquareMatrix(
                    tuple(
                        m.rows[bi * inner + i][bj * inner : (bj + 1) * inner]
                        for i in range(inner)
                    )
                )
            )
        grid.append(row)
    return grid


def to_json_dict(m: SquareMatrix) -> dict:
    """JSON form: dimension plus entries as decimal strings."""
    return {"dim": m.dim, "entries": [[str(e) for e in row] for row in m.rows]}


def from_json_dict(data) -> SquareMatrix:
    """Parse the JSON form back into a matrix."""
    if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
        raise ValueError("matrix JSON must carry 'dim' and 'entries'")
    dim = data["dim"]
    if isinstance(dim, str):
        dim = int(dim)
    entries = data["entries"]
    rows = []
    for row in entries:
        rows.append(tuple(int(e) for e in row))
    m = SquareMatrix(tuple(rows))
    if m.dim != dim:
        raise ValueError(f"declared dim {dim} does not match {m.dim} rows")
    return m


def to_text(m: SquareMatrix) -> str:
    """Aligned plain-text rendering, one matrix row per line."""
    cells = [[str(e) for e in row] for row in m.rows]
    widths = [max(len(cells[i][j]) for i in range(m.dim)) for j in range(m.dim)]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
    )
