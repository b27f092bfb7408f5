"""Classical RSK machinery on Young diagrams.

Two-line-array row insertion producing a pair of semistandard tableaux,
the toggle-based construction of a reverse plane partition from an
integer filling, and the Gelfand-Tsetlin extraction relating the two.
Used as an independent oracle for the generalized insertion map on
Young-diagram posets.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]
Coords = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SSYT:
    """Semistandard Young tableau: weakly increasing rows, strictly increasing columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("shape is not a partition")
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)


@dataclass(frozen=True)
class GTPattern:
    """Triangular array with interlacing rows, longest row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n - i:
                raise ValueError("rows must shrink by one")
            if any(v < 0 for v in row):
                raise ValueError("entries must be nonnegative")
        for wide, narrow in zip(self.rows, self.rows[1:]):
            for j, v in enumerate(narrow):
                if not wide[j] >= v >= wide[j + 1]:
                    raise ValueError(
                        f"interlacing fails: {wide[j]} >= {v} >= {wide[j + 1]} is false"
                    )


def _validated_matrix(matrix: Sequence[Sequence[int]], rectangular: bool) -> Matrix:
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    widths = [len(r) for r in rows]
    if rectangular:
        if len(set(widths)) != 1:
            raise ValueError("matrix rows must have equal length")
    else:
        if any(a < b for a, b in zip(widths, widths[1:])):
            raise ValueError("row lengths must be weakly decreasing")
    for row in rows:
        for v in row:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"entries must be nonnegative integers, got {v!r}")
    return rows


def two_line_array(matrix: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Biword of a nonnegative integer matrix: (i, j) repeated entry times, 1-based."""
    rows = _validated_matrix(matrix, rectangular=True)
    pairs = []
    for i, row in enumerate(rows, start=1):
        for j, mult in enumerate(row, start=1):
            pairs.extend ([(i, j)] * mult)
    return pairs


def classical_insert_rsk(matrix: Sequence[Sequence[int]]) -> tuple[SSYT, SSYT]:
    """Row-insertion RSK of an integer matrix: the tableau pair (P, Q)."""
    insertion: list[list[int]] = []
    recording: list[list[int]] = []
    for i, j in two_line_array(matrix):
        value = j
        row = 0
        while True:
            if row == len(insertion):
                insertion.append([value])
                recording.append([i])
                break
            spot = bisect_right(insertion[row], value)
            if spot == len(insertion[row]):
                insertion[row].append(value)
                recording[row].append(i)
                break
            insertion[row][spot], value = value, insertion[row][spot]
            row += 1
    return (
        SSYT(tuple(tuple(r) for r in insertion)),
        SSYT(tuple(tuple(r) for r in recording)),
    )


def row_major_order(shape: Sequence[int]) -> Coords:
    return tuple((i, j) for i, width in enumerate(shape) for j in range(width))


def order_from_ranks(ranks: Sequence[Sequence[int]]) -> Coords:
    """Square ordering from a matrix of 1-based ranks."""
    cells = [(rank, (i, j)) for i, row in enumerate(ranks) for j, rank in enumerate(row)]
    cells.sort()
    expected = list(range(1, len(cells) + 1))
    if [rank for rank, _ in cells] != expected:
        raise ValueError("ranks must be a permutation of 1..#cells")
    return tuple(cell for _, cell in cells)


def _check_square_order(shape: tuple[int, ...], order: Coords) -> None:
    cells = {(i, j) for i, width in enumerate(shape) for j in range(width)}
    if set(order) != cells or len(order) != len(cells):
        raise ValueError("ordering must list every cell exactly once")
    position = {cell: k for k, cell in enumerate(order)}
    for i, j in order:
        for later in ((i + 1, j), (i, j + 1)):
            if later in position and position[later] < position[(i, j)]:
                raise ValueError(f"cell {(i, j)} must precede {later}")


def toggle_rpp(matrix: Sequence[Sequence[int]], order: Coords | None = None) -> Matrix:
    """Reverse plane partition built from an integer filling by toggling.

    Cells are placed along ``order`` (which must list (i, j) before
    (i+1, j) and (i, j+1); row-major by default).  A new cell gets
    max(upper, left) + filling value; the other present cells of its
    content diagonal are toggled via
    max(up, left) + min(down, right) - value, absent neighbors read 0.
    """
    rows = _validated_matrix(matrix, rectangular=False)
    shape = tuple(len(r) for r in rows)
    if order is None:
        order = row_major_order(shape)
    else:
        order = tuple((i, j) for i, j in order)
    _check_square_order(shape, order)

    out: dict[tuple[int, int], int] = {}

    def read(i: int, j: int) -> int:
        return out.get((i, j), 0)

    for i, j in order:
        out[(i, j)] = max(read(i - 1, j), read(i, j - 1)) + rows[i][j]
        for x, y in order:
            if (x, y) in out and (x, y) != (i, j) and x - y == i - j:
                out[(x, y)] = (
                    max(read(x - 1, y), read(x, y - 1))
                    + min(
                        out.get((x + 1, y), 0) if (x + 1, y) in out else 0,
                        out.get((x, y + 1), 0) if (x, y + 1) in out else 0,
                    )
                    - out[(x, y)]
                )
    return [[out[(i, j)] for j in range(width)] for i, width in enumerate(shape)]


def is_rpp(rows: Sequence[Sequence[int]]) -> bool:
    """Weakly increasing along rows and down columns."""
    grid = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
    for (i, j), v in grid.items():
        if (i, j + 1) in grid and grid[(i, j + 1)] < v:
            return False
        if (i + 1, j) in grid and grid[(i + 1, j)] < v:
            return False
    return True


def gt_from_rpp(rpp: Sequence[Sequence[int]]) -> tuple[GTPattern, GTPattern]:
    """Lower- and upper-triangular Gelfand-Tsetlin patterns of a square RPP.

    Row of length L in the lower pattern reads the entries on the
    triangle's diagonal r - c = n - L from bottom-right to top-left; the
    upper pattern reads the transpose.
    """
    rows = _validated_matrix(rpp, rectangular=True)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("Gelfand-Tsetlin extraction needs a square RPP")
    if not is_rpp(rows):
        raise ValueError("input is not a reverse plane partition")
    lower = tuple(
        tuple(rows[n - 1 - m][length - 1 - m] for m in range(length))
        for length in range(n, 0, -1)
    )
    upper = tuple(
        tuple(rows[length - 1 - m][n - 1 - m] for m in range(length))
        for length in range(n, 0, -1)
    )
    return GTPattern(lower), GTPattern(upper)


def ssyt_from_gt(pattern: GTPattern) -> SSYT:
    """The unique SSYT whose entries <= i fill the shape of the i-th row from the bottom."""
    shapes = [tuple(v for v in row if v > 0) for row in reversed(pattern.rows)]
    for shape in shapes:
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise ValueError(f"row {shape} is not a partition")
    rows: list[list[int]] = []
    previous: tuple[int, ...] = ()
    for entry, shape in enumerate(shapes, start=1):
        for r, width in enumerate(shape):
            if r >= len(rows):
                rows.append([])
            old = previous[r] if r < len(previous) else 0
            if width < old:
                raise ValueError("shapes must grow along the pattern")
            rows[r].extend([entry] * (width - old))
        previous = shape
    return SSYT(tuple(tuple(r) for r in rows))
