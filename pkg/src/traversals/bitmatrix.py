"""Coordinate bit-matrix calculus for the quadrant-by-quadrant traversals.

The five traversals without rotations (Z, U, Gray-code, Double-Gray-code,
Inside-out) admit a direct rank computation: write the subcube's
lexicographically smallest corner as a d-row matrix of coordinate bits,
apply a short sequence of reversible bit operations, and read the result
column by column as one binary number.  Sorting subcubes by that number
reproduces the traversal order, which makes this module an independent
oracle for the recursive engine.

Matrix convention: row ``d+1-i`` holds coordinate ``i``'s fractional
bits of ``x + 1/2``, most significant first, so row 1 belongs to the
highest axis.  Whole-matrix reads go column by column, left to right,
and top down within each column.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "CoordinateMatrix",
    "RankWord",
    "gray",
    "gray_inverse",
    "op_inversion",
    "op_row_coding",
    "op_ranking",
    "op_column_ranking",
    "rank_of_cell",
    "cell_of_rank",
    "RANK_RECIPES",
]


def gray(n: int) -> int:
    """Reflected binary Gray code of n.

    >>> gray(5)
    7
    >>> gray(12)
    10
    """
    if n < 0:
        raise ValueError("gray is defined for non-negative integers")
    return n ^ (n >> 1)


def gray_inverse(n: int) -> int:
    """Inverse of :func:`gray`, computed by prefix-xor of the bits.

    >>> gray_inverse(7)
    5
    >>> all(gray_inverse(gray(n)) == n for n in range(1 << 12))
    True
    """
    if n < 0:
        raise ValueError("gray_inverse is defined for non-negative integers")
    shift = 1
    while (n >> shift) > 0:
        n ^= n >> shift
        shift <<= 1
    return n


@dataclass(frozen=True, slots=True)
class CoordinateMatrix:
    """A d-by-k matrix of coordinate bits."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.bits or not self.bits[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(self.bits[0])
        for row in self.bits:
            if len(row) != width:
                raise ValueError("ragged matrix")
            if any(b not in (0, 1) for b in row):
                raise ValueError("entries must be bits")

    @property
    def rows(self) -> int:
        return len(self.bits)

    @property
    def cols(self) -> int:
        return len(self.bits[0])

    @classmethod
    def from_cell(cls, cell: tuple[int, ...], level: int) -> "CoordinateMatrix":
        """Matrix for the cell with the given per-axis indices in [0, 2^level)."""
        d = len(cell)
        rows = []
        for i in range(d):  # row 1 is the highest axis
            n = cell[d - 1 - i]
            if not 0 <= n < (1 << level):
                raise ValueError(f"cell index {n} out of range for level {level}")
            rows.append(tuple((n >> (level - 1 - c)) & 1 for c in range(level)))
        return cls(tuple(rows))

    def to_cell(self) -> tuple[int, ...]:
        d = self.rows
        out = []
        for axis in range(d):
            row = self.bits[d - 1 - axis]
            n = 0
            for b in row:
                n = (n << 1) | b
            out.append(n)
        return tuple(out)

    def column_major_value(self) -> int:
        n = 0
        for c in range(self.cols):
            for r in range(self.rows):
                n = (n << 1) | self.bits[r][c]
        return n

    @classmethod
    def from_column_major(cls, value: int, rows: int, cols: int) -> "CoordinateMatrix":
        total = rows * cols
        if not 0 <= value < (1 << total):
            raise ValueError("value does not fit the matrix shape")
        grid = [[0] * cols for _ in range(rows)]
        for pos in range(total):
            bit = (value >> (total - 1 - pos)) & 1
            c, r = divmod(pos, rows)
            grid[r][c] = bit
        return cls(tuple(tuple(row) for row in grid))


@dataclass(frozen=True, slots=True)
class RankWord:
    """Position index of a subcube: a d*level-bit unsigned integer."""

    value: int
    width: int

    def __post_init__(self):
        if not 0 <= self.value < (1 << self.width):
            raise ValueError("rank does not fit its width")


def _row_value(row: tuple[int, ...]) -> int:
    n = 0
    for b in row:
        n = (n << 1) | b
    return n


def _row_bits(n: int, width: int) -> tuple[int, ...]:
    return tuple((n >> (width - 1 - i)) & 1 for i in range(width))


def op_inversion(x: CoordinateMatrix) -> CoordinateMatrix:
    """Flip all bits in every second column (columns 2, 4, ...)."""
    return CoordinateMatrix(
        tuple(
            tuple(b ^ (c & 1) for c, b in enumerate(row))
            for row in x.bits
        )
    )


def op_row_coding(x: CoordinateMatrix) -> CoordinateMatrix:
    """Apply the Gray code g to each row."""
    w = x.cols
    return CoordinateMatrix(
        tuple(_row_bits(gray(_row_value(row)), w) for row in x.bits)
    )


def op_ranking(x: CoordinateMatrix) -> CoordinateMatrix:
    """Apply g^-1 to the whole matrix in column-major reading order."""
    return CoordinateMatrix.from_column_major(
        gray_inverse(x.column_major_value()), x.rows, x.cols
    )


def op_column_ranking(x: CoordinateMatrix) -> CoordinateMatrix:
    """Apply g^-1 to each column."""
    rows, cols = x.rows, x.cols
    out = [[0] * cols for _ in range(rows)]
    for c in range(cols):
        n = 0
        for r in range(rows):
            n = (n << 1) | x.bits[r][c]
        n = gray_inverse(n)
        for r in range(rows):
            out[r][c] = (n >> (rows - 1 - r)) & 1
    return CoordinateMatrix(tuple(tuple(r) for r in out))


def _op_row_decoding(x: CoordinateMatrix) -> CoordinateMatrix:
    w = x.cols
    return CoordinateMatrix(
        tuple(_row_bits(gray_inverse(_row_value(row)), w) for row in x.bits)
    )


def _op_unranking(x: CoordinateMatrix) -> CoordinateMatrix:
    return CoordinateMatrix.from_column_major(
        gray(x.column_major_value()), x.rows, x.cols
    )


def _op_column_coding(x: CoordinateMatrix) -> CoordinateMatrix:
    rows, cols = x.rows, x.cols
    out = [[0] * cols for _ in range(rows)]
    for c in range(cols):
        n = 0
        for r in range(rows):
            n = (n << 1) | x.bits[r][c]
        n = gray(n)
        for r in range(rows):
            out[r][c] = (n >> (rows - 1 - r)) & 1
    return CoordinateMatrix(tuple(tuple(r) for r in out))


# Operation sequence per traversal kind, applied left to right.
RANK_RECIPES = {
    "z": (),
    "u": (op_column_ranking,),
    "gray": (op_ranking,),
    "double-gray": (op_row_coding, op_ranking),
    "inside-out": (op_inversion, op_row_coding, op_ranking),
}

_UNRANK_RECIPES = {
    "z": (),
    "u": (_op_column_coding,),
    "gray": (_op_unranking,),
    "double-gray": (_op_unranking, _op_row_decoding),
    "inside-out": (_op_unranking, _op_row_decoding, op_inversion),
}


def rank_of_cell(kind: str, corner_bits: CoordinateMatrix) -> RankWord:
    """Traversal position of the subcube encoded by ``corner_bits``."""
    try:
        recipe = RANK_RECIPES[kind]
    except KeyError:
        raise ValueError(f"no bit-matrix recipe for kind {kind!r}") from None
    x = corner_bits
    for op in recipe:
        x = op(x)
    return RankWord(x.column_major_value(), x.rows * x.cols)


def cell_of_rank(kind: str, rank: RankWord, d: int, level: int) -> CoordinateMatrix:
    """Inverse of :func:`rank_of_cell`."""
    try:
        recipe = _UNRANK_RECIPES[kind]
    except KeyError:
        raise ValueError(f"no bit-matrix recipe for kind {kind!r}") from None
    if rank.width != d * level:
        raise ValueError("rank width does not match d*level")
    x = CoordinateMatrix.from_column_major(rank.value, d, level)
    for op in recipe:
        x = op(x)
    return x
