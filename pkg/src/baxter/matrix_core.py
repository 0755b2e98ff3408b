"""
0/1 matrices and the pinwheel definition of a Baxter matrix.

A matrix is Baxter when every row and every column contains a 1 and each of
its 2(m-1)(n-1) pinwheels has at least one all-zero arm. A pinwheel is
centred on a point between rows i, i+1 and columns j, j+1; its four arms run
outward from that point. All indices exposed here are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

Cell = tuple[int, int]


class MatrixParseError(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


class Chirality(str, Enum):
    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"


@dataclass(frozen=True)
class BinaryMatrix:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(self.cells[0])
        for row in self.cells:
            if len(row) != width:
                raise ValueError("ragged rows")
            if any(v not in (0, 1) for v in row):
                raise ValueError("cells must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]]) -> "BinaryMatrix":
        cols = [tuple(c) for c in columns]
        return cls(tuple(zip(*cols)))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"cell {cell} outside {self.rows}x{self.cols}")
        return self.cells[i - 1][j - 1]

    def columns(self) -> list[tuple[int, ...]]:
        """Columns as bit tuples, row 1 first."""
        return [tuple(row[j] for row in self.cells) for j in range(self.cols)]

    def ones(self) -> int:
        return sum(map(sum, self.cells))

    def to_text(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.cells)

    def __str__(self):
        return self.to_text()


class PinwheelId(NamedTuple):
    chirality: Chirality
    center_row: int
    center_col: int

    def __str__(self):
        return f"{self.chirality.value} pinwheel ({self.center_row},{self.center_col})"


class Violation(NamedTuple):
    kind: str  # zero_row | zero_column | unsatisfied_pinwheel
    detail: object

    def __str__(self):
        if self.kind == "zero_row":
            return f"zero row {self.detail}"
        if self.kind == "zero_column":
            return f"zero column {self.detail}"
        return f"unsatisfied {self.detail}"


def parse_matrix(text: str) -> BinaryMatrix:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        bad = [ch for ch in line if ch not in "01"]
        if bad:
            raise MatrixParseError(f"line {lineno}: unexpected character {bad[0]!r}")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise MatrixParseError(
                f"line {lineno}: expected {width} columns, got {len(line)}")
        rows.append(tuple(int(ch) for ch in line))
    if not rows:
        raise MatrixParseError("line 1: empty input")
    return BinaryMatrix(tuple(rows))


def transpose(M: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(tuple(zip(*M.cells)))


def pinwheels(rows: int, cols: int) -> list[PinwheelId]:
    """Every pinwheel of an rows x cols matrix, clockwise first, centres row-major."""
    return [PinwheelId(ch, i, j)
            for ch in Chirality
            for i in range(1, rows)
            for j in range(1, cols)]


def arms_for_shape(rows: int, cols: int, p: PinwheelId) -> tuple[list[Cell], ...]:
    chirality, i, j = p
    if not (1 <= i < rows and 1 <= j < cols):
        raise IndexError(f"pinwheel centre ({i},{j}) invalid for {rows}x{cols}")
    upper_left = [(i, c) for c in range(1, j + 1)]
    lower_left = [(i + 1, c) for c in range(1, j + 1)]
    upper_right = [(i, c) for c in range(j + 1, cols + 1)]
    lower_right = [(i + 1, c) for c in range(j + 1, cols + 1)]
    left_up = [(r, j) for r in range(1, i + 1)]
    left_down = [(r, j) for r in range(i + 1, rows + 1)]
    right_up = [(r, j + 1) for r in range(1, i + 1)]
    right_down = [(r, j + 1) for r in range(i + 1, rows + 1)]
    if chirality is Chirality.CLOCKWISE:
        return upper_left, right_up, lower_right, left_down
    return lower_left, left_up, upper_right, right_down


def pinwheel_arms(M: BinaryMatrix, p: PinwheelId) -> tuple[list[Cell], ...]:
    return arms_for_shape(M.rows, M.cols, p)


def pinwheel_satisfied(M: BinaryMatrix, p: PinwheelId) -> bool:
    return any(all(M[c] == 0 for c in arm) for arm in pinwheel_arms(M, p))


def violations(M: BinaryMatrix) -> list[Violation]:
    found = []
    for i, row in enumerate(M.cells, start=1):
        if not any(row):
            found.append(Violation("zero_row", i))
    for j, col in enumerate(M.columns(), start=1):
        if not any(col):
            found.append(Violation("zero_column", j))
    for p in pinwheels(M.rows, M.cols):
        if not pinwheel_satisfied(M, p):
            found.append(Violation("unsatisfied_pinwheel", p))
    return found


def is_baxter(M: BinaryMatrix) -> bool:
    return not violations(M)


def extra_ones(M: BinaryMatrix) -> int:
    """Number of 1's beyond one per column."""
    for j, col in enumerate(M.columns(), start=1):
        if not any(col):
            raise ValueError(f"column {j} has no 1")
    return M.ones() - M.cols
