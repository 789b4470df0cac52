"""
Sparse exact matrices over a RingDescriptor.

Entries are stored as {(row, col): value} with zeros omitted. Matrices are
treated as immutable once built.
"""

from collections import defaultdict
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from algebra.ringDescriptor import RingDescriptor
from utils.errors import MixedRings


class SparseMatrix:
    """Exact sparse matrix; column j is the image of the j-th domain basis vector."""

    __slots__ = ("ring", "rows", "cols", "entries", "_columns")

    def __init__(
        self,
        ring: RingDescriptor,
        rows: int,
        cols: int,
        entries: Optional[Dict[Tuple[int, int], Any]] = None
    ):
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix dimensions must be non-negative, got {rows}x{cols}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries: Dict[Tuple[int, int], Any] = {}
        self._columns = None
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"Entry ({i}, {j}) outside {rows}x{cols}")
            value = ring.reduce(_coerce(ring, value))
            if value != 0:
                self.entries[(i, j)] = value

    # Constructors

    @classmethod
    def zero(cls, ring: RingDescriptor, rows: int, cols: int) -> "SparseMatrix":
        return cls(ring, rows, cols)

    @classmethod
    def identity(cls, ring: RingDescriptor, size: int) -> "SparseMatrix":
        one = ring.one()
        return cls(ring, size, size, {(i, i): one for i in range(size)})

    @classmethod
    def fromRows(cls, ring: RingDescriptor, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "SparseMatrix":
        """Build from a dense list of rows (entries coerced with ring.fromInt when int)."""
        rowCount = len(rows)
        colCount = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != colCount:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {colCount}")
            for j, value in enumerate(row):
                entries[(i, j)] = _coerce(ring, value)
        return cls(ring, rowCount, colCount, entries)

    @classmethod
    def fromColumns(cls, ring: RingDescriptor, rows: int, columns: Sequence[Dict[int, Any]]) -> "SparseMatrix":
        """Build from a list of sparse columns {row: value}."""
        entries = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                entries[(i, j)] = value
        return cls(ring, rows, len(columns), entries)

    @classmethod
    def fromNumpy(cls, ring: RingDescriptor, array: np.ndarray) -> "SparseMatrix":
        rows, cols = array.shape
        entries = {}
        for i in range(rows):
            for j in range(cols):
                value = array[i, j]
                if value != 0:
                    entries[(i, j)] = _coerce(ring, value)
        return cls(ring, rows, cols, entries)

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def get(self, i: int, j: int) -> Any:
        return self.entries.get((i, j), self.ring.zero())

    def column(self, j: int) -> Dict[int, Any]:
        """Return column j as {row: value}."""
        return dict(self.columnIndex().get(j, {}))

    def columnIndex(self) -> Dict[int, Dict[int, Any]]:
        if self._columns is None:
            columns: Dict[int, Dict[int, Any]] = defaultdict(dict)
            for (i, j), value in self.entries.items():
                columns[j][i] = value
            self._columns = dict(columns)
        return self._columns

    def rowDicts(self) -> List[Dict[int, Any]]:
        rowList: List[Dict[int, Any]] = [dict() for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            rowList[i][j] = value
        return rowList

    def toDense(self) -> List[List[Any]]:
        zero = self.ring.zero()
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            dense[i][j] = value
        return dense

    def toNumpy(self) -> np.ndarray:
        array = np.empty((self.rows, self.cols), dtype=object)
        array[:, :] = self.ring.zero()
        for (i, j), value in self.entries.items():
            array[i, j] = value
        return array

    def isZero(self) -> bool:
        return not self.entries

    def isSquare(self) -> bool:
        return self.rows == self.cols

    def trace(self) -> Any:
        if not self.isSquare():
            raise ValueError(f"Trace of non-square {self.rows}x{self.cols} matrix")
        total = self.ring.zero()
        for i in range(self.rows):
            total = self.ring.add(total, self.get(i, i))
        return total

    # Arithmetic

    def _checkRing(self, other: "SparseMatrix") -> None:
        if self.ring != other.ring:
            raise MixedRings(f"{self.ring.name} vs {other.ring.name}")

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._checkRing(other)
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        otherRows: Dict[int, List[Tuple[int, Any]]] = defaultdict(list)
        for (k, j), value in other.entries.items():
            otherRows[k].append((j, value))
        result: Dict[Tuple[int, int], Any] = {}
        for (i, k), left in self.entries.items():
            for j, right in otherRows.get(k, ()):
                key = (i, j)
                product = left * right
                result[key] = result[key] + product if key in result else product
        return SparseMatrix(self.ring, self.rows, other.cols, result)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._checkRing(other)
        if self.shape != other.shape:
            raise ValueError(f"Cannot add {self.shape} and {other.shape}")
        result = dict(self.entries)
        for key, value in other.entries.items():
            result[key] = result[key] + value if key in result else value
        return SparseMatrix(self.ring, self.rows, self.cols, result)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.ring, self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, scalar: Any) -> "SparseMatrix":
        return SparseMatrix(self.ring, self.rows, self.cols, {k: scalar * v for k, v in self.entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ring, self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def mapEntries(self, fn: Callable[[Any], Any], ring: Optional[RingDescriptor] = None) -> "SparseMatrix":
        target = ring or self.ring
        return SparseMatrix(target, self.rows, self.cols, {k: fn(v) for k, v in self.entries.items()})

    def applyToVector(self, vector: Dict[int, Any]) -> Dict[int, Any]:
        """Multiply by a sparse column vector {index: value}."""
        columns = self.columnIndex()
        result: Dict[int, Any] = {}
        for j, coefficient in vector.items():
            for i, value in columns.get(j, {}).items():
                term = coefficient * value
                result[i] = result[i] + term if i in result else term
        return {i: self.ring.reduce(v) for i, v in result.items() if self.ring.reduce(v) != 0}

    # Structure

    def subMatrix(self, rowIndices: Sequence[int], colIndices: Sequence[int]) -> "SparseMatrix":
        rowMap = {old: new for new, old in enumerate(rowIndices)}
        colMap = {old: new for new, old in enumerate(colIndices)}
        entries = {}
        for (i, j), value in self.entries.items():
            if i in rowMap and j in colMap:
                entries[(rowMap[i], colMap[j])] = value
        return SparseMatrix(self.ring, len(rowIndices), len(colIndices), entries)

    def selectColumns(self, colIndices: Sequence[int]) -> "SparseMatrix":
        return self.subMatrix(range(self.rows), colIndices)

    def selectRows(self, rowIndices: Sequence[int]) -> "SparseMatrix":
        return self.subMatrix(rowIndices, range(self.cols))


def _coerce(ring: RingDescriptor, value: Any) -> Any:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return ring.fromInt(int(value))
    return value


def hstack(blocks: Sequence[SparseMatrix], ring: Optional[RingDescriptor] = None, rows: Optional[int] = None) -> SparseMatrix:
    """Concatenate matrices side by side."""
    if not blocks:
        if ring is None or rows is None:
            raise ValueError("Empty hstack needs ring and row count")
        return SparseMatrix(ring, rows, 0)
    entries = {}
    offset = 0
    for block in blocks:
        blocks[0]._checkRing(block)
        if block.rows != blocks[0].rows:
            raise ValueError("hstack blocks must have equal row counts")
        for (i, j), value in block.entries.items():
            entries[(i, j + offset)] = value
        offset += block.cols
    return SparseMatrix(blocks[0].ring, blocks[0].rows, offset, entries)


def vstack(blocks: Sequence[SparseMatrix], ring: Optional[RingDescriptor] = None, cols: Optional[int] = None) -> SparseMatrix:
    """Stack matrices vertically."""
    if not blocks:
        if ring is None or cols is None:
            raise ValueError("Empty vstack needs ring and column count")
        return SparseMatrix(ring, 0, cols)
    return hstack([block.transpose() for block in blocks]).transpose()


def blockDiagonal(blocks: Sequence[SparseMatrix], ring: RingDescriptor) -> SparseMatrix:
    entries = {}
    rowOffset = colOffset = 0
    for block in blocks:
        if block.ring != ring:
            raise MixedRings(f"{block.ring.name} vs {ring.name}")
        for (i, j), value in block.entries.items():
            entries[(i + rowOffset, j + colOffset)] = value
        rowOffset += block.rows
        colOffset += block.cols
    return SparseMatrix(ring, rowOffset, colOffset, entries)


def kronecker(left: SparseMatrix, right: SparseMatrix) -> SparseMatrix:
    """Kronecker product with row index i1 * right.rows + i2."""
    left._checkRing(right)
    entries = {}
    for (i1, j1), a in left.entries.items():
        for (i2, j2), b in right.entries.items():
            entries[(i1 * right.rows + i2, j1 * right.cols + j2)] = a * b
    return SparseMatrix(left.ring, left.rows * right.rows, left.cols * right.cols, entries)


def vectorToDict(values: Iterable[Any]) -> Dict[int, Any]:
    return {i: v for i, v in enumerate(values) if v != 0}
