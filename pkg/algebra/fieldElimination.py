"""
Sparse Gauss-Jordan elimination over fields (Q and Z/p).

Columns are processed left to right, so the pivot columns are the column
rank profile of the input and the reduced rows are the reduced row echelon
form. Kernel vectors are indexed by the free (non-pivot) columns.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import SparseMatrix
from utils.errors import NonFieldRing

logger = logging.getLogger(__name__)


@dataclass
class Echelon:
    """Reduced row echelon data of a matrix over a field."""

    ring: RingDescriptor
    cols: int
    pivots: List[int] = field(default_factory=list)
    rowsByPivot: Dict[int, Dict[int, Any]] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def freeColumns(self) -> List[int]:
        pivotSet = set(self.pivots)
        return [j for j in range(self.cols) if j not in pivotSet]

    def kernelBasis(self) -> List[Dict[int, Any]]:
        """Kernel vector for each free column f: x_f = 1, x_p = -R[p][f]."""
        one = self.ring.one()
        basis = []
        for free in self.freeColumns:
            vector = {free: one}
            for pivot in self.pivots:
                value = self.rowsByPivot[pivot].get(free)
                if value is not None and value != 0:
                    vector[pivot] = self.ring.neg(value)
            basis.append(vector)
        return basis

    def coordinatesInKernel(self, vector: Dict[int, Any]) -> Dict[int, Any]:
        """Coordinates of a kernel element in kernelBasis order (read at free columns)."""
        result = {}
        for position, free in enumerate(self.freeColumns):
            value = vector.get(free)
            if value is not None and value != 0:
                result[position] = value
        return result


def _requireField(ring: RingDescriptor) -> None:
    if not ring.isField:
        raise NonFieldRing(ring.name)


def _normalizeValue(ring: RingDescriptor, value: Any) -> Any:
    return ring.reduce(value)


def rowReduce(matrix: SparseMatrix) -> Echelon:
    """
    Reduce a matrix over a field to reduced row echelon form.

    Args:
        matrix: Matrix over Rationals or IntegersMod(p)

    Returns:
        Echelon data (pivot columns ascending)

    Raises:
        NonFieldRing: If the ring is not a field
    """
    ring = matrix.ring
    _requireField(ring)

    rows: Dict[int, Dict[int, Any]] = {i: row for i, row in enumerate(matrix.rowDicts()) if row}
    columnRows: Dict[int, set] = {}
    for i, row in rows.items():
        for j in row:
            columnRows.setdefault(j, set()).add(i)

    used = set()
    pivots: List[int] = []
    pivotRowOf: Dict[int, int] = {}

    for col in range(matrix.cols):
        candidates = [i for i in columnRows.get(col, ()) if i not in used]
        if not candidates:
            continue
        pivotRow = min(candidates)
        row = rows[pivotRow]
        inverse = ring.inverse(row[col])
        for j in list(row):
            row[j] = _normalizeValue(ring, row[j] * inverse)
        used.add(pivotRow)
        pivots.append(col)
        pivotRowOf[col] = pivotRow

        for other in list(columnRows.get(col, ())):
            if other == pivotRow:
                continue
            target = rows[other]
            factor = target.get(col)
            if factor is None or factor == 0:
                continue
            for j, value in row.items():
                updated = _normalizeValue(ring, target.get(j, ring.zero()) - factor * value)
                if updated == 0:
                    if j in target:
                        del target[j]
                        columnRows[j].discard(other)
                else:
                    if j not in target:
                        columnRows.setdefault(j, set()).add(other)
                    target[j] = updated

    echelon = Echelon(ring=ring, cols=matrix.cols, pivots=pivots)
    for col in pivots:
        echelon.rowsByPivot[col] = dict(rows[pivotRowOf[col]])
    logger.debug("Row reduced %dx%d matrix over %s: rank %d", matrix.rows, matrix.cols, ring.name, len(pivots))
    return echelon


def fieldRank(matrix: SparseMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0 or matrix.isZero():
        _requireField(matrix.ring)
        return 0
    return rowReduce(matrix).rank


def fieldKernelBasis(matrix: SparseMatrix) -> List[Dict[int, Any]]:
    return rowReduce(matrix).kernelBasis()


def pivotColumns(matrix: SparseMatrix) -> List[int]:
    """Column rank profile: indices of columns independent of the ones before them."""
    return rowReduce(matrix).pivots


def fieldImageContains(matrix: SparseMatrix, vector: Dict[int, Any], rank: Optional[int] = None) -> bool:
    """Decide whether vector lies in the column span of matrix over a field."""
    augmented = dict(matrix.entries)
    for i, value in vector.items():
        if value != 0:
            augmented[(i, matrix.cols)] = value
    extended = SparseMatrix(matrix.ring, matrix.rows, matrix.cols + 1, augmented)
    base = rank if rank is not None else fieldRank(matrix)
    return fieldRank(extended) == base


def rankFactorization(matrix: SparseMatrix):
    """
    Factor a matrix as C * R with C the pivot columns and R the nonzero RREF rows.

    Returns:
        (C, R, pivots)
    """
    echelon = rowReduce(matrix)
    C = matrix.selectColumns(echelon.pivots)
    entries = {}
    for position, col in enumerate(echelon.pivots):
        for j, value in echelon.rowsByPivot[col].items():
            entries[(position, j)] = value
    R = SparseMatrix(matrix.ring, echelon.rank, matrix.cols, entries)
    return C, R, echelon.pivots
