"""
Smith normal form over the integers with tracked transforms.

For an integer matrix A the decomposition is A = U * D * V with U, V
unimodular and D diagonal with d_1 | d_2 | ... | d_r. The inverses Uinv and
Vinv are tracked alongside so kernels and image membership can be read off
without a separate inversion.

Pivot rule: the nonzero entry of smallest absolute value in the remaining
block, ties broken by (row, column). The result is deterministic.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from algebra.ringDescriptor import RingDescriptor, integers
from algebra.sparseMatrix import SparseMatrix

logger = logging.getLogger(__name__)


@dataclass
class SmithForm:
    """Smith decomposition A = U * D * V."""

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    Uinv: np.ndarray
    Vinv: np.ndarray
    factors: List[int]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> List[int]:
        return [f for f in self.factors if f > 1]

    def allUnits(self) -> bool:
        return all(f == 1 for f in self.factors)

    # SparseMatrix views over Z of the working arrays

    @property
    def uMatrix(self) -> SparseMatrix:
        return arrayToSparse(self.U)

    @property
    def dMatrix(self) -> SparseMatrix:
        return arrayToSparse(self.D)

    @property
    def vMatrix(self) -> SparseMatrix:
        return arrayToSparse(self.V)


def _identity(size: int) -> np.ndarray:
    matrix = np.zeros((size, size), dtype=object)
    for i in range(size):
        matrix[i, i] = 1
    return matrix


def _toIntArray(matrix: SparseMatrix) -> np.ndarray:
    array = np.zeros((matrix.rows, matrix.cols), dtype=object)
    for (i, j), value in matrix.entries.items():
        integral = matrix.ring.toInteger(value)
        if integral is None:
            raise ValueError(f"Entry ({i}, {j}) = {value} is not an integer")
        array[i, j] = integral
    return array


class _Reducer:
    """Row and column operations that keep U, Uinv, V, Vinv in sync."""

    def __init__(self, work: np.ndarray):
        rows, cols = work.shape
        self.W = work
        self.U = _identity(rows)
        self.Uinv = _identity(rows)
        self.V = _identity(cols)
        self.Vinv = _identity(cols)

    def addRow(self, target: int, source: int, c: int) -> None:
        # row_target += c * row_source
        self.W[target, :] = self.W[target, :] + c * self.W[source, :]
        self.Uinv[target, :] = self.Uinv[target, :] + c * self.Uinv[source, :]
        self.U[:, source] = self.U[:, source] - c * self.U[:, target]

    def addColumn(self, target: int, source: int, c: int) -> None:
        # col_target += c * col_source
        self.W[:, target] = self.W[:, target] + c * self.W[:, source]
        self.Vinv[:, target] = self.Vinv[:, target] + c * self.Vinv[:, source]
        self.V[source, :] = self.V[source, :] - c * self.V[target, :]

    def swapRows(self, a: int, b: int) -> None:
        if a == b:
            return
        self.W[[a, b], :] = self.W[[b, a], :]
        self.Uinv[[a, b], :] = self.Uinv[[b, a], :]
        self.U[:, [a, b]] = self.U[:, [b, a]]

    def swapColumns(self, a: int, b: int) -> None:
        if a == b:
            return
        self.W[:, [a, b]] = self.W[:, [b, a]]
        self.Vinv[:, [a, b]] = self.Vinv[:, [b, a]]
        self.V[[a, b], :] = self.V[[b, a], :]

    def negateRow(self, a: int) -> None:
        self.W[a, :] = -self.W[a, :]
        self.Uinv[a, :] = -self.Uinv[a, :]
        self.U[:, a] = -self.U[:, a]


def _smallestPivot(work: np.ndarray, start: int):
    best = None
    rows, cols = work.shape
    for i in range(start, rows):
        for j in range(start, cols):
            value = work[i, j]
            if value != 0:
                key = (abs(value), i, j)
                if best is None or key < best:
                    best = key
    return None if best is None else (best[1], best[2])


def smithNormalForm(matrix: SparseMatrix) -> SmithForm:
    """
    Compute the Smith normal form of an integer-valued matrix.

    Args:
        matrix: Matrix whose entries are integral constants

    Returns:
        SmithForm with A = U * D * V
    """
    work = _toIntArray(matrix)
    reducer = _Reducer(work)
    rows, cols = work.shape
    factors: List[int] = []

    t = 0
    while t < min(rows, cols):
        location = _smallestPivot(reducer.W, t)
        if location is None:
            break
        while True:
            location = _smallestPivot(reducer.W, t)
            reducer.swapRows(t, location[0])
            reducer.swapColumns(t, location[1])
            pivot = reducer.W[t, t]
            clean = True
            for i in range(t + 1, rows):
                if reducer.W[i, t] != 0:
                    q = reducer.W[i, t] // pivot
                    reducer.addRow(i, t, -q)
                    if reducer.W[i, t] != 0:
                        clean = False
            for j in range(t + 1, cols):
                if reducer.W[t, j] != 0:
                    q = reducer.W[t, j] // pivot
                    reducer.addColumn(j, t, -q)
                    if reducer.W[t, j] != 0:
                        clean = False
            if not clean:
                continue
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if reducer.W[i, j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            reducer.addRow(t, offender, 1)
        if reducer.W[t, t] < 0:
            reducer.negateRow(t)
        factors.append(int(reducer.W[t, t]))
        t += 1

    logger.debug("SNF of %dx%d matrix: rank %d", rows, cols, len(factors))
    return SmithForm(
        U=reducer.U, D=reducer.W, V=reducer.V,
        Uinv=reducer.Uinv, Vinv=reducer.Vinv, factors=factors
    )


def integerRank(matrix: SparseMatrix) -> int:
    return smithNormalForm(matrix).rank


def integerKernelBasis(matrix: SparseMatrix, form: SmithForm = None) -> List[Dict[int, int]]:
    """Return a Z-basis of ker(A) as sparse column vectors."""
    form = form or smithNormalForm(matrix)
    basis = []
    for j in range(form.rank, matrix.cols):
        column = {i: int(form.Vinv[i, j]) for i in range(matrix.cols) if form.Vinv[i, j] != 0}
        basis.append(column)
    return basis


def integerImageContains(matrix: SparseMatrix, vector: Dict[int, Any], form: SmithForm = None) -> bool:
    """Decide whether vector lies in the Z-span of the columns of matrix."""
    form = form or smithNormalForm(matrix)
    dense = np.zeros(matrix.rows, dtype=object)
    for i, value in vector.items():
        integral = matrix.ring.toInteger(value)
        if integral is None:
            return False
        dense[i] = integral
    z = form.Uinv.dot(dense) if matrix.rows else dense
    for i in range(matrix.rows):
        if i < form.rank:
            if z[i] % form.factors[i] != 0:
                return False
        elif z[i] != 0:
            return False
    return True


def isUnimodular(matrix: SparseMatrix) -> bool:
    if not matrix.isSquare():
        return False
    form = smithNormalForm(matrix)
    return form.rank == matrix.rows and form.allUnits()


def arrayToSparse(array: np.ndarray, ring: RingDescriptor = None) -> SparseMatrix:
    ring = ring or integers()
    rows, cols = array.shape
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if array[i, j] != 0:
                entries[(i, j)] = ring.fromInt(int(array[i, j]))
    return SparseMatrix(ring, rows, cols, entries)


def invariantFactors(matrix: SparseMatrix) -> List[int]:
    return smithNormalForm(matrix).factors


def columnsOf(array: np.ndarray, indices: Sequence[int]) -> np.ndarray:
    return array[:, list(indices)] if array.shape[0] else np.zeros((0, len(indices)), dtype=object)
