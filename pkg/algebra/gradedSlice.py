"""
Degree slices of homogeneous maps between graded free modules.

A graded free module over k[x_1..x_s] with generators of degrees a_j has, in
internal degree t, the k-basis {(j, monomial of degree t - a_j)}. Monomials
are ordered by exponent tuple, descending, so x^2 > xy > y^2.
"""

from functools import lru_cache
from math import comb
from typing import Any, Dict, List, Sequence, Tuple

from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import SparseMatrix
from utils.errors import NonHomogeneousEntry


def monomialCount(variableCount: int, degree: int) -> int:
    """Number of monomials of the given degree in variableCount variables."""
    if degree < 0:
        return 0
    if variableCount == 0:
        return 1 if degree == 0 else 0
    return comb(variableCount + degree - 1, degree)


@lru_cache(maxsize=None)
def monomialsOfDegree(variableCount: int, degree: int) -> Tuple[Tuple[int, ...], ...]:
    """Exponent tuples of total degree `degree`, in descending order."""
    if degree < 0:
        return ()
    if variableCount == 0:
        return ((),) if degree == 0 else ()
    if variableCount == 1:
        return ((degree,),)
    result = []
    for first in range(degree, -1, -1):
        for rest in monomialsOfDegree(variableCount - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


def sliceBasis(degrees: Sequence[int], t: int, variableCount: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """Basis (generator index, monomial) of the degree-t slice."""
    basis = []
    for j, generatorDegree in enumerate(degrees):
        for monomial in monomialsOfDegree(variableCount, t - generatorDegree):
            basis.append((j, monomial))
    return basis


def sliceDimension(degrees: Sequence[int], t: int, variableCount: int) -> int:
    return sum(monomialCount(variableCount, t - d) for d in degrees)


def checkHomogeneous(
    matrix: SparseMatrix,
    rowDegrees: Sequence[int],
    colDegrees: Sequence[int]
) -> None:
    """
    Raise NonHomogeneousEntry unless entry (i, j) has degree colDegrees[j] - rowDegrees[i].
    """
    ring = matrix.ring
    for (i, j), value in matrix.entries.items():
        expected = colDegrees[j] - rowDegrees[i]
        if ring.degreeOf(value) != expected:
            raise NonHomogeneousEntry(i, j, expected)


def gradedSlice(
    matrix: SparseMatrix,
    rowDegrees: Sequence[int],
    colDegrees: Sequence[int],
    t: int
) -> SparseMatrix:
    """
    Restrict a homogeneous map to internal degree t.

    Args:
        matrix: Matrix over a GradedPoly ring
        rowDegrees: Generator degrees of the codomain
        colDegrees: Generator degrees of the domain
        t: Internal degree

    Returns:
        Matrix over the base field between the degree-t slices

    Raises:
        NonHomogeneousEntry: If some entry has the wrong degree
    """
    ring: RingDescriptor = matrix.ring
    base = ring.baseField()
    s = ring.variableCount
    checkHomogeneous(matrix, rowDegrees, colDegrees)

    rowIndex: Dict[int, Dict[Tuple[int, ...], int]] = {}
    position = 0
    for i, degree in enumerate(rowDegrees):
        monomials = monomialsOfDegree(s, t - degree)
        rowIndex[i] = {m: position + k for k, m in enumerate(monomials)}
        position += len(monomials)
    rowCount = position

    columns = matrix.columnIndex()
    entries: Dict[Tuple[int, int], Any] = {}
    colPosition = 0
    for j, degree in enumerate(colDegrees):
        for monomial in monomialsOfDegree(s, t - degree):
            for i, value in columns.get(j, {}).items():
                for exponents, coefficient in value.terms():
                    shifted = tuple(a + b for a, b in zip(exponents, monomial))
                    row = rowIndex[i][shifted]
                    key = (row, colPosition)
                    scalar = ring.toBase(coefficient)
                    entries[key] = base.add(entries[key], scalar) if key in entries else scalar
            colPosition += 1
    return SparseMatrix(base, rowCount, colPosition, entries)


def sliceVector(
    ring: RingDescriptor,
    vector: Dict[int, Any],
    degrees: Sequence[int],
    t: int
) -> Dict[int, Any]:
    """Coordinates of the degree-t component of a module element in the slice basis."""
    s = ring.variableCount
    offsets = []
    position = 0
    for degree in degrees:
        offsets.append(position)
        position += monomialCount(s, t - degree)
    result: Dict[int, Any] = {}
    for i, value in vector.items():
        lookup = {m: offsets[i] + k for k, m in enumerate(monomialsOfDegree(s, t - degrees[i]))}
        for exponents, coefficient in value.terms():
            if exponents in lookup:
                result[lookup[exponents]] = ring.toBase(coefficient)
    return result
