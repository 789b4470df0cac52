"""
Ring-dispatched linear algebra: rank, kernel, image membership and split images.

Integers go through the Smith normal form, fields through sparse elimination.
IntegersMod(m) with m composite is not a field and is rejected. Graded rings
are handled degree by degree by the callers (see algebra.gradedSlice).
"""

from dataclasses import dataclass
from typing import Any, Dict, List

from algebra.fieldElimination import fieldImageContains, fieldKernelBasis, fieldRank, rankFactorization
from algebra.ringDescriptor import RingDescriptor, integers
from algebra.smithNormalForm import (
    integerImageContains,
    integerKernelBasis,
    smithNormalForm,
)
from algebra.sparseMatrix import SparseMatrix
from utils.errors import NonFieldRing, NotSplitImage


def _requireUngraded(ring: RingDescriptor) -> None:
    if ring.isGraded:
        raise ValueError(f"{ring.name} is graded; slice by internal degree first")


def matrixRank(matrix: SparseMatrix) -> int:
    ring = matrix.ring
    _requireUngraded(ring)
    if ring.isIntegers:
        return smithNormalForm(matrix).rank
    if ring.isField:
        return fieldRank(matrix)
    raise NonFieldRing(ring.name)


def kernelBasis(matrix: SparseMatrix) -> List[Dict[int, Any]]:
    ring = matrix.ring
    _requireUngraded(ring)
    if ring.isIntegers:
        return integerKernelBasis(matrix)
    if ring.isField:
        return fieldKernelBasis(matrix)
    raise NonFieldRing(ring.name)


def imageContains(matrix: SparseMatrix, vector: Dict[int, Any]) -> bool:
    ring = matrix.ring
    _requireUngraded(ring)
    if ring.isIntegers:
        return integerImageContains(matrix, vector)
    if ring.isField:
        return fieldImageContains(matrix, vector)
    raise NonFieldRing(ring.name)


@dataclass
class SplitImage:
    """Factorization E = include * project with project * include = id."""

    include: SparseMatrix
    project: SparseMatrix

    @property
    def rank(self) -> int:
        return self.include.cols


def _integralCopy(matrix: SparseMatrix):
    values = {}
    for key, value in matrix.entries.items():
        integral = matrix.ring.toInteger(value)
        if integral is None:
            return None
        values[key] = integral
    return SparseMatrix(integers(), matrix.rows, matrix.cols, values)


def _coordinateSupport(matrix: SparseMatrix):
    """Indices i with E[i, i] = 1 when E is a 0/1 diagonal matrix, else None."""
    one = matrix.ring.one()
    support = []
    for (i, j), value in matrix.entries.items():
        if i != j or value != one:
            return None
        support.append(i)
    return sorted(support)


def splitImage(idempotent: SparseMatrix) -> SplitImage:
    """
    Split the image of an idempotent endomorphism as a direct summand.

    Coordinate projections keep their unit columns. Other integer-valued
    idempotents are split through the Smith form, so the result is valid
    over every supported ring. Otherwise a rank factorization over a field
    is used.

    Raises:
        NotSplitImage: If no splitting can be produced
    """
    ring = idempotent.ring
    size = idempotent.rows
    diagonal = _coordinateSupport(idempotent)
    if diagonal is not None:
        one = ring.one()
        include = SparseMatrix(ring, size, len(diagonal), {(i, j): one for j, i in enumerate(diagonal)})
        return SplitImage(include=include, project=include.transpose())
    integral = _integralCopy(idempotent)
    if integral is not None:
        form = smithNormalForm(integral)
        if not form.allUnits():
            raise NotSplitImage(f"Idempotent has invariant factors {form.factors}")
        r = form.rank
        include = SparseMatrix(ring, size, r, {
            (i, j): ring.fromInt(int(form.U[i, j]))
            for i in range(size) for j in range(r) if form.U[i, j] != 0
        })
        project = SparseMatrix(ring, r, size, {
            (i, j): ring.fromInt(int(form.V[i, j]))
            for i in range(r) for j in range(size) if form.V[i, j] != 0
        })
        return SplitImage(include=include, project=project)
    if ring.isField:
        C, R, _ = rankFactorization(idempotent)
        return SplitImage(include=C, project=R)
    raise NotSplitImage(f"Cannot split a non-integral idempotent over {ring.name}")


def isInvertible(matrix: SparseMatrix) -> bool:
    """
    Whether a square matrix is invertible over its ring.

    Matrices with integer entries are tested through the Smith form (a
    unimodular integer matrix is invertible over every ring). Field matrices
    fall back to the rank.
    """
    if not matrix.isSquare():
        return False
    integral = _integralCopy(matrix)
    if integral is not None:
        form = smithNormalForm(integral)
        if form.rank == matrix.rows and form.allUnits():
            return True
        if matrix.ring.isIntegers:
            return False
    if matrix.ring.isField:
        return fieldRank(matrix) == matrix.rows
    return False
