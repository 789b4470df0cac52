import random
from fractions import Fraction

import pytest

from algebra.fieldElimination import fieldKernelBasis, fieldRank
from algebra.gradedSlice import checkHomogeneous, gradedSlice, monomialCount, monomialsOfDegree, sliceDimension
from algebra.linearAlgebra import isInvertible, kernelBasis, matrixRank, splitImage
from algebra.ringDescriptor import integersMod
from algebra.smithNormalForm import (
    arrayToSparse, integerImageContains, integerKernelBasis, isUnimodular, smithNormalForm,
)
from algebra.sparseMatrix import SparseMatrix, kronecker
from harness.randomInstances import randomIntegerMatrix
from utils.errors import NonFieldRing, NonHomogeneousEntry, NotDivisible


def testSmithFormOfCoprimeDiagonal(Z):
    form = smithNormalForm(SparseMatrix.fromRows(Z, [[2, 0], [0, 3]]))
    assert form.factors == [1, 6]
    assert form.torsion == [6]


def testSmithFormReportsRankOfSingularMatrix(Z):
    form = smithNormalForm(SparseMatrix.fromRows(Z, [[2, 4], [1, 2]]))
    assert form.rank == 1
    assert form.allUnits()


def testIntegerKernelAndImage(Z):
    matrix = SparseMatrix.fromRows(Z, [[1, 1]])
    kernel = integerKernelBasis(matrix)
    assert len(kernel) == 1
    assert matrix.applyToVector(kernel[0]) == {}

    doubling = SparseMatrix.fromRows(Z, [[2]])
    assert integerImageContains(doubling, {0: 4})
    assert not integerImageContains(doubling, {0: 3})


def testUnimodular(Z):
    assert isUnimodular(SparseMatrix.fromRows(Z, [[2, 1], [1, 1]]))
    assert not isUnimodular(SparseMatrix.fromRows(Z, [[2, 0], [0, 1]]))


def testFieldRankAndKernel(Q):
    matrix = SparseMatrix.fromRows(Q, [[1, 2], [2, 4]])
    assert fieldRank(matrix) == 1
    kernel = fieldKernelBasis(matrix)
    assert len(kernel) == 1
    assert matrix.applyToVector(kernel[0]) == {}


def testMatrixRankDispatchesOnRing(Z, Q):
    assert matrixRank(SparseMatrix.fromRows(Z, [[2, 0], [0, 2]])) == 2
    assert matrixRank(SparseMatrix.fromRows(Q, [[Fraction(1, 2), 1], [1, 2]])) == 1


def testInvertibilityDependsOnRing(Z, Q):
    assert not isInvertible(SparseMatrix.fromRows(Z, [[2]]))
    assert isInvertible(SparseMatrix.fromRows(Q, [[2]]))


def testSplitImageOfIdempotent(Z):
    idempotent = SparseMatrix.fromRows(Z, [[1, 1], [0, 0]])
    split = splitImage(idempotent)
    assert split.rank == 1
    assert split.include @ split.project == idempotent
    assert split.project @ split.include == SparseMatrix.identity(Z, 1)


def testMatrixProductAndKronecker(Z):
    a = SparseMatrix.fromRows(Z, [[1, 2], [3, 4]])
    assert a @ SparseMatrix.identity(Z, 2) == a
    assert (a - a).isZero()
    assert kronecker(SparseMatrix.identity(Z, 2), a).shape == (4, 4)
    assert a.trace() == 5


def testResidueRings():
    assert integersMod(5).isField
    assert not integersMod(4).isField
    assert integersMod(5).inverse(2) == 3
    with pytest.raises(NonFieldRing):
        integersMod(4).inverse(3)


def testExactQuotient(Z, Qx):
    assert Z.exactQuotient(6, 3) == 2
    with pytest.raises(NotDivisible):
        Z.exactQuotient(5, 2)
    x = Qx.parse("x")
    assert Qx.exactQuotient(Qx.parse("x**3"), x) == Qx.parse("x**2")


def testDegreesInGradedRing(Qxy):
    assert Qxy.degreeOf(Qxy.parse("x*y + y**2")) == 2
    assert Qxy.degreeOf(Qxy.parse("x + y**2")) is None
    assert Qxy.name == "Q[x,y]"


def testSmithFormOfSmallExample(Z):
    A = SparseMatrix.fromRows(Z, [[2, 4], [6, 8]])
    form = smithNormalForm(A)
    assert form.factors == [2, 4]
    assert form.dMatrix == SparseMatrix.fromRows(Z, [[2, 0], [0, 4]])


@pytest.mark.parametrize("seed", range(20))
def testSmithFormDecomposesRandomMatrices(Z, seed):
    rng = random.Random(seed)
    A = randomIntegerMatrix(rng, rng.randint(1, 4), rng.randint(1, 4), bound=6)
    form = smithNormalForm(A)
    assert form.uMatrix @ form.dMatrix @ form.vMatrix == A
    assert arrayToSparse(form.Uinv) @ form.uMatrix == SparseMatrix.identity(Z, A.rows)
    assert form.vMatrix @ arrayToSparse(form.Vinv) == SparseMatrix.identity(Z, A.cols)
    assert isUnimodular(form.uMatrix)
    assert isUnimodular(form.vMatrix)
    assert all(f > 0 for f in form.factors)
    assert all(b % a == 0 for a, b in zip(form.factors, form.factors[1:]))
    assert form.dMatrix.entries == {(i, i): f for i, f in enumerate(form.factors)}


def testKernelOfRankTwoMatrix(Z, Q):
    rows = [[1, 2, 3], [4, 5, 6]]
    kernel = integerKernelBasis(SparseMatrix.fromRows(Z, rows))
    assert len(kernel) == 1
    assert [kernel[0].get(i, 0) for i in range(3)] in ([1, -2, 1], [-1, 2, -1])

    matrix = SparseMatrix.fromRows(Q, rows)
    assert matrixRank(matrix) == 2
    (vector,) = fieldKernelBasis(matrix)
    assert matrix.applyToVector(vector) == {}
    assert vector.get(1, 0) == -2 * vector.get(0, 0)
    assert vector.get(2, 0) == vector.get(0, 0)


@pytest.mark.parametrize("seed", range(10))
def testRankOfTransposeOverFields(Q, seed):
    rng = random.Random(seed)
    integral = randomIntegerMatrix(rng, rng.randint(1, 5), rng.randint(1, 5), bound=4, density=0.5)
    for ring in (Q, integersMod(5)):
        A = SparseMatrix(ring, integral.rows, integral.cols, integral.entries)
        assert matrixRank(A) == matrixRank(A.transpose())
        assert len(kernelBasis(A)) == A.cols - matrixRank(A)


def testMonomialCounts():
    assert monomialCount(2, 2) == 3
    assert monomialCount(3, 2) == 6
    assert monomialCount(0, 0) == 1
    assert monomialCount(2, -1) == 0
    assert monomialsOfDegree(2, 2) == ((2, 0), (1, 1), (0, 2))


def testDegreeSliceOfKoszulDifferential(Qxy):
    x, y = Qxy.parse("x"), Qxy.parse("y")
    d1 = SparseMatrix.fromRows(Qxy, [[x, y]])
    piece = gradedSlice(d1, [0], [1, 1], 2)
    assert piece.shape == (3, 4)
    assert matrixRank(piece) == 3
    assert sliceDimension([1, 1], 2, 2) == 4


def testSlicesComposeLikeMatrices(Qxy):
    x, y = Qxy.parse("x"), Qxy.parse("y")
    A = SparseMatrix.fromRows(Qxy, [[x, y]])
    B = SparseMatrix.fromRows(Qxy, [[x, Qxy.parse("x*y")], [y, Qxy.parse("y**2")]])
    for t in range(5):
        product = gradedSlice(A @ B, [0], [2, 3], t)
        assert product == gradedSlice(A, [0], [1, 1], t) @ gradedSlice(B, [1, 1], [2, 3], t)


def testNonHomogeneousEntryIsRejected(Qxy):
    matrix = SparseMatrix.fromRows(Qxy, [[Qxy.parse("x + y**2")]])
    with pytest.raises(NonHomogeneousEntry) as error:
        gradedSlice(matrix, [0], [1], 1)
    assert (error.value.row, error.value.col, error.value.expected) == (0, 0, 1)
    checkHomogeneous(SparseMatrix.fromRows(Qxy, [[Qxy.parse("x*y")]]), [0], [2])
