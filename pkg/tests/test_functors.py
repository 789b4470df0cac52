import pytest

from algebra.linearAlgebra import matrixRank
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex
from complexes.homology import homology
from functors.abwSequence import abwSequence
from functors.basedModule import BasedFreeModule, ModuleMap, directSum, tensorProduct
from functors.functorTags import Div, Ext, Sym, Tensor, allTags, parseFunctorTag


@pytest.mark.parametrize("tag, rank, expected", [
    (Sym(2), 3, 6),
    (Ext(2), 3, 3),
    (Div(3), 2, 4),
    (Tensor(2), 3, 9),
    (Ext(3), 2, 0),
])
def testRanksOfFunctorValues(Z, tag, rank, expected):
    module = tag.applyObject(BasedFreeModule.free(Z, rank))
    assert module.rank == expected
    assert tag.rankFormula(rank) == expected


def _diagonalInclusion(ring):
    V = BasedFreeModule.free(ring, 1, prefix="v")
    W = BasedFreeModule.free(ring, 2, prefix="w")
    return ModuleMap(V, W, SparseMatrix.fromRows(ring, [[1], [1]]))


def testSymmetricAndDividedSquaresDifferOnSums(Z):
    phi = _diagonalInclusion(Z)
    assert Sym(2).applyMap(phi).matrix.column(0) == {0: 1, 1: 2, 2: 1}
    assert Div(2).applyMap(phi).matrix.column(0) == {0: 1, 1: 1, 2: 1}


def testExteriorSquareOfSwapIsMinusOne(Z):
    V = BasedFreeModule.free(Z, 2)
    swap = ModuleMap(V, V, SparseMatrix.fromRows(Z, [[0, 1], [1, 0]]))
    assert Ext(2).applyMap(swap).matrix.toDense() == [[-1]]


@pytest.mark.parametrize("tag", allTags(3), ids=str)
def testFunctorsPreserveComposition(Z, tag):
    U = BasedFreeModule.free(Z, 2, prefix="u")
    V = BasedFreeModule.free(Z, 3, prefix="v")
    W = BasedFreeModule.free(Z, 2, prefix="w")
    inner = ModuleMap(U, V, SparseMatrix.fromRows(Z, [[1, 2], [0, -1], [3, 1]]))
    outer = ModuleMap(V, W, SparseMatrix.fromRows(Z, [[2, 0, 1], [1, 1, -1]]))
    composed = tag.applyMap(outer.compose(inner))
    assert composed.equals(tag.applyMap(outer).compose(tag.applyMap(inner)))


@pytest.mark.parametrize("tag", allTags(2), ids=str)
def testFunctorsPreserveIdentity(Q, tag):
    V = BasedFreeModule.free(Q, 2)
    lifted = tag.applyMap(ModuleMap.identity(V))
    assert lifted.equals(ModuleMap.identity(tag.applyObject(V)))


def testGradedDegreesAddUp(Qx):
    V = BasedFreeModule.free(Qx, 2, degrees=[1, 2])
    assert Sym(2).applyObject(V).degreeList() == [2, 3, 4]
    assert Ext(2).applyObject(V).degreeList() == [3]


def testParseFunctorTag():
    assert parseFunctorTag("Sym(2)") == Sym(2)
    assert parseFunctorTag(" tensor(3) ") == Tensor(3)
    with pytest.raises(ValueError):
        parseFunctorTag("Sym2")
    with pytest.raises(ValueError):
        parseFunctorTag("Foo(2)")


def testAllTagsCoversEveryKindAndDegree():
    assert len(allTags(3)) == 12
    assert str(allTags(1)[0]) == "Sym(1)"


def testDirectSumAndTensorProductRanks(Z):
    V = BasedFreeModule.free(Z, 2, prefix="v")
    W = BasedFreeModule.free(Z, 3, prefix="w")
    total = directSum([V, W])
    assert total.module.rank == 5
    assert total.offset(1) == 2
    assert tensorProduct(V, W).rank == 6


def testAbwSequenceComposesToZero(Z):
    P = BasedFreeModule.free(Z, 2, prefix="p")
    Q = BasedFreeModule.free(Z, 2, prefix="q")
    sequence = abwSequence(P, Q)
    assert sequence.source.rank == 1
    assert sequence.middle.rank == 10
    assert sequence.target.rank == 9
    assert sequence.second.compose(sequence.first).isZero()


@pytest.mark.parametrize("p, q", [(1, 2), (2, 2), (2, 3), (3, 3)])
def testAbwSequenceIsShortExact(Z, Q, p, q):
    for ring in (Z, Q):
        sequence = abwSequence(BasedFreeModule.free(ring, p, prefix="p"), BasedFreeModule.free(ring, q, prefix="q"))
        assert sequence.middle.rank == sequence.source.rank + sequence.target.rank
        assert matrixRank(sequence.first.matrix) == sequence.source.rank
        assert matrixRank(sequence.second.matrix) == sequence.target.rank
        complex_ = ChainComplex(ring, [sequence.target, sequence.middle, sequence.source], [sequence.second, sequence.first])
        assert homology(complex_).isAcyclic()
