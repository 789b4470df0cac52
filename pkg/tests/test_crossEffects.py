import pytest

from crossEffects.crossEffect import crossEffect, crossEffectMap, decompose, functorDegreeCheck, hasExactDegree, symmetricAction
from crossEffects.diagonalPlus import (
    compositions, diagonalMap, diagonalMapsBijective, plusAfterDiagonal, plusAfterDiagonalExpected, plusMap,
    plusMapsBijective, symCrossEffectRank, vanishesBelowDegree,
)
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.functorTags import Div, Ext, Sym, Tensor, allTags


def testCrossEffectOfSymmetricSquareOnLines(Q):
    V = BasedFreeModule.free(Q, 1)
    assert crossEffect(Sym(2), [V, V]).rank == 1
    assert crossEffect(Sym(2), [V, V, V]).rank == 0


@pytest.mark.parametrize("n, ranks", [(2, (1, 1)), (3, (2, 1)), (3, (1, 1, 1)), (2, (2, 3))])
def testSymmetricCrossEffectRanks(Z, n, ranks):
    modules = [BasedFreeModule.free(Z, r) for r in ranks]
    assert crossEffect(Sym(n), modules).rank == symCrossEffectRank(n, ranks)


def testSymmetricCrossEffectRankFormula():
    assert symCrossEffectRank(3, [2, 1]) == 5
    assert compositions(4, 2) == [(1, 3), (2, 2), (3, 1)]
    assert compositions(2, 3) == []


def testCrossEffectOfNoArgumentsIsZero(Z):
    assert crossEffect(Sym(2), [], Z).rank == 0


@pytest.mark.parametrize("functor", allTags(2), ids=str)
def testDecompositionResolvesIdentity(Z, functor):
    arguments = [BasedFreeModule.free(Z, 1), BasedFreeModule.free(Z, 2)]
    assert decompose(functor, arguments).resolvesIdentity()


def testCrossEffectMapOfIdentities(Z):
    V = BasedFreeModule.free(Z, 2)
    identity = ModuleMap.identity(V)
    lifted = crossEffectMap(Tensor(2), [identity, identity])
    assert lifted.equals(ModuleMap.identity(lifted.domain))


@pytest.mark.parametrize("functor", [Sym(2), Ext(2), Tensor(2), Sym(3)], ids=str)
def testSwapOnCrossEffectIsInvolution(Z, functor):
    swap = symmetricAction(functor, BasedFreeModule.free(Z, 2), 2, (1, 0))
    assert swap.compose(swap).equals(ModuleMap.identity(swap.domain))


@pytest.mark.parametrize("functor", allTags(3), ids=str)
def testFunctorsHaveTheirDegree(Z, functor):
    assert hasExactDegree(functor, functor.n, 1, Z)


def testDegreeCheckRecordsRank(Z):
    check = functorDegreeCheck(Sym(2), 1, 1, Z)
    assert check.crossEffectRank == 1
    assert not check.passed


@pytest.mark.parametrize("functor", allTags(3), ids=str)
def testPlusAfterDiagonal(Z, functor):
    V = BasedFreeModule.free(Z, 2)
    assert plusAfterDiagonal(functor, V).equals(plusAfterDiagonalExpected(functor, V))


def testPlusAfterDiagonalDoublesSymmetricSquare(Z):
    composite = plusAfterDiagonal(Sym(2), BasedFreeModule.free(Z, 2))
    assert composite.equals(ModuleMap.identity(composite.domain).scale(2))


def testDiagonalAndPlusOfSymmetricSquareOnLine(Z):
    A = BasedFreeModule.free(Z, 1)
    assert diagonalMap(Sym(2), (2,), [A]).matrix.toDense() == [[2]]
    assert plusMap(Sym(2), (2,), [A]).matrix.toDense() == [[1]]


@pytest.mark.parametrize("n", [2, 3])
def testCharacterizationOverIntegers(Z, n):
    assert plusMapsBijective(Sym(n), Z).passed
    assert diagonalMapsBijective(Div(n), Z).passed
    assert vanishesBelowDegree(Ext(n), Z).passed
    assert not diagonalMapsBijective(Sym(n), Z).passed
    assert not plusMapsBijective(Div(n), Z).passed


@pytest.mark.parametrize("n", [2, 3])
def testCharacterizationOverRationals(Q, n):
    assert plusMapsBijective(Sym(n), Q).passed
    assert diagonalMapsBijective(Sym(n), Q).passed
    assert plusMapsBijective(Div(n), Q).passed


def testFailedCheckNamesIndex(Z):
    check = diagonalMapsBijective(Sym(2), Z)
    assert check.hypothesis == "diag"
    assert check.failedAt == 1
