import pytest

from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainMap, complexFromMap, makeComplex, mappingCone, shift, totalTensor
from complexes.equivariant import (
    checkEquivariance, characterOnHomology, cycleType, knModule, partitions, permutationOfCycleType,
    predictedCharacter, tensorPower,
)
from complexes.eulerClass import LaurentClass, eulerAgreesWithHomology, eulerClass, lambdaOfClass, sigmaOfClass
from complexes.homology import homology, isAcyclic, isQuasiIsomorphism
from functors.basedModule import BasedFreeModule, ModuleMap
from utils.errors import NonFieldCoefficients, NotAComplex, WindowRequired


def _scalarMap(ring, value, sourceDegree=None):
    P = BasedFreeModule.free(ring, 1, prefix="p", degrees=[sourceDegree] if ring.isGraded else None)
    Q = BasedFreeModule.free(ring, 1, prefix="q", degrees=[0] if ring.isGraded else None)
    return ModuleMap(P, Q, SparseMatrix(ring, 1, 1, {(0, 0): value}))


def testHomologyOfMultiplicationByTwo(Z):
    descriptor = homology(complexFromMap(_scalarMap(Z, 2)))
    assert descriptor[0].asDict() == {"free_rank": 0, "torsion": [2]}
    assert descriptor[1].isZero()


def testHomologyOverFieldIsDimension(Q):
    descriptor = homology(complexFromMap(_scalarMap(Q, 0)))
    assert descriptor.asDict() == {"0": {"dimension": 1}, "1": {"dimension": 1}}


def testGradedHomologyNeedsWindow(Qx):
    complex_ = complexFromMap(_scalarMap(Qx, Qx.parse("x"), 1))
    with pytest.raises(WindowRequired):
        homology(complex_)
    descriptor = homology(complex_, 3)
    assert descriptor[0].asDict() == {"hilbert": {"0": 1}}
    assert descriptor[1].isZero()


def testSquareOfDifferentialMustVanish(Z):
    A, B, C = (BasedFreeModule.free(Z, 1, prefix=p) for p in "abc")
    d1 = ModuleMap(B, A, SparseMatrix.identity(Z, 1))
    d2 = ModuleMap(C, B, SparseMatrix.identity(Z, 1))
    with pytest.raises(NotAComplex):
        makeComplex([A, B, C], [d1, d2])


def testShiftAndTensorRanks(Z):
    base = complexFromMap(_scalarMap(Z, 2))
    assert shift(base, 2).ranks() == [0, 0, 1, 1]
    product = totalTensor(base, base)
    assert product.ranks() == [1, 2, 1]
    assert homology(product)[1].asDict() == {"free_rank": 0, "torsion": [2]}


def testIdentityIsQuasiIsomorphismAndConeIsAcyclic(Z):
    complex_ = complexFromMap(_scalarMap(Z, 3))
    identity = ChainMap(complex_, complex_, {k: ModuleMap.identity(complex_.module(k)) for k in range(2)})
    assert identity.isChainMap()
    assert isQuasiIsomorphism(identity)
    assert isAcyclic(mappingCone(identity))


def testZeroMapOnTorsionIsNotQuasiIsomorphism(Z):
    complex_ = complexFromMap(_scalarMap(Z, 3))
    zero = ChainMap(complex_, complex_, {})
    assert zero.isChainMap()
    assert not isQuasiIsomorphism(zero)


def testEulerClassMatchesGradedHomology(Qx):
    complex_ = complexFromMap(_scalarMap(Qx, Qx.parse("x"), 1))
    assert eulerClass(complex_) == LaurentClass({0: 1, 1: -1})
    assert eulerAgreesWithHomology(complex_, homology(complex_, 4))


def testOperationsOnLaurentClasses():
    x = LaurentClass({0: 1, 1: -1})
    assert sigmaOfClass(2, x) == LaurentClass({0: 1, 1: -1})
    assert lambdaOfClass(2, LaurentClass({0: 2})) == LaurentClass.constant(1)
    assert lambdaOfClass(2, x) == LaurentClass({1: -1, 2: 1})
    assert x.adams(3).asDict() == {"0": 1, "3": -1}


def testTensorSquareIsEquivariant(Z):
    power = tensorPower(complexFromMap(_scalarMap(Z, 2)), 2)
    assert power.complex.ranks() == [1, 2, 1]
    assert checkEquivariance(power)


def testSwapActsBySignOnFirstHomology(Qx):
    power = tensorPower(complexFromMap(_scalarMap(Qx, Qx.parse("x"), 1)), 2)
    assert characterOnHomology(power, (1, 0), 1, 4) == {1: -1}
    assert characterOnHomology(power, (0, 1), 1, 4) == {1: 1}
    assert characterOnHomology(power, (1, 0), 0, 4) == {0: 1}


def testCharacterNeedsFieldOrGradedRing(Z):
    power = tensorPower(complexFromMap(_scalarMap(Z, 2)), 2)
    with pytest.raises(NonFieldCoefficients):
        characterOnHomology(power, (1, 0), 1)


def testPredictedCharacterOfSwap():
    assert predictedCharacter(1, 1, 2, 1, (2,)) == -1
    assert predictedCharacter(1, 1, 2, 1, (1, 1)) == 1
    assert predictedCharacter(2, 1, 2, 0, (2,)) == 2


def testPartitionsAndCycleTypes():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for cycles in partitions(4):
        assert cycleType(permutationOfCycleType(cycles)) == cycles


@pytest.mark.parametrize("n", [2, 3, 4])
def testKnSplitsThePermutationModule(Z, n):
    assert knModule(Z, n).splitsPermutationModule()
