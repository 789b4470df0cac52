import pytest

from complexes.homology import homology
from functors.basedModule import BasedFreeModule, ModuleMap
from harness import predictions
from koszul.koszulComplex import dualKoszulComplex, koszulComplex, koszulMap
from koszul.resolutions import conormalFor, quotientHilbertFunction, resolutionFor, verifyResolution
from koszul.schurModules import coschurModule, schurModule
from koszul.witnesses import WitnessDatum, hookData, witnessIsBoundary, witnessesGenerateHomology
from utils.errors import UnsupportedIdeal


def testKoszulSquareOverIntegers(Z):
    conormal = conormalFor(Z, [2])
    descriptor = homology(koszulComplex(resolutionFor(2, conormal).presentation(), 2))
    assert descriptor[0].asDict() == {"free_rank": 0, "torsion": [2, 2, 2]}
    assert descriptor[1].asDict() == {"free_rank": 0, "torsion": [2]}
    assert descriptor[2].isZero()


@pytest.mark.parametrize("rank, n", [(1, 2), (2, 2), (2, 3), (3, 2)])
def testKoszulHomologyMatchesPrediction(Z, rank, n):
    conormal = conormalFor(Z, [3])
    descriptor = homology(koszulComplex(resolutionFor(rank, conormal).presentation(), n))
    for k in range(n + 1):
        expected = predictions.koszulPrediction(rank, n, k, conormal).homology(conormal)
        assert descriptor[k].asDict() == expected.asDict()


@pytest.mark.parametrize("rank, n", [(1, 2), (2, 2), (2, 3)])
def testDualKoszulHomologyMatchesPrediction(Z, rank, n):
    conormal = conormalFor(Z, [2])
    descriptor = homology(dualKoszulComplex(resolutionFor(rank, conormal).presentation(), n))
    for k in range(n + 1):
        expected = predictions.dualKoszulPrediction(rank, n, k, conormal).homology(conormal)
        assert descriptor[k].asDict() == expected.asDict()


def testGradedKoszulHomologyMatchesPrediction(Qx):
    conormal = conormalFor(Qx, [Qx.parse("x")])
    descriptor = homology(koszulComplex(resolutionFor(2, conormal).presentation(), 2), 4)
    assert descriptor[0].asDict() == {"hilbert": {"0": 3}}
    assert descriptor[1].asDict() == {"hilbert": {"1": 1}}
    for k in range(3):
        expected = predictions.koszulPrediction(2, 2, k, conormal).homology(conormal, 4)
        assert descriptor[k].asDict() == expected.asDict()


@pytest.mark.parametrize("rank", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def testKoszulOfIdentityIsExact(Q, rank, n):
    identity = ModuleMap.identity(BasedFreeModule.free(Q, rank))
    assert homology(koszulComplex(identity, n)).isAcyclic()
    assert homology(dualKoszulComplex(identity, n)).isAcyclic()


def testSchurAndCoschurRanks(Z):
    V = BasedFreeModule.free(Z, 2)
    assert schurModule(V, 2, 0).rank == 3
    assert schurModule(V, 2, 1).rank == 1
    assert schurModule(V, 3, 1).rank == 2
    assert coschurModule(V, 2, 1).rank == 3
    assert predictions.schurRank(2, 3, 1) == 2


def testKoszulMapOfIdentityIsChainMap(Z):
    f = resolutionFor(2, conormalFor(Z, [2])).presentation()
    complex_ = koszulComplex(f, 2)
    alpha = koszulMap(ModuleMap.identity(f.domain), ModuleMap.identity(f.codomain), complex_, complex_, 2)
    assert alpha.isChainMap()
    for k in range(3):
        assert alpha.component(k).equals(ModuleMap.identity(complex_.module(k)))


def testHookWitnessesGenerate(Z):
    resolution = resolutionFor(2, conormalFor(Z, [2]))
    assert len(hookData(2, 2, 1, 2)) == 1
    for k in range(2):
        assert witnessesGenerateHomology(resolution, 2, k)


def testWitnessFromSquareOfIdealIsBoundary(Z):
    resolution = resolutionFor(2, conormalFor(Z, [2]))
    assert not witnessIsBoundary(resolution, 2, WitnessDatum(word=(0, 1), scalars=(2,)))
    assert witnessIsBoundary(resolution, 2, WitnessDatum(word=(0, 1), scalars=(4,)))


def testCompleteIntersectionResolution(Qxy):
    conormal = conormalFor(Qxy, [Qxy.parse("x"), Qxy.parse("y")])
    assert conormal.d == 2
    assert conormal.quotientRing.name == "Q"
    resolution = resolutionFor(2, conormal)
    assert resolution.complex.ranks() == [2, 4, 2]
    assert verifyResolution(resolution, 4)
    assert [quotientHilbertFunction(conormal, t) for t in range(3)] == [1, 0, 0]


def testQuotientHilbertFunctionOfSquare(Qx):
    conormal = conormalFor(Qx, [Qx.parse("x**2")])
    assert [quotientHilbertFunction(conormal, t) for t in range(4)] == [1, 1, 0, 0]


@pytest.mark.parametrize("ringName, generators", [
    ("Z", ["1"]),
    ("Z", ["2", "3"]),
    ("Qxy", ["x", "x"]),
    ("Qxy", ["x + y**2"]),
])
def testUnsupportedIdeals(request, ringName, generators):
    ring = request.getfixturevalue(ringName)
    with pytest.raises(UnsupportedIdeal):
        conormalFor(ring, [ring.parse(g) for g in generators])


def testZeroIdealIsUnsupported(Q):
    with pytest.raises(UnsupportedIdeal):
        conormalFor(Q, [])
