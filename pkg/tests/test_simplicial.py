import random

import pytest

from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import complexFromMap
from complexes.eulerClass import eulerClass, sigmaOfClass
from complexes.homology import homology
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.functorTags import Ext, Sym
from harness.randomInstances import randomComplexes, randomMap
from simplicial.comparisonMap import comparisonIsQuasiIsomorphism, comparisonU
from simplicial.gammaFunctor import gamma
from simplicial.lemma22 import compareWithNfg
from simplicial.normalization import nfg, nfgGeneric, normalize
from simplicial.simplicialModule import checkSimplicialIdentities


def _doubling(ring, rank=1, degree=None):
    P = BasedFreeModule.free(ring, rank, prefix="p", degrees=[degree] * rank if ring.isGraded else None)
    Q = BasedFreeModule.free(ring, rank, prefix="q", degrees=[0] * rank if ring.isGraded else None)
    value = ring.parse("x") if ring.isGraded else 2
    return ModuleMap(P, Q, SparseMatrix(ring, rank, rank, {(i, i): value for i in range(rank)}))


def testNormalizedGammaRecoversRanks(Z):
    complex_ = complexFromMap(_doubling(Z, 2))
    recovered = normalize(gamma(complex_, complex_.length))
    assert recovered.ranks() == complex_.ranks()
    assert homology(recovered).asDict() == homology(complex_).asDict()


@pytest.mark.parametrize("seed", [0, 1, 2])
def testGammaSatisfiesSimplicialIdentities(Z, seed):
    for complex_ in randomComplexes(seed, Z, 3, maxLength=2):
        assert checkSimplicialIdentities(gamma(complex_, complex_.length + 1)).passed


def testSymmetricSquareOfDoubling(Z):
    descriptor = homology(nfg(complexFromMap(_doubling(Z)), Sym(2)))
    assert descriptor[0].asDict() == {"free_rank": 0, "torsion": [2]}
    assert descriptor[1].isZero()
    assert descriptor[2].isZero()


@pytest.mark.parametrize("functor", [Sym(2), Ext(2)], ids=str)
def testFastAndGenericNormalizationAgree(Z, functor):
    complex_ = complexFromMap(_doubling(Z, 2))
    fast = homology(nfg(complex_, functor))
    generic = homology(nfgGeneric(complex_, functor))
    assert fast.asDict() == generic.asDict()


@pytest.mark.parametrize("n", [1, 2, 3])
def testKoszulComparisonIsQuasiIsomorphism(Z, n):
    f = _doubling(Z, 2)
    assert comparisonU(f, n).isChainMap()
    assert comparisonIsQuasiIsomorphism(f, n)


def testKoszulComparisonOverGradedRing(Qx):
    assert comparisonIsQuasiIsomorphism(_doubling(Qx, 1, degree=1), 2, window=4)


@pytest.mark.parametrize("functor", [Sym(2), Ext(2), Sym(3)], ids=str)
def testCrossEffectComplexMatchesNfg(Z, functor):
    rng = random.Random(7)
    f = randomMap(rng, Z, 2, 2)
    assert compareWithNfg(f, functor).passed


def testCrossEffectComplexOfDoubling(Z):
    comparison = compareWithNfg(_doubling(Z), Sym(2))
    assert comparison.data.complex.ranks() == [1, 2, 1]
    assert comparison.nfg.complex.ranks() == [1, 2, 1]
    assert comparison.invertible
    assert comparison.commutes
    assert homology(comparison.data.complex).asDict() == homology(comparison.nfg.complex).asDict()


@pytest.mark.parametrize("functor", [Sym(1), Ext(2), Ext(3), Sym(3)], ids=str)
@pytest.mark.parametrize("seed, ranks", [(3, (1, 2)), (4, (2, 1)), (5, (2, 2))])
def testCrossEffectComplexMatchesNfgOverRationals(Q, functor, seed, ranks):
    f = randomMap(random.Random(seed), Q, *ranks)
    comparison = compareWithNfg(f, functor)
    assert comparison.passed
    assert len(comparison.identification.components) == functor.n + 1


def testEulerClassOfSymmetricPowers(Qx):
    complex_ = complexFromMap(_doubling(Qx, 1, degree=1))
    for n in (1, 2, 3):
        assert eulerClass(nfg(complex_, Sym(n))) == sigmaOfClass(n, eulerClass(complex_))
