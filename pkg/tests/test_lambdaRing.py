import pytest
import sympy

from lambdaRing.identities import CATALOGUE, catalogueGrid, verifyIdentity
from lambdaRing.operations import (
    OperationExpr, adams, bott, lambdaDegree, lambdaK, lambdaMinusOne, lambdaSymbol, operationByName, relativeOp,
    relativeOpAtOne, schurOp, sigmaK,
)
from lambdaRing.splitRing import SplitRing
from utils.errors import NotSplitForm


def testElementaryAndCompleteOperationsOnTwoLines():
    ring = SplitRing(0, 2)
    x = ring.xClass()
    assert lambdaK(2, x) == ring.fromExpr("t1*t2")
    assert sigmaK(2, x) == ring.fromExpr("t1**2 + t1*t2 + t2**2")
    assert sigmaK(2, x).rankAtOnes() == 3
    assert lambdaK(3, x).isZero()


def testAdamsOperationIsPowerSum():
    ring = SplitRing(0, 3)
    x = ring.xClass()
    assert adams(2, x) == ring.fromExpr("t1**2 + t2**2 + t3**2")
    assert operationByName("psi", 2).evaluate(x) == adams(2, x)


def testSchurOperationRanks():
    x = SplitRing(1, 2).xClass()
    assert schurOp(3, 1, x).rankAtOnes() == 2
    assert schurOp(2, 0, x).rankAtOnes() == 3
    with pytest.raises(ValueError):
        schurOp(2, 3, x)


@pytest.mark.parametrize("d, n", [(1, 2), (2, 2), (2, 3), (3, 4)])
def testBottElementRank(d, n):
    assert bott(n, SplitRing(d, 1).conormalClass()).rankAtOnes() == n ** d


def testBottElementOfOneLine():
    ring = SplitRing(1, 0)
    assert bott(3, ring.conormalClass()) == ring.fromExpr("1 + u1 + u1**2")
    with pytest.raises(NotSplitForm):
        bott(2, -ring.conormalClass())


def testLambdaMinusOneIsProductOverLines():
    ring = SplitRing(2, 0)
    C = ring.conormalClass()
    assert lambdaDegree(C) == 2
    assert lambdaMinusOne(C) == ring.fromExpr("(1 - u1)*(1 - u2)")


def testRelativeOperationOfFirstLambda():
    ring = SplitRing(2, 2)
    C, x = ring.conormalClass(), ring.xClass()
    assert relativeOp(OperationExpr.lam(1), C, x) == x


@pytest.mark.parametrize("n", [1, 2, 3])
def testSigmaRelativeToTrivialLineIsAdams(n):
    x = SplitRing(1, 2).xClass()
    assert relativeOpAtOne(OperationExpr.sigma(n), x) == adams(n, x)


def testRelativeSigmaIsSymmetric():
    ring = SplitRing(2, 2)
    value = relativeOp(OperationExpr.sigma(2), ring.conormalClass(), ring.xClass())
    assert value.isSymmetric()
    assert not ring.fromExpr("t1").isSymmetric()


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def testCatalogueIdentitiesHold(name):
    n = 3 if name == "example66" else 2
    result = verifyIdentity(name, 1, n, 2)
    assert result.passed, result.asDict()
    assert result.counterexample is None


def testUnknownIdentityIsRejected():
    with pytest.raises(ValueError):
        verifyIdentity("noSuchIdentity", 1, 2, 2)


def testCatalogueGridRespectsConstraints():
    grid = catalogueGrid(maxD=2, maxN=3)
    assert {name for name, _, _, _ in grid} == set(CATALOGUE)
    for name, d, n, N in grid:
        spec = CATALOGUE[name]
        assert n >= spec.minN
        if spec.fixedD is not None:
            assert d == spec.fixedD


def testOperationExpressionsRejectConstants():
    with pytest.raises(ValueError):
        OperationExpr(lambdaSymbol(1) + sympy.Integer(1))
    with pytest.raises(ValueError):
        OperationExpr(sympy.Symbol("z"))
    assert OperationExpr.sigma(2).top == 2


def testSplitFormParsing():
    ring = SplitRing(1, 1)
    assert ring.fromExpr("u1*t1 + 2").rankAtOnes() == 3
    with pytest.raises(NotSplitForm):
        ring.fromExpr("w9")
