"""Lambda ring module: split-variable elements, lambda/sigma/Adams/Schur/Bott operations and identity checks."""

from lambdaRing.splitRing import LambdaElement, SplitRing
from lambdaRing.operations import (
    OperationExpr, adams, adamsNewton, adamsPowerSum, bott, lambdaDegree, lambdaK, lambdaMinusOne, lambdaSeries,
    operationByName, relativeOp, relativeOpAtOne, schurOp, sigmaK, sigmaSeries,
)
from lambdaRing.identities import CATALOGUE, IdentityResult, IdentitySpec, catalogueGrid, verifyIdentity

__all__ = [
    "LambdaElement", "SplitRing", "OperationExpr", "adams", "adamsNewton", "adamsPowerSum", "bott", "lambdaDegree",
    "lambdaK", "lambdaMinusOne", "lambdaSeries", "operationByName", "relativeOp", "relativeOpAtOne", "schurOp",
    "sigmaK", "sigmaSeries", "CATALOGUE", "IdentityResult", "IdentitySpec", "catalogueGrid", "verifyIdentity",
]
