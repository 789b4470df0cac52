"""
Catalogue of lambda-ring identities checked as exact polynomial equalities.

Each entry builds both sides in a split ring Z[u, t, s] with C = u_1 + .. + u_d,
x = t_1 + .. + t_N and (where needed) y = s_1 + .. + s_M. With N >= n the
lambda_i(x), i <= n, are algebraically independent, so an identity that is
polynomial in them and holds on split x holds formally.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from lambdaRing.operations import (
    OperationExpr, adams, adamsNewton, bott, lambdaK, lambdaMinusOne, relativeOp, relativeOpAtOne, schurOp,
    sigmaK,
)
from lambdaRing.splitRing import LambdaElement, SplitRing

logger = logging.getLogger(__name__)

SAMPLE_VALUES = (2, 3, 5, 7, 11, 13, 17, 19)


@dataclass
class IdentityResult:
    """Outcome of one identity instance; a failure carries a substitution where the sides differ."""

    name: str
    params: Dict[str, int]
    passed: bool
    counterexample: Optional[Dict[str, int]] = None
    values: Optional[Tuple[int, int]] = None

    def asDict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(self.params),
            "passed": self.passed,
            "counterexample": self.counterexample,
            "values": list(self.values) if self.values else None,
        }


@dataclass(frozen=True)
class IdentitySpec:
    """A catalogue entry: the builder of (lhs, rhs) pairs and its parameter constraints."""

    name: str
    builder: Callable[[SplitRing, int], List[Tuple[LambdaElement, LambdaElement]]]
    needsY: bool = False
    fixedD: Optional[int] = None
    minN: int = 1
    description: str = ""


def _lemma41a(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    mu1, mu2 = OperationExpr.sigma(n), OperationExpr.lam(1)
    lhs = relativeOp(mu1 * mu2, C, x)
    rhs = relativeOp(mu1, C, x) * relativeOp(mu2, C, x) * lambdaMinusOne(C)
    return [(lhs, rhs)]


def _lemma41b(ring: SplitRing, n: int):
    C, x, y = ring.conormalClass(), ring.xClass(), ring.yClass()
    sigma = OperationExpr.sigma
    lhs = relativeOp(sigma(n), C, x + y)
    rhs = relativeOp(sigma(n), C, x) + relativeOp(sigma(n), C, y)
    lambdaC = lambdaMinusOne(C)
    for i in range(1, n):
        rhs = rhs + relativeOp(sigma(i), C, x) * relativeOp(sigma(n - i), C, y) * lambdaC
    return [(lhs, rhs)]


def _lemma41c(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    return [(relativeOp(OperationExpr.adams(n), C, x), bott(n, C) * adams(n, x))]


def _lemma41d(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    lhs = relativeOp(OperationExpr.sigma(n), C, x)
    rhs = ring.zero()
    for k in range(n):
        term = schurOp(n, k, x) * C ** k
        rhs = rhs + term if k % 2 == 0 else rhs - term
    alternating = ring.zero()
    for k in range(n):
        term = schurOp(n, k, x)
        alternating = alternating + term if k % 2 == 0 else alternating - term
    return [
        (lhs, rhs),
        (relativeOpAtOne(OperationExpr.sigma(n), x), adams(n, x)),
        (alternating, adams(n, x)),
    ]


def _lemma62(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    sigma2, lambda2 = sigmaK(2, x), lambdaK(2, x)
    rhs = ring.zero()
    for i in range(ring.d + 1):
        rhs = rhs + (sigma2 if i % 2 == 0 else -lambda2) * lambdaK(i, C)
    return [(relativeOp(OperationExpr.sigma(2), C, x), rhs)]


def _example66(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    s13 = schurOp(3, 1, x)
    lambda2C = lambdaK(2, C)
    rhs = (
        sigmaK(3, x)
        - s13 * C
        + (sigmaK(2, x) * x * lambda2C + lambdaK(3, x) * sigmaK(2, C))
        - s13 * C * lambda2C
        + sigmaK(3, x) * lambda2C ** 2
    )
    return [(relativeOp(OperationExpr.sigma(3), C, x), rhs)]


def _sigmaOfNegative(ring: SplitRing, n: int):
    x = ring.xClass()
    pairs = []
    for i in range(n + 1):
        expected = lambdaK(i, x) if i % 2 == 0 else -lambdaK(i, x)
        pairs.append((sigmaK(i, -x), expected))
    return pairs


def _generatingSeries(ring: SplitRing, n: int):
    x = ring.xClass()
    total = ring.zero()
    for i in range(n + 1):
        term = sigmaK(n - i, x) * lambdaK(i, x)
        total = total + term if i % 2 == 0 else total - term
    return [(total, ring.zero())]


def _adamsNewton(ring: SplitRing, n: int):
    x = ring.xClass()
    pairs = [(adams(n, x), adamsNewton(n, x))]
    if n == 2:
        pairs.append((adams(2, x), sigmaK(2, x) - lambdaK(2, x)))
    return pairs


def _adamsRingHomomorphism(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    return [
        (adams(n, x + C), adams(n, x) + adams(n, C)),
        (adams(n, x * C), adams(n, x) * adams(n, C)),
    ]


def _bottMultiplicative(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    return [(bott(n, C + x), bott(n, C) * bott(n, x))]


def _relativeSymmetry(ring: SplitRing, n: int):
    C, x = ring.conormalClass(), ring.xClass()
    value = relativeOp(OperationExpr.sigma(n), C, x)
    return [(value.relabel(mapping), value) for mapping in value.groupGenerators()]


CATALOGUE: Dict[str, IdentitySpec] = {
    spec.name: spec for spec in [
        IdentitySpec("lemma41a", _lemma41a, description="(mu1 mu2)(C,x) = mu1(C,x) mu2(C,x) lambda_-1(C)"),
        IdentitySpec("lemma41b", _lemma41b, needsY=True, description="sigma_n(C, x+y) expansion"),
        IdentitySpec("lemma41c", _lemma41c, description="psi_n(C,x) = theta^n(C) psi_n(x)"),
        IdentitySpec("lemma41d", _lemma41d, fixedD=1, description="sigma_n(C,x) = sum (-1)^k s_k^n(x) C^k; sigma_n(1,x) = psi_n(x)"),
        IdentitySpec("lemma62", _lemma62, minN=2, description="sigma_2(C,x) = sigma_2(x) lambda_0(C) - lambda_2(x) lambda_1(C) + .."),
        IdentitySpec("example66", _example66, fixedD=2, minN=3, description="sigma_3(C,x) for C of lambda-degree 2"),
        IdentitySpec("sigmaOfNegative", _sigmaOfNegative, description="sigma_i(-x) = (-1)^i lambda_i(x)"),
        IdentitySpec("generatingSeries", _generatingSeries, description="sum_i (-1)^i sigma_{n-i} lambda_i = 0"),
        IdentitySpec("adamsNewton", _adamsNewton, description="power sums equal Newton polynomials; psi_2 = sigma_2 - lambda_2"),
        IdentitySpec("adamsRingHomomorphism", _adamsRingHomomorphism, description="psi_n is additive and multiplicative"),
        IdentitySpec("bottMultiplicative", _bottMultiplicative, description="theta^n(C + C') = theta^n(C) theta^n(C')"),
        IdentitySpec("relativeSymmetry", _relativeSymmetry, description="sigma_n(C,x) is symmetric in the u's and t's"),
    ]
}


def _counterexample(ring: SplitRing, lhs: LambdaElement, rhs: LambdaElement) -> Tuple[Dict[str, int], Tuple[int, int]]:
    """A small integer substitution separating two different polynomials."""
    difference = lhs - rhs
    names = ring.names
    for shift in range(len(SAMPLE_VALUES)):
        values = {name: SAMPLE_VALUES[(i + shift) % len(SAMPLE_VALUES)] for i, name in enumerate(names)}
        if difference.evaluate(values) != 0:
            return values, (lhs.evaluate(values), rhs.evaluate(values))
    values = {name: SAMPLE_VALUES[i % len(SAMPLE_VALUES)] for i, name in enumerate(names)}
    return values, (lhs.evaluate(values), rhs.evaluate(values))


def verifyIdentity(name: str, d: int, n: int, N: int, M: Optional[int] = None) -> IdentityResult:
    """
    Check one catalogue identity on split C (d lines) and x (N lines).

    Args:
        name: Catalogue key
        d: Lambda-degree of C (overridden by entries that fix it)
        n: Operation index
        N: Number of lines of x
        M: Number of lines of y for identities involving x + y (default min(N, 2))
    """
    if name not in CATALOGUE:
        raise ValueError(f"Unknown identity {name!r}; known: {sorted(CATALOGUE)}")
    spec = CATALOGUE[name]
    if spec.fixedD is not None:
        d = spec.fixedD
    if spec.needsY:
        M = min(N, 2) if M is None else M
    else:
        M = 0
    params = {"d": d, "n": n, "N": N, "M": M}
    ring = SplitRing(d, N, M)
    for lhs, rhs in spec.builder(ring, n):
        if lhs != rhs:
            substitution, values = _counterexample(ring, lhs, rhs)
            logger.info("Identity %s fails at %s", name, params)
            return IdentityResult(name, params, False, substitution, values)
    logger.debug("Identity %s holds at %s", name, params)
    return IdentityResult(name, params, True)


def catalogueGrid(maxD: int = 3, maxN: int = 4, maxLines: int = 4) -> List[Tuple[str, int, int, int]]:
    """(name, d, n, N) instances of every catalogue entry within the bounds."""
    grid = []
    for name, spec in CATALOGUE.items():
        dValues = [spec.fixedD] if spec.fixedD is not None else list(range(1, maxD + 1))
        nValues = [3] if name == "example66" else ([2] if name == "lemma62" else list(range(1, maxN + 1)))
        for d in dValues:
            for n in nValues:
                if n < spec.minN:
                    continue
                grid.append((name, d, n, min(maxLines, max(n, spec.minN, 2))))
    return grid
