"""
Seeded random instances for the property suites.

Everything is drawn from a random.Random(seed), so the same seed always
yields the same matrices, complexes and map pairs.
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional

from algebra.ringDescriptor import RingDescriptor, integers
from algebra.smithNormalForm import integerKernelBasis
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex, ChainMap, complexFromMap, makeComplex, totalTensor
from functors.basedModule import BasedFreeModule, ModuleMap

logger = logging.getLogger(__name__)

ENTRY_BOUND = 9


def randomIntegerMatrix(rng: random.Random, rows: int, cols: int, bound: int = ENTRY_BOUND,
                        density: float = 0.7) -> SparseMatrix:
    """Integer matrix with entries in [-bound, bound]; each entry is nonzero with the given probability."""
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                value = rng.randint(-bound, bound)
                if value:
                    entries[(i, j)] = value
    return SparseMatrix(integers(), rows, cols, entries)


def _toRing(matrix: SparseMatrix, ring: RingDescriptor) -> SparseMatrix:
    return matrix if ring.isIntegers else SparseMatrix(ring, matrix.rows, matrix.cols, matrix.entries)


def randomComplex(rng: random.Random, ring: RingDescriptor, length: int, maxRank: int = 3) -> ChainComplex:
    """
    A complex over Z or a field with d_{k+1} = K_k M, where the columns of K_k
    span the integer kernel of d_k and M is random, so d o d = 0.
    """
    ranks = [rng.randint(1, maxRank) for _ in range(length + 1)]
    modules = [BasedFreeModule.free(ring, rank, prefix=f"c{k}_") for k, rank in enumerate(ranks)]
    integral: List[SparseMatrix] = []
    for k in range(1, length + 1):
        if k == 1:
            d = randomIntegerMatrix(rng, ranks[0], ranks[1])
        else:
            kernel = integerKernelBasis(integral[-1])
            if not kernel:
                d = SparseMatrix.zero(integers(), ranks[k - 1], ranks[k])
            else:
                K = SparseMatrix.fromColumns(integers(), ranks[k - 1], kernel)
                d = K @ randomIntegerMatrix(rng, len(kernel), ranks[k], bound=3)
        integral.append(d)
    differentials = [
        ModuleMap(modules[k], modules[k - 1], _toRing(d, ring)) for k, d in enumerate(integral, start=1)
    ]
    complex_ = makeComplex(modules, differentials, ring)
    logger.debug("Random complex over %s with ranks %s", ring.name, complex_.ranks())
    return complex_


def randomComplexes(seed: int, ring: RingDescriptor, count: int, maxLength: int = 3,
                    maxRank: int = 3) -> List[ChainComplex]:
    rng = random.Random(seed)
    return [randomComplex(rng, ring, rng.randint(1, maxLength), maxRank) for _ in range(count)]


def randomMap(rng: random.Random, ring: RingDescriptor, sourceRank: int, targetRank: int) -> ModuleMap:
    P = BasedFreeModule.free(ring, sourceRank, prefix="p")
    Q = BasedFreeModule.free(ring, targetRank, prefix="q")
    matrix = _toRing(randomIntegerMatrix(rng, targetRank, sourceRank), ring)
    return ModuleMap(P, Q, matrix)


# Graded complexes over a polynomial ring in one variable

def _homogeneousMap(rng: random.Random, ring: RingDescriptor, source: BasedFreeModule,
                    target: BasedFreeModule) -> ModuleMap:
    """Entry (i, j) is c x^{deg source_j - deg target_i}, or zero when that degree is negative."""
    x = ring.polyRing.gens[0]
    entries = {}
    for i, targetDegree in enumerate(target.degreeList()):
        for j, sourceDegree in enumerate(source.degreeList()):
            gap = sourceDegree - targetDegree
            c = rng.randint(-3, 3)
            if gap >= 0 and c:
                entries[(i, j)] = ring.fromInt(c) * x ** gap
    return ModuleMap(source, target, SparseMatrix(ring, target.rank, source.rank, entries))


def randomGradedModule(rng: random.Random, ring: RingDescriptor, maxRank: int, prefix: str,
                       lowest: int = 0, highest: int = 2) -> BasedFreeModule:
    rank = rng.randint(1, maxRank)
    return BasedFreeModule.free(ring, rank, prefix=prefix, degrees=[rng.randint(lowest, highest) for _ in range(rank)])


def randomGradedComplex(rng: random.Random, ring: RingDescriptor, length: int, maxRank: int = 2) -> ChainComplex:
    """
    A graded complex of length 0, 1 or 2. Length 2 is the total tensor product
    of two random length-one complexes, so d o d = 0 holds by construction.
    """
    if length == 0:
        return makeComplex([randomGradedModule(rng, ring, maxRank, "a")], [], ring)
    if length == 1:
        Q = randomGradedModule(rng, ring, maxRank, "q")
        P = randomGradedModule(rng, ring, maxRank, "p", lowest=1, highest=3)
        return complexFromMap(_homogeneousMap(rng, ring, P, Q))
    if length == 2:
        return totalTensor(randomGradedComplex(rng, ring, 1, 1), randomGradedComplex(rng, ring, 1, maxRank))
    raise ValueError(f"Random graded complexes have length at most 2, got {length}")


def randomGradedComplexes(seed: int, ring: RingDescriptor, count: int, maxLength: int = 2) -> List[ChainComplex]:
    rng = random.Random(seed)
    return [randomGradedComplex(rng, ring, rng.randint(0, maxLength)) for _ in range(count)]


# Homotopic pairs of chain endomorphisms of P -> Q

@dataclass
class HomotopicPair:
    """Chain endomorphisms alpha1, alpha2 of f: P -> Q with alpha2 - alpha1 = d h + h d."""

    f: ModuleMap
    first: ChainMap
    second: ChainMap
    homotopy: ModuleMap

    def components(self, which: int):
        """(alpha_P, alpha_Q) of the first (1) or second (2) map."""
        alpha = self.first if which == 1 else self.second
        return alpha.component(1), alpha.component(0)


def homotopicPair(rng: random.Random, ring: RingDescriptor, maxRank: int = 2,
                  f: Optional[ModuleMap] = None) -> HomotopicPair:
    """
    alpha1 = (c + B f, c + f B) for a random B: Q -> P, and alpha2 = alpha1 + (h f, f h)
    for a random homotopy h: Q -> P. Both commute with f by construction.
    """
    if f is None:
        f = randomMap(rng, ring, rng.randint(1, maxRank), rng.randint(1, maxRank))
    P, Q = f.domain, f.codomain
    B = ModuleMap(Q, P, _toRing(randomIntegerMatrix(rng, P.rank, Q.rank, bound=3), ring), checkDegrees=False)
    h = ModuleMap(Q, P, _toRing(randomIntegerMatrix(rng, P.rank, Q.rank, bound=3), ring), checkDegrees=False)
    c = ring.fromInt(rng.randint(-3, 3))
    alphaP = ModuleMap.identity(P).scale(c) + B.compose(f)
    alphaQ = ModuleMap.identity(Q).scale(c) + f.compose(B)
    complex_ = complexFromMap(f)
    first = ChainMap(complex_, complex_, {1: alphaP, 0: alphaQ})
    second = ChainMap(complex_, complex_, {1: alphaP + h.compose(f), 0: alphaQ + f.compose(h)})
    first.check()
    second.check()
    return HomotopicPair(f=f, first=first, second=second, homotopy=h)


def homotopicPairs(seed: int, ring: RingDescriptor, count: int, maxRank: int = 2) -> List[HomotopicPair]:
    rng = random.Random(seed)
    return [homotopicPair(rng, ring, maxRank) for _ in range(count)]
