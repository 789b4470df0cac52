"""
The comparison map u^n(f): Kos^n(f) -> N Sym^n Gamma(P -> Q).

In degree k, p_1 ^ .. ^ p_k (x) m goes to

    sum_sigma sgn(sigma) prod_j p_{sigma(j)}[copy k + 1 - j] * m[Q]

inside Sym^n(Gamma(P -> Q)_k) = Sym^n(Q + P^k), where p[copy s] is p in the
summand of step set {s}.
"""

import logging
from itertools import permutations
from typing import Optional

from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainMap, complexFromMap
from complexes.homology import isQuasiIsomorphism
from functors.basedModule import ModuleMap
from functors.functorTags import Ext, Sym, sortWithSign
from koszul.koszulComplex import koszulComplex
from simplicial.normalization import NfgComplex, nfgData

logger = logging.getLogger(__name__)


def comparisonU(f: ModuleMap, n: int, target: Optional[NfgComplex] = None) -> ChainMap:
    """
    Build u^n(f) and check that it commutes with the differentials.

    Raises:
        NotChainMap: If some square fails to commute
    """
    P, Q = f.domain, f.codomain
    ring = f.ring
    source = koszulComplex(f, n)
    target = target or nfgData(complexFromMap(f), Sym(n))
    components = {}
    for k in range(0, min(n, len(target.levels) - 1) + 1):
        level = target.levels[k]
        gammaPositions = level.gamma.positions
        wedges = Ext(k).indexTuples(P.rank)
        monomials = Sym(n - k).indexTuples(Q.rank)
        entries = {}
        for a, wedge in enumerate(wedges):
            for b, monomial in enumerate(monomials):
                column = a * len(monomials) + b
                qPart = [gammaPositions[(0, (), q)] for q in monomial]
                for sigma in permutations(range(k)):
                    _, sign = sortWithSign(sigma)
                    pPart = [gammaPositions[(1, (k - j,), wedge[sigma[j]])] for j in range(k)]
                    row = level.positions[tuple(sorted(pPart + qPart))]
                    entries[(row, column)] = entries.get((row, column), 0) + sign
        matrix = SparseMatrix(ring, level.module.rank, source.module(k).rank, entries)
        components[k] = ModuleMap(source.module(k), level.module, matrix, checkDegrees=False)
    u = ChainMap(source, target.complex, components)
    u.check()
    logger.debug("u^%d(f) commutes with the differentials", n)
    return u


def comparisonIsQuasiIsomorphism(f: ModuleMap, n: int, window: Optional[int] = None) -> bool:
    return isQuasiIsomorphism(comparisonU(f, n), window)
