"""
Koszul complexes of a map f: P -> Q and their duals.

Kos^n(f)_k = Lambda^k(P) (x) Sym^{n-k}(Q), with
    d(p_1 ^ .. ^ p_k (x) m) = sum_i (-1)^{k-i} p_1 ^ .. p_i^ .. ^ p_k (x) f(p_i) m.

dual-Kos^n(f)_k = D^k(P) (x) Lambda^{n-k}(Q), with
    d(g_A (x) w) = sum_{b in A} g_{A - b} (x) f(p_b) ^ w,
where g_A is the divided power monomial of the multiset A.
"""

import logging
from collections import defaultdict
from typing import Any, Dict, Tuple

from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex, ChainMap
from functors.basedModule import BasedFreeModule, ModuleMap, tensorProduct, tensorProductMap
from functors.functorTags import Div, Ext, FunctorTag, Sym, sortWithSign

logger = logging.getLogger(__name__)


def _pairModule(left: FunctorTag, right: FunctorTag, P: BasedFreeModule, Q: BasedFreeModule):
    leftTuples = left.indexTuples(P.rank)
    rightTuples = right.indexTuples(Q.rank)
    module = tensorProduct(left.applyObject(P), right.applyObject(Q))
    positions = {
        (a, b): i * len(rightTuples) + j
        for i, a in enumerate(leftTuples) for j, b in enumerate(rightTuples)
    }
    return module, leftTuples, rightTuples, positions


def koszulComplex(f: ModuleMap, n: int) -> ChainComplex:
    """
    Build Kos^n(f) in degrees 0..n.

    Args:
        f: Map P -> Q of based free modules
        n: Koszul degree, n >= 1

    Returns:
        Chain complex with Lambda^k(P) (x) Sym^{n-k}(Q) in degree k
    """
    if n < 1:
        raise ValueError(f"Koszul degree must be positive, got {n}")
    P, Q = f.domain, f.codomain
    ring = f.ring
    columns = f.matrix.columnIndex()
    levels = [_pairModule(Ext(k), Sym(n - k), P, Q) for k in range(n + 1)]

    differentials = []
    for k in range(1, n + 1):
        source, sourceWedges, sourceMonomials, _ = levels[k]
        target, _, _, targetPositions = levels[k - 1]
        entries: Dict[Tuple[int, int], Any] = defaultdict(int)
        for a, wedge in enumerate(sourceWedges):
            for b, monomial in enumerate(sourceMonomials):
                column = a * len(sourceMonomials) + b
                for i, letter in enumerate(wedge, start=1):
                    sign = 1 if (k - i) % 2 == 0 else -1
                    rest = wedge[:i - 1] + wedge[i:]
                    for q, value in columns.get(letter, {}).items():
                        row = targetPositions[(rest, tuple(sorted(monomial + (q,))))]
                        entries[(row, column)] = entries[(row, column)] + sign * value
        matrix = SparseMatrix(ring, target.rank, source.rank, dict(entries))
        differentials.append(ModuleMap(source, target, matrix))
    complex_ = ChainComplex(ring, [level[0] for level in levels], differentials)
    logger.debug("Kos^%d ranks %s", n, complex_.ranks())
    return complex_


def dualKoszulComplex(f: ModuleMap, n: int) -> ChainComplex:
    """Build dual-Kos^n(f) with D^k(P) (x) Lambda^{n-k}(Q) in degree k."""
    if n < 1:
        raise ValueError(f"Koszul degree must be positive, got {n}")
    P, Q = f.domain, f.codomain
    ring = f.ring
    columns = f.matrix.columnIndex()
    levels = [_pairModule(Div(k), Ext(n - k), P, Q) for k in range(n + 1)]

    differentials = []
    for k in range(1, n + 1):
        source, sourceMultisets, sourceWedges, _ = levels[k]
        target, _, _, targetPositions = levels[k - 1]
        entries: Dict[Tuple[int, int], Any] = defaultdict(int)
        for a, multiset in enumerate(sourceMultisets):
            for b, wedge in enumerate(sourceWedges):
                column = a * len(sourceWedges) + b
                for letter in sorted(set(multiset)):
                    position = multiset.index(letter)
                    rest = multiset[:position] + multiset[position + 1:]
                    for q, value in columns.get(letter, {}).items():
                        word, sign = sortWithSign((q,) + wedge)
                        if sign == 0:
                            continue
                        row = targetPositions[(rest, word)]
                        entries[(row, column)] = entries[(row, column)] + sign * value
        matrix = SparseMatrix(ring, target.rank, source.rank, dict(entries))
        differentials.append(ModuleMap(source, target, matrix))
    complex_ = ChainComplex(ring, [level[0] for level in levels], differentials)
    logger.debug("dual Kos^%d ranks %s", n, complex_.ranks())
    return complex_


def koszulMap(alphaP: ModuleMap, alphaQ: ModuleMap, source: ChainComplex, target: ChainComplex, n: int) -> ChainMap:
    """
    Kos^n(alpha) for a map of arrows (alphaP, alphaQ) from f to f': Lambda^k(alphaP) (x) Sym^{n-k}(alphaQ) in degree k.

    Raises:
        NotChainMap: If (alphaP, alphaQ) does not commute with the two arrows
    """
    components = {}
    for k in range(n + 1):
        left = Ext(k).applyMap(alphaP)
        right = Sym(n - k).applyMap(alphaQ)
        components[k] = tensorProductMap(left, right, domain=source.module(k), codomain=target.module(k))
    alpha = ChainMap(source, target, components)
    alpha.check()
    return alpha
