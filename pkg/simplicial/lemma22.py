"""
N F Gamma(P -> Q) assembled from cross effects.

In level m the complex is cr_m(F)(P,..,P) + cr_{m+1}(F)(Q,P,..,P); level 0 is
F(Q). The differential has three nonzero blocks:

- cr_m(P^m) -> cr_{m-1}(P^{m-1}):  sum_{i=1}^{m-1} (-1)^i +_{eps^i}
- cr_m(P^m) -> cr_m(Q, P^{m-1}):   cr_m(F)(f, id, .., id)
- cr_{m+1}(Q, P^m) -> cr_m(Q, P^{m-1}):
      +_{(2,1,..,1)} o cr_{m+1}(F)(id_Q, f, id, ..) + sum_{i=1}^{m-1} (-1)^i +_{(1, eps^i)}

where eps^i has a 2 in position i and 1 elsewhere.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List

from algebra.linearAlgebra import isInvertible
from algebra.sparseMatrix import SparseMatrix, hstack
from complexes.chainComplex import ChainComplex, ChainMap, complexFromMap
from crossEffects.crossEffect import CrossEffect, crossEffect, crossEffectMap
from crossEffects.diagonalPlus import plusMap
from functors.basedModule import BasedFreeModule, DirectSum, ModuleMap, blockMatrixMap, directSum
from functors.functorTags import FunctorTag
from simplicial.normalization import NfgComplex, nfgData

logger = logging.getLogger(__name__)


def _epsilon(length: int, i: int) -> tuple:
    return tuple(2 if j == i - 1 else 1 for j in range(length))


@dataclass
class Lemma22Complex:
    """The cross-effect complex with its level decompositions."""

    functor: FunctorTag
    f: ModuleMap
    complex: ChainComplex
    upper: List[CrossEffect]
    lower: List[CrossEffect]
    sums: List[DirectSum]


def _alternatingPlus(functor: FunctorTag, head: List[BasedFreeModule], P: BasedFreeModule, m: int, source, target):
    """sum_{i=1}^{m-1} (-1)^i +_{(1.., eps^i)} from cr(head, P^m) to cr(head, P^{m-1})."""
    total = ModuleMap.zero(source, target)
    for i in range(1, m):
        epsilon = (1,) * len(head) + _epsilon(m - 1, i)
        term = plusMap(functor, epsilon, head + [P] * (m - 1))
        total = total + term if i % 2 == 0 else total - term
    return total


def lemma22Data(f: ModuleMap, functor: FunctorTag) -> Lemma22Complex:
    """
    Build the cross-effect complex of F on f: P -> Q in levels 0..deg F.
    """
    P, Q = f.domain, f.codomain
    ring = f.ring
    top = functor.n
    upper = [crossEffect(functor, [P] * m, ring) for m in range(top + 1)]
    lower = [crossEffect(functor, [Q] + [P] * m, ring) for m in range(top + 1)]
    sums = [directSum([upper[m].module, lower[m].module], ring) for m in range(top + 1)]

    differentials = []
    idP = ModuleMap.identity(P)
    idQ = ModuleMap.identity(Q)
    for m in range(1, top + 1):
        blocks: Dict = {}
        if m >= 2:
            blocks[(0, 0)] = _alternatingPlus(functor, [], P, m, upper[m].module, upper[m - 1].module)
        blocks[(1, 0)] = crossEffectMap(functor, [f] + [idP] * (m - 1))
        merge = plusMap(functor, (2,) + (1,) * (m - 1), [Q] + [P] * (m - 1))
        pushed = crossEffectMap(functor, [idQ, f] + [idP] * (m - 1))
        blocks[(1, 1)] = merge.compose(pushed) + _alternatingPlus(
            functor, [Q], P, m, lower[m].module, lower[m - 1].module
        )
        differentials.append(blockMatrixMap(blocks, sums[m], sums[m - 1]))
    complex_ = ChainComplex(ring, [s.module for s in sums], differentials)
    logger.debug("Cross-effect complex of %s has ranks %s", functor, complex_.ranks())
    return Lemma22Complex(functor=functor, f=f, complex=complex_, upper=upper, lower=lower, sums=sums)


def lemma22Complex(f: ModuleMap, functor: FunctorTag) -> ChainComplex:
    return lemma22Data(f, functor).complex


@dataclass
class Lemma22Comparison:
    """Identification of the cross-effect complex with N F Gamma(P -> Q)."""

    data: Lemma22Complex
    nfg: NfgComplex
    identification: ChainMap
    invertible: bool
    commutes: bool

    @property
    def passed(self) -> bool:
        return self.invertible and self.commutes


def _identificationAt(data: Lemma22Complex, nfg: NfgComplex, m: int) -> ModuleMap:
    """
    Level m of the identification, induced by Q + P^m = Gamma(P -> Q)_m.

    The summand order of Q + P^m matches the Gamma basis order (the Q part
    first, then copy s of P for the step set {s}), so F of both sides share
    index tuples.
    """
    functor = data.functor
    P = data.f.domain
    ring = data.f.ring
    upper, lower = data.upper[m], data.lower[m]
    ambient = lower.ambient
    embed = blockMatrixMap(
        {(i + 1, i): ModuleMap.identity(P) for i in range(m)}, upper.sum, lower.sum
    )
    lifted = functor.applyMap(embed, upper.ambient, ambient)
    columns = hstack([lifted.compose(upper.include).matrix, lower.include.matrix], ring, ambient.rank)

    level = nfg.levels[m]
    if lower.sum.module.rank != len(level.gamma.indices):
        raise ValueError(f"Q + P^{m} has rank {lower.sum.module.rank}, Gamma level {m} has {len(level.gamma.indices)}")
    # Rows of F(Q + P^m) are indexed by tuples over the basis of Q + P^m itself
    tuples = functor.indexTuples(lower.sum.module.rank)
    entries = {}
    for (row, col), value in columns.entries.items():
        target = level.positions.get(tuples[row])
        if target is None:
            raise ValueError(f"Level {m} element leaves the nondegenerate part")
        entries[(target, col)] = value
    matrix = SparseMatrix(ring, level.module.rank, columns.cols, entries)
    return ModuleMap(data.sums[m].module, level.module, matrix, checkDegrees=False)


def compareWithNfg(f: ModuleMap, functor: FunctorTag) -> Lemma22Comparison:
    """Build both complexes and check that the canonical identification is an isomorphism of complexes."""
    data = lemma22Data(f, functor)
    nfg = nfgData(complexFromMap(f), functor)
    components = {}
    invertible = len(nfg.levels) == data.complex.length + 1
    for m in range(min(len(nfg.levels), data.complex.length + 1)):
        component = _identificationAt(data, nfg, m)
        components[m] = component
        invertible = invertible and isInvertible(component.matrix)
    identification = ChainMap(data.complex, nfg.complex, components)
    commutes = identification.isChainMap()
    if not (invertible and commutes):
        logger.warning("Cross-effect complex of %s does not match N F Gamma (invertible=%s, chain map=%s)",
                       functor, invertible, commutes)
    return Lemma22Comparison(data=data, nfg=nfg, identification=identification,
                             invertible=invertible, commutes=commutes)
