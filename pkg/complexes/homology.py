"""
Homology of bounded complexes.

- Integers: invariant factors from the Smith form, H_k ~ Z^{c_k - r_k - r_{k+1}} + torsion
- Fields: dimensions from ranks
- Graded over a field: Hilbert function on a window of internal degrees 0..D
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from algebra.fieldElimination import fieldImageContains, fieldRank, rowReduce
from algebra.gradedSlice import gradedSlice, sliceDimension, sliceVector
from algebra.ringDescriptor import RingDescriptor
from algebra.smithNormalForm import integerImageContains, integerKernelBasis, smithNormalForm
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex, ChainMap, mappingCone
from utils.errors import NonFieldRing, WindowRequired

logger = logging.getLogger(__name__)


@dataclass
class DegreeHomology:
    """Homology in one homological degree."""

    freeRank: Optional[int] = None
    torsion: Tuple[int, ...] = ()
    dimension: Optional[int] = None
    hilbert: Optional[Dict[int, int]] = None

    def isZero(self) -> bool:
        if self.hilbert is not None:
            return all(v == 0 for v in self.hilbert.values())
        if self.dimension is not None:
            return self.dimension == 0
        return self.freeRank == 0 and not self.torsion

    def asDict(self) -> Dict[str, Any]:
        if self.hilbert is not None:
            return {"hilbert": {str(t): v for t, v in sorted(self.hilbert.items()) if v}}
        if self.dimension is not None:
            return {"dimension": self.dimension}
        return {"free_rank": self.freeRank, "torsion": list(self.torsion)}


@dataclass
class HomologyDescriptor:
    """Homology of a complex in every degree 0..length."""

    ringName: str
    degrees: Dict[int, DegreeHomology] = field(default_factory=dict)
    window: Optional[int] = None

    def __getitem__(self, k: int) -> DegreeHomology:
        return self.degrees.get(k, _zeroLike(self))

    def isAcyclic(self) -> bool:
        return all(h.isZero() for h in self.degrees.values())

    def asDict(self) -> Dict[str, Any]:
        return {str(k): h.asDict() for k, h in sorted(self.degrees.items())}


def _zeroLike(descriptor: HomologyDescriptor) -> DegreeHomology:
    if descriptor.window is not None:
        return DegreeHomology(hilbert={})
    return DegreeHomology(freeRank=0)


def _rejectCompositeModulus(ring: RingDescriptor) -> None:
    if not ring.isIntegers and not ring.isField and not ring.isGraded:
        raise NonFieldRing(ring.name)


def homology(complex_: ChainComplex, window: Optional[int] = None) -> HomologyDescriptor:
    """
    Compute H_k for k = 0..length.

    Args:
        complex_: Complex over Z, a field, or a graded polynomial ring over a field
        window: Top internal degree D (required for graded complexes)

    Raises:
        WindowRequired: Graded complex without window
        NonFieldRing: Over Z/m with m composite
    """
    ring = complex_.ring
    _rejectCompositeModulus(ring)
    if ring.isGraded:
        if window is None:
            raise WindowRequired()
        return _gradedHomology(complex_, window)

    descriptor = HomologyDescriptor(ringName=ring.name)
    length = complex_.length
    if ring.isIntegers:
        forms = {k: smithNormalForm(complex_.differential(k).matrix) for k in range(1, length + 1)}
        ranks = {k: f.rank for k, f in forms.items()}
        for k in range(length + 1):
            free = complex_.module(k).rank - ranks.get(k, 0) - ranks.get(k + 1, 0)
            torsion = tuple(forms[k + 1].torsion) if k + 1 in forms else ()
            descriptor.degrees[k] = DegreeHomology(freeRank=free, torsion=torsion)
    else:
        ranks = {k: fieldRank(complex_.differential(k).matrix) for k in range(1, length + 1)}
        for k in range(length + 1):
            dimension = complex_.module(k).rank - ranks.get(k, 0) - ranks.get(k + 1, 0)
            descriptor.degrees[k] = DegreeHomology(dimension=dimension)
    logger.debug("Homology over %s: %s", ring.name, descriptor.asDict())
    return descriptor


def differentialSlice(complex_: ChainComplex, k: int, t: int) -> SparseMatrix:
    """Degree-t slice of d_k."""
    d = complex_.differential(k)
    return gradedSlice(d.matrix, d.codomain.degreeList(), d.domain.degreeList(), t)


def _gradedHomology(complex_: ChainComplex, window: int) -> HomologyDescriptor:
    ring = complex_.ring
    s = ring.variableCount
    descriptor = HomologyDescriptor(ringName=ring.name, window=window)
    length = complex_.length
    for k in range(length + 1):
        descriptor.degrees[k] = DegreeHomology(hilbert={})
    for t in range(window + 1):
        ranks = {}
        for k in range(1, length + 1):
            ranks[k] = fieldRank(differentialSlice(complex_, k, t))
        for k in range(length + 1):
            dimension = sliceDimension(complex_.module(k).degreeList(), t, s)
            descriptor.degrees[k].hilbert[t] = dimension - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return descriptor


# Cycles, boundaries and induced maps

def cycleBasis(complex_: ChainComplex, k: int) -> List[Dict[int, Any]]:
    """Basis of Z_k over Z or a field."""
    ring = complex_.ring
    _rejectCompositeModulus(ring)
    d = complex_.differential(k).matrix
    if ring.isIntegers:
        return integerKernelBasis(d)
    return rowReduce(d).kernelBasis()


def isBoundary(complex_: ChainComplex, k: int, vector: Dict[int, Any], window: Optional[int] = None) -> bool:
    """Decide whether vector lies in B_k = im d_{k+1}."""
    ring = complex_.ring
    _rejectCompositeModulus(ring)
    d = complex_.differential(k + 1).matrix
    if ring.isIntegers:
        return integerImageContains(d, vector)
    if ring.isField:
        return fieldImageContains(d, vector)
    if window is None:
        raise WindowRequired()
    degrees = complex_.module(k).degreeList()
    for t in range(window + 1):
        component = sliceVector(ring, vector, degrees, t)
        if component and not fieldImageContains(differentialSlice(complex_, k + 1, t), component):
            return False
    return True


def isCycle(complex_: ChainComplex, k: int, vector: Dict[int, Any]) -> bool:
    return not complex_.differential(k).apply(vector)


def inducedMapIsZero(u: ChainMap, k: int, window: Optional[int] = None) -> bool:
    """
    Decide whether u induces zero on H_k: u_k(z) is a boundary for every cycle z.
    """
    source = u.source
    ring = source.ring
    if not ring.isGraded:
        component = u.component(k)
        boundaries = u.target.differential(k + 1).matrix
        if ring.isIntegers:
            form = smithNormalForm(boundaries)
            return all(integerImageContains(boundaries, component.apply(z), form) for z in cycleBasis(source, k))
        rank = fieldRank(boundaries)
        return all(fieldImageContains(boundaries, component.apply(z), rank) for z in cycleBasis(source, k))
    if window is None:
        raise WindowRequired()
    uk = u.component(k)
    for t in range(window + 1):
        dk = differentialSlice(source, k, t)
        cycles = rowReduce(dk).kernelBasis() if dk.cols else []
        if not cycles:
            continue
        image = gradedSlice(uk.matrix, uk.codomain.degreeList(), uk.domain.degreeList(), t)
        boundaries = differentialSlice(u.target, k + 1, t)
        rank = fieldRank(boundaries)
        for z in cycles:
            if not fieldImageContains(boundaries, image.applyToVector(z), rank):
                return False
    return True


def inducedMapsAgree(first: ChainMap, second: ChainMap, k: int, window: Optional[int] = None) -> bool:
    return inducedMapIsZero(first - second, k, window)


def isAcyclic(complex_: ChainComplex, window: Optional[int] = None) -> bool:
    return homology(complex_, window).isAcyclic()


def isQuasiIsomorphism(u: ChainMap, window: Optional[int] = None) -> bool:
    return isAcyclic(mappingCone(u), window)
