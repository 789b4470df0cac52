"""
Conormal data and projective resolutions of free R/I-modules.

Supported ideals:
- principal, generated by a non-zero-divisor: (m) in Z, or a homogeneous
  polynomial of positive degree in a graded polynomial ring;
- complete intersections in a graded polynomial ring, generated by a
  homogeneous regular sequence (validated through Koszul homology).

A free module V = (R/I)^r is resolved by K(g_1..g_d) (x) R^r, where K is the
Koszul complex on the generators.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, List, Optional, Sequence

from algebra.gradedSlice import monomialCount
from algebra.ringDescriptor import RingDescriptor, integersMod
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex, complexFromMap, moduleInDegree, totalTensor
from complexes.homology import homology
from functors.basedModule import BasedFreeModule, ModuleMap
from koszul.koszulComplex import koszulComplex
from utils.errors import LiftFailure, UnsupportedIdeal

logger = logging.getLogger(__name__)

PRINCIPAL = "principal"
COMPLETE_INTERSECTION = "complete_intersection"


@dataclass
class ConormalData:
    """An ideal I of R together with the internal degrees of the free R/I-module I/I^2."""

    ring: RingDescriptor
    generators: List[Any]
    kind: str
    degrees: List[int] = field(default_factory=list)

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def quotientRing(self) -> Optional[RingDescriptor]:
        """R/I when it is one of the supported coefficient rings."""
        if self.ring.isIntegers:
            return integersMod(abs(self.generators[0]))
        if self.ring.isGraded and self.d == self.ring.variableCount and all(
            self.ring.degreeOf(g) == 1 for g in self.generators
        ):
            return self.ring.baseField()
        return None

    def conormalModule(self) -> BasedFreeModule:
        """I/I^2 as a based free module with its generator degrees."""
        quotient = self.quotientRing
        if quotient is None:
            raise UnsupportedIdeal(f"R/I is not a supported coefficient ring for {self.describe()}")
        return BasedFreeModule.free(quotient, self.d, prefix="c")

    def describe(self) -> str:
        return f"({', '.join(self.ring.format(g) for g in self.generators)}) in {self.ring.name}"


@dataclass
class ResolutionData:
    """A free R-resolution P. of V = (R/I)^r."""

    conormal: ConormalData
    rank: int
    complex: ChainComplex

    @property
    def ring(self) -> RingDescriptor:
        return self.conormal.ring

    def presentation(self) -> ModuleMap:
        """The map f: P_1 -> P_0, so that 0 -> P -> Q -> V -> 0 when d = 1."""
        return self.complex.differential(1)

    def lift(self, index: int) -> dict:
        """
        Lift of the index-th basis vector of V to Q = P_0.

        Raises:
            LiftFailure: If V has no such basis vector
        """
        if not 0 <= index < self.rank:
            raise LiftFailure(f"V has rank {self.rank}; no lift recorded for basis vector {index}")
        return {index: self.ring.one()}


def _isHomogeneousPositive(ring: RingDescriptor, value: Any) -> bool:
    degree = ring.degreeOf(value)
    return degree is not None and degree >= 1


def conormalFor(ring: RingDescriptor, generators: Sequence[Any], window: Optional[int] = None) -> ConormalData:
    """
    Classify an ideal and validate the regular-sequence property.

    Args:
        ring: Ambient ring R (Z or a graded polynomial ring)
        generators: Ideal generators as ring elements
        window: Internal degree window for the regular-sequence test

    Raises:
        UnsupportedIdeal: No resolution recipe applies
    """
    generators = list(generators)
    if not generators:
        raise UnsupportedIdeal("The zero ideal has no conormal data here")
    if ring.isIntegers:
        if len(generators) != 1 or abs(generators[0]) < 2:
            raise UnsupportedIdeal(f"Only (m) with |m| >= 2 is supported over Z, got {generators}")
        return ConormalData(ring, [int(generators[0])], PRINCIPAL, [0])
    if not ring.isGraded:
        raise UnsupportedIdeal(f"No proper nonzero ideals to resolve over {ring.name}")
    for g in generators:
        if not _isHomogeneousPositive(ring, g):
            raise UnsupportedIdeal(f"Generator {g} is not homogeneous of positive degree")
    degrees = [ring.degreeOf(g) for g in generators]
    if len(generators) == 1:
        return ConormalData(ring, generators, PRINCIPAL, degrees)
    conormal = ConormalData(ring, generators, COMPLETE_INTERSECTION, degrees)
    top = window if window is not None else 2 * sum(degrees) + 2
    descriptor = homology(koszulOnGenerators(conormal), top)
    for k in range(1, len(generators) + 1):
        if not descriptor[k].isZero():
            raise UnsupportedIdeal(f"{conormal.describe()} is not a regular sequence (H_{k} != 0)")
    logger.debug("Validated regular sequence %s up to degree %d", conormal.describe(), top)
    return conormal


def koszulOnGenerators(conormal: ConormalData) -> ChainComplex:
    """K(g_1..g_d) as Kos^d(g: R(-deg g_1) + .. + R(-deg g_d) -> R)."""
    ring = conormal.ring
    P = BasedFreeModule.free(ring, conormal.d, prefix="g", degrees=conormal.degrees if ring.isGraded else None)
    Q = BasedFreeModule.free(ring, 1, prefix="1", degrees=[0] if ring.isGraded else None)
    matrix = SparseMatrix(ring, 1, conormal.d, {(0, j): g for j, g in enumerate(conormal.generators)})
    return koszulComplex(ModuleMap(P, Q, matrix), conormal.d)


def resolutionFor(rank: int, conormal: ConormalData) -> ResolutionData:
    """
    Resolve V = (R/I)^rank.

    Principal ideals give 0 -> R^r --(g)--> R^r; complete intersections give
    K(g_1..g_d) (x) R^r.
    """
    ring = conormal.ring
    if rank < 1:
        raise ValueError(f"Module rank must be positive, got {rank}")
    if conormal.kind == PRINCIPAL:
        g = conormal.generators[0]
        degree = conormal.degrees[0]
        Q = BasedFreeModule.free(ring, rank, prefix="q", degrees=[0] * rank if ring.isGraded else None)
        P = BasedFreeModule.free(ring, rank, prefix="p", degrees=[degree] * rank if ring.isGraded else None)
        f = ModuleMap(P, Q, SparseMatrix(ring, rank, rank, {(i, i): g for i in range(rank)}))
        return ResolutionData(conormal=conormal, rank=rank, complex=complexFromMap(f))
    free = BasedFreeModule.free(ring, rank, prefix="q", degrees=[0] * rank if ring.isGraded else None)
    complex_ = totalTensor(koszulOnGenerators(conormal), moduleInDegree(free, 0))
    return ResolutionData(conormal=conormal, rank=rank, complex=complex_)


def quotientHilbertFunction(conormal: ConormalData, t: int) -> int:
    """dim (R/I)_t from the Koszul resolution: sum_A (-1)^|A| #monomials of degree t - deg g_A."""
    s = conormal.ring.variableCount
    total = 0
    for size in range(conormal.d + 1):
        for subset in combinations(conormal.degrees, size):
            total += (-1) ** size * monomialCount(s, t - sum(subset))
    return total


def verifyResolution(resolution: ResolutionData, window: Optional[int] = None) -> bool:
    """H_0 = V and H_k = 0 for k >= 1 (on the window in the graded case)."""
    conormal = resolution.conormal
    ring = resolution.ring
    descriptor = homology(resolution.complex, window if ring.isGraded else None)
    for k in range(1, resolution.complex.length + 1):
        if not descriptor[k].isZero():
            return False
    h0 = descriptor[0]
    if ring.isIntegers:
        return h0.freeRank == 0 and list(h0.torsion) == [abs(conormal.generators[0])] * resolution.rank
    return all(
        h0.hilbert.get(t, 0) == resolution.rank * quotientHilbertFunction(conormal, t)
        for t in range(window + 1)
    )
