"""
Explicit homology generators of Kos^n(f) for a principal ideal I = (g).

For 0 -> P -> Q -> V -> 0 with P = gQ, a hook datum v_1 ^ .. ^ v_{k+1} (x) v_{k+2} .. v_n
of L_k^n(V) together with scalars r_1..r_k in I gives the cycle

    sum_i (-1)^{k+1-i} (r_1 q_1) ^ .. q_i^ .. ^ (r_k q_{k+1}) (x) q_i q_{k+2} .. q_n

in Lambda^k(P) (x) Sym^{n-k}(Q), where q_j lifts v_j. An element r q of P
has coordinates (r / g) q in the basis p = g q.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Any, Dict, List, Sequence, Tuple

from algebra.fieldElimination import fieldRank
from algebra.gradedSlice import gradedSlice, monomialsOfDegree, sliceDimension, sliceVector
from algebra.smithNormalForm import integerImageContains, integerKernelBasis, smithNormalForm
from algebra.sparseMatrix import SparseMatrix, hstack
from complexes.chainComplex import ChainComplex
from complexes.homology import isBoundary, isCycle
from functors.functorTags import Ext, Sym, sortWithSign
from koszul.koszulComplex import koszulComplex
from koszul.resolutions import PRINCIPAL, ResolutionData
from utils.errors import LiftFailure, NotACycle, UnsupportedIdeal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessDatum:
    """Basis indices v_1..v_n of V (hook shape) and the conormal word r_1..r_k."""

    word: Tuple[int, ...]
    scalars: Tuple[Any, ...]

    @property
    def k(self) -> int:
        return len(self.scalars)


def _requirePrincipal(resolution: ResolutionData) -> None:
    if resolution.conormal.kind != PRINCIPAL:
        raise UnsupportedIdeal("Witnesses are defined for principal ideals only")


def _coordinatesInP(resolution: ResolutionData, scalar: Any, lift: Dict[int, Any]) -> Dict[int, Any]:
    ring = resolution.ring
    g = resolution.conormal.generators[0]
    if not ring.divides(g, scalar):
        raise LiftFailure(f"Scalar {scalar} does not lie in the ideal ({g})")
    quotient = ring.exactQuotient(scalar, g)
    return {i: ring.mul(quotient, value) for i, value in lift.items()}


def thm32Witness(resolution: ResolutionData, n: int, datum: WitnessDatum) -> Dict[int, Any]:
    """
    The witness cycle of a hook datum as a vector of Kos^n(f)_k.

    Raises:
        NotACycle: If the assembled element has nonzero boundary
        LiftFailure: If a basis vector has no lift or a scalar is outside I
    """
    _requirePrincipal(resolution)
    k = datum.k
    if len(datum.word) != n or not 0 <= k < n:
        raise ValueError(f"Datum {datum} does not fit n={n}")
    rank = resolution.rank
    lifts = [resolution.lift(v) for v in datum.word]
    wedgeTuples = Ext(k).indexTuples(rank)
    monomials = Sym(n - k).indexTuples(rank)
    positions = {(a, b): i * len(monomials) + j for i, a in enumerate(wedgeTuples) for j, b in enumerate(monomials)}

    element: Dict[int, Any] = defaultdict(int)
    for i in range(1, k + 2):
        sign = 1 if (k + 1 - i) % 2 == 0 else -1
        rest = [lifts[j] for j in range(k + 1) if j != i - 1]
        wedgeFactors = [_coordinatesInP(resolution, r, q) for r, q in zip(datum.scalars, rest)]
        monomialFactors = [lifts[i - 1]] + lifts[k + 1:]
        for wedgeTerm, wedgeCoefficient in _expand(wedgeFactors):
            wedge, wedgeSign = sortWithSign(wedgeTerm)
            if wedgeSign == 0:
                continue
            for monomialTerm, monomialCoefficient in _expand(monomialFactors):
                key = positions[(wedge, tuple(sorted(monomialTerm)))]
                element[key] = element[key] + sign * wedgeSign * wedgeCoefficient * monomialCoefficient
    ring = resolution.ring
    vector = {key: ring.reduce(value) for key, value in element.items() if ring.reduce(value) != 0}
    kos = koszulComplex(resolution.presentation(), n)
    if not isCycle(kos, k, vector):
        raise NotACycle(f"Witness for {datum} is not a cycle in degree {k}")
    return vector


def _expand(factors: Sequence[Dict[int, Any]]):
    """Multilinear expansion of a product of vectors into (index word, coefficient)."""
    terms: List[Tuple[Tuple[int, ...], Any]] = [((), 1)]
    for factor in factors:
        terms = [(word + (i,), coefficient * value) for word, coefficient in terms for i, value in factor.items()]
    return terms


def hookData(rank: int, n: int, k: int, generator: Any) -> List[WitnessDatum]:
    """Generating hook data of L_k^n(V) (x) (I/I^2)^{(x)k}, all scalars equal to the ideal generator."""
    data = []
    if k >= n:
        return data
    for wedge in combinations(range(rank), k + 1):
        for monomial in combinations_with_replacement(range(rank), n - k - 1):
            data.append(WitnessDatum(word=wedge + monomial, scalars=(generator,) * k))
    return data


def witnessesGenerateHomology(resolution: ResolutionData, n: int, k: int, window: int = None) -> bool:
    """
    Decide whether the witnesses of all hook data, together with the boundaries, span the cycles Z_k.

    Over Z every kernel basis vector must lie in the lattice spanned by
    [B | W]. Over a graded ring the check is a rank comparison in every
    internal degree of the window, using monomial multiples of the witnesses.
    """
    _requirePrincipal(resolution)
    ring = resolution.ring
    kos = koszulComplex(resolution.presentation(), n)
    generator = resolution.conormal.generators[0]
    witnesses = [thm32Witness(resolution, n, datum) for datum in hookData(resolution.rank, n, k, generator)]
    size = kos.module(k).rank
    boundaries = kos.differential(k + 1).matrix
    if ring.isIntegers:
        W = SparseMatrix.fromColumns(ring, size, witnesses)
        spanning = hstack([boundaries, W], ring, size)
        form = smithNormalForm(spanning)
        cycles = integerKernelBasis(kos.differential(k).matrix)
        return all(integerImageContains(spanning, z, form) for z in cycles)
    if window is None:
        raise ValueError("Graded witness checks need a window")
    degrees = kos.module(k).degreeList()
    d = kos.differential(k)
    s = ring.variableCount
    for t in range(window + 1):
        cycleDimension = sliceDimension(degrees, t, s) - fieldRank(gradedSlice(d.matrix, d.codomain.degreeList(), degrees, t))
        if cycleDimension == 0:
            continue
        columns = []
        for w in witnesses:
            if not w:
                continue
            wDegree = _vectorDegree(ring, w, degrees)
            for exponents in monomialsOfDegree(s, t - wDegree):
                monomial = ring.polyRing({exponents: 1})
                columns.append(sliceVector(ring, {i: monomial * value for i, value in w.items()}, degrees, t))
        sliceB = gradedSlice(boundaries, degrees, kos.module(k + 1).degreeList(), t)
        spanning = hstack([sliceB, SparseMatrix.fromColumns(sliceB.ring, sliceB.rows, columns)], sliceB.ring, sliceB.rows)
        if fieldRank(spanning) != cycleDimension:
            logger.debug("Witnesses miss cycles in H_%d at internal degree %d", k, t)
            return False
    return True


def _vectorDegree(ring, vector: Dict[int, Any], degrees: Sequence[int]) -> int:
    i, value = next(iter(vector.items()))
    return degrees[i] + ring.degreeOf(value)


def witnessIsBoundary(resolution: ResolutionData, n: int, datum: WitnessDatum, window: int = None) -> bool:
    """Whether the witness class vanishes in H_k (expected when some r_j lies in I^2)."""
    kos: ChainComplex = koszulComplex(resolution.presentation(), n)
    vector = thm32Witness(resolution, n, datum)
    return isBoundary(kos, datum.k, vector, window)
