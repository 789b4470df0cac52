"""
Predicted homology of the theorem suites, built without the homology engine.

Every prediction is a free R/I-module W (x) M where W is a Schur-type module
of V = (R/I)^r with a known rank and M is a tensor construction on the
conormal module I/I^2 whose generator degrees are known. Over Z this gives
the invariant factors (m, .., m); over a graded ring the Hilbert function
sum over generators of dim (R/I)_{t - degree}.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Dict, List, Optional, Sequence

from algebra.ringDescriptor import integers
from complexes.equivariant import predictedCharacter
from complexes.homology import DegreeHomology
from functors.basedModule import BasedFreeModule
from koszul.resolutions import ConormalData, quotientHilbertFunction
from koszul.schurModules import coschurModule, schurModule


@dataclass
class FreeQuotientModule:
    """A free R/I-module given by its generator degrees."""

    degrees: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def __add__(self, other: "FreeQuotientModule") -> "FreeQuotientModule":
        return FreeQuotientModule(sorted(self.degrees + other.degrees))

    def times(self, rank: int) -> "FreeQuotientModule":
        """W (x) self for a module W of the given rank concentrated in degree 0."""
        return FreeQuotientModule(sorted(self.degrees * rank))

    def shifted(self, degree: int) -> "FreeQuotientModule":
        return FreeQuotientModule([d + degree for d in self.degrees])

    def homology(self, conormal: ConormalData, window: Optional[int] = None) -> DegreeHomology:
        """The module written the way the homology engine reports it."""
        ring = conormal.ring
        if ring.isIntegers:
            modulus = abs(conormal.generators[0])
            return DegreeHomology(freeRank=0, torsion=(modulus,) * self.rank)
        hilbert = {t: sum(quotientHilbertFunction(conormal, t - d) for d in self.degrees) for t in range(window + 1)}
        return DegreeHomology(hilbert=hilbert)


def concentrated(rank: int, degree: int = 0) -> FreeQuotientModule:
    return FreeQuotientModule([degree] * rank)


# Tensor constructions on I/I^2

def tensorPowerDegrees(degrees: Sequence[int], k: int) -> FreeQuotientModule:
    """(I/I^2)^{(x)k}."""
    return FreeQuotientModule(sorted(sum(word) for word in product(degrees, repeat=k)))


def exteriorDegrees(degrees: Sequence[int], k: int) -> FreeQuotientModule:
    """Lambda^k of a free module with the given generator degrees."""
    return FreeQuotientModule(sorted(sum(subset) for subset in combinations(degrees, k)))


def symmetricDegrees(degrees: Sequence[int], k: int) -> FreeQuotientModule:
    return FreeQuotientModule(sorted(sum(multiset) for multiset in combinations_with_replacement(degrees, k)))


# Ranks of the functors of V

def schurRank(rank: int, n: int, k: int) -> int:
    """rank L_k^n(V) for V free of the given rank."""
    if k >= n:
        return 0
    return schurModule(BasedFreeModule.free(integers(), rank), n, k).rank


def coschurRank(rank: int, n: int, k: int) -> int:
    if k >= n:
        return 0
    return coschurModule(BasedFreeModule.free(integers(), rank), n, k).rank


def symmetricRank(rank: int, n: int) -> int:
    return comb(rank + n - 1, n)


def exteriorRank(rank: int, n: int) -> int:
    return comb(rank, n)


# Predicted homology modules

def koszulPrediction(rank: int, n: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k(Kos^n(f)) = L_k^n(V) (x) (I/I^2)^{(x)k} for a principal ideal."""
    return tensorPowerDegrees(conormal.degrees, k).times(schurRank(rank, n, k))


def dualKoszulPrediction(rank: int, n: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k(dual-Kos^n(f)) = coL_k^n(V) (x) (I/I^2)^{(x)k}."""
    return tensorPowerDegrees(conormal.degrees, k).times(coschurRank(rank, n, k))


def tensorPowerPrediction(rank: int, n: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k(P.^{(x)n}) = V^{(x)n} (x) Lambda^k(I/I^2 (x) K_n), forgetting the action."""
    repeated = [degree for degree in conormal.degrees for _ in range(n - 1)]
    return exteriorDegrees(repeated, k).times(rank ** n)


def tensorPowerRanks(ranks: Sequence[int], n: int) -> List[int]:
    """Ranks of P.^{(x)n} degree by degree, from the binomial expansion of (P_0 + P_1 + ..)^n."""
    length = len(ranks) - 1
    result = [0] * (n * length + 1)
    for degrees in product(range(length + 1), repeat=n):
        term = 1
        for p in degrees:
            term *= ranks[p]
        result[sum(degrees)] += term
    return result


def binomialRanks(r0: int, r1: int, n: int) -> List[int]:
    """C(n, k) r1^k r0^(n-k) for a length-one complex."""
    return [comb(n, k) * r1 ** k * r0 ** (n - k) for k in range(n + 1)]


def characterPrediction(rank: int, n: int, k: int, conormal: ConormalData, cycles: Sequence[int],
                        window: int) -> Optional[Dict[int, int]]:
    """
    Graded character of a permutation on H_k(P.^{(x)n}) when all generators share one
    degree e: the character of V^{(x)n} (x) Lambda^k(C (x) K_n) times dim (R/I)_{t - k e}.
    None when the generator degrees differ.
    """
    if len(set(conormal.degrees)) != 1:
        return None
    value = predictedCharacter(rank, conormal.d, n, k, cycles)
    shift = k * conormal.degrees[0]
    traces = {t: value * quotientHilbertFunction(conormal, t - shift) for t in range(window + 1)}
    return {t: trace for t, trace in traces.items() if trace != 0}


def symSquareTwoInvertible(rank: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k N Sym^2 Gamma(P.): Sym^2 V (x) Lambda^k for k even, Lambda^2 V (x) Lambda^k for k odd."""
    outer = symmetricRank(rank, 2) if k % 2 == 0 else exteriorRank(rank, 2)
    return exteriorDegrees(conormal.degrees, k).times(outer)


def symSquareTwoGenerators(rank: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k N Sym^2 Gamma(P.) for d = 2: Sym^2 V, Lambda^2 V (x) I/I^2, D^2 V (x) Lambda^2(I/I^2), then 0."""
    degrees = conormal.degrees
    if k == 0:
        return concentrated(symmetricRank(rank, 2))
    if k == 1:
        return FreeQuotientModule(list(degrees)).times(exteriorRank(rank, 2))
    if k == 2:
        return exteriorDegrees(degrees, 2).times(symmetricRank(rank, 2))
    return FreeQuotientModule()


def exteriorSquareOneGenerator(rank: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """H_k N Lambda^2 Gamma(P.) for d = 1: Lambda^2 V, D^2 V (x) I/I^2, then 0."""
    return dualKoszulPrediction(rank, 2, k, conormal) if k <= 2 else FreeQuotientModule()


def exteriorSquareZero(rank: int) -> FreeQuotientModule:
    """H_0 N Lambda^2 Gamma(P.) = Lambda^2 V."""
    return concentrated(exteriorRank(rank, 2))


def symCubeConjecture(rank: int, k: int, conormal: ConormalData) -> FreeQuotientModule:
    """
    Conjectured H_k N Sym^3 Gamma(P.) for d = 2, with the degree 2 term read off
    the extension D^2 V (x) V (x) Lambda^2(I/I^2) -> H_2 -> Lambda^3 V (x) Sym^2(I/I^2).
    """
    degrees = conormal.degrees
    top = exteriorDegrees(degrees, 2)
    if k == 0:
        return concentrated(symmetricRank(rank, 3))
    if k == 1:
        return FreeQuotientModule(list(degrees)).times(schurRank(rank, 3, 1))
    if k == 2:
        return top.times(symmetricRank(rank, 2) * rank) + symmetricDegrees(degrees, 2).times(exteriorRank(rank, 3))
    if k == 3:
        return FreeQuotientModule(sorted(a + b for a in degrees for b in top.degrees)).times(coschurRank(rank, 3, 1))
    if k == 4:
        return tensorPowerDegrees(top.degrees, 2).times(symmetricRank(rank, 3))
    return FreeQuotientModule()


# Hilbert function arithmetic for long exact sequences

def hilbertOf(module: FreeQuotientModule, conormal: ConormalData, window: int) -> Dict[int, int]:
    return module.homology(conormal, window).hilbert


def alternatingDefect(terms: Sequence[Dict[int, int]], window: int) -> Dict[int, int]:
    """Per internal degree, the alternating sum of dimensions along an exact sequence; zero when exact."""
    defect = {}
    for t in range(window + 1):
        total = sum((-1) ** position * term.get(t, 0) for position, term in enumerate(terms))
        if total != 0:
            defect[t] = total
    return defect


def defaultWindow(degrees: Sequence[int], n: int) -> int:
    """
    Internal degree window holding every predicted module for n and generators of the
    given degrees, with at least one vanishing degree on top.

    Predicted generators sit in degree at most n * sum(e) and (R/I) ends in degree
    sum(e - 1); the window is never smaller than 2 sum(e) + 2.
    """
    total = sum(degrees)
    return max(2 * total + 2, n * total + sum(e - 1 for e in degrees) + 1)
