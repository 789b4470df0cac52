"""
Tensor powers of complexes with the symmetric group action, and characters.

The n-th tensor power P^{(x)n} carries the Koszul-signed action of S_n: the
permutation s moves the factor in position j to position s(j), with sign
(-1)^{sum of p_j * p_l over pairs j < l with s(j) > s(l)}. Characters of the
induced action on homology are computed over fields (and degreewise over
graded rings) from traces on cycles and chains.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Sequence, Tuple, Union

from algebra.fieldElimination import rowReduce
from algebra.gradedSlice import gradedSlice
from algebra.ringDescriptor import RingDescriptor, integers
from algebra.smithNormalForm import isUnimodular
from algebra.sparseMatrix import SparseMatrix, hstack
from complexes.chainComplex import ChainComplex
from complexes.homology import differentialSlice
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.labels import Atom, FunctorLabel, SumLabel
from utils.errors import NonFieldCoefficients, NotChainMap, WindowRequired

logger = logging.getLogger(__name__)

Word = Tuple[Tuple[int, ...], Tuple[int, ...]]
Permutation = Tuple[int, ...]


@dataclass
class TensorPower:
    """P^{(x)n} with its basis words (degree tuple, index tuple) per homological degree."""

    base: ChainComplex
    n: int
    complex: ChainComplex
    words: List[List[Word]]
    positions: List[Dict[Word, int]]


def _wordsOfDegree(base: ChainComplex, n: int, m: int) -> List[Word]:
    words = []
    for degrees in product(range(base.length + 1), repeat=n):
        if sum(degrees) != m:
            continue
        ranges = [range(base.module(p).rank) for p in degrees]
        for indices in product(*ranges):
            words.append((degrees, indices))
    return words


def tensorPower(base: ChainComplex, n: int) -> TensorPower:
    """
    Build P^{(x)n} with d(x1 (x) ... (x) xn) = sum_i (-1)^{p1+...+p_{i-1}} x1 (x) ... dx_i ... (x) xn.
    """
    if n < 1:
        raise ValueError(f"Tensor power needs n >= 1, got {n}")
    ring = base.ring
    length = n * base.length
    words = [_wordsOfDegree(base, n, m) for m in range(length + 1)]
    positions = [{w: i for i, w in enumerate(ws)} for ws in words]

    modules = []
    for ws in words:
        basis = [
            FunctorLabel("T", tuple(SumLabel(p, base.module(p).basis[i]) for p, i in zip(degrees, indices)))
            for degrees, indices in ws
        ]
        gradings = None
        if ring.isGraded:
            gradings = [
                sum(base.module(p).degrees[i] for p, i in zip(degrees, indices))
                for degrees, indices in ws
            ]
        modules.append(BasedFreeModule(ring, basis, gradings))

    differentials = []
    for m in range(1, length + 1):
        entries = {}
        for column, (degrees, indices) in enumerate(words[m]):
            prefix = 0
            for position in range(n):
                p = degrees[position]
                if p >= 1:
                    sign = -1 if prefix % 2 else 1
                    newDegrees = degrees[:position] + (p - 1,) + degrees[position + 1:]
                    for row, value in base.differential(p).matrix.column(indices[position]).items():
                        newIndices = indices[:position] + (row,) + indices[position + 1:]
                        key = (positions[m - 1][(newDegrees, newIndices)], column)
                        entries[key] = entries.get(key, 0) + sign * value
                prefix += p
        matrix = SparseMatrix(ring, modules[m - 1].rank, modules[m].rank, entries)
        differentials.append(ModuleMap(modules[m], modules[m - 1], matrix, checkDegrees=False))
    power = ChainComplex(ring, modules, differentials)
    logger.debug("Tensor power n=%d ranks %s", n, power.ranks())
    return TensorPower(base=base, n=n, complex=power, words=words, positions=positions)


def koszulSign(degrees: Sequence[int], permutation: Permutation) -> int:
    exponent = 0
    for j in range(len(degrees)):
        for l in range(j + 1, len(degrees)):
            if permutation[j] > permutation[l]:
                exponent += degrees[j] * degrees[l]
    return -1 if exponent % 2 else 1


def permutationAction(power: TensorPower, permutation: Permutation, k: int) -> ModuleMap:
    """Action of a permutation (position j -> permutation[j]) on degree k of the tensor power."""
    if sorted(permutation) != list(range(power.n)):
        raise ValueError(f"Not a permutation of {power.n} letters: {permutation}")
    module = power.complex.module(k)
    ring = power.complex.ring
    entries = {}
    if 0 <= k < len(power.words):
        for column, (degrees, indices) in enumerate(power.words[k]):
            newDegrees = [0] * power.n
            newIndices = [0] * power.n
            for j in range(power.n):
                newDegrees[permutation[j]] = degrees[j]
                newIndices[permutation[j]] = indices[j]
            row = power.positions[k][(tuple(newDegrees), tuple(newIndices))]
            entries[(row, column)] = ring.fromInt(koszulSign(degrees, permutation))
    matrix = SparseMatrix(ring, module.rank, module.rank, entries)
    return ModuleMap(module, module, matrix, checkDegrees=False)


def adjacentTransposition(n: int, i: int) -> Permutation:
    values = list(range(n))
    values[i], values[i + 1] = values[i + 1], values[i]
    return tuple(values)


def composePermutations(outer: Permutation, inner: Permutation) -> Permutation:
    return tuple(outer[inner[j]] for j in range(len(inner)))


def checkEquivariance(power: TensorPower) -> bool:
    """
    Check that every adjacent transposition acts by chain maps and that the
    Coxeter relations hold degreewise.

    Raises:
        NotChainMap: If some transposition does not commute with d
    """
    n = power.n
    length = power.complex.length
    generators = [adjacentTransposition(n, i) for i in range(n - 1)]
    for tau in generators:
        for k in range(1, length + 1):
            d = power.complex.differential(k)
            if not d.compose(permutationAction(power, tau, k)).equals(permutationAction(power, tau, k - 1).compose(d)):
                raise NotChainMap(k)
    for k in range(length + 1):
        identity = ModuleMap.identity(power.complex.module(k))
        actions = [permutationAction(power, tau, k) for tau in generators]
        for a in actions:
            if not a.compose(a).equals(identity):
                return False
        for i in range(len(actions) - 1):
            left = actions[i].compose(actions[i + 1]).compose(actions[i])
            right = actions[i + 1].compose(actions[i]).compose(actions[i + 1])
            if not left.equals(right):
                return False
        for i in range(len(actions)):
            for j in range(i + 2, len(actions)):
                if not actions[i].compose(actions[j]).equals(actions[j].compose(actions[i])):
                    return False
    return True


# Conjugacy classes

def partitions(n: int, maxPart: int = None) -> List[Tuple[int, ...]]:
    """Partitions of n in descending lexicographic order."""
    maxPart = n if maxPart is None else maxPart
    if n == 0:
        return [()]
    result = []
    for first in range(min(n, maxPart), 0, -1):
        for rest in partitions(n - first, first):
            result.append((first,) + rest)
    return result


def permutationOfCycleType(cycleType: Sequence[int]) -> Permutation:
    """Representative with cycles on consecutive blocks: a -> a+1 -> ... -> a."""
    images = []
    start = 0
    for length in cycleType:
        for offset in range(length):
            images.append(start + (offset + 1) % length)
        start += length
    return tuple(images)


def cycleType(permutation: Permutation) -> Tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(len(permutation)):
        if start in seen:
            continue
        length = 0
        current = start
        while current not in seen:
            seen.add(current)
            current = permutation[current]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


# Characters

def _traceOnCycles(differential: SparseMatrix, action: SparseMatrix):
    # kernel vector of a free column f has coordinate 1 at f and 0 at the other free columns
    echelon = rowReduce(differential)
    ring = action.ring
    total = ring.zero()
    for free, vector in zip(echelon.freeColumns, echelon.kernelBasis()):
        total = ring.add(total, action.applyToVector(vector).get(free, ring.zero()))
    return total


def _traceOnHomology(dk: SparseMatrix, dk1: SparseMatrix, ak: SparseMatrix, ak1: SparseMatrix):
    ring = ak.ring
    cycles = _traceOnCycles(dk, ak)
    chains = ak1.trace() if ak1.rows else ring.zero()
    higherCycles = _traceOnCycles(dk1, ak1) if ak1.rows else ring.zero()
    return ring.add(ring.sub(cycles, chains), higherCycles)


def _asInteger(value: Any) -> Union[int, Fraction]:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value if isinstance(value, Fraction) else int(value)


def characterOnHomology(power: TensorPower, permutation: Permutation, k: int, window: int = None):
    """
    Trace of the permutation on H_k.

    Returns:
        A scalar over a field, or {internal degree: trace} over a graded ring

    Raises:
        NonFieldCoefficients: Over Z or Z/m with m composite
    """
    complex_ = power.complex
    ring = complex_.ring
    if not ring.isField and not ring.isGraded:
        raise NonFieldCoefficients(ring.name)
    ak = permutationAction(power, permutation, k)
    ak1 = permutationAction(power, permutation, k + 1)
    if not ring.isGraded:
        dk = complex_.differential(k).matrix
        dk1 = complex_.differential(k + 1).matrix
        return _asInteger(_traceOnHomology(dk, dk1, ak.matrix, ak1.matrix))
    if window is None:
        raise WindowRequired()
    traces = {}
    for t in range(window + 1):
        dk = differentialSlice(complex_, k, t)
        dk1 = differentialSlice(complex_, k + 1, t)
        sk = gradedSlice(ak.matrix, ak.codomain.degreeList(), ak.domain.degreeList(), t)
        sk1 = gradedSlice(ak1.matrix, ak1.codomain.degreeList(), ak1.domain.degreeList(), t)
        value = _traceOnHomology(dk, dk1, sk, sk1)
        if value != 0:
            traces[t] = _asInteger(value)
    return traces


# K_n and predicted characters

@dataclass
class KnModule:
    """Kernel of the sum map R[I_n] -> R, with basis e_i - e_n."""

    ring: RingDescriptor
    n: int
    module: BasedFreeModule

    def action(self, permutation: Permutation) -> ModuleMap:
        """s(e_i - e_n) = e_{s(i)} - e_{s(n)}, written in the basis b_i = e_i - e_n (b_n = 0)."""
        last = self.n - 1
        entries = {}
        for i in range(last):
            image = permutation[i]
            anchor = permutation[last]
            if image != last:
                entries[(image, i)] = entries.get((image, i), 0) + 1
            if anchor != last:
                entries[(anchor, i)] = entries.get((anchor, i), 0) - 1
        matrix = SparseMatrix(self.ring, last, last, {key: self.ring.fromInt(v) for key, v in entries.items()})
        return ModuleMap(self.module, self.module, matrix, checkDegrees=False)

    def inclusion(self) -> SparseMatrix:
        """K_n -> R[I_n]."""
        entries = {}
        for i in range(self.n - 1):
            entries[(i, i)] = self.ring.one()
            entries[(self.n - 1, i)] = self.ring.fromInt(-1)
        return SparseMatrix(self.ring, self.n, self.n - 1, entries)

    def splitsPermutationModule(self) -> bool:
        """R[I_n] ~ K_n (+) R: the sum map kills K_n and [inclusion | e_n] is unimodular."""
        inclusion = self.inclusion().mapEntries(lambda v: self.ring.toInteger(v), integers())
        sumRow = SparseMatrix(integers(), 1, self.n, {(0, i): 1 for i in range(self.n)})
        if not (sumRow @ inclusion).isZero():
            return False
        lastBasisVector = SparseMatrix(integers(), self.n, 1, {(self.n - 1, 0): 1})
        return isUnimodular(hstack([inclusion, lastBasisVector]))


def knModule(ring: RingDescriptor, n: int) -> KnModule:
    if n < 1:
        raise ValueError(f"K_n needs n >= 1, got {n}")
    module = BasedFreeModule(ring, [Atom(f"k{i + 1}") for i in range(n - 1)],
                             [0] * (n - 1) if ring.isGraded else None)
    return KnModule(ring=ring, n=n, module=module)


def fixedPoints(cycles: Sequence[int], power: int) -> int:
    """Number of fixed points of s^power for s of the given cycle type."""
    return sum(length for length in cycles if power % length == 0)


def predictedCharacter(vRank: int, d: int, n: int, k: int, cycles: Sequence[int]) -> int:
    """
    Character of V^{(x)n} (x) Lambda^k(C (x) K_n) at a permutation of the given
    cycle type, with rank V = vRank and rank C = d, C carrying the trivial action.
    """
    if sum(cycles) != n:
        raise ValueError(f"Cycle type {cycles} is not a partition of {n}")
    powerSums = [None] + [d * (fixedPoints(cycles, j) - 1) for j in range(1, k + 1)]
    elementary = [Fraction(1)]
    for m in range(1, k + 1):
        total = Fraction(0)
        for j in range(1, m + 1):
            sign = 1 if j % 2 else -1
            total += sign * powerSums[j] * elementary[m - j]
        elementary.append(total / m)
    value = (vRank ** len(cycles)) * elementary[k]
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integral character {value}")
    return int(value)
