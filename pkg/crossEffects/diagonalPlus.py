"""
Diagonal and plus maps between cross effects, and the characterization checks built on them.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

from algebra.linearAlgebra import isInvertible
from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import hstack, vstack
from crossEffects.crossEffect import crossEffect
from functors.basedModule import BasedFreeModule, ModuleMap, blockMatrixMap, directSum
from functors.functorTags import FunctorTag

logger = logging.getLogger(__name__)

Epsilon = Tuple[int, ...]


def compositions(total: int, parts: int) -> List[Epsilon]:
    """Tuples of `parts` positive integers summing to `total`, in lexicographic order."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)] if total >= 1 else []
    result = []
    for first in range(1, total - parts + 2):
        result.extend((first,) + rest for rest in compositions(total - first, parts - 1))
    return result


def _expanded(epsilon: Epsilon, arguments: Sequence[BasedFreeModule]) -> List[BasedFreeModule]:
    if len(epsilon) != len(arguments) or any(e < 1 for e in epsilon):
        raise ValueError(f"Epsilon {epsilon} does not fit {len(arguments)} arguments")
    return [module for module, e in zip(arguments, epsilon) for _ in range(e)]


def _copyBlocks(epsilon: Epsilon, arguments: Sequence[BasedFreeModule]):
    """Pairs (copy index, argument index) for V_i -> V_i^{eps_i}."""
    pairs = []
    position = 0
    for i, e in enumerate(epsilon):
        for _ in range(e):
            pairs.append((position, i))
            position += 1
    return pairs


def diagonalMap(functor: FunctorTag, epsilon: Epsilon, arguments: Sequence[BasedFreeModule]) -> ModuleMap:
    """
    Delta_eps: cr_k(F)(V_1..V_k) -> cr_l(F)(V_1,..,V_1, .., V_k,..,V_k).

    cr_k(F)(Delta, .., Delta) followed by the canonical projection onto the
    top cross effect of the expanded argument list.
    """
    arguments = list(arguments)
    expanded = _expanded(epsilon, arguments)
    source = crossEffect(functor, arguments)
    target = crossEffect(functor, expanded)
    blocks = {(copy, i): ModuleMap.identity(arguments[i]) for copy, i in _copyBlocks(epsilon, arguments)}
    diagonal = blockMatrixMap(blocks, source.sum, target.sum)
    lifted = functor.applyMap(diagonal, source.ambient, target.ambient)
    return target.project.compose(lifted).compose(source.include)


def plusMap(functor: FunctorTag, epsilon: Epsilon, arguments: Sequence[BasedFreeModule]) -> ModuleMap:
    """
    +_eps: cr_l(F)(V_1,..,V_1, .., V_k,..,V_k) -> cr_k(F)(V_1..V_k).

    The canonical inclusion followed by cr_k(F)(+, .., +).
    """
    arguments = list(arguments)
    expanded = _expanded(epsilon, arguments)
    source = crossEffect(functor, expanded)
    target = crossEffect(functor, arguments)
    blocks = {(i, copy): ModuleMap.identity(arguments[i]) for copy, i in _copyBlocks(epsilon, arguments)}
    folding = blockMatrixMap(blocks, source.sum, target.sum)
    lifted = functor.applyMap(folding, source.ambient, target.ambient)
    return target.project.compose(lifted).compose(source.include)


def plusBlock(functor: FunctorTag, i: int, ring: RingDescriptor) -> ModuleMap:
    """plus_i: sum over eps in {1..d}^i, |eps| = d of cr_d(F)(A..A) -> cr_i(F)(A..A)."""
    A = BasedFreeModule.free(ring, 1)
    maps = [plusMap(functor, epsilon, [A] * i) for epsilon in compositions(functor.n, i)]
    target = crossEffect(functor, [A] * i).module
    source = directSum([m.domain for m in maps], ring).module
    matrix = hstack([m.matrix for m in maps], ring, target.rank)
    return ModuleMap(source, target, matrix, checkDegrees=False)


def diagonalBlock(functor: FunctorTag, i: int, ring: RingDescriptor) -> ModuleMap:
    """diag_i: cr_i(F)(A..A) -> sum over eps in {1..d}^i, |eps| = d of cr_d(F)(A..A)."""
    A = BasedFreeModule.free(ring, 1)
    maps = [diagonalMap(functor, epsilon, [A] * i) for epsilon in compositions(functor.n, i)]
    source = crossEffect(functor, [A] * i).module
    target = directSum([m.codomain for m in maps], ring).module
    matrix = vstack([m.matrix for m in maps], ring, source.rank)
    return ModuleMap(source, target, matrix, checkDegrees=False)


@dataclass
class CharacterizationCheck:
    """Outcome of a hypothesis check, with the first failing index if any."""

    functor: FunctorTag
    hypothesis: str
    passed: bool
    failedAt: Optional[int] = None


def plusMapsBijective(functor: FunctorTag, ring: RingDescriptor) -> CharacterizationCheck:
    """All plus_i, 1 <= i <= d - 1, are bijective (the symmetric power hypothesis)."""
    for i in range(1, functor.n):
        if not isInvertible(plusBlock(functor, i, ring).matrix):
            logger.debug("plus_%d of %s is not bijective over %s", i, functor, ring.name)
            return CharacterizationCheck(functor, "plus", False, i)
    return CharacterizationCheck(functor, "plus", True)


def diagonalMapsBijective(functor: FunctorTag, ring: RingDescriptor) -> CharacterizationCheck:
    """All diag_i, 1 <= i <= d - 1, are bijective (the divided power hypothesis)."""
    for i in range(1, functor.n):
        if not isInvertible(diagonalBlock(functor, i, ring).matrix):
            logger.debug("diag_%d of %s is not bijective over %s", i, functor, ring.name)
            return CharacterizationCheck(functor, "diag", False, i)
    return CharacterizationCheck(functor, "diag", True)


def vanishesBelowDegree(functor: FunctorTag, ring: RingDescriptor) -> CharacterizationCheck:
    """F(A^{d-1}) = 0 and cr_{d+1}(F) = 0 on A (the exterior power hypothesis)."""
    d = functor.n
    belowRank = functor.applyObject(BasedFreeModule.free(ring, d - 1)).rank if d >= 1 else 1
    A = BasedFreeModule.free(ring, 1)
    above = crossEffect(functor, [A] * (d + 1)).rank
    return CharacterizationCheck(functor, "vanishing", belowRank == 0 and above == 0)


def plusAfterDiagonal(functor: FunctorTag, module: BasedFreeModule) -> ModuleMap:
    return plusMap(functor, (2,), [module]).compose(diagonalMap(functor, (2,), [module]))


def plusAfterDiagonalExpected(functor: FunctorTag, module: BasedFreeModule) -> ModuleMap:
    """F(2 id) - 2 id on F(V)."""
    ring = module.ring
    doubled = ModuleMap.identity(module).scale(ring.fromInt(2))
    Fv = functor.applyObject(module)
    return functor.applyMap(doubled, Fv, Fv) - ModuleMap.identity(Fv).scale(ring.fromInt(2))


def symCrossEffectRank(n: int, ranks: Sequence[int]) -> int:
    """Rank of cr_k(Sym^n)(V_1..V_k) as the sum of Sym^{n_1}(V_1) x .. x Sym^{n_k}(V_k)."""
    total = 0
    for parts in compositions(n, len(ranks)):
        term = 1
        for r, m in zip(ranks, parts):
            term *= comb(r + m - 1, m)
        total += term
    return total
