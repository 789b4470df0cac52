"""
Cross effects of polynomial functors.

cr_k(F)(V_1..V_k) is the image of the idempotent
E = sum_{j=1..k} (-1)^{k-j} sum_{|T|=j} F(p_T) on F(V_1 + ... + V_k),
where p_T projects onto the summands in T. The image is split as a direct
summand, giving include: cr_k -> F(+V) and project: F(+V) -> cr_k.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from algebra.linearAlgebra import splitImage
from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import SparseMatrix
from functors.basedModule import BasedFreeModule, DirectSum, ModuleMap, blockMatrixMap, directSum
from functors.functorTags import FunctorTag
from functors.labels import ImageLabel
from utils.errors import NotSplitImage

logger = logging.getLogger(__name__)


@dataclass
class CrossEffect:
    """cr_k(F)(V_1..V_k) as a split summand of F(V_1 + ... + V_k)."""

    functor: FunctorTag
    arguments: List[BasedFreeModule]
    sum: DirectSum
    ambient: BasedFreeModule
    module: BasedFreeModule
    include: ModuleMap
    project: ModuleMap

    @property
    def rank(self) -> int:
        return self.module.rank


def _projectionOnto(total: DirectSum, subset: Sequence[int]) -> ModuleMap:
    blocks = {(i, i): ModuleMap.identity(total.summands[i]) for i in subset}
    return blockMatrixMap(blocks, total, total)


def crossEffectIdempotent(functor: FunctorTag, total: DirectSum, ambient: BasedFreeModule) -> SparseMatrix:
    k = len(total.summands)
    ring = ambient.ring
    idempotent = SparseMatrix.zero(ring, ambient.rank, ambient.rank)
    for j in range(1, k + 1):
        sign = 1 if (k - j) % 2 == 0 else -1
        for subset in combinations(range(k), j):
            term = functor.applyMap(_projectionOnto(total, subset), ambient, ambient).matrix
            idempotent = idempotent + (term if sign == 1 else -term)
    return idempotent


def _imageModule(ring: RingDescriptor, ambient: BasedFreeModule, include: SparseMatrix) -> BasedFreeModule:
    labels = []
    degrees = []
    for j in range(include.cols):
        column = include.column(j)
        if len(column) == 1 and next(iter(column.values())) == ring.one():
            row = next(iter(column))
            labels.append(ambient.basis[row])
            degrees.append(ambient.degreeList()[row])
            continue
        labels.append(ImageLabel("cr", j))
        support = {ambient.degreeList()[row] for row in column}
        if len(support) > 1:
            raise NotSplitImage(f"Image column {j} mixes internal degrees {sorted(support)}")
        degrees.append(support.pop() if support else 0)
    return BasedFreeModule(ring, labels, degrees if ring.isGraded else None)


def crossEffect(functor: FunctorTag, arguments: Sequence[BasedFreeModule], ring: RingDescriptor = None) -> CrossEffect:
    """
    Compute cr_k(F)(V_1..V_k); cr_0 is the zero module.

    Raises:
        NotSplitImage: If the idempotent image is not a direct summand
    """
    arguments = list(arguments)
    ring = ring or (arguments[0].ring if arguments else None)
    if ring is None:
        raise ValueError("cr_0 needs an explicit ring")
    total = directSum(arguments, ring)
    ambient = functor.applyObject(total.module)
    if not arguments:
        zero = BasedFreeModule.zero(ring)
        return CrossEffect(functor, arguments, total, ambient, zero,
                           ModuleMap.zero(zero, ambient), ModuleMap.zero(ambient, zero))
    idempotent = crossEffectIdempotent(functor, total, ambient)
    if not (idempotent @ idempotent == idempotent):
        raise NotSplitImage("Cross-effect operator is not idempotent")
    split = splitImage(idempotent)
    module = _imageModule(ring, ambient, split.include)
    include = ModuleMap(module, ambient, split.include, checkDegrees=False)
    project = ModuleMap(ambient, module, split.project, checkDegrees=False)
    logger.debug("cr_%d(%s) has rank %d", len(arguments), functor, module.rank)
    return CrossEffect(functor, arguments, total, ambient, module, include, project)


def crossEffectMap(functor: FunctorTag, maps: Sequence[ModuleMap]) -> ModuleMap:
    """cr_k(F)(phi_1..phi_k) = project' o F(phi_1 + ... + phi_k) o include."""
    source = crossEffect(functor, [phi.domain for phi in maps])
    target = crossEffect(functor, [phi.codomain for phi in maps])
    blocks = {(i, i): phi for i, phi in enumerate(maps)}
    summed = blockMatrixMap(blocks, source.sum, target.sum)
    lifted = functor.applyMap(summed, source.ambient, target.ambient)
    return target.project.compose(lifted).compose(source.include)


@dataclass
class Decomposition:
    """F(V_1 + ... + V_k) as the sum of cr_|T|(F)(V_T) over nonempty T."""

    subsets: List[Tuple[int, ...]]
    pieces: List[CrossEffect]
    injections: List[ModuleMap]
    projections: List[ModuleMap]
    ambient: BasedFreeModule

    def resolvesIdentity(self) -> bool:
        identity = ModuleMap.identity(self.ambient)
        total = None
        for inj, proj in zip(self.injections, self.projections):
            term = inj.compose(proj)
            total = term if total is None else total + term
        if total is None:
            return self.ambient.rank == 0
        if not total.equals(identity):
            return False
        for a, proj in enumerate(self.projections):
            for b, inj in enumerate(self.injections):
                product = proj.compose(inj)
                expected = ModuleMap.identity(self.pieces[a].module) if a == b else None
                if expected is None and not product.isZero():
                    return False
                if expected is not None and not product.equals(expected):
                    return False
        return True


def decompose(functor: FunctorTag, arguments: Sequence[BasedFreeModule]) -> Decomposition:
    """
    Decompose F(+V) into cross effects, subsets ordered by size then lexicographically.
    """
    arguments = list(arguments)
    ring = arguments[0].ring
    total = directSum(arguments, ring)
    ambient = functor.applyObject(total.module)
    subsets, pieces, injections, projections = [], [], [], []
    for size in range(1, len(arguments) + 1):
        for subset in combinations(range(len(arguments)), size):
            piece = crossEffect(functor, [arguments[i] for i in subset])
            inner = directSum([arguments[i] for i in subset], ring)
            into = blockMatrixMap({(i, position): ModuleMap.identity(arguments[i]) for position, i in enumerate(subset)}, inner, total)
            onto = blockMatrixMap({(position, i): ModuleMap.identity(arguments[i]) for position, i in enumerate(subset)}, total, inner)
            liftedInto = functor.applyMap(into, piece.ambient, ambient)
            liftedOnto = functor.applyMap(onto, ambient, piece.ambient)
            subsets.append(subset)
            pieces.append(piece)
            injections.append(liftedInto.compose(piece.include))
            projections.append(piece.project.compose(liftedOnto))
    return Decomposition(subsets=subsets, pieces=pieces, injections=injections, projections=projections, ambient=ambient)


def symmetricAction(functor: FunctorTag, module: BasedFreeModule, k: int, permutation: Tuple[int, ...]) -> ModuleMap:
    """
    Action of a permutation on cr_k(F)(V..V): summand i of V^{+k} goes to summand permutation[i].
    """
    piece = crossEffect(functor, [module] * k)
    blocks = {(permutation[i], i): ModuleMap.identity(module) for i in range(k)}
    shuffle = blockMatrixMap(blocks, piece.sum, piece.sum)
    lifted = functor.applyMap(shuffle, piece.ambient, piece.ambient)
    return piece.project.compose(lifted).compose(piece.include)


@dataclass
class DegreeCheck:
    functor: FunctorTag
    k: int
    sampleRank: int
    crossEffectRank: int

    @property
    def passed(self) -> bool:
        return self.crossEffectRank == 0


def functorDegreeCheck(functor: FunctorTag, k: int, sampleRank: int, ring: RingDescriptor) -> DegreeCheck:
    """F has degree <= k on V iff cr_{k+1}(F)(V..V) = 0 for V free of rank sampleRank."""
    V = BasedFreeModule.free(ring, sampleRank)
    piece = crossEffect(functor, [V] * (k + 1))
    return DegreeCheck(functor=functor, k=k, sampleRank=sampleRank, crossEffectRank=piece.rank)


def hasExactDegree(functor: FunctorTag, n: int, sampleRank: int, ring: RingDescriptor) -> bool:
    upper = functorDegreeCheck(functor, n, sampleRank, ring).passed
    lower = n == 0 or not functorDegreeCheck(functor, n - 1, sampleRank, ring).passed
    return upper and lower
