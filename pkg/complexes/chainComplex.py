"""
Bounded chain complexes of based free modules, chain maps and mapping cones.

A complex of length L has modules C_0..C_L and differentials d_k: C_k -> C_{k-1}
for k = 1..L. Outside that range modules are zero and differentials vanish.
"""

import logging
from typing import Dict, List, Optional, Sequence

from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import SparseMatrix
from functors.basedModule import BasedFreeModule, ModuleMap, blockMatrixMap, directSum, tensorProduct
from functors.labels import PairLabel, SumLabel
from utils.errors import MixedRings, NotAComplex, NotChainMap

logger = logging.getLogger(__name__)


class ChainComplex:
    """Bounded chain complex C_0 <- C_1 <- ... <- C_L."""

    def __init__(
        self,
        ring: RingDescriptor,
        modules: Sequence[BasedFreeModule],
        differentials: Sequence[ModuleMap],
        validate: bool = True
    ):
        """
        Initialize a chain complex.

        Args:
            ring: Coefficient ring
            modules: C_0..C_L
            differentials: d_1..d_L
            validate: Check d o d = 0

        Raises:
            NotAComplex: If some d_k o d_{k+1} is nonzero
        """
        if len(differentials) != max(len(modules) - 1, 0):
            raise ValueError(f"Expected {len(modules) - 1} differentials, got {len(differentials)}")
        for module in modules:
            if module.ring != ring:
                raise MixedRings(f"{module.ring.name} vs {ring.name}")
        self.ring = ring
        self.modules: List[BasedFreeModule] = list(modules)
        self.differentials: List[ModuleMap] = list(differentials)
        for k, d in enumerate(self.differentials, start=1):
            if d.domain.rank != self.modules[k].rank or d.codomain.rank != self.modules[k - 1].rank:
                raise ValueError(f"d_{k} has shape {d.matrix.shape}, expected "
                                 f"{self.modules[k - 1].rank}x{self.modules[k].rank}")
        if validate:
            self.validate()

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def isGraded(self) -> bool:
        return self.ring.isGraded

    def module(self, k: int) -> BasedFreeModule:
        if 0 <= k < len(self.modules):
            return self.modules[k]
        return BasedFreeModule.zero(self.ring)

    def differential(self, k: int) -> ModuleMap:
        """d_k: C_k -> C_{k-1}."""
        if 1 <= k <= self.length:
            return self.differentials[k - 1]
        return ModuleMap.zero(self.module(k), self.module(k - 1))

    def ranks(self) -> List[int]:
        return [m.rank for m in self.modules]

    def validate(self) -> None:
        for k in range(1, self.length):
            if not self.differential(k).compose(self.differential(k + 1)).isZero():
                raise NotAComplex(k)

    def topGeneratorDegree(self) -> int:
        degrees = [d for m in self.modules for d in m.degreeList()]
        return max(degrees, default=0)

    def __repr__(self) -> str:
        return f"ChainComplex({self.ring.name}, ranks={self.ranks()})"


def makeComplex(
    modules: Sequence[BasedFreeModule],
    differentials: Sequence[ModuleMap],
    ring: Optional[RingDescriptor] = None
) -> ChainComplex:
    """Build and validate a complex from C_0..C_L and d_1..d_L."""
    if ring is None:
        if not modules:
            raise ValueError("Empty complex needs an explicit ring")
        ring = modules[0].ring
    return ChainComplex(ring, modules, differentials)


def complexFromMap(f: ModuleMap) -> ChainComplex:
    """The length-one complex P -> Q with P in degree 1."""
    return ChainComplex(f.ring, [f.codomain, f.domain], [f])


def moduleInDegree(module: BasedFreeModule, degree: int) -> ChainComplex:
    """Complex with a single module in the given homological degree."""
    zero = BasedFreeModule.zero(module.ring)
    modules = [zero] * degree + [module]
    differentials = [ModuleMap.zero(modules[k], modules[k - 1]) for k in range(1, len(modules))]
    return ChainComplex(module.ring, modules, differentials, validate=False)


def shift(complex_: ChainComplex, k: int) -> ChainComplex:
    """Move every module up by k homological degrees (k >= 0)."""
    if k < 0:
        raise ValueError(f"Shift must be non-negative, got {k}")
    if k == 0:
        return complex_
    zero = BasedFreeModule.zero(complex_.ring)
    modules = [zero] * k + complex_.modules
    differentials = [ModuleMap.zero(modules[j], modules[j - 1]) for j in range(1, k + 1)]
    differentials += complex_.differentials
    return ChainComplex(complex_.ring, modules, differentials, validate=False)


def totalTensor(left: ChainComplex, right: ChainComplex) -> ChainComplex:
    """
    Total tensor product: degree m is the sum over p + q = m of K_p (x) L_q,
    d(a (x) b) = da (x) b + (-1)^p a (x) db. Basis labels SumLabel(p, PairLabel(a, b)).
    """
    if left.ring != right.ring:
        raise MixedRings(f"{left.ring.name} vs {right.ring.name}")
    ring = left.ring
    length = left.length + right.length
    layouts = []
    modules = []
    for m in range(length + 1):
        basis, degrees, layout = [], [], {}
        for p in range(max(0, m - right.length), min(m, left.length) + 1):
            q = m - p
            K, L = left.module(p), right.module(q)
            layout[p] = len(basis)
            for a in range(K.rank):
                for b in range(L.rank):
                    basis.append(SumLabel(p, PairLabel(K.basis[a], L.basis[b])))
                    if ring.isGraded:
                        degrees.append(K.degrees[a] + L.degrees[b])
        layouts.append(layout)
        modules.append(BasedFreeModule(ring, basis, degrees if ring.isGraded else None))

    differentials = []
    for m in range(1, length + 1):
        entries = {}
        for p, offset in layouts[m].items():
            q = m - p
            K, L = left.module(p), right.module(q)
            if p >= 1 and (p - 1) in layouts[m - 1]:
                target = layouts[m - 1][p - 1]
                dK = left.differential(p).matrix
                for (i, a), value in dK.entries.items():
                    for b in range(L.rank):
                        key = (target + i * L.rank + b, offset + a * L.rank + b)
                        entries[key] = entries.get(key, 0) + value
            if q >= 1 and p in layouts[m - 1]:
                target = layouts[m - 1][p]
                Lprev = right.module(q - 1)
                dL = right.differential(q).matrix
                sign = -1 if p % 2 else 1
                for (i, b), value in dL.entries.items():
                    for a in range(K.rank):
                        key = (target + a * Lprev.rank + i, offset + a * L.rank + b)
                        entries[key] = entries.get(key, 0) + sign * value
        matrix = SparseMatrix(ring, modules[m - 1].rank, modules[m].rank, entries)
        differentials.append(ModuleMap(modules[m], modules[m - 1], matrix, checkDegrees=False))
    return ChainComplex(ring, modules, differentials)


class ChainMap:
    """A degreewise family u_k: S_k -> T_k."""

    def __init__(self, source: ChainComplex, target: ChainComplex, components: Dict[int, ModuleMap]):
        self.source = source
        self.target = target
        self.components = dict(components)

    @property
    def length(self) -> int:
        return max(self.source.length, self.target.length)

    def component(self, k: int) -> ModuleMap:
        if k in self.components:
            return self.components[k]
        return ModuleMap.zero(self.source.module(k), self.target.module(k))

    def check(self) -> None:
        """
        Raises:
            NotChainMap: If d^T_k o u_k != u_{k-1} o d^S_k for some k
        """
        for k in range(1, self.length + 1):
            left = self.target.differential(k).compose(self.component(k))
            right = self.component(k - 1).compose(self.source.differential(k))
            if not left.equals(right):
                raise NotChainMap(k)

    def isChainMap(self) -> bool:
        try:
            self.check()
            return True
        except NotChainMap:
            return False

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target, {
            k: self.component(k) - other.component(k) for k in range(self.length + 1)
        })


def mappingCone(u: ChainMap) -> ChainComplex:
    """
    Cone of u: S -> T with Cone_k = S_{k-1} (+) T_k and d(a, b) = (-da, u(a) + db).

    u is a quasi-isomorphism iff the cone is acyclic.
    """
    S, T = u.source, u.target
    ring = S.ring
    length = max(S.length + 1, T.length)
    sums = [directSum([S.module(k - 1), T.module(k)], ring) for k in range(length + 1)]
    differentials = []
    for k in range(1, length + 1):
        blocks = {
            (0, 0): -S.differential(k - 1),
            (1, 0): u.component(k - 1),
            (1, 1): T.differential(k),
        }
        differentials.append(blockMatrixMap(blocks, sums[k], sums[k - 1]))
    return ChainComplex(ring, [s.module for s in sums], differentials)
