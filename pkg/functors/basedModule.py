"""
Based free modules and the maps between them.

A BasedFreeModule is a free module with an ordered list of labelled basis
elements and, over a graded ring, an internal degree per basis element. A
ModuleMap carries its matrix in the domain/codomain bases; column j is the
image of the j-th domain basis element.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.gradedSlice import checkHomogeneous
from algebra.ringDescriptor import RingDescriptor
from algebra.sparseMatrix import SparseMatrix, blockDiagonal, kronecker
from functors.labels import Atom, PairLabel, SumLabel
from utils.errors import MixedRings


class BasedFreeModule:
    """Free module with labelled basis and optional internal degrees."""

    def __init__(
        self,
        ring: RingDescriptor,
        basis: Sequence[Any],
        degrees: Optional[Sequence[int]] = None
    ):
        """
        Initialize a based free module.

        Args:
            ring: Coefficient ring
            basis: Distinct hashable labels
            degrees: Internal degrees, required iff the ring is graded
        """
        self.ring = ring
        self.basis: Tuple[Any, ...] = tuple(basis)
        self._index = {label: i for i, label in enumerate(self.basis)}
        if len(self._index) != len(self.basis):
            raise ValueError("Basis labels must be distinct")
        if ring.isGraded:
            if degrees is None:
                degrees = [0] * len(self.basis)
            if len(degrees) != len(self.basis):
                raise ValueError(f"Expected {len(self.basis)} degrees, got {len(degrees)}")
            self.degrees: Optional[Tuple[int, ...]] = tuple(int(d) for d in degrees)
        else:
            self.degrees = None

    @classmethod
    def free(
        cls,
        ring: RingDescriptor,
        rank: int,
        prefix: str = "e",
        degrees: Optional[Sequence[int]] = None
    ) -> "BasedFreeModule":
        """Free module with basis prefix1..prefixN."""
        return cls(ring, [Atom(f"{prefix}{i + 1}") for i in range(rank)], degrees)

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "BasedFreeModule":
        return cls(ring, [], [] if ring.isGraded else None)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def isGraded(self) -> bool:
        return self.degrees is not None

    def degreeList(self) -> List[int]:
        return list(self.degrees) if self.degrees is not None else [0] * self.rank

    def indexOf(self, label: Any) -> int:
        return self._index[label]

    def contains(self, label: Any) -> bool:
        return label in self._index

    def twisted(self, shift: int) -> "BasedFreeModule":
        """Raise every internal degree by shift."""
        if not self.isGraded:
            return self
        return BasedFreeModule(self.ring, self.basis, [d + shift for d in self.degrees])

    def relabelled(self, fn) -> "BasedFreeModule":
        return BasedFreeModule(self.ring, [fn(b) for b in self.basis], self.degrees)

    def sameAs(self, other: "BasedFreeModule") -> bool:
        return self.ring == other.ring and self.basis == other.basis and self.degrees == other.degrees

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BasedFreeModule) and self.sameAs(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"BasedFreeModule({self.ring.name}, rank={self.rank})"


class ModuleMap:
    """Homomorphism between based free modules."""

    def __init__(
        self,
        domain: BasedFreeModule,
        codomain: BasedFreeModule,
        matrix: SparseMatrix,
        checkDegrees: bool = True
    ):
        if domain.ring != codomain.ring or matrix.ring != domain.ring:
            raise MixedRings(f"{domain.ring.name}, {codomain.ring.name}, {matrix.ring.name}")
        if matrix.shape != (codomain.rank, domain.rank):
            raise ValueError(
                f"Matrix shape {matrix.shape} does not match {codomain.rank}x{domain.rank}"
            )
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        if checkDegrees and domain.isGraded:
            checkHomogeneous(matrix, codomain.degrees, domain.degrees)

    @property
    def ring(self) -> RingDescriptor:
        return self.domain.ring

    @classmethod
    def identity(cls, module: BasedFreeModule) -> "ModuleMap":
        return cls(module, module, SparseMatrix.identity(module.ring, module.rank), checkDegrees=False)

    @classmethod
    def zero(cls, domain: BasedFreeModule, codomain: BasedFreeModule) -> "ModuleMap":
        return cls(domain, codomain, SparseMatrix.zero(domain.ring, codomain.rank, domain.rank), checkDegrees=False)

    @classmethod
    def fromColumns(
        cls,
        domain: BasedFreeModule,
        codomain: BasedFreeModule,
        columns: Sequence[Dict[int, Any]]
    ) -> "ModuleMap":
        return cls(domain, codomain, SparseMatrix.fromColumns(domain.ring, codomain.rank, columns))

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """Return self o inner."""
        if inner.codomain.rank != self.domain.rank:
            raise ValueError("Cannot compose: ranks do not match")
        return ModuleMap(inner.domain, self.codomain, self.matrix @ inner.matrix, checkDegrees=False)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.domain, self.codomain, self.matrix + other.matrix, checkDegrees=False)

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.domain, self.codomain, self.matrix - other.matrix, checkDegrees=False)

    def __neg__(self) -> "ModuleMap":
        return ModuleMap(self.domain, self.codomain, -self.matrix, checkDegrees=False)

    def scale(self, scalar: Any) -> "ModuleMap":
        return ModuleMap(self.domain, self.codomain, self.matrix.scale(scalar), checkDegrees=False)

    def isZero(self) -> bool:
        return self.matrix.isZero()

    def apply(self, vector: Dict[int, Any]) -> Dict[int, Any]:
        return self.matrix.applyToVector(vector)

    def equals(self, other: "ModuleMap") -> bool:
        return self.matrix == other.matrix

    def __repr__(self) -> str:
        return f"ModuleMap({self.domain.rank} -> {self.codomain.rank} over {self.ring.name})"


@dataclass
class DirectSum:
    """A direct sum with its canonical injections and projections."""

    module: BasedFreeModule
    summands: List[BasedFreeModule]
    injections: List[ModuleMap]
    projections: List[ModuleMap]

    def offset(self, index: int) -> int:
        return sum(m.rank for m in self.summands[:index])


def directSum(modules: Sequence[BasedFreeModule], ring: Optional[RingDescriptor] = None) -> DirectSum:
    """
    Direct sum with basis SumLabel(i, b) in summand order.

    Raises:
        MixedRings: If the summands live over different rings
    """
    if not modules and ring is None:
        raise ValueError("Empty direct sum needs an explicit ring")
    ring = ring or modules[0].ring
    for module in modules:
        if module.ring != ring:
            raise MixedRings(f"{module.ring.name} vs {ring.name}")
    basis = []
    degrees = []
    for i, module in enumerate(modules):
        basis.extend(SumLabel(i, b) for b in module.basis)
        degrees.extend(module.degreeList())
    total = BasedFreeModule(ring, basis, degrees if ring.isGraded else None)

    injections = []
    projections = []
    offset = 0
    one = ring.one()
    for module in modules:
        entries = {(offset + i, i): one for i in range(module.rank)}
        inclusion = SparseMatrix(ring, total.rank, module.rank, entries)
        injections.append(ModuleMap(module, total, inclusion, checkDegrees=False))
        projections.append(ModuleMap(total, module, inclusion.transpose(), checkDegrees=False))
        offset += module.rank
    return DirectSum(module=total, summands=list(modules), injections=injections, projections=projections)


def directSumMap(maps: Sequence[ModuleMap], source: DirectSum, target: DirectSum) -> ModuleMap:
    """Block diagonal map between direct sums."""
    matrix = blockDiagonal([m.matrix for m in maps], source.module.ring)
    return ModuleMap(source.module, target.module, matrix, checkDegrees=False)


def blockMatrixMap(
    blocks: Dict[Tuple[int, int], ModuleMap],
    source: DirectSum,
    target: DirectSum
) -> ModuleMap:
    """Map between direct sums from blocks keyed by (target index, source index)."""
    ring = source.module.ring
    entries = {}
    for (row, col), block in blocks.items():
        rowOffset = target.offset(row)
        colOffset = source.offset(col)
        for (i, j), value in block.matrix.entries.items():
            key = (rowOffset + i, colOffset + j)
            entries[key] = entries[key] + value if key in entries else value
    matrix = SparseMatrix(ring, target.module.rank, source.module.rank, entries)
    return ModuleMap(source.module, target.module, matrix, checkDegrees=False)


def tensorProduct(left: BasedFreeModule, right: BasedFreeModule) -> BasedFreeModule:
    """Tensor product with basis PairLabel(a, b) in Kronecker order."""
    if left.ring != right.ring:
        raise MixedRings(f"{left.ring.name} vs {right.ring.name}")
    basis = [PairLabel(a, b) for a in left.basis for b in right.basis]
    degrees = None
    if left.ring.isGraded:
        degrees = [da + db for da in left.degrees for db in right.degrees]
    return BasedFreeModule(left.ring, basis, degrees)


def tensorProductMap(
    left: ModuleMap,
    right: ModuleMap,
    domain: Optional[BasedFreeModule] = None,
    codomain: Optional[BasedFreeModule] = None
) -> ModuleMap:
    domain = domain or tensorProduct(left.domain, right.domain)
    codomain = codomain or tensorProduct(left.codomain, right.codomain)
    return ModuleMap(domain, codomain, kronecker(left.matrix, right.matrix), checkDegrees=False)
