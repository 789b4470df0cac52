"""
Polynomial functors Sym^n, Lambda^n, D^n and T^n on based free modules.

Bases are indexed by tuples of basis indices of the input module:
- Sym^n: nondecreasing tuples (monomials)
- Lambda^n: strictly increasing tuples (wedges)
- D^n: nondecreasing tuples, read as orbit sums in T^n (divided powers)
- T^n: all tuples

Maps are built column by column from the expansion of phi^{(x)n} on a
representative word.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from functors.basedModule import BasedFreeModule, ModuleMap
from functors.labels import FunctorLabel
from algebra.sparseMatrix import SparseMatrix

logger = logging.getLogger(__name__)

Column = Dict[int, Any]


class FunctorKind(str, Enum):
    SYM = "S"
    EXT = "L"
    DIV = "D"
    TENSOR = "T"


def sortWithSign(word: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Sort a word and return the sign of the sorting permutation (0 on repeats)."""
    if len(set(word)) != len(word):
        return tuple(sorted(word)), 0
    inversions = sum(1 for a, b in combinations(range(len(word)), 2) if word[a] > word[b])
    return tuple(sorted(word)), (-1 if inversions % 2 else 1)


def distinctPermutations(word: Sequence[int]) -> List[Tuple[int, ...]]:
    return sorted(set(permutations(word)))


@dataclass(frozen=True)
class FunctorTag:
    """One of Sym(n), Ext(n), Div(n), Tensor(n)."""

    kind: FunctorKind
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Functor degree must be non-negative, got {self.n}")

    @property
    def name(self) -> str:
        names = {FunctorKind.SYM: "Sym", FunctorKind.EXT: "Ext", FunctorKind.DIV: "Div", FunctorKind.TENSOR: "Tensor"}
        return f"{names[self.kind]}({self.n})"

    def __str__(self) -> str:
        return self.name

    # Bases

    def indexTuples(self, rank: int) -> List[Tuple[int, ...]]:
        indices = range(rank)
        if self.kind in (FunctorKind.SYM, FunctorKind.DIV):
            return list(combinations_with_replacement(indices, self.n))
        if self.kind == FunctorKind.EXT:
            return list(combinations(indices, self.n))
        return list(product(indices, repeat=self.n))

    def rankFormula(self, rank: int) -> int:
        if self.n == 0:
            return 1
        if self.kind in (FunctorKind.SYM, FunctorKind.DIV):
            return comb(rank + self.n - 1, self.n)
        if self.kind == FunctorKind.EXT:
            return comb(rank, self.n)
        return rank ** self.n

    def isIndexTuple(self, word: Tuple[int, ...]) -> bool:
        if self.kind in (FunctorKind.SYM, FunctorKind.DIV):
            return all(a <= b for a, b in zip(word, word[1:]))
        if self.kind == FunctorKind.EXT:
            return all(a < b for a, b in zip(word, word[1:]))
        return True

    # Images

    def imageOfTuple(self, indexTuple: Tuple[int, ...], columnImage: Callable[[int], Column]) -> Dict[Tuple[int, ...], Any]:
        """
        Image of a basis element under F(phi).

        Args:
            indexTuple: Basis index tuple of F(V)
            columnImage: j -> column j of phi as {row: coefficient}

        Returns:
            {index tuple of F(W): coefficient}, zeros removed
        """
        result: Dict[Tuple[int, ...], Any] = defaultdict(int)
        if self.kind == FunctorKind.DIV:
            for word in distinctPermutations(indexTuple):
                for key, value in _expandWord(word, columnImage):
                    if self.isIndexTuple(key):
                        result[key] = result[key] + value
        else:
            for key, value in _expandWord(indexTuple, columnImage):
                if self.kind == FunctorKind.SYM:
                    key = tuple(sorted(key))
                elif self.kind == FunctorKind.EXT:
                    key, sign = sortWithSign(key)
                    if sign == 0:
                        continue
                    value = value if sign == 1 else -value
                result[key] = result[key] + value
        return {k: v for k, v in result.items() if v != 0}

    # Application

    def applyObject(self, module: BasedFreeModule) -> BasedFreeModule:
        tuples = self.indexTuples(module.rank)
        basis = [FunctorLabel(self.kind.value, tuple(module.basis[i] for i in t)) for t in tuples]
        degrees = None
        if module.isGraded:
            degrees = [sum(module.degrees[i] for i in t) for t in tuples]
        return BasedFreeModule(module.ring, basis, degrees)

    def applyMap(
        self,
        phi: ModuleMap,
        domain: BasedFreeModule = None,
        codomain: BasedFreeModule = None
    ) -> ModuleMap:
        """F(phi): F(V) -> F(W)."""
        domain = domain or self.applyObject(phi.domain)
        codomain = codomain or self.applyObject(phi.codomain)
        ring = phi.ring
        columns = phi.matrix.columnIndex()
        lookup = {t: i for i, t in enumerate(self.indexTuples(phi.codomain.rank))}
        entries = {}
        for j, indexTuple in enumerate(self.indexTuples(phi.domain.rank)):
            image = self.imageOfTuple(indexTuple, lambda c: columns.get(c, {}))
            for key, value in image.items():
                entries[(lookup[key], j)] = value
        matrix = SparseMatrix(ring, codomain.rank, domain.rank, entries)
        return ModuleMap(domain, codomain, matrix, checkDegrees=False)


def _expandWord(word: Sequence[int], columnImage: Callable[[int], Column]) -> Iterable[Tuple[Tuple[int, ...], Any]]:
    """Expand phi(e_{w1}) (x) ... (x) phi(e_{wn}) into words with coefficients."""
    factors = [list(columnImage(j).items()) for j in word]
    for choice in product(*factors):
        coefficient = 1
        key = []
        for row, value in choice:
            coefficient = coefficient * value
            key.append(row)
        yield tuple(key), coefficient


def Sym(n: int) -> FunctorTag:
    return FunctorTag(FunctorKind.SYM, n)


def Ext(n: int) -> FunctorTag:
    return FunctorTag(FunctorKind.EXT, n)


def Div(n: int) -> FunctorTag:
    return FunctorTag(FunctorKind.DIV, n)


def Tensor(n: int) -> FunctorTag:
    return FunctorTag(FunctorKind.TENSOR, n)


def parseFunctorTag(text: str) -> FunctorTag:
    """Parse 'Sym(3)', 'Ext(2)', 'Div(2)' or 'Tensor(2)'."""
    text = text.strip()
    factories = {"sym": Sym, "ext": Ext, "div": Div, "tensor": Tensor}
    if "(" not in text or not text.endswith(")"):
        raise ValueError(f"Malformed functor tag: {text}")
    head, arg = text[:-1].split("(", 1)
    factory = factories.get(head.strip().lower())
    if factory is None:
        raise ValueError(f"Unknown functor: {head}")
    return factory(int(arg))


def allTags(maxDegree: int) -> List[FunctorTag]:
    return [factory(n) for factory in (Sym, Ext, Div, Tensor) for n in range(1, maxDegree + 1)]
