"""
The Dold-Kan functor Gamma on bounded complexes.

Gamma(C)_m is the sum over monotone surjections [m] -> [k] of C_k. A
surjection is encoded by its step set S = {j in 1..m : s(j) = s(j-1) + 1},
|S| = k, and basis labels are GammaLabel(k, S, b) with b a basis label of C_k.

Faces and degeneracies act on step sets:
- d_0: S' = {s - 1 : s in S, s >= 2}; if 1 in S the boundary of C is applied
- d_i (i >= 1): zero when i in S and (i == m or i + 1 in S), else
  S' = {s in S : s <= i} + {s - 1 : s in S, s >= i + 1}
- s_i: S' = {s in S : s <= i} + {s + 1 : s in S, s >= i + 1}
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.labels import GammaLabel
from simplicial.simplicialModule import TruncatedSimplicialModule

Steps = Tuple[int, ...]
GammaIndex = Tuple[int, Steps, int]


def stepSets(m: int, k: int) -> List[Steps]:
    return list(combinations(range(1, m + 1), k))


def faceOfSteps(steps: Steps, m: int, i: int) -> Tuple[str, Optional[Steps]]:
    """
    Returns:
        ("relabel", S'), ("boundary", S') or ("zero", None)
    """
    stepSet = set(steps)
    if i == 0:
        shifted = tuple(s - 1 for s in steps if s >= 2)
        return ("boundary", shifted) if 1 in stepSet else ("relabel", shifted)
    if i in stepSet and (i == m or i + 1 in stepSet):
        return "zero", None
    merged = tuple(sorted({s for s in steps if s <= i} | {s - 1 for s in steps if s >= i + 1}))
    return "relabel", merged


def degeneracyOfSteps(steps: Steps, i: int) -> Steps:
    return tuple(s for s in steps if s <= i) + tuple(s + 1 for s in steps if s >= i + 1)


@dataclass
class GammaLevel:
    """Basis of Gamma(C)_m as (k, steps, index into C_k)."""

    m: int
    indices: List[GammaIndex]
    positions: Dict[GammaIndex, int]
    module: BasedFreeModule


def gammaLevel(complex_: ChainComplex, m: int) -> GammaLevel:
    ring = complex_.ring
    indices: List[GammaIndex] = []
    labels = []
    degrees = []
    for k in range(0, min(m, complex_.length) + 1):
        C = complex_.module(k)
        for steps in stepSets(m, k):
            for j in range(C.rank):
                indices.append((k, steps, j))
                labels.append(GammaLabel(k, steps, C.basis[j]))
                degrees.append(C.degreeList()[j])
    module = BasedFreeModule(ring, labels, degrees if ring.isGraded else None)
    return GammaLevel(m=m, indices=indices, positions={x: i for i, x in enumerate(indices)}, module=module)


def gammaFaceColumns(complex_: ChainComplex, source: GammaLevel, target: GammaLevel, i: int) -> Dict[int, Dict[int, Any]]:
    """Columns of d_i: Gamma_m -> Gamma_{m-1} as {source index: {target index: coefficient}}."""
    columns: Dict[int, Dict[int, Any]] = {}
    for position, (k, steps, j) in enumerate(source.indices):
        kind, newSteps = faceOfSteps(steps, source.m, i)
        if kind == "zero":
            continue
        if kind == "relabel":
            columns[position] = {target.positions[(k, newSteps, j)]: 1}
        else:
            boundary = complex_.differential(k).matrix.column(j)
            columns[position] = {
                target.positions[(k - 1, newSteps, row)]: value for row, value in boundary.items()
            }
    return columns


def gammaDegeneracyColumns(source: GammaLevel, target: GammaLevel, i: int) -> Dict[int, Dict[int, Any]]:
    return {
        position: {target.positions[(k, degeneracyOfSteps(steps, i), j)]: 1}
        for position, (k, steps, j) in enumerate(source.indices)
    }


def _columnsToMap(columns: Dict[int, Dict[int, Any]], source: GammaLevel, target: GammaLevel) -> ModuleMap:
    ring = source.module.ring
    entries = {}
    for col, column in columns.items():
        for row, value in column.items():
            entries[(row, col)] = value if not isinstance(value, int) else ring.fromInt(value)
    matrix = SparseMatrix(ring, target.module.rank, source.module.rank, entries)
    return ModuleMap(source.module, target.module, matrix, checkDegrees=False)


def gamma(complex_: ChainComplex, top: int) -> TruncatedSimplicialModule:
    """
    Gamma(C) truncated at level top.

    Args:
        complex_: Bounded complex
        top: Highest simplicial level to build
    """
    levels = [gammaLevel(complex_, m) for m in range(top + 1)]
    faces = {}
    degeneracies = {}
    for m in range(1, top + 1):
        for i in range(m + 1):
            faces[(m, i)] = _columnsToMap(gammaFaceColumns(complex_, levels[m], levels[m - 1], i), levels[m], levels[m - 1])
    for m in range(top):
        for i in range(m + 1):
            degeneracies[(m, i)] = _columnsToMap(gammaDegeneracyColumns(levels[m], levels[m + 1], i), levels[m], levels[m + 1])
    return TruncatedSimplicialModule(complex_.ring, [level.module for level in levels], faces, degeneracies)
