"""
Normalization of simplicial modules and the composite N F Gamma.

normalize() works on any truncated simplicial module: N_m is the quotient of
X_m by the span of the degeneracy images, with differential sum (-1)^i d_i.
nfg() computes N F Gamma(C) directly on nondegenerate F-basis elements: an
F-basis element over Gamma(C)_m is nondegenerate iff the union of the step
sets of its constituents is {1..m}.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from algebra.ringDescriptor import integers
from algebra.smithNormalForm import smithNormalForm
from algebra.sparseMatrix import SparseMatrix, hstack
from complexes.chainComplex import ChainComplex, ChainMap
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.functorTags import FunctorTag
from functors.labels import FunctorLabel, ImageLabel
from simplicial.gammaFunctor import GammaLevel, gamma, gammaFaceColumns, gammaLevel
from simplicial.simplicialModule import TruncatedSimplicialModule, applyFunctorLevelwise
from utils.errors import DegeneracySpanNotSplit, TruncationUnsound

logger = logging.getLogger(__name__)


@dataclass
class _Quotient:
    module: BasedFreeModule
    project: SparseMatrix
    section: SparseMatrix


def _coordinateQuotient(level: BasedFreeModule, hit: set) -> _Quotient:
    ring = level.ring
    kept = [i for i in range(level.rank) if i not in hit]
    module = BasedFreeModule(ring, [level.basis[i] for i in kept],
                             [level.degrees[i] for i in kept] if level.isGraded else None)
    one = ring.one()
    section = SparseMatrix(ring, level.rank, len(kept), {(i, j): one for j, i in enumerate(kept)})
    return _Quotient(module=module, project=section.transpose(), section=section)


def _signedUnitColumns(matrix: SparseMatrix) -> Optional[set]:
    hit = set()
    for j, column in matrix.columnIndex().items():
        if len(column) != 1:
            return None
        (row, value), = column.items()
        if value not in (matrix.ring.one(), matrix.ring.fromInt(-1)):
            return None
        hit.add(row)
    return hit


def _degeneracyQuotient(module: TruncatedSimplicialModule, m: int) -> _Quotient:
    level = module.levels[m]
    ring = module.ring
    if m == 0:
        return _coordinateQuotient(level, set())
    blocks = [module.degeneracy(m - 1, i).matrix for i in range(m)]
    span = hstack(blocks)
    hit = _signedUnitColumns(span)
    if hit is not None:
        return _coordinateQuotient(level, hit)
    integral = {}
    for key, value in span.entries.items():
        asInt = ring.toInteger(value)
        if asInt is None:
            raise DegeneracySpanNotSplit(m)
        integral[key] = asInt
    form = smithNormalForm(SparseMatrix(integers(), span.rows, span.cols, integral))
    if not form.allUnits():
        raise DegeneracySpanNotSplit(m)
    r = form.rank
    size = level.rank
    section = SparseMatrix(ring, size, size - r, {
        (i, j - r): ring.fromInt(int(form.U[i, j])) for i in range(size) for j in range(r, size) if form.U[i, j] != 0
    })
    project = SparseMatrix(ring, size - r, size, {
        (i - r, j): ring.fromInt(int(form.Uinv[i, j])) for i in range(r, size) for j in range(size) if form.Uinv[i, j] != 0
    })
    labels = []
    degrees = []
    for j in range(size - r):
        column = section.column(j)
        if len(column) == 1 and list(column.values())[0] == ring.one():
            row = next(iter(column))
            labels.append(level.basis[row])
            degrees.append(level.degreeList()[row])
        else:
            labels.append(ImageLabel("N", j))
            degrees.append(level.degreeList()[min(column)] if column else 0)
    quotient = BasedFreeModule(ring, labels, degrees if ring.isGraded else None)
    return _Quotient(module=quotient, project=project, section=section)


def normalize(module: TruncatedSimplicialModule) -> ChainComplex:
    """
    Normalized chain complex N(X) for levels 0..top.

    Raises:
        DegeneracySpanNotSplit: If the degeneracy span is not a direct summand
    """
    ring = module.ring
    quotients = [_degeneracyQuotient(module, m) for m in range(module.top + 1)]
    differentials = []
    for m in range(1, module.top + 1):
        total = None
        for i in range(m + 1):
            face = module.face(m, i).matrix
            term = face if i % 2 == 0 else -face
            total = term if total is None else total + term
        matrix = quotients[m - 1].project @ total @ quotients[m].section
        differentials.append(ModuleMap(quotients[m].module, quotients[m - 1].module, matrix, checkDegrees=False))
    return ChainComplex(ring, [q.module for q in quotients], differentials)


# N F Gamma on nondegenerate elements

@dataclass
class _NondegenerateLevel:
    gamma: GammaLevel
    tuples: List[Tuple[int, ...]]
    positions: Dict[Tuple[int, ...], int]
    module: BasedFreeModule


def _nondegenerateLevel(functor: FunctorTag, gammaLvl: GammaLevel) -> _NondegenerateLevel:
    m = gammaLvl.m
    full = set(range(1, m + 1))
    tuples = []
    for indexTuple in functor.indexTuples(len(gammaLvl.indices)):
        covered = set()
        for g in indexTuple:
            covered.update(gammaLvl.indices[g][1])
        if covered == full:
            tuples.append(indexTuple)
    ring = gammaLvl.module.ring
    basis = [FunctorLabel(functor.kind.value, tuple(gammaLvl.module.basis[g] for g in t)) for t in tuples]
    degrees = None
    if ring.isGraded:
        degrees = [sum(gammaLvl.module.degrees[g] for g in t) for t in tuples]
    module = BasedFreeModule(ring, basis, degrees)
    return _NondegenerateLevel(gamma=gammaLvl, tuples=tuples, positions={t: i for i, t in enumerate(tuples)}, module=module)


@dataclass
class NfgComplex:
    """N F Gamma(C) together with the nondegenerate bases used to build it."""

    functor: FunctorTag
    source: ChainComplex
    complex: ChainComplex
    levels: List[_NondegenerateLevel]


def nfgData(complex_: ChainComplex, functor: FunctorTag) -> NfgComplex:
    """
    Compute N F Gamma(C) up to level n * length, checking that level n * length + 1 vanishes.

    Raises:
        TruncationUnsound: If the level above the truncation is nonzero
    """
    ring = complex_.ring
    top = functor.n * complex_.length + 1
    gammaLevels = [gammaLevel(complex_, m) for m in range(top + 1)]
    levels = [_nondegenerateLevel(functor, g) for g in gammaLevels]
    if levels[top].tuples:
        raise TruncationUnsound(top)

    differentials = []
    for m in range(1, top):
        source, target = levels[m], levels[m - 1]
        faceColumns = [gammaFaceColumns(complex_, gammaLevels[m], gammaLevels[m - 1], i) for i in range(m + 1)]
        entries: Dict[Tuple[int, int], Any] = {}
        for column, indexTuple in enumerate(source.tuples):
            for i, columns in enumerate(faceColumns):
                sign = -1 if i % 2 else 1
                image = functor.imageOfTuple(indexTuple, lambda g: columns.get(g, {}))
                for key, value in image.items():
                    row = target.positions.get(key)
                    if row is None:
                        continue
                    entry = (row, column)
                    entries[entry] = entries.get(entry, 0) + sign * value
        matrix = SparseMatrix(ring, target.module.rank, source.module.rank, entries)
        differentials.append(ModuleMap(source.module, target.module, matrix, checkDegrees=False))

    result = ChainComplex(ring, [level.module for level in levels[:top]], differentials)
    logger.debug("N %s Gamma ranks %s", functor, result.ranks())
    return NfgComplex(functor=functor, source=complex_, complex=result, levels=levels[:top])


def nfg(complex_: ChainComplex, functor: FunctorTag) -> ChainComplex:
    return nfgData(complex_, functor).complex


def nfgGeneric(complex_: ChainComplex, functor: FunctorTag, top: Optional[int] = None) -> ChainComplex:
    """N F Gamma(C) through the levelwise functor and the generic normalization."""
    top = functor.n * complex_.length if top is None else top
    return normalize(applyFunctorLevelwise(functor, gamma(complex_, top)))


def nfgMap(alpha: ChainMap, source: NfgComplex, target: NfgComplex) -> ChainMap:
    """
    N F Gamma(alpha) for a chain map alpha: C -> C'.

    Gamma(alpha) sends GammaLabel(k, S, b) to sum_b' alpha_k[b', b] GammaLabel(k, S, b'),
    so nondegenerate elements stay nondegenerate.
    """
    functor = source.functor
    ring = alpha.source.ring
    components = {}
    for m, (sourceLevel, targetLevel) in enumerate(zip(source.levels, target.levels)):
        gammaColumns: Dict[int, Dict[int, Any]] = {}
        for position, (k, steps, j) in enumerate(sourceLevel.gamma.indices):
            column = alpha.component(k).matrix.column(j)
            gammaColumns[position] = {
                targetLevel.gamma.positions[(k, steps, row)]: value for row, value in column.items()
            }
        entries = {}
        for column, indexTuple in enumerate(sourceLevel.tuples):
            image = functor.imageOfTuple(indexTuple, lambda g: gammaColumns.get(g, {}))
            for key, value in image.items():
                entries[(targetLevel.positions[key], column)] = value
        matrix = SparseMatrix(ring, targetLevel.module.rank, sourceLevel.module.rank, entries)
        components[m] = ModuleMap(sourceLevel.module, targetLevel.module, matrix, checkDegrees=False)
    return ChainMap(source.complex, target.complex, components)
