"""
Hook Schur and coSchur modules as images of Koszul differentials of the identity.

L_k^n(V) = Im(d_{k+1}) in Kos^n(id_V), a submodule of Lambda^k(V) (x) Sym^{n-k}(V).
coL_k^n(V) = Im(d_{k+1}) in dual-Kos^n(id_V), inside D^k(V) (x) Lambda^{n-k}(V).

Kos^n(id_V) is exact, so both images are direct summands. Bases are computed
once over the integers and base-changed, which keeps them valid over every ring.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from algebra.fieldElimination import pivotColumns
from algebra.ringDescriptor import integers, rationals
from algebra.smithNormalForm import smithNormalForm
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.labels import ImageLabel
from koszul.koszulComplex import dualKoszulComplex, koszulComplex

logger = logging.getLogger(__name__)


@dataclass
class ImageModule:
    """A submodule given by an explicit basis of columns in an ambient module."""

    module: BasedFreeModule
    inclusion: ModuleMap

    @property
    def rank(self) -> int:
        return self.module.rank

    @property
    def ambient(self) -> BasedFreeModule:
        return self.inclusion.codomain


def _integral(matrix: SparseMatrix) -> SparseMatrix:
    values = {}
    for key, value in matrix.entries.items():
        integral = matrix.ring.toInteger(value)
        if integral is None:
            raise ValueError(f"Entry {key} = {value} of an identity Koszul differential is not an integer")
        values[key] = integral
    return SparseMatrix(integers(), matrix.rows, matrix.cols, values)


def imageOfDifferential(differential: ModuleMap, tag: str) -> ImageModule:
    """
    Image of an integer-valued differential with a deterministic basis.

    The pivot columns (column rank profile) are used when they span the
    integral image; otherwise the Smith form columns U_i * d_i are used.
    """
    ring = differential.ring
    integral = _integral(differential.matrix)
    pivots = pivotColumns(integral.mapEntries(Fraction, rationals())) if integral.entries else []
    selected = integral.selectColumns(pivots)
    ambient = differential.codomain
    if not pivots or smithNormalForm(selected).allUnits():
        columns = [selected.column(j) for j in range(selected.cols)]
        degrees = [differential.domain.degreeList()[p] for p in pivots]
    else:
        form = smithNormalForm(integral)
        columns = []
        for i, factor in enumerate(form.factors):
            columns.append({row: int(form.U[row, i]) * factor for row in range(integral.rows) if form.U[row, i] != 0})
        degrees = [ambient.degreeList()[min(column)] for column in columns]
    module = BasedFreeModule(ring, [ImageLabel(tag, j) for j in range(len(columns))], degrees if ring.isGraded else None)
    matrix = SparseMatrix(ring, ambient.rank, len(columns), {
        (row, j): ring.fromInt(value) for j, column in enumerate(columns) for row, value in column.items()
    })
    logger.debug("Image %s has rank %d inside rank %d", tag, len(columns), ambient.rank)
    return ImageModule(module=module, inclusion=ModuleMap(module, ambient, matrix, checkDegrees=False))


def _identityImage(complex_: ChainComplex, n: int, k: int, tag: str) -> ImageModule:
    if not 0 <= k <= n:
        raise ValueError(f"Need 0 <= k <= n, got k={k}, n={n}")
    return imageOfDifferential(complex_.differential(k + 1), tag)


def schurModule(V: BasedFreeModule, n: int, k: int) -> ImageModule:
    """L_k^n(V) as the image of d_{k+1} in Kos^n(id_V)."""
    return _identityImage(koszulComplex(ModuleMap.identity(V), n), n, k, f"L{k},{n}")


def coschurModule(V: BasedFreeModule, n: int, k: int) -> ImageModule:
    """coL_k^n(V) as the image of d_{k+1} in dual-Kos^n(id_V)."""
    return _identityImage(dualKoszulComplex(ModuleMap.identity(V), n), n, k, f"coL{k},{n}")
