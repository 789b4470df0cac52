"""Exact algebra module: rings, sparse matrices, Smith form, elimination and graded slices."""

from algebra.ringDescriptor import RingDescriptor, RingKind, integers, integersMod, rationals, gradedPoly
from algebra.sparseMatrix import SparseMatrix, hstack, vstack, blockDiagonal, kronecker
from algebra.smithNormalForm import SmithForm, smithNormalForm, integerKernelBasis, integerImageContains, isUnimodular
from algebra.fieldElimination import Echelon, rowReduce, fieldRank, fieldKernelBasis, fieldImageContains, rankFactorization
from algebra.gradedSlice import gradedSlice, monomialCount, monomialsOfDegree, sliceDimension, sliceVector
from algebra.linearAlgebra import SplitImage, imageContains, isInvertible, kernelBasis, matrixRank, splitImage

__all__ = [
    "RingDescriptor", "RingKind", "integers", "integersMod", "rationals", "gradedPoly",
    "SparseMatrix", "hstack", "vstack", "blockDiagonal", "kronecker",
    "SmithForm", "smithNormalForm", "integerKernelBasis", "integerImageContains", "isUnimodular",
    "Echelon", "rowReduce", "fieldRank", "fieldKernelBasis", "fieldImageContains", "rankFactorization",
    "gradedSlice", "monomialCount", "monomialsOfDegree", "sliceDimension", "sliceVector",
    "SplitImage", "imageContains", "isInvertible", "kernelBasis", "matrixRank", "splitImage",
]
