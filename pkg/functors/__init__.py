"""Functors module: based free modules, maps, direct sums, tensor products and polynomial functors."""

from functors.labels import Atom, FunctorLabel, GammaLabel, ImageLabel, PairLabel, SumLabel
from functors.basedModule import (
    BasedFreeModule, DirectSum, ModuleMap, blockMatrixMap, directSum, directSumMap,
    tensorProduct, tensorProductMap,
)
from functors.functorTags import Div, Ext, FunctorKind, FunctorTag, Sym, Tensor, parseFunctorTag
from functors.abwSequence import AbwSequence, abwSequence

__all__ = [
    "Atom", "FunctorLabel", "GammaLabel", "ImageLabel", "PairLabel", "SumLabel",
    "BasedFreeModule", "DirectSum", "ModuleMap", "blockMatrixMap", "directSum", "directSumMap",
    "tensorProduct", "tensorProductMap",
    "Div", "Ext", "FunctorKind", "FunctorTag", "Sym", "Tensor", "parseFunctorTag",
    "AbwSequence", "abwSequence",
]
