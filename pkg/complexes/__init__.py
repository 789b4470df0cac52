"""Complexes module: chain complexes, homology, Euler classes and symmetric group actions."""

from complexes.chainComplex import (
    ChainComplex, ChainMap, complexFromMap, makeComplex, mappingCone, moduleInDegree, shift, totalTensor,
)
from complexes.homology import DegreeHomology, HomologyDescriptor, homology, isQuasiIsomorphism
from complexes.eulerClass import LaurentClass, eulerClass, sigmaOfClass

__all__ = [
    "ChainComplex", "ChainMap", "complexFromMap", "makeComplex", "mappingCone", "moduleInDegree", "shift",
    "totalTensor", "DegreeHomology", "HomologyDescriptor", "homology", "isQuasiIsomorphism",
    "LaurentClass", "eulerClass", "sigmaOfClass",
]
