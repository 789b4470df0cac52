"""Koszul module: Koszul complexes, Schur modules, resolutions and homology witnesses."""

from koszul.koszulComplex import dualKoszulComplex, koszulComplex, koszulMap
from koszul.schurModules import ImageModule, coschurModule, imageOfDifferential, schurModule
from koszul.resolutions import (
    COMPLETE_INTERSECTION, PRINCIPAL, ConormalData, ResolutionData, conormalFor, koszulOnGenerators,
    quotientHilbertFunction, resolutionFor, verifyResolution,
)
from koszul.witnesses import WitnessDatum, hookData, thm32Witness, witnessIsBoundary, witnessesGenerateHomology

__all__ = [
    "dualKoszulComplex", "koszulComplex", "koszulMap", "ImageModule", "coschurModule", "imageOfDifferential", "schurModule",
    "COMPLETE_INTERSECTION", "PRINCIPAL", "ConormalData", "ResolutionData", "conormalFor", "koszulOnGenerators",
    "quotientHilbertFunction", "resolutionFor", "verifyResolution", "WitnessDatum", "hookData", "thm32Witness",
    "witnessIsBoundary", "witnessesGenerateHomology",
]
