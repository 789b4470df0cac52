"""Simplicial module: Gamma, normalization, N F Gamma, the cross-effect fast path and u^n(f)."""

from simplicial.simplicialModule import (
    IdentityCheck, TruncatedSimplicialModule, applyFunctorLevelwise, checkSimplicialIdentities,
    requireSimplicialIdentities,
)
from simplicial.gammaFunctor import gamma, gammaLevel, stepSets
from simplicial.normalization import NfgComplex, nfg, nfgData, nfgGeneric, nfgMap, normalize
from simplicial.lemma22 import Lemma22Comparison, compareWithNfg, lemma22Complex, lemma22Data
from simplicial.comparisonMap import comparisonIsQuasiIsomorphism, comparisonU

__all__ = [
    "IdentityCheck", "TruncatedSimplicialModule", "applyFunctorLevelwise", "checkSimplicialIdentities",
    "requireSimplicialIdentities", "gamma", "gammaLevel", "stepSets", "NfgComplex", "nfg", "nfgData",
    "nfgGeneric", "nfgMap", "normalize", "Lemma22Comparison", "compareWithNfg", "lemma22Complex", "lemma22Data",
    "comparisonIsQuasiIsomorphism", "comparisonU",
]
