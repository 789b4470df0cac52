"""Cross effects module: cr_k of polynomial functors, decompositions, diagonal and plus maps."""

from crossEffects.crossEffect import (
    CrossEffect, Decomposition, crossEffect, crossEffectMap, decompose, functorDegreeCheck, hasExactDegree,
    symmetricAction,
)
from crossEffects.diagonalPlus import (
    compositions, diagonalBlock, diagonalMap, diagonalMapsBijective, plusAfterDiagonal, plusAfterDiagonalExpected,
    plusBlock, plusMap, plusMapsBijective, symCrossEffectRank, vanishesBelowDegree,
)

__all__ = [
    "CrossEffect", "Decomposition", "crossEffect", "crossEffectMap", "decompose", "functorDegreeCheck",
    "hasExactDegree", "symmetricAction", "compositions", "diagonalBlock", "diagonalMap", "diagonalMapsBijective",
    "plusAfterDiagonal", "plusAfterDiagonalExpected", "plusBlock", "plusMap", "plusMapsBijective",
    "symCrossEffectRank", "vanishesBelowDegree",
]
