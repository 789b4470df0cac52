"""
Truncated simplicial modules and the simplicial identities.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.ringDescriptor import RingDescriptor
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.functorTags import FunctorTag
from utils.errors import SimplicialIdentityViolation

logger = logging.getLogger(__name__)


@dataclass
class TruncatedSimplicialModule:
    """
    Levels X_0..X_L with faces d_i: X_m -> X_{m-1} (0 <= i <= m) and
    degeneracies s_i: X_m -> X_{m+1} (0 <= i <= m).
    """

    ring: RingDescriptor
    levels: List[BasedFreeModule]
    faces: Dict[Tuple[int, int], ModuleMap] = field(default_factory=dict)
    degeneracies: Dict[Tuple[int, int], ModuleMap] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def face(self, m: int, i: int) -> ModuleMap:
        return self.faces[(m, i)]

    def degeneracy(self, m: int, i: int) -> ModuleMap:
        return self.degeneracies[(m, i)]


@dataclass
class IdentityCheck:
    passed: bool
    identity: Optional[str] = None
    level: Optional[int] = None


def checkSimplicialIdentities(module: TruncatedSimplicialModule) -> IdentityCheck:
    """
    Check the face/degeneracy identities on every level where both sides exist.

    - d_i d_j = d_{j-1} d_i for i < j
    - d_i s_j = s_{j-1} d_i for i < j
    - d_j s_j = d_{j+1} s_j = id
    - d_i s_j = s_j d_{i-1} for i > j + 1
    - s_i s_j = s_{j+1} s_i for i <= j
    """
    top = module.top
    for m in range(2, top + 1):
        for j in range(m + 1):
            for i in range(j):
                left = module.face(m - 1, i).compose(module.face(m, j))
                right = module.face(m - 1, j - 1).compose(module.face(m, i))
                if not left.equals(right):
                    return IdentityCheck(False, f"d_{i} d_{j} = d_{j - 1} d_{i}", m)
    for m in range(0, top):
        identity = ModuleMap.identity(module.levels[m])
        for j in range(m + 1):
            s = module.degeneracy(m, j)
            for i in range(m + 2):
                composite = module.face(m + 1, i).compose(s)
                if i < j:
                    expected = module.degeneracy(m - 1, j - 1).compose(module.face(m, i))
                    name = f"d_{i} s_{j} = s_{j - 1} d_{i}"
                elif i in (j, j + 1):
                    expected = identity
                    name = f"d_{i} s_{j} = id"
                else:
                    expected = module.degeneracy(m - 1, j).compose(module.face(m, i - 1))
                    name = f"d_{i} s_{j} = s_{j} d_{i - 1}"
                if not composite.equals(expected):
                    return IdentityCheck(False, name, m + 1)
    for m in range(0, top - 1):
        for j in range(m + 1):
            for i in range(j + 1):
                left = module.degeneracy(m + 1, i).compose(module.degeneracy(m, j))
                right = module.degeneracy(m + 1, j + 1).compose(module.degeneracy(m, i))
                if not left.equals(right):
                    return IdentityCheck(False, f"s_{i} s_{j} = s_{j + 1} s_{i}", m + 2)
    return IdentityCheck(True)


def requireSimplicialIdentities(module: TruncatedSimplicialModule) -> None:
    """
    Raises:
        SimplicialIdentityViolation: On the first failing identity
    """
    result = checkSimplicialIdentities(module)
    if not result.passed:
        raise SimplicialIdentityViolation(result.identity, result.level)


def applyFunctorLevelwise(functor: FunctorTag, module: TruncatedSimplicialModule) -> TruncatedSimplicialModule:
    """F(X): levels F(X_m), faces F(d_i), degeneracies F(s_i)."""
    levels = [functor.applyObject(level) for level in module.levels]
    faces = {
        key: functor.applyMap(d, levels[key[0]], levels[key[0] - 1])
        for key, d in module.faces.items()
    }
    degeneracies = {
        key: functor.applyMap(s, levels[key[0]], levels[key[0] + 1])
        for key, s in module.degeneracies.items()
    }
    logger.debug("Applied %s levelwise: ranks %s", functor, [l.rank for l in levels])
    return TruncatedSimplicialModule(module.ring, levels, faces, degeneracies)
