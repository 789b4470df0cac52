"""
Basis labels for based free modules.

Labels are immutable and hashable; modules compare their bases label by label.
"""

from dataclasses import dataclass
from typing import Any, Tuple


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FunctorLabel:
    """Basis element of F(V): kind is one of T, S, L, D (tensor, symmetric, exterior, divided)."""

    kind: str
    parts: Tuple[Any, ...]

    def __str__(self) -> str:
        if not self.parts:
            return "1"
        joiner = {"T": "(x)", "S": ".", "L": "^", "D": "*"}[self.kind]
        body = joiner.join(str(p) for p in self.parts)
        return f"[{body}]" if self.kind != "D" else f"g[{body}]"


@dataclass(frozen=True)
class SumLabel:
    """Basis element of the index-th summand of a direct sum."""

    index: Any
    label: Any

    def __str__(self) -> str:
        return f"{self.label}@{self.index}"


@dataclass(frozen=True)
class PairLabel:
    """Basis element left (x) right of a tensor product."""

    left: Any
    right: Any

    def __str__(self) -> str:
        return f"{self.left}(x){self.right}"


@dataclass(frozen=True)
class GammaLabel:
    """Summand C_k indexed by a surjection [m] -> [k], encoded by its step set."""

    k: int
    steps: Tuple[int, ...]
    label: Any

    def __str__(self) -> str:
        steps = ",".join(str(s) for s in self.steps)
        return f"<{self.k}|{steps}|{self.label}>"


@dataclass(frozen=True)
class ImageLabel:
    """Generator of a split image that is not a coordinate vector."""

    tag: str
    index: int

    def __str__(self) -> str:
        return f"{self.tag}#{self.index}"
