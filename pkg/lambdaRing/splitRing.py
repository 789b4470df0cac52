"""
Split-variable rings for lambda-ring computations.

A class C of lambda-degree d is modelled as u_1 + .. + u_d, and an arbitrary
class x as t_1 + .. + t_N (a second class y as s_1 + .. + s_M). Elements are
integer polynomials in these line variables; an integer combination of
monomials is read as a virtual sum of line classes.
"""

from typing import Any, Dict, List, Sequence, Tuple

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring as polyRingFactory

from utils.errors import NotSplitForm

Monomial = Tuple[int, ...]


class SplitRing:
    """Z[u_1..u_d, t_1..t_N, s_1..s_M] with the three line groups recorded."""

    def __init__(self, d: int, N: int, M: int = 0):
        if d < 0 or N < 0 or M < 0:
            raise ValueError(f"Line counts must be non-negative, got d={d}, N={N}, M={M}")
        self.d = d
        self.N = N
        self.M = M
        self.names: List[str] = (
            [f"u{i}" for i in range(1, d + 1)]
            + [f"t{i}" for i in range(1, N + 1)]
            + [f"s{i}" for i in range(1, M + 1)]
        )
        if not self.names:
            self.names = ["z"]
        polyRing, *gens = polyRingFactory(",".join(self.names), ZZ)
        self.polyRing = polyRing
        self.gens = tuple(gens)

    def __repr__(self) -> str:
        return f"SplitRing(d={self.d}, N={self.N}, M={self.M})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SplitRing) and (self.d, self.N, self.M) == (other.d, other.N, other.M)

    def __hash__(self) -> int:
        return hash((self.d, self.N, self.M))

    @property
    def groups(self) -> List[Tuple[int, ...]]:
        """Variable positions of the u, t and s groups."""
        return [
            tuple(range(0, self.d)),
            tuple(range(self.d, self.d + self.N)),
            tuple(range(self.d + self.N, self.d + self.N + self.M)),
        ]

    def _sumOf(self, positions: Sequence[int]) -> "LambdaElement":
        poly = self.polyRing.zero
        for i in positions:
            poly = poly + self.gens[i]
        return LambdaElement(self, poly)

    def conormalClass(self) -> "LambdaElement":
        return self._sumOf(self.groups[0])

    def xClass(self) -> "LambdaElement":
        return self._sumOf(self.groups[1])

    def yClass(self) -> "LambdaElement":
        return self._sumOf(self.groups[2])

    def one(self) -> "LambdaElement":
        return LambdaElement(self, self.polyRing.one)

    def zero(self) -> "LambdaElement":
        return LambdaElement(self, self.polyRing.zero)

    def constant(self, value: int) -> "LambdaElement":
        return LambdaElement(self, self.polyRing(int(value)))

    def monomial(self, exponents: Monomial) -> "LambdaElement":
        return LambdaElement(self, self.polyRing({tuple(exponents): 1}))

    def fromExpr(self, text: str) -> "LambdaElement":
        """
        Parse an element from a sympy expression string.

        Raises:
            NotSplitForm: If the expression is not an integer polynomial in the line variables
        """
        try:
            poly = self.polyRing.from_expr(sympy.sympify(text))
        except (sympy.SympifyError, CoercionFailed, ValueError, TypeError) as e:
            raise NotSplitForm(f"Cannot read {text!r} as an integer polynomial in {self.names}") from e
        return LambdaElement(self, poly)


class LambdaElement:
    """An integer polynomial in the line variables of a SplitRing."""

    def __init__(self, ring: SplitRing, poly: Any):
        self.ring = ring
        self.poly = poly

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, LambdaElement):
            if other.ring != self.ring:
                raise NotSplitForm(f"Elements of {self.ring} and {other.ring} cannot be combined")
            return other.poly
        if isinstance(other, int):
            return self.ring.polyRing(other)
        raise NotSplitForm(f"{other!r} is not an element of {self.ring}")

    def __add__(self, other: Any) -> "LambdaElement":
        return LambdaElement(self.ring, self.poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "LambdaElement":
        return LambdaElement(self.ring, self.poly - self._coerce(other))

    def __rsub__(self, other: Any) -> "LambdaElement":
        return LambdaElement(self.ring, self._coerce(other) - self.poly)

    def __neg__(self) -> "LambdaElement":
        return LambdaElement(self.ring, -self.poly)

    def __mul__(self, other: Any) -> "LambdaElement":
        return LambdaElement(self.ring, self.poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LambdaElement":
        return LambdaElement(self.ring, self.poly ** exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LambdaElement, int)):
            return self.poly == self._coerce(other)
        return NotImplemented

    __hash__ = None

    def isZero(self) -> bool:
        return self.poly == 0

    def lines(self) -> List[Tuple[Monomial, int]]:
        """The split form as (line monomial, multiplicity) pairs, multiplicities possibly negative."""
        return [(tuple(monom), int(coefficient)) for monom, coefficient in self.poly.terms()]

    def linePower(self, monom: Monomial, k: int) -> Any:
        return self.ring.polyRing({tuple(e * k for e in monom): 1})

    def relabel(self, mapping: Dict[int, int]) -> "LambdaElement":
        """Move the exponent of variable i to variable mapping[i]."""
        terms = {}
        for monom, coefficient in self.poly.terms():
            moved = [0] * len(monom)
            for i, e in enumerate(monom):
                moved[mapping.get(i, i)] = e
            terms[tuple(moved)] = coefficient
        return LambdaElement(self.ring, self.ring.polyRing(terms))

    def groupGenerators(self) -> List[Dict[int, int]]:
        """A transposition and a full cycle per group of two or more variables."""
        generators = []
        for group in self.ring.groups:
            if len(group) < 2:
                continue
            generators.append({group[0]: group[1], group[1]: group[0]})
            generators.append({v: group[(i + 1) % len(group)] for i, v in enumerate(group)})
        return generators

    def isSymmetric(self) -> bool:
        """Invariant under permuting the u's, the t's and the s's separately."""
        return all(self.relabel(mapping) == self for mapping in self.groupGenerators())

    def substitute(self, values: Dict[str, int]) -> "LambdaElement":
        """Replace the named variables by integers (e.g. u1 -> 1 for a trivial line)."""
        pairs = [(self.ring.gens[self.ring.names.index(name)], value) for name, value in values.items()]
        return LambdaElement(self.ring, self.poly.subs(pairs) if pairs else self.poly)

    def evaluate(self, values: Dict[str, int]) -> int:
        """Integer value at a full assignment; unnamed variables default to 1."""
        total = 0
        for monom, coefficient in self.poly.terms():
            term = int(coefficient)
            for name, e in zip(self.ring.names, monom):
                term = term * values.get(name, 1) ** e
            total += term
        return total

    def rankAtOnes(self) -> int:
        """Specialize every line to 1: the rank of the represented module."""
        return self.evaluate({})

    def __repr__(self) -> str:
        return f"LambdaElement({self.poly.as_expr()})"

    def __str__(self) -> str:
        return str(self.poly.as_expr())

