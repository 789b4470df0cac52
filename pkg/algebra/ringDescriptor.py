"""
Ring descriptors and exact scalar arithmetic.

Supported rings:
- Integers (Python int)
- IntegersMod(m) (int reduced into [0, m))
- Rationals (fractions.Fraction)
- GradedPoly(base, variables) over Rationals or IntegersMod(p), p prime,
  every variable of internal degree 1 (sympy PolyElement values)
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Sequence, Tuple

import sympy
from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.rings import ring as polyRingFactory

from utils.errors import NonFieldRing, NotDivisible


class RingKind(str, Enum):
    """Kinds of coefficient rings."""
    INTEGERS = "integers"
    INTEGERS_MOD = "integers_mod"
    RATIONALS = "rationals"
    GRADED_POLY = "graded_poly"


class RingDescriptor:
    """Describes a supported coefficient ring and performs its arithmetic."""

    def __init__(
        self,
        kind: RingKind,
        modulus: Optional[int] = None,
        base: Optional["RingDescriptor"] = None,
        variables: Sequence[str] = ()
    ):
        """
        Initialize a ring descriptor. Prefer the factory functions below.

        Args:
            kind: Ring kind
            modulus: Modulus for IntegersMod
            base: Base field for GradedPoly
            variables: Variable names for GradedPoly
        """
        self.kind = RingKind(kind)
        self.modulus = modulus
        self.base = base
        self.variables: Tuple[str, ...] = tuple(variables)
        self.polyRing = None
        self.generators: Tuple[Any, ...] = ()

        if self.kind == RingKind.INTEGERS_MOD:
            if modulus is None or modulus < 2:
                raise ValueError(f"IntegersMod needs modulus >= 2, got {modulus}")
        if self.kind == RingKind.GRADED_POLY:
            if base is None or not base.isField or base.isGraded:
                raise ValueError("GradedPoly base must be Rationals or IntegersMod(p), p prime")
            if not self.variables:
                raise ValueError("GradedPoly needs at least one variable")
            if len(set(self.variables)) != len(self.variables):
                raise ValueError(f"Variable names must be distinct: {self.variables}")
            domain = QQ if base.kind == RingKind.RATIONALS else GF(base.modulus)
            polyRing, *gens = polyRingFactory(",".join(self.variables), domain)
            self.polyRing = polyRing
            self.generators = tuple(gens)

    # Identity

    def key(self) -> tuple:
        baseKey = self.base.key() if self.base is not None else None
        return (self.kind.value, self.modulus, baseKey, self.variables)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingDescriptor) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    @property
    def name(self) -> str:
        if self.kind == RingKind.INTEGERS:
            return "Z"
        if self.kind == RingKind.RATIONALS:
            return "Q"
        if self.kind == RingKind.INTEGERS_MOD:
            return f"Z/{self.modulus}"
        return f"{self.base.name}[{','.join(self.variables)}]"

    def __repr__(self) -> str:
        return f"RingDescriptor({self.name})"

    # Classification

    @property
    def isField(self) -> bool:
        if self.kind == RingKind.RATIONALS:
            return True
        if self.kind == RingKind.INTEGERS_MOD:
            return bool(isprime(self.modulus))
        return False

    @property
    def isGraded(self) -> bool:
        return self.kind == RingKind.GRADED_POLY

    @property
    def isIntegers(self) -> bool:
        return self.kind == RingKind.INTEGERS

    @property
    def characteristic(self) -> int:
        if self.kind == RingKind.INTEGERS_MOD:
            return self.modulus
        if self.isGraded:
            return self.base.characteristic
        return 0

    @property
    def variableCount(self) -> int:
        return len(self.variables)

    def baseField(self) -> "RingDescriptor":
        """Return the ring that graded slices are computed over."""
        return self.base if self.isGraded else self

    # Arithmetic

    def zero(self) -> Any:
        return self.fromInt(0)

    def one(self) -> Any:
        return self.fromInt(1)

    def fromInt(self, value: int) -> Any:
        if self.kind == RingKind.INTEGERS:
            return int(value)
        if self.kind == RingKind.INTEGERS_MOD:
            return int(value) % self.modulus
        if self.kind == RingKind.RATIONALS:
            return Fraction(int(value))
        return self.polyRing(int(value))

    def reduce(self, value: Any) -> Any:
        """Bring a value produced by native operators into canonical form."""
        if self.kind == RingKind.INTEGERS_MOD:
            return value % self.modulus
        return value

    def isZero(self, value: Any) -> bool:
        return value == 0

    def add(self, a: Any, b: Any) -> Any:
        return self.reduce(a + b)

    def sub(self, a: Any, b: Any) -> Any:
        return self.reduce(a - b)

    def mul(self, a: Any, b: Any) -> Any:
        return self.reduce(a * b)

    def neg(self, a: Any) -> Any:
        return self.reduce(-a)

    def inverse(self, a: Any) -> Any:
        if not self.isField:
            raise NonFieldRing(self.name)
        if a == 0:
            raise ZeroDivisionError("Inverse of zero")
        if self.kind == RingKind.RATIONALS:
            return 1 / Fraction(a)
        return pow(int(a), -1, self.modulus)

    def exactQuotient(self, a: Any, b: Any) -> Any:
        """
        Return q with a = q * b.

        Raises:
            NotDivisible: If b does not divide a
        """
        if b == 0:
            if a == 0:
                return self.zero()
            raise NotDivisible(f"{a} is not divisible by 0 in {self.name}")
        if self.kind == RingKind.INTEGERS:
            q, r = divmod(a, b)
            if r != 0:
                raise NotDivisible(f"{a} is not divisible by {b} in Z")
            return q
        if self.isField:
            return self.mul(a, self.inverse(b))
        if self.kind == RingKind.INTEGERS_MOD:
            for q in range(self.modulus):
                if (q * b - a) % self.modulus == 0:
                    return q
            raise NotDivisible(f"{a} is not divisible by {b} in {self.name}")
        try:
            return a.exquo(b)
        except Exception as e:
            raise NotDivisible(f"{a} is not divisible by {b} in {self.name}") from e

    def divides(self, b: Any, a: Any) -> bool:
        try:
            self.exactQuotient(a, b)
            return True
        except NotDivisible:
            return False

    # Graded helpers

    def degreeOf(self, value: Any) -> Optional[int]:
        """Return the internal degree of a homogeneous value, None otherwise (or if zero)."""
        if value == 0:
            return None
        if not self.isGraded:
            return 0
        degrees = {sum(monom) for monom in value.monoms()}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def toBase(self, coefficient: Any) -> Any:
        """Convert a sympy ground coefficient into a base-field scalar."""
        if self.base.kind == RingKind.RATIONALS:
            return Fraction(int(coefficient.numerator), int(coefficient.denominator))
        return int(coefficient) % self.base.modulus

    def fromBase(self, scalar: Any) -> Any:
        """Embed a base-field scalar as a constant polynomial."""
        if self.base.kind == RingKind.RATIONALS:
            value = Fraction(scalar)
            return self.polyRing(QQ(value.numerator, value.denominator))
        return self.polyRing(int(scalar) % self.base.modulus)

    def toInteger(self, value: Any) -> Optional[int]:
        """Return value as an int if it is an integral constant, else None."""
        if self.kind in (RingKind.INTEGERS, RingKind.INTEGERS_MOD):
            return int(value)
        if self.kind == RingKind.RATIONALS:
            return int(value) if Fraction(value).denominator == 1 else None
        if value == 0:
            return 0
        terms = value.terms()
        if len(terms) != 1 or any(terms[0][0]):
            return None
        coefficient = self.toBase(terms[0][1])
        if self.base.kind == RingKind.RATIONALS:
            return int(coefficient) if coefficient.denominator == 1 else None
        return int(coefficient)

    def convertScalar(self, value: Any, source: "RingDescriptor") -> Any:
        """Map a scalar from another supported ring (Z, Q, Z/m) into this ring."""
        if source == self:
            return value
        if source.isGraded:
            integral = source.toInteger(value)
            if integral is None:
                raise ValueError(f"Cannot convert {value} from {source.name} to {self.name}")
            return self.fromInt(integral)
        if isinstance(value, Fraction) and value.denominator != 1:
            if self.kind == RingKind.RATIONALS:
                return value
            if self.isGraded and self.base.kind == RingKind.RATIONALS:
                return self.fromBase(value)
            raise ValueError(f"Cannot convert {value} to {self.name}")
        return self.fromInt(int(value))

    # Parsing and formatting

    def parse(self, text: str) -> Any:
        """Parse a scalar or polynomial from text."""
        if self.kind == RingKind.INTEGERS:
            return int(text)
        if self.kind == RingKind.INTEGERS_MOD:
            return int(text) % self.modulus
        if self.kind == RingKind.RATIONALS:
            return Fraction(text)
        return self.polyRing.from_expr(sympy.sympify(text))

    def format(self, value: Any) -> str:
        return str(value)


def integers() -> RingDescriptor:
    return RingDescriptor(RingKind.INTEGERS)


def rationals() -> RingDescriptor:
    return RingDescriptor(RingKind.RATIONALS)


def integersMod(modulus: int) -> RingDescriptor:
    return RingDescriptor(RingKind.INTEGERS_MOD, modulus=modulus)


def gradedPoly(base: RingDescriptor, variables: Sequence[str]) -> RingDescriptor:
    return RingDescriptor(RingKind.GRADED_POLY, base=base, variables=variables)
