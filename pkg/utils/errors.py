"""
Exception hierarchy for the Koszul homology workbench.

Every error raised by the library derives from KhlError so callers can
catch the whole family with a single except clause.
"""

from typing import Optional


class KhlError(Exception):
    """Base class for all workbench errors."""


# Exact algebra

class AlgebraError(KhlError):
    """Errors raised by scalar and matrix kernels."""


class NonFieldRing(AlgebraError):
    """A field-only operation was requested over a non-field ring."""

    def __init__(self, ringName: str):
        self.ringName = ringName
        super().__init__(f"Operation requires a field, got {ringName}")


class NonHomogeneousEntry(AlgebraError):
    """A graded matrix entry does not have the degree forced by its row and column."""

    def __init__(self, row: int, col: int, expected: int):
        self.row = row
        self.col = col
        self.expected = expected
        super().__init__(
            f"Entry ({row}, {col}) is not homogeneous of degree {expected}"
        )


class MixedRings(AlgebraError):
    """Operands live over different rings."""


class NotDivisible(AlgebraError):
    """An exact division left a remainder."""


# Complexes

class ComplexError(KhlError):
    """Errors raised while building or measuring chain complexes."""


class NotAComplex(ComplexError):
    """d_k composed with d_{k+1} is not zero."""

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"d_{degree} o d_{degree + 1} != 0")


class WindowRequired(ComplexError):
    """Graded homology was requested without a degree window."""

    def __init__(self):
        super().__init__("Graded homology needs an internal degree window")


class NonFieldCoefficients(ComplexError):
    """Characters on homology need field (or graded-over-field) coefficients."""

    def __init__(self, ringName: str):
        self.ringName = ringName
        super().__init__(
            f"Characters need field coefficients, got {ringName}; "
            "compare invariant factors instead"
        )


class NotChainMap(ComplexError):
    """A family of maps does not commute with the differentials."""

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"Map does not commute with differentials at degree {degree}")


class NotACycle(ComplexError):
    """An element expected to be a cycle has nonzero boundary."""


# Simplicial

class SimplicialError(KhlError):
    """Errors raised by the Dold-Kan machinery."""


class DegeneracySpanNotSplit(SimplicialError):
    """The span of degeneracy images is not a direct summand."""

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"Degeneracy span at level {level} is not a direct summand")


class TruncationUnsound(SimplicialError):
    """The normalized module at the truncation level is nonzero."""

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"Normalized level {level} is nonzero; truncation too short")


class SimplicialIdentityViolation(SimplicialError):
    """A face/degeneracy identity fails."""

    def __init__(self, identity: str, level: int):
        self.identity = identity
        self.level = level
        super().__init__(f"Simplicial identity {identity} fails at level {level}")


# Cross effects

class CrossEffectError(KhlError):
    """Errors raised by cross-effect constructions."""


class NotSplitImage(CrossEffectError):
    """The image of an idempotent operator is not a direct summand."""


# Koszul

class KoszulError(KhlError):
    """Errors raised by Koszul and resolution constructions."""


class UnsupportedIdeal(KoszulError):
    """No resolution recipe exists for the requested ideal."""


class LiftFailure(KoszulError):
    """A witness datum has no recorded lift or a scalar lies outside the ideal."""


# Lambda rings

class LambdaError(KhlError):
    """Errors raised by the split lambda-ring engine."""


class NotSplitForm(LambdaError):
    """An element is not an integer combination of line monomials."""


# Harness

class HarnessError(KhlError):
    """Errors raised while reading scenarios or writing reports."""


class ParseError(HarnessError):
    """A scenario file is malformed."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")


class ValidationError(HarnessError):
    """A scenario is well-formed but misses or misuses a parameter."""

    def __init__(self, parameter: str, message: str):
        self.parameter = parameter
        super().__init__(f"{parameter}: {message}")


class IoError(HarnessError):
    """A report could not be written."""

    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"Cannot write {path}: {reason}")
