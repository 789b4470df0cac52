"""
Euler classes of graded complexes in Z[T, T^-1] and the sigma operations on them.

The class of a graded free module is the sum of T^{a_j} over its generator
degrees; the Euler class of a complex is the alternating sum over homological
degrees. Adams operations act by T -> T^n, and sigma_n comes from the Newton
recursion h_n = (1/n) sum_{k=1..n} p_k h_{n-k}.
"""

from fractions import Fraction
from typing import Dict, Iterable, Optional

from algebra.gradedSlice import monomialCount
from complexes.chainComplex import ChainComplex
from complexes.homology import HomologyDescriptor


class LaurentClass:
    """Integer Laurent polynomial stored as {exponent: coefficient}."""

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        self.terms: Dict[int, int] = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, value: int) -> "LaurentClass":
        return cls({0: value})

    @classmethod
    def fromDegrees(cls, degrees: Iterable[int], sign: int = 1) -> "LaurentClass":
        terms: Dict[int, int] = {}
        for d in degrees:
            terms[d] = terms.get(d, 0) + sign
        return cls(terms)

    def __add__(self, other: "LaurentClass") -> "LaurentClass":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentClass(terms)

    def __neg__(self) -> "LaurentClass":
        return LaurentClass({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentClass") -> "LaurentClass":
        return self + (-other)

    def __mul__(self, other: "LaurentClass") -> "LaurentClass":
        terms: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentClass(terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentClass) and self.terms == other.terms

    __hash__ = None

    def adams(self, n: int) -> "LaurentClass":
        return LaurentClass({n * e: c for e, c in self.terms.items()})

    def coefficient(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    def asDict(self) -> Dict[str, int]:
        return {str(e): c for e, c in sorted(self.terms.items())}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*T^{e}" for e, c in sorted(self.terms.items()))


def eulerClass(complex_: ChainComplex) -> LaurentClass:
    """Sum over k of (-1)^k times the class of C_k."""
    total = LaurentClass()
    for k, module in enumerate(complex_.modules):
        total = total + LaurentClass.fromDegrees(module.degreeList(), -1 if k % 2 else 1)
    return total


def sigmaOfClass(n: int, value: LaurentClass) -> LaurentClass:
    """
    sigma_n of a Laurent class via h_n = (1/n) sum_{k=1..n} psi^k(x) h_{n-k}.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    h = [LaurentClass.constant(1)]
    for m in range(1, n + 1):
        accumulator: Dict[int, Fraction] = {}
        for k in range(1, m + 1):
            product = value.adams(k) * h[m - k]
            for e, c in product.terms.items():
                accumulator[e] = accumulator.get(e, Fraction(0)) + c
        terms = {}
        for e, c in accumulator.items():
            quotient = c / m
            if quotient.denominator != 1:
                raise ArithmeticError(f"Non-integral coefficient {quotient} in sigma_{m}")
            terms[e] = int(quotient)
        h.append(LaurentClass(terms))
    return h[n]


def lambdaOfClass(n: int, value: LaurentClass) -> LaurentClass:
    """lambda_n via e_n = (1/n) sum_{k=1..n} (-1)^{k-1} psi^k(x) e_{n-k}."""
    e = [LaurentClass.constant(1)]
    for m in range(1, n + 1):
        accumulator: Dict[int, Fraction] = {}
        for k in range(1, m + 1):
            sign = 1 if k % 2 else -1
            product = value.adams(k) * e[m - k]
            for exponent, c in product.terms.items():
                accumulator[exponent] = accumulator.get(exponent, Fraction(0)) + sign * c
        terms = {}
        for exponent, c in accumulator.items():
            quotient = c / m
            if quotient.denominator != 1:
                raise ArithmeticError(f"Non-integral coefficient {quotient} in lambda_{m}")
            terms[exponent] = int(quotient)
        e.append(LaurentClass(terms))
    return e[n]


def homologyClass(descriptor: HomologyDescriptor) -> LaurentClass:
    """Alternating sum of the Hilbert functions (or ranks) of the homology."""
    total = LaurentClass()
    for k, degreeHomology in descriptor.degrees.items():
        sign = -1 if k % 2 else 1
        if degreeHomology.hilbert is not None:
            total = total + LaurentClass({t: sign * v for t, v in degreeHomology.hilbert.items()})
        elif degreeHomology.dimension is not None:
            total = total + LaurentClass.constant(sign * degreeHomology.dimension)
        else:
            total = total + LaurentClass.constant(sign * degreeHomology.freeRank)
    return total


def eulerAgreesWithHomology(complex_: ChainComplex, descriptor: HomologyDescriptor) -> bool:
    """
    Check that the Euler class matches the homology.

    Ungraded: chi = sum (-1)^k rank H_k. Graded: the coefficients of
    euler(C) / (1 - T)^s agree with the homology class for t <= window.
    """
    if not complex_.isGraded:
        return eulerClass(complex_).coefficient(0) == homologyClass(descriptor).coefficient(0)
    window = descriptor.window
    s = complex_.ring.variableCount
    euler = eulerClass(complex_)
    observed = homologyClass(descriptor)
    for t in range(window + 1):
        expected = sum(c * monomialCount(s, t - e) for e, c in euler.terms.items())
        if expected != observed.coefficient(t):
            return False
    return True
