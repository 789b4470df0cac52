"""
Lambda operations on split elements.

lambda_t(e) = prod over lines m of multiplicity c of (1 + m t)^c, read off
coefficient by coefficient (c < 0 gives the virtual inverse). sigma_n follows
the recursion sigma_n = sum_{i=1..n} (-1)^{i-1} lambda_i sigma_{n-i}; Adams
operations are power sums, cross-checked against the Newton polynomial.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import sympy
from sympy.polys.polyerrors import ExactQuotientFailed

from lambdaRing.splitRing import LambdaElement
from utils.errors import NotDivisible, NotSplitForm

logger = logging.getLogger(__name__)


def _binomial(c: int, k: int) -> int:
    """Generalized binomial coefficient c(c-1)..(c-k+1)/k!, valid for negative c."""
    return int(sympy.ff(c, k)) // int(sympy.factorial(k))


def _truncatedProduct(left: List[Any], right: List[Any], top: int, zero: Any) -> List[Any]:
    result = [zero] * (top + 1)
    for i, a in enumerate(left):
        if a == 0:
            continue
        for j in range(0, top + 1 - i):
            if right[j] != 0:
                result[i + j] = result[i + j] + a * right[j]
    return result


def lambdaSeries(e: LambdaElement, top: int) -> List[Any]:
    """[lambda_0(e), .., lambda_top(e)] as ring polynomials."""
    polyRing = e.ring.polyRing
    series = [polyRing.one] + [polyRing.zero] * top
    for monom, multiplicity in e.lines():
        factor = [_binomial(multiplicity, k) * e.linePower(monom, k) for k in range(top + 1)]
        series = _truncatedProduct(series, factor, top, polyRing.zero)
    return series


def sigmaSeries(e: LambdaElement, top: int) -> List[Any]:
    """[sigma_0(e), .., sigma_top(e)] from the alternating recursion in the lambdas."""
    lambdas = lambdaSeries(e, top)
    sigmas = [e.ring.polyRing.one]
    for n in range(1, top + 1):
        total = e.ring.polyRing.zero
        for i in range(1, n + 1):
            term = lambdas[i] * sigmas[n - i]
            total = total + term if i % 2 == 1 else total - term
        sigmas.append(total)
    return sigmas


def _requireIndex(k: int) -> None:
    if k < 0:
        raise ValueError(f"Operation index must be non-negative, got {k}")


def lambdaK(k: int, e: LambdaElement) -> LambdaElement:
    _requireIndex(k)
    return LambdaElement(e.ring, lambdaSeries(e, k)[k])


def sigmaK(k: int, e: LambdaElement) -> LambdaElement:
    _requireIndex(k)
    return LambdaElement(e.ring, sigmaSeries(e, k)[k])


def adamsPowerSum(n: int, e: LambdaElement) -> LambdaElement:
    poly = e.ring.polyRing.zero
    for monom, multiplicity in e.lines():
        poly = poly + multiplicity * e.linePower(monom, n)
    return LambdaElement(e.ring, poly)


def adamsNewton(n: int, e: LambdaElement) -> LambdaElement:
    """psi_n = N_n(lambda_1, .., lambda_n) via psi_m = sum_{i<m} (-1)^{i-1} lambda_i psi_{m-i} + (-1)^{m-1} m lambda_m."""
    lambdas = lambdaSeries(e, n)
    psis = [None]
    for m in range(1, n + 1):
        total = (m if m % 2 == 1 else -m) * lambdas[m]
        for i in range(1, m):
            term = lambdas[i] * psis[m - i]
            total = total + term if i % 2 == 1 else total - term
        psis.append(total)
    return LambdaElement(e.ring, psis[n])


def adams(n: int, e: LambdaElement) -> LambdaElement:
    """
    The n-th Adams operation.

    Raises:
        ArithmeticError: If the power sum and the Newton polynomial disagree
    """
    if n < 1:
        raise ValueError(f"Adams operations start at n = 1, got {n}")
    value = adamsPowerSum(n, e)
    if value != adamsNewton(n, e):
        raise ArithmeticError(f"psi_{n} power sum differs from the Newton polynomial on {e}")
    return value


def schurOp(n: int, k: int, e: LambdaElement) -> LambdaElement:
    """s_k^n = sum_{i=k+1..n} (-1)^{i-k-1} lambda_i sigma_{n-i}, the hook operation of type (k+1, 1, .., 1)."""
    if not 0 <= k <= n:
        raise ValueError(f"Need 0 <= k <= n, got k={k}, n={n}")
    lambdas = lambdaSeries(e, n)
    sigmas = sigmaSeries(e, n)
    total = e.ring.polyRing.zero
    for i in range(k + 1, n + 1):
        term = lambdas[i] * sigmas[n - i]
        total = total + term if (i - k - 1) % 2 == 0 else total - term
    return LambdaElement(e.ring, total)


def _requirePositive(e: LambdaElement, what: str) -> None:
    negative = [monom for monom, multiplicity in e.lines() if multiplicity < 0]
    if negative:
        raise NotSplitForm(f"{what} needs a positive sum of lines, got {e}")


def bott(n: int, C: LambdaElement) -> LambdaElement:
    """theta^n(C) = prod over lines u of (1 + u + .. + u^{n-1})."""
    if n < 1:
        raise ValueError(f"Bott elements start at n = 1, got {n}")
    _requirePositive(C, "theta^n")
    poly = C.ring.polyRing.one
    for monom, multiplicity in C.lines():
        geometric = C.ring.polyRing.zero
        for j in range(n):
            geometric = geometric + C.linePower(monom, j)
        poly = poly * (geometric ** multiplicity)
    return LambdaElement(C.ring, poly)


def lambdaDegree(C: LambdaElement) -> int:
    _requirePositive(C, "A finite lambda-degree")
    return sum(multiplicity for _, multiplicity in C.lines())


def lambdaMinusOne(C: LambdaElement) -> LambdaElement:
    """lambda_{-1}(C) = sum_i (-1)^i lambda_i(C) = prod (1 - u)."""
    d = lambdaDegree(C)
    series = lambdaSeries(C, d)
    poly = C.ring.polyRing.zero
    for i, value in enumerate(series):
        poly = poly + value if i % 2 == 0 else poly - value
    return LambdaElement(C.ring, poly)


def lambdaSymbol(i: int) -> sympy.Symbol:
    return sympy.Symbol(f"lambda{i}")


@dataclass(frozen=True)
class OperationExpr:
    """An integer polynomial in lambda_1, lambda_2, .. without constant term."""

    expr: Any
    label: str = ""

    def __post_init__(self):
        expanded = sympy.expand(self.expr)
        unknown = [s for s in expanded.free_symbols if not str(s).startswith("lambda")]
        if unknown:
            raise ValueError(f"Operation {expanded} uses symbols other than the lambdas: {unknown}")
        if expanded.as_coeff_Add()[0] != 0:
            raise ValueError(f"Operation {expanded} has a constant term")
        object.__setattr__(self, "expr", expanded)

    @property
    def top(self) -> int:
        indices = [int(str(s)[len("lambda"):]) for s in self.expr.free_symbols]
        return max(indices, default=0)

    def _terms(self) -> List[Tuple[Tuple[int, ...], int]]:
        symbols = [lambdaSymbol(i) for i in range(1, self.top + 1)]
        if not symbols:
            return []
        terms = []
        for exponents, coefficient in sympy.Poly(self.expr, *symbols).terms():
            if not coefficient.is_integer:
                raise ValueError(f"Operation {self.expr} has a non-integral coefficient {coefficient}")
            terms.append((exponents, int(coefficient)))
        return terms

    def evaluate(self, e: LambdaElement) -> LambdaElement:
        lambdas = lambdaSeries(e, self.top)
        poly = e.ring.polyRing.zero
        for exponents, coefficient in self._terms():
            term = e.ring.polyRing(coefficient)
            for i, power in enumerate(exponents, start=1):
                if power:
                    term = term * lambdas[i] ** power
            poly = poly + term
        return LambdaElement(e.ring, poly)

    def __mul__(self, other: "OperationExpr") -> "OperationExpr":
        return OperationExpr(self.expr * other.expr, f"{self.label}*{other.label}")

    def __add__(self, other: "OperationExpr") -> "OperationExpr":
        return OperationExpr(self.expr + other.expr, f"{self.label}+{other.label}")

    def __sub__(self, other: "OperationExpr") -> "OperationExpr":
        return OperationExpr(self.expr - other.expr, f"{self.label}-{other.label}")

    def __str__(self) -> str:
        return self.label or str(self.expr)

    @classmethod
    def lam(cls, i: int) -> "OperationExpr":
        if i < 1:
            raise ValueError(f"lambda_{i} is not an operation without constant term")
        return cls(lambdaSymbol(i), f"lambda_{i}")

    @classmethod
    def sigma(cls, n: int) -> "OperationExpr":
        if n < 1:
            raise ValueError(f"sigma_{n} is not an operation without constant term")
        return cls(_formalSigmas(n)[n], f"sigma_{n}")

    @classmethod
    def adams(cls, n: int) -> "OperationExpr":
        if n < 1:
            raise ValueError(f"psi_{n} is not defined")
        psis = [None]
        for m in range(1, n + 1):
            total = (-1) ** (m - 1) * m * lambdaSymbol(m)
            for i in range(1, m):
                total += (-1) ** (i - 1) * lambdaSymbol(i) * psis[m - i]
            psis.append(sympy.expand(total))
        return cls(psis[n], f"psi_{n}")

    @classmethod
    def schur(cls, n: int, k: int) -> "OperationExpr":
        if not 0 <= k < n:
            raise ValueError(f"Need 0 <= k < n for a nonzero hook operation, got k={k}, n={n}")
        sigmas = _formalSigmas(n)
        total = sum((-1) ** (i - k - 1) * lambdaSymbol(i) * sigmas[n - i] for i in range(k + 1, n + 1))
        return cls(total, f"s_{k}^{n}")


def _formalSigmas(n: int) -> List[Any]:
    sigmas: List[Any] = [sympy.Integer(1)]
    for m in range(1, n + 1):
        total = sum((-1) ** (i - 1) * lambdaSymbol(i) * sigmas[m - i] for i in range(1, m + 1))
        sigmas.append(sympy.expand(total))
    return sigmas


def relativeOp(mu: OperationExpr, C: LambdaElement, x: LambdaElement) -> LambdaElement:
    """
    mu(C, x), the unique element with mu(x * lambda_{-1}(C)) = mu(C, x) * lambda_{-1}(C).

    Raises:
        NotDivisible: If mu(x * lambda_{-1}(C)) leaves a remainder
    """
    divisor = lambdaMinusOne(C)
    if divisor.isZero():
        raise NotDivisible(f"lambda_(-1)({C}) vanishes; substitute the trivial line after dividing")
    value = mu.evaluate(x * divisor)
    try:
        quotient = value.poly.exquo(divisor.poly)
    except ExactQuotientFailed as e:
        raise NotDivisible(f"{mu}(x * lambda_(-1)(C)) is not divisible by lambda_(-1)(C)") from e
    logger.debug("%s(C, x) has %d terms", mu, len(quotient.terms()))
    return LambdaElement(x.ring, quotient)


def relativeOpAtOne(mu: OperationExpr, x: LambdaElement) -> LambdaElement:
    """mu(1, x): mu(C, x) for a single line C = u1, then u1 -> 1."""
    ring = x.ring
    if ring.d < 1:
        raise ValueError("The trivial-line substitution needs a ring with at least one u variable")
    line = LambdaElement(ring, ring.gens[0])
    return relativeOp(mu, line, x).substitute({ring.names[0]: 1})


def operationByName(name: str, n: int) -> OperationExpr:
    """'sigma', 'lambda' or 'psi' of index n."""
    builders: Dict[str, Any] = {"sigma": OperationExpr.sigma, "lambda": OperationExpr.lam, "psi": OperationExpr.adams}
    if name not in builders:
        raise ValueError(f"Unknown operation {name!r}; expected one of {sorted(builders)}")
    return builders[name](n)
