"""
Verification suites.

Each suite expands into independent check jobs. A job computes one value with
the library and compares it to a prediction assembled from module ranks and
generator degrees alone, so the two sides never share homology code.
Heavy intermediate results (resolutions, tensor powers, N F Gamma complexes,
their homology) are shared between the jobs of a run through a Memo.
"""

import logging
import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from algebra.ringDescriptor import RingDescriptor, gradedPoly, integers, integersMod, rationals
from algebra.sparseMatrix import SparseMatrix
from complexes.chainComplex import ChainComplex, complexFromMap, moduleInDegree, totalTensor
from complexes.equivariant import (
    characterOnHomology, checkEquivariance, knModule, partitions, permutationAction, permutationOfCycleType,
    tensorPower,
)
from complexes.eulerClass import eulerClass, sigmaOfClass
from complexes.homology import (
    DegreeHomology, HomologyDescriptor, homology, inducedMapsAgree, isBoundary, isCycle, isQuasiIsomorphism,
)
from crossEffects.crossEffect import crossEffect, decompose, hasExactDegree, symmetricAction
from crossEffects.diagonalPlus import (
    diagonalMap, diagonalMapsBijective, plusAfterDiagonal, plusAfterDiagonalExpected, plusMap, plusMapsBijective,
    symCrossEffectRank, vanishesBelowDegree,
)
from functors.abwSequence import abwSequence
from functors.basedModule import BasedFreeModule, ModuleMap
from functors.functorTags import Div, Ext, FunctorTag, Sym, Tensor, allTags
from harness import predictions
from harness.randomInstances import homotopicPairs, randomComplexes, randomGradedComplexes, randomMap
from harness.scenarioConfig import ScenarioConfig, ScenarioInstance, instanceFor
from koszul.koszulComplex import dualKoszulComplex, koszulComplex, koszulMap
from koszul.resolutions import ConormalData, ResolutionData, conormalFor, resolutionFor
from koszul.witnesses import witnessesGenerateHomology
from lambdaRing.identities import CATALOGUE, catalogueGrid, verifyIdentity
from lambdaRing.operations import bott, schurOp
from lambdaRing.splitRing import SplitRing
from simplicial.comparisonMap import comparisonU
from simplicial.gammaFunctor import gamma
from simplicial.lemma22 import compareWithNfg
from simplicial.normalization import nfg, nfgData, nfgGeneric, nfgMap, normalize
from simplicial.simplicialModule import checkSimplicialIdentities

logger = logging.getLogger(__name__)


# Jobs

@dataclass
class CheckOutcome:
    """Expected and computed values of one check, both JSON-native."""

    expected: Any
    computed: Any
    passed: bool


def agree(expected: Any, computed: Any) -> CheckOutcome:
    return CheckOutcome(expected=expected, computed=computed, passed=expected == computed)


@dataclass
class CheckJob:
    """
    One independent check.

    Attributes:
        name: Unique, deterministic check name; reports are ordered by it
        params: Instance parameters recorded in the report
        formula: Where the expected value comes from
        run: Computes the outcome
        conjecture: Outcome is informational and never gates the exit code
    """

    name: str
    params: Dict[str, Any]
    formula: str
    run: Callable[[], CheckOutcome]
    conjecture: bool = False


class Memo:
    """Values shared by the jobs of one run, each computed at most once."""

    def __init__(self):
        self._values: Dict[Any, Any] = {}
        self._locks: Dict[Any, threading.Lock] = {}
        self._guard = threading.Lock()

    def get(self, key: Any, builder: Callable[[], Any]) -> Any:
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._values:
                self._values[key] = builder()
            return self._values[key]


@dataclass
class SuiteContext:
    """What a suite builder needs: the scenario, its seed and the shared memo."""

    config: ScenarioConfig
    memo: Memo = field(default_factory=Memo)

    @property
    def seed(self) -> int:
        return self.config.seed

    def window(self, default: Optional[int]) -> Optional[int]:
        return self.config.window if self.config.window is not None else default

    def instance(self, suite: str) -> Optional[ScenarioInstance]:
        return instanceFor(self.config, suite)


# Instances

def idealLabel(conormal: ConormalData) -> str:
    ring = conormal.ring
    return f"{ring.name}:({','.join(ring.format(g) for g in conormal.generators)})"


@dataclass
class Case:
    """One (R, I, r, n) instance of a theorem suite."""

    conormal: ConormalData
    rank: int
    n: int
    window: Optional[int] = None

    @property
    def label(self) -> str:
        return f"{idealLabel(self.conormal)}/r={self.rank}/n={self.n}"

    @property
    def key(self) -> Tuple[str, int, int, Optional[int]]:
        return idealLabel(self.conormal), self.rank, self.n, self.window

    def params(self, **extra: Any) -> Dict[str, Any]:
        ring = self.conormal.ring
        params: Dict[str, Any] = {
            "ring": ring.name,
            "ideal": [ring.format(g) for g in self.conormal.generators],
            "r": self.rank,
            "n": self.n,
        }
        if self.window is not None:
            params["window"] = self.window
        params.update(extra)
        return params


def _defaultWindow(conormal: ConormalData, n: int = 1) -> Optional[int]:
    if not conormal.ring.isGraded:
        return None
    return predictions.defaultWindow(conormal.degrees, n)


def _caseFromInstance(instance: ScenarioInstance) -> Case:
    conormal = conormalFor(instance.ring, instance.generators, instance.window)
    return Case(conormal, instance.rank, instance.n, instance.window if instance.ring.isGraded else None)


def _cases(ctx: SuiteContext, suite: str, ideals: Sequence[Tuple[RingDescriptor, Sequence[Any]]],
           shapes: Sequence[Tuple[int, int]], window: Optional[int] = None) -> List[Case]:
    """The scenario instance if it applies to the suite, otherwise ideals x (r, n) shapes."""
    instance = ctx.instance(suite)
    if instance is not None:
        return [_caseFromInstance(instance)]
    cases = []
    for ring, generators in ideals:
        conormal = conormalFor(ring, generators)
        for rank, n in shapes:
            default = window if window is not None else _defaultWindow(conormal, n)
            cases.append(Case(conormal, rank, n, ctx.window(default) if ring.isGraded else None))
    return cases


def _qx() -> RingDescriptor:
    return gradedPoly(rationals(), ["x"])


def _qxy() -> RingDescriptor:
    return gradedPoly(rationals(), ["x", "y"])


def _principalIdeals() -> List[Tuple[RingDescriptor, List[Any]]]:
    Z, Qx = integers(), _qx()
    return [(Z, [2]), (Z, [4]), (Z, [6]), (Qx, [Qx.parse("x")])]


def _linearIdeal(ring: RingDescriptor) -> Tuple[RingDescriptor, List[Any]]:
    """The ideal of all variables."""
    return ring, [ring.parse(name) for name in ring.variables]


def _grid(ranks: Sequence[int], ns: Sequence[int]) -> List[Tuple[int, int]]:
    return list(product(ranks, ns))


def _resolution(ctx: SuiteContext, case: Case) -> ResolutionData:
    key = ("resolution", idealLabel(case.conormal), case.rank)
    return ctx.memo.get(key, lambda: resolutionFor(case.rank, case.conormal))


def _nfgHomology(ctx: SuiteContext, case: Case, functor: FunctorTag) -> HomologyDescriptor:
    def build():
        complex_ = nfg(_resolution(ctx, case).complex, functor)
        return homology(complex_, case.window)
    return ctx.memo.get(("nfg", idealLabel(case.conormal), case.rank, functor.name, case.window), build)


def _predicted(module: predictions.FreeQuotientModule, case: Case) -> Dict[str, Any]:
    return module.homology(case.conormal, case.window).asDict()


def _json(value: Any) -> Any:
    """Fractions become strings, dict keys become strings."""
    if isinstance(value, dict):
        return {str(k): _json(v) for k, v in sorted(value.items())}
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    return value


def _job(name: str, params: Dict[str, Any], formula: str, run: Callable[[], CheckOutcome],
         conjecture: bool = False) -> CheckJob:
    return CheckJob(name=name, params=params, formula=formula, run=run, conjecture=conjecture)


def _identity(ring: RingDescriptor, rank: int) -> ModuleMap:
    return ModuleMap.identity(BasedFreeModule.free(ring, rank, prefix="v"))


# thm32 / rem36: Koszul complexes of a principal resolution

def _koszulJobs(ctx: SuiteContext, suite: str, case: Case, build: Callable[[ModuleMap, int], ChainComplex],
                predict: Callable[..., predictions.FreeQuotientModule], formula: str) -> List[CheckJob]:
    def descriptor() -> HomologyDescriptor:
        def compute():
            return homology(build(_resolution(ctx, case).presentation(), case.n), case.window)
        return ctx.memo.get((suite, case.key), compute)

    jobs = []
    for k in range(case.n + 1):
        def run(k=k):
            return agree(_predicted(predict(case.rank, case.n, k, case.conormal), case), descriptor()[k].asDict())
        jobs.append(_job(f"{suite}/{case.label}/k={k}/homology", case.params(k=k), formula, run))

    if case.conormal.ring.isIntegers:
        modulus = case.conormal.generators[0]

        def annihilated():
            h = descriptor()
            killed = all(d.freeRank == 0 and all(modulus % t == 0 for t in d.torsion) for d in h.degrees.values())
            return agree(True, killed)
        jobs.append(_job(f"{suite}/{case.label}/annihilated", case.params(), "I H_k = 0", annihilated))
    return jobs


def _witnessJobs(ctx: SuiteContext, case: Case) -> List[CheckJob]:
    jobs = []
    for k in range(case.n):
        def run(k=k):
            return agree(True, witnessesGenerateHomology(_resolution(ctx, case), case.n, k, case.window))
        jobs.append(_job(f"thm32/{case.label}/k={k}/witnesses", case.params(k=k),
                         "hook witnesses are cycles generating H_k", run))
    return jobs


def _exactIdentityJobs(suite: str, build: Callable[[ModuleMap, int], ChainComplex]) -> List[CheckJob]:
    jobs = []
    for ring in (integers(), rationals()):
        for rank, n in _grid(range(1, 5), range(1, 5)):
            def run(ring=ring, rank=rank, n=n):
                return agree(True, homology(build(_identity(ring, rank), n)).isAcyclic())
            jobs.append(_job(f"{suite}/exact-identity/{ring.name}/r={rank}/n={n}",
                             {"ring": ring.name, "r": rank, "n": n}, "Kos^n(id_V) is exact", run))
    return jobs


def _unitComplex(ring: RingDescriptor) -> ChainComplex:
    return moduleInDegree(BasedFreeModule.free(ring, 1, prefix="u"), 0)


def _koszulOrUnit(f: ModuleMap, n: int) -> ChainComplex:
    return _unitComplex(f.ring) if n == 0 else koszulComplex(f, n)


def elementaryDivisors(descriptors: Sequence[HomologyDescriptor]) -> Dict[str, Any]:
    """Free rank and prime-power elementary divisors of the direct sum, degree by degree."""
    result: Dict[str, Dict[str, Any]] = {}
    for descriptor in descriptors:
        for k, h in descriptor.degrees.items():
            entry = result.setdefault(str(k), {"free_rank": 0, "elementary_divisors": []})
            entry["free_rank"] += h.freeRank or 0
            for factor in h.torsion:
                for prime, power in sympy.factorint(factor).items():
                    entry["elementary_divisors"].append(int(prime) ** power)
    for entry in result.values():
        entry["elementary_divisors"].sort()
    return dict(sorted(result.items()))


def _multiplicativityJobs(ctx: SuiteContext) -> List[CheckJob]:
    jobs = []
    Z = integers()
    for modulus, (left, right), n in product((2, 6), ((1, 1), (1, 2)), (2, 3)):
        conormal = conormalFor(Z, [modulus])

        def run(conormal=conormal, left=left, right=right, n=n):
            def f(rank):
                return resolutionFor(rank, conormal).presentation()
            whole = homology(koszulComplex(f(left + right), n))
            parts = [
                homology(totalTensor(_koszulOrUnit(f(left), a), _koszulOrUnit(f(right), n - a)))
                for a in range(n + 1)
            ]
            return agree(elementaryDivisors(parts), elementaryDivisors([whole]))
        params = {"ring": "Z", "ideal": [str(modulus)], "r": [left, right], "n": n}
        jobs.append(_job(f"thm32/multiplicative/Z:({modulus})/r={left}+{right}/n={n}", params,
                         "Kos^n(f + f') = sum_{a+b=n} Kos^a(f) (x) Kos^b(f')", run))
    return jobs


def thm32Jobs(ctx: SuiteContext) -> List[CheckJob]:
    cases = _cases(ctx, "thm32", _principalIdeals(), _grid((1, 2, 3), (1, 2, 3)))
    jobs = []
    for case in cases:
        jobs += _koszulJobs(ctx, "thm32", case, koszulComplex, predictions.koszulPrediction,
                            "L_k^n(V) (x) (I/I^2)^{(x)k}")
        jobs += _witnessJobs(ctx, case)
    if ctx.instance("thm32") is None:
        jobs += _exactIdentityJobs("thm32", koszulComplex)
        jobs += _multiplicativityJobs(ctx)
    return jobs


def rem36Jobs(ctx: SuiteContext) -> List[CheckJob]:
    cases = _cases(ctx, "rem36", _principalIdeals(), _grid((1, 2, 3), (1, 2, 3)))
    jobs = []
    for case in cases:
        jobs += _koszulJobs(ctx, "rem36", case, dualKoszulComplex, predictions.dualKoszulPrediction,
                            "coL_k^n(V) (x) (I/I^2)^{(x)k}")
    if ctx.instance("rem36") is None:
        jobs += _exactIdentityJobs("rem36", dualKoszulComplex)
    return jobs


# prop24: the comparison map u^n(f) and homotopy invariance

def _comparisonJobs(ctx: SuiteContext, case: Case) -> List[CheckJob]:
    def u():
        return ctx.memo.get(("u", case.key), lambda: comparisonU(_resolution(ctx, case).presentation(), case.n))

    def chainMap():
        return agree(True, u().isChainMap())

    def quasiIsomorphism():
        return agree(True, isQuasiIsomorphism(u(), case.window))

    return [
        _job(f"prop24/{case.label}/chain-map", case.params(), "u^n(f) commutes with d", chainMap),
        _job(f"prop24/{case.label}/quasi-isomorphism", case.params(),
             "u^n(f): Kos^n(f) -> N Sym^n Gamma(f) is a quasi-isomorphism", quasiIsomorphism),
    ]


def _zeroTargetJobs() -> List[CheckJob]:
    Z = integers()
    jobs = []
    for rank, n in _grid((1, 2, 3), (1, 2, 3)):
        def run(rank=rank, n=n):
            P = BasedFreeModule.free(Z, rank, prefix="p")
            f = ModuleMap(P, BasedFreeModule.zero(Z), SparseMatrix(Z, 0, rank))
            computed = homology(nfg(complexFromMap(f), Sym(n))).asDict()
            expected = {
                str(k): DegreeHomology(freeRank=comb(rank, n) if k == n else 0).asDict() for k in range(n + 1)
            }
            return agree(expected, computed)
        jobs.append(_job(f"prop24/zero-target/Z/r={rank}/n={n}", {"ring": "Z", "r": rank, "n": n},
                         "N Sym^n Gamma(P -> 0) = Lambda^n(P)[n]", run))
    return jobs


def _homotopyJobs(ctx: SuiteContext) -> List[CheckJob]:
    jobs = []
    for i, pair in enumerate(homotopicPairs(ctx.seed, integers(), 25)):
        params = {"ring": "Z", "seed": ctx.seed, "pair": i, "p": pair.f.domain.rank, "q": pair.f.codomain.rank}
        for n in (1, 2, 3):
            def koszul(pair=pair, n=n):
                K = koszulComplex(pair.f, n)
                first = koszulMap(*pair.components(1), K, K, n)
                second = koszulMap(*pair.components(2), K, K, n)
                degrees = list(range(n + 1))
                return agree(degrees, [k for k in degrees if inducedMapsAgree(first, second, k)])
            jobs.append(_job(f"prop24/homotopy/{i:02d}/n={n}/koszul", dict(params, n=n),
                             "homotopic maps induce equal maps on H Kos^n", koszul))
        for n in (1, 2):
            def normalized(pair=pair, n=n):
                data = nfgData(complexFromMap(pair.f), Sym(n))
                first = nfgMap(pair.first, data, data)
                second = nfgMap(pair.second, data, data)
                degrees = list(range(data.complex.length + 1))
                return agree(degrees, [k for k in degrees if inducedMapsAgree(first, second, k)])
            jobs.append(_job(f"prop24/homotopy/{i:02d}/n={n}/nfg", dict(params, n=n),
                             "homotopic maps induce equal maps on H N Sym^n Gamma", normalized))
    return jobs


def prop24Jobs(ctx: SuiteContext) -> List[CheckJob]:
    jobs = []
    for case in _cases(ctx, "prop24", _principalIdeals(), _grid((1, 2, 3), (1, 2, 3))):
        jobs += _comparisonJobs(ctx, case)
    if ctx.instance("prop24") is None:
        jobs += _zeroTargetJobs()
        jobs += _homotopyJobs(ctx)
    return jobs


# doldkan / lemma22 / lemma61: the simplicial layer

def doldkanJobs(ctx: SuiteContext) -> List[CheckJob]:
    jobs = []
    batches = [
        (integers(), randomComplexes(ctx.seed, integers(), 25)),
        (rationals(), randomComplexes(ctx.seed + 1, rationals(), 25)),
    ]
    for ring, complexes in batches:
        for i, C in enumerate(complexes):
            params = {"ring": ring.name, "seed": ctx.seed, "index": i, "ranks": C.ranks()}

            def roundTrip(C=C):
                N = normalize(gamma(C, C.length))
                same = N.ranks() == C.ranks() and all(
                    N.differential(k).matrix == C.differential(k).matrix for k in range(1, C.length + 1)
                )
                return agree({"ranks": C.ranks(), "differentials_equal": True},
                             {"ranks": N.ranks(), "differentials_equal": same})
            jobs.append(_job(f"doldkan/normalize-gamma/{ring.name}/{i:02d}", params, "N Gamma(C) = C", roundTrip))

            def identities(C=C):
                check = checkSimplicialIdentities(gamma(C, C.length + 1))
                return agree("hold", "hold" if check.passed else f"{check.identity} fails at level {check.level}")
            jobs.append(_job(f"doldkan/simplicial-identities/{ring.name}/{i:02d}", params,
                             "Gamma(C) is a simplicial module", identities))

    for i, C in enumerate(randomComplexes(ctx.seed + 2, integers(), 10, maxLength=2, maxRank=2)):
        for functor in (Sym(2), Ext(2)):
            def fastPath(C=C, functor=functor):
                return agree(homology(nfgGeneric(C, functor)).asDict(), homology(nfg(C, functor)).asDict())
            jobs.append(_job(f"doldkan/fast-vs-generic/Z/{i:02d}/{functor.name}",
                             {"ring": "Z", "seed": ctx.seed, "index": i, "functor": functor.name, "ranks": C.ranks()},
                             "N F Gamma from nondegenerate bases = generic normalization", fastPath))
    return jobs


def lemma22Jobs(ctx: SuiteContext) -> List[CheckJob]:
    Z, Q = integers(), rationals()
    rng = random.Random(ctx.seed)
    maps = [(f"Z:(2)/r={r}", resolutionFor(r, conormalFor(Z, [2])).presentation()) for r in (1, 2)]
    maps += [(f"Z/random{i}", randomMap(rng, Z, rng.randint(1, 2), rng.randint(1, 2))) for i in range(4)]
    maps += [(f"Q/random{i}", randomMap(rng, Q, rng.randint(1, 2), rng.randint(1, 2))) for i in range(2)]
    jobs = []
    for label, f in maps:
        for functor in [factory(n) for factory in (Sym, Ext) for n in (1, 2, 3)]:
            def run(f=f, functor=functor):
                comparison = compareWithNfg(f, functor)
                return agree({"invertible": True, "commutes": True},
                             {"invertible": comparison.invertible, "commutes": comparison.commutes})
            params = {"map": label, "p": f.domain.rank, "q": f.codomain.rank, "functor": functor.name}
            jobs.append(_job(f"lemma22/{label}/{functor.name}", params,
                             "cross-effect complex = N F Gamma(P -> Q)", run))
    return jobs


def lemma61Jobs(ctx: SuiteContext) -> List[CheckJob]:
    ring = _qx()
    jobs = []
    for i, C in enumerate(randomGradedComplexes(ctx.seed, ring, 20)):
        for n in (1, 2, 3):
            def run(C=C, n=n):
                expected = sigmaOfClass(n, eulerClass(C)).asDict()
                return agree(expected, eulerClass(nfg(C, Sym(n))).asDict())
            params = {"ring": ring.name, "seed": ctx.seed, "index": i, "n": n, "ranks": C.ranks()}
            jobs.append(_job(f"lemma61/{i:02d}/n={n}", params, "[N Sym^n Gamma(C)] = sigma_n([C])", run))
    return jobs


# thm51 / ex52: tensor powers with their symmetric group action

def _power(ctx: SuiteContext, case: Case):
    return ctx.memo.get(("power", case.key), lambda: tensorPower(_resolution(ctx, case).complex, case.n))


def _powerHomology(ctx: SuiteContext, case: Case) -> HomologyDescriptor:
    return ctx.memo.get(("powerHomology", case.key), lambda: homology(_power(ctx, case).complex, case.window))


def _addVectors(ring: RingDescriptor, *vectors: Dict[int, Any]) -> Dict[int, Any]:
    total: Dict[int, Any] = {}
    for vector in vectors:
        for index, value in vector.items():
            total[index] = total.get(index, ring.zero()) + value
    return {index: value for index, value in total.items() if value != 0}


def _swapGeneratorJobs(ctx: SuiteContext, case: Case) -> List[CheckJob]:
    """z_ij = p_i (x) q_j - q_i (x) p_j spans H_1 of P.^{(x)2} and the swap sends it to -z_ji."""
    jobs = []
    rank = case.rank
    for i, j in product(range(rank), repeat=2):
        def run(i=i, j=j):
            power = _power(ctx, case)
            ring = power.complex.ring
            positions = power.positions[1]

            def z(a, b):
                return {positions[((1, 0), (a, b))]: ring.one(), positions[((0, 1), (a, b))]: -ring.one()}
            swapped = permutationAction(power, (1, 0), 1).apply(z(i, j))
            computed = {
                "cycle": isCycle(power.complex, 1, z(i, j)),
                "boundary": isBoundary(power.complex, 1, z(i, j)),
                "swap_plus_partner_boundary": isBoundary(power.complex, 1, _addVectors(ring, swapped, z(j, i))),
            }
            return agree({"cycle": True, "boundary": False, "swap_plus_partner_boundary": True}, computed)
        jobs.append(_job(f"thm51/{case.label}/swap-generator/{i},{j}", case.params(i=i, j=j),
                         "swap acts on H_1 by the sign of K_2", run))
    return jobs


def _characterJobs(ctx: SuiteContext, suite: str, case: Case, cycleTypes: Sequence[Tuple[int, ...]],
                   degrees: Sequence[int]) -> List[CheckJob]:
    jobs = []
    for cycles, k in product(cycleTypes, degrees):
        expected = predictions.characterPrediction(case.rank, case.n, k, case.conormal, cycles, case.window)
        if expected is None:
            logger.debug("No character prediction for %s with unequal generator degrees", case.label)
            continue

        def run(cycles=cycles, k=k, expected=expected):
            traces = characterOnHomology(_power(ctx, case), permutationOfCycleType(cycles), k, case.window)
            return agree(_json(expected), _json(traces))
        cycleLabel = "".join(str(c) for c in cycles)
        jobs.append(_job(f"{suite}/{case.label}/k={k}/character/{cycleLabel}",
                         case.params(k=k, cycle_type=list(cycles)),
                         "V^{(x)n} (x) Lambda^k(I/I^2 (x) K_n)", run))
    return jobs


def thm51Jobs(ctx: SuiteContext) -> List[CheckJob]:
    instance = ctx.instance("thm51")
    if instance is not None:
        cases = [_caseFromInstance(instance)]
    else:
        Z = integers()
        cases = _cases(ctx, "thm51", [(Z, [2])], _grid((1, 2), (2, 3)))
        cases += _cases(ctx, "thm51", [_linearIdeal(_qx())], _grid((1, 2), (2, 3)), window=5)
        cases += _cases(ctx, "thm51", [_linearIdeal(_qxy())], [(1, 2), (2, 2), (1, 3)], window=5)
    jobs = []
    for case in cases:
        d = case.conormal.d
        top = _resolution(ctx, case).complex.length * case.n
        for k in range(top + 1):
            def run(k=k, case=case):
                expected = predictions.tensorPowerPrediction(case.rank, case.n, k, case.conormal)
                return agree(_predicted(expected, case), _powerHomology(ctx, case)[k].asDict())
            jobs.append(_job(f"thm51/{case.label}/k={k}/homology", case.params(k=k),
                             "V^{(x)n} (x) Lambda^k(I/I^2 (x) K_n)", run))

        def ranks(case=case):
            base = _resolution(ctx, case).complex.ranks()
            if len(base) == 2:
                expected = predictions.binomialRanks(base[0], base[1], case.n)
            else:
                expected = predictions.tensorPowerRanks(base, case.n)
            return agree(expected, _power(ctx, case).complex.ranks())
        jobs.append(_job(f"thm51/{case.label}/ranks", case.params(), "binomial expansion of (P_0 + P_1 + ..)^n", ranks))

        def equivariance(case=case):
            return agree(True, checkEquivariance(_power(ctx, case)))
        jobs.append(_job(f"thm51/{case.label}/equivariance", case.params(),
                         "permutations act by chain maps with Koszul signs", equivariance))

        ring = case.conormal.ring
        if ring.isIntegers and case.n == 2:
            jobs += _swapGeneratorJobs(ctx, case)
        if ring.isGraded:
            jobs += _characterJobs(ctx, "thm51", case, partitions(case.n), range(d * (case.n - 1) + 1))

    if instance is None:
        for n in (2, 3):
            def split(n=n):
                return agree(True, knModule(integers(), n).splitsPermutationModule())
            jobs.append(_job(f"thm51/K_n/n={n}", {"n": n}, "Z[I_n] = Z + K_n after tensoring with V", split))
    return jobs


def ex52Jobs(ctx: SuiteContext) -> List[CheckJob]:
    Qx = _qx()
    cases = _cases(ctx, "ex52", [(Qx, [Qx.parse("x")])], [(1, 2)], window=ctx.window(4))
    jobs = []
    for case in cases:
        jobs += _characterJobs(ctx, "ex52", case, [(2,)], (0, 1))
    return jobs


# thm64 / cor63 / rem65 / ex66_conjecture: N F Gamma of a resolution

def _nfgPredictionJobs(ctx: SuiteContext, suite: str, case: Case, functor: FunctorTag,
                       predict: Callable[[int, int, ConormalData], predictions.FreeQuotientModule], formula: str,
                       conjecture: bool = False) -> List[CheckJob]:
    top = _resolution(ctx, case).complex.length * functor.n
    jobs = []
    for k in range(top + 1):
        def run(k=k):
            expected = _predicted(predict(case.rank, k, case.conormal), case)
            return agree(expected, _nfgHomology(ctx, case, functor)[k].asDict())
        jobs.append(_job(f"{suite}/{case.label}/k={k}/{functor.name}", case.params(k=k, functor=functor.name),
                         formula, run, conjecture=conjecture))
    return jobs


def thm64Jobs(ctx: SuiteContext) -> List[CheckJob]:
    cases = _cases(ctx, "thm64", [_linearIdeal(_qxy())], _grid((1, 2), (2,)), window=5)
    jobs = []
    for case in cases:
        jobs += _nfgPredictionJobs(ctx, "thm64", case, Sym(2), predictions.symSquareTwoGenerators,
                                   "Sym^2 V, Lambda^2 V (x) I/I^2, D^2 V (x) Lambda^2(I/I^2)")
    return jobs


def cor63Jobs(ctx: SuiteContext) -> List[CheckJob]:
    F3x = gradedPoly(integersMod(3), ["x"])
    ideals = [_linearIdeal(_qx()), _linearIdeal(_qxy()), _linearIdeal(F3x)]
    jobs = []
    for case in _cases(ctx, "cor63", ideals, _grid((1, 2), (2,))):
        jobs += _nfgPredictionJobs(ctx, "cor63", case, Sym(2), predictions.symSquareTwoInvertible,
                                   "Sym^2 V (x) Lambda^k for k even, Lambda^2 V (x) Lambda^k for k odd")
    return jobs


def _sequenceJob(case: Case, terms: Callable[[int], Tuple[Dict, Dict, Dict]], top: int,
                 formula: str) -> CheckJob:
    """Exactness of ... -> A_k -> B_k -> C_k -> A_{k-1} -> ... as graded vector spaces, degree by degree."""
    def run():
        sequence = []
        for k in range(top, -1, -1):
            sequence.extend(terms(k))
        return agree({}, _json(predictions.alternatingDefect(sequence, case.window)))
    return _job(f"rem65/{case.label}/long-exact-sequence", case.params(), formula, run)


def _rem65OneGenerator(ctx: SuiteContext, case: Case) -> List[CheckJob]:
    jobs = _nfgPredictionJobs(ctx, "rem65", case, Tensor(2),
                              lambda r, k, c: predictions.tensorPowerPrediction(r, 2, k, c),
                              "V^{(x)2} (x) Lambda^k(I/I^2 (x) K_2)")
    jobs += _nfgPredictionJobs(ctx, "rem65", case, Ext(2), predictions.exteriorSquareOneGenerator,
                               "Lambda^2 V, D^2 V (x) I/I^2")

    def terms(k):
        conormal, window = case.conormal, case.window
        return (
            _nfgHomology(ctx, case, Div(2))[k].hilbert or {},
            predictions.hilbertOf(predictions.tensorPowerPrediction(case.rank, 2, k, conormal), conormal, window),
            predictions.hilbertOf(predictions.exteriorSquareOneGenerator(case.rank, k, conormal), conormal, window),
        )
    jobs.append(_sequenceJob(case, terms, 2, "0 -> D^2 -> T^2 -> Lambda^2 -> 0 gives a long exact sequence"))
    return jobs


def _rem65TwoGenerators(ctx: SuiteContext, case: Case) -> List[CheckJob]:
    def zero():
        expected = _predicted(predictions.exteriorSquareZero(case.rank), case)
        return agree(expected, _nfgHomology(ctx, case, Ext(2))[0].asDict())
    jobs = [_job(f"rem65/{case.label}/k=0/{Ext(2).name}", case.params(k=0, functor=Ext(2).name),
                 "H_0 N Lambda^2 Gamma = Lambda^2 V", zero)]

    def terms(k):
        conormal, window = case.conormal, case.window
        return (
            _nfgHomology(ctx, case, Ext(2))[k].hilbert or {},
            predictions.hilbertOf(predictions.tensorPowerPrediction(case.rank, 2, k, conormal), conormal, window),
            predictions.hilbertOf(predictions.symSquareTwoGenerators(case.rank, k, conormal), conormal, window),
        )
    jobs.append(_sequenceJob(case, terms, 4, "0 -> Lambda^2 -> T^2 -> Sym^2 -> 0 gives a long exact sequence"))
    return jobs


def _characteristicTwoJobs(ctx: SuiteContext) -> List[CheckJob]:
    F2x = gradedPoly(integersMod(2), ["x"])
    case = _cases(ctx, "rem65-char2", [_linearIdeal(F2x)], [(1, 2)], window=4)[0]

    def run():
        h = _nfgHomology(ctx, case, Div(2))[0]
        return agree({"hilbert": {"0": 1, "1": 1}, "dimension": 2},
                     {"hilbert": h.asDict().get("hilbert"), "dimension": sum((h.hilbert or {}).values())})
    return [_job(f"rem65/{case.label}/k=0/{Div(2).name}", case.params(k=0, functor=Div(2).name),
                 "H_0 N D^2 Gamma = R/I^2 when char R = 2", run)]


def rem65Jobs(ctx: SuiteContext) -> List[CheckJob]:
    instance = ctx.instance("rem65")
    if instance is not None:
        cases = [_caseFromInstance(instance)]
    else:
        cases = _cases(ctx, "rem65", [_linearIdeal(_qx())], _grid((1, 2), (2,)), window=4)
        cases += _cases(ctx, "rem65", [_linearIdeal(_qxy())], _grid((1, 2), (2,)), window=5)
    jobs = []
    for case in cases:
        jobs += _rem65OneGenerator(ctx, case) if case.conormal.d == 1 else _rem65TwoGenerators(ctx, case)
    if instance is None:
        jobs += _characteristicTwoJobs(ctx)
    return jobs


def ex66Jobs(ctx: SuiteContext) -> List[CheckJob]:
    cases = _cases(ctx, "ex66_conjecture", [_linearIdeal(_qxy())], _grid((1, 2), (3,)), window=6)
    jobs = []
    for case in cases:
        jobs += _nfgPredictionJobs(ctx, "ex66_conjecture", case, Sym(3), predictions.symCubeConjecture,
                                   "conjectured H_k N Sym^3 Gamma for two generators", conjecture=True)
    return jobs


# crosseffects

def _monomialPositions(functor: FunctorTag, rank: int) -> Dict[Tuple[int, ...], int]:
    return {t: i for i, t in enumerate(functor.indexTuples(rank))}


def _throughAmbient(composite: ModuleMap, source, target) -> SparseMatrix:
    """A map between cross effects written on the ambient F(sums): include o map o project."""
    return target.include.compose(composite).compose(source.project).matrix


def _matrixOutcome(expected: SparseMatrix, computed: SparseMatrix) -> CheckOutcome:
    def entries(matrix):
        return sorted([i, j, value] for (i, j), value in matrix.entries.items())
    return CheckOutcome(expected=entries(expected), computed=entries(computed), passed=expected == computed)


def _explicitDiagonalSquare(rank: int) -> CheckOutcome:
    Z = integers()
    V = BasedFreeModule.free(Z, rank)
    source, target = crossEffect(Sym(2), [V]), crossEffect(Sym(2), [V, V])
    rows, cols = _monomialPositions(Sym(2), 2 * rank), _monomialPositions(Sym(2), rank)
    entries: Dict[Tuple[int, int], int] = {}
    for (i, j), column in cols.items():
        for row in (rows[(i, rank + j)], rows[(j, rank + i)]):
            entries[(row, column)] = entries.get((row, column), 0) + 1
    expected = SparseMatrix(Z, len(rows), len(cols), entries)
    computed = _throughAmbient(diagonalMap(Sym(2), (2,), [V]), source, target)
    return _matrixOutcome(expected, computed)


def _explicitPlusSquare(rank: int) -> CheckOutcome:
    Z = integers()
    V = BasedFreeModule.free(Z, rank)
    source, target = crossEffect(Sym(2), [V, V]), crossEffect(Sym(2), [V])
    rows, cols = _monomialPositions(Sym(2), rank), _monomialPositions(Sym(2), 2 * rank)
    entries = {}
    for (a, b), column in cols.items():
        if a < rank <= b:
            entries[(rows[tuple(sorted((a, b - rank)))], column)] = 1
    expected = SparseMatrix(Z, len(rows), len(cols), entries)
    computed = _throughAmbient(plusMap(Sym(2), (2,), [V]), source, target)
    return _matrixOutcome(expected, computed)


def _explicitDiagonalCube(rank: int) -> CheckOutcome:
    Z = integers()
    V = BasedFreeModule.free(Z, rank)
    source, target = crossEffect(Sym(3), [V]), crossEffect(Sym(3), [V, V, V])
    rows, cols = _monomialPositions(Sym(3), 3 * rank), _monomialPositions(Sym(3), rank)
    entries: Dict[Tuple[int, int], int] = {}
    for word, column in cols.items():
        for first, second, third in permutations(word):
            row = rows[(first, rank + second, 2 * rank + third)]
            entries[(row, column)] = entries.get((row, column), 0) + 1
    expected = SparseMatrix(Z, len(rows), len(cols), entries)
    computed = _throughAmbient(diagonalMap(Sym(3), (3,), [V]), source, target)
    return _matrixOutcome(expected, computed)


def _explicitPlusCube(rank: int) -> CheckOutcome:
    """+_{(2,1)}: p_a q_b w_c -> p_a p_b q_c on cr_3(Sym^3)(V, V, V) -> cr_2(Sym^3)(V, V)."""
    Z = integers()
    V = BasedFreeModule.free(Z, rank)
    source, target = crossEffect(Sym(3), [V, V, V]), crossEffect(Sym(3), [V, V])
    rows, cols = _monomialPositions(Sym(3), 2 * rank), _monomialPositions(Sym(3), 3 * rank)
    entries = {}
    for a, b, c in product(range(rank), repeat=3):
        entries[(rows[tuple(sorted((a, b, rank + c)))], cols[(a, rank + b, 2 * rank + c)])] = 1
    expected = SparseMatrix(Z, len(rows), len(cols), entries)
    computed = _throughAmbient(plusMap(Sym(3), (2, 1), [V, V]), source, target)
    return _matrixOutcome(expected, computed)


def _crossEffectRankJobs() -> List[CheckJob]:
    Z = integers()
    jobs = []
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            for ranks in combinations_with_replacement((1, 2, 3), k):
                def run(n=n, ranks=ranks):
                    modules = [BasedFreeModule.free(Z, r) for r in ranks]
                    return agree(symCrossEffectRank(n, ranks), crossEffect(Sym(n), modules).rank)
                label = ",".join(str(r) for r in ranks)
                jobs.append(_job(f"crosseffects/rank/Sym({n})/{label}", {"functor": Sym(n).name, "ranks": list(ranks)},
                                 "cr_k(Sym^n)(V_1..V_k) = sum Sym^{n_1} V_1 (x) .. (x) Sym^{n_k} V_k", run))
    return jobs


def _abwJobs() -> List[CheckJob]:
    """Ranks and exactness of Lambda^2 P (x) Lambda^2 Q -> Sym^2(P (x) Q) -> Sym^2 P (x) Sym^2 Q."""
    jobs = []
    for ring in (integers(), rationals()):
        for p, q in ((1, 2), (2, 2), (2, 3), (3, 3)):
            params = {"ring": ring.name, "ranks": [p, q]}
            label = f"{ring.name}/{p},{q}"

            def ranks(ring=ring, p=p, q=q):
                sequence = abwSequence(BasedFreeModule.free(ring, p, prefix="p"),
                                       BasedFreeModule.free(ring, q, prefix="q"))
                outer = comb(p, 2) * comb(q, 2)
                inner = comb(p + 1, 2) * comb(q + 1, 2)
                return agree({"source": outer, "middle": outer + inner, "target": inner},
                             {"source": sequence.source.rank, "middle": sequence.middle.rank,
                              "target": sequence.target.rank})
            jobs.append(_job(f"crosseffects/abw/rank/{label}", params,
                             "rank Sym^2(P (x) Q) = rank Lambda^2 P (x) Lambda^2 Q + rank Sym^2 P (x) Sym^2 Q",
                             ranks))

            def exactness(ring=ring, p=p, q=q):
                sequence = abwSequence(BasedFreeModule.free(ring, p, prefix="p"),
                                       BasedFreeModule.free(ring, q, prefix="q"))
                complex_ = ChainComplex(ring, [sequence.target, sequence.middle, sequence.source],
                                        [sequence.second, sequence.first])
                return agree(True, homology(complex_).isAcyclic())
            jobs.append(_job(f"crosseffects/abw/exact/{label}", params,
                             "0 -> Lambda^2 P (x) Lambda^2 Q -> Sym^2(P (x) Q) -> Sym^2 P (x) Sym^2 Q -> 0 is exact",
                             exactness))
    return jobs


def crosseffectsJobs(ctx: SuiteContext) -> List[CheckJob]:
    Z, Q = integers(), rationals()
    jobs = _crossEffectRankJobs()

    for rank in (1, 2, 3):
        params = {"ring": "Z", "rank": rank}
        jobs.append(_job(f"crosseffects/explicit/diagonal-Sym(2)/r={rank}", params,
                         "v_i v_j -> v_i v'_j + v_j v'_i", lambda rank=rank: _explicitDiagonalSquare(rank)))
        jobs.append(_job(f"crosseffects/explicit/plus-Sym(2)/r={rank}", params,
                         "v_i v'_j -> v_i v_j", lambda rank=rank: _explicitPlusSquare(rank)))
    for rank in (1, 2):
        params = {"ring": "Z", "rank": rank}
        jobs.append(_job(f"crosseffects/explicit/diagonal-Sym(3)/r={rank}", params,
                         "v_a v_b v_c -> sum over placements in V + V' + V''",
                         lambda rank=rank: _explicitDiagonalCube(rank)))
        jobs.append(_job(f"crosseffects/explicit/plus-Sym(3)/r={rank}", params,
                         "v_a v'_b v''_c -> v_a v_b v'_c", lambda rank=rank: _explicitPlusCube(rank)))

    for functor, rank in product(allTags(3), (1, 2)):
        def composite(functor=functor, rank=rank):
            V = BasedFreeModule.free(Z, rank)
            return agree(True, plusAfterDiagonal(functor, V).equals(plusAfterDiagonalExpected(functor, V)))
        jobs.append(_job(f"crosseffects/plus-after-diagonal/{functor.name}/r={rank}",
                         {"functor": functor.name, "rank": rank}, "+ o Delta = F(2) - 2", composite))

    def doubling():
        V = BasedFreeModule.free(Z, 2)
        composite = plusAfterDiagonal(Sym(2), V)
        return agree(True, composite.equals(ModuleMap.identity(composite.domain).scale(2)))
    jobs.append(_job("crosseffects/plus-after-diagonal/Sym(2)/doubling", {"functor": "Sym(2)", "rank": 2},
                     "+ o Delta = 2 on Sym^2", doubling))

    for functor in allTags(3):
        def degree(functor=functor):
            return agree(True, hasExactDegree(functor, functor.n, 1, Z))
        jobs.append(_job(f"crosseffects/degree/{functor.name}", {"functor": functor.name},
                         "F has degree exactly n", degree))

        def decomposition(functor=functor):
            return agree(True, decompose(functor, [BasedFreeModule.free(Z, 1), BasedFreeModule.free(Z, 2)])
                         .resolvesIdentity())
        jobs.append(_job(f"crosseffects/decomposition/{functor.name}", {"functor": functor.name},
                         "F(V + W) = F(V) + F(W) + cr_2(F)(V, W)", decomposition))

    for functor in (Sym(2), Ext(2), Tensor(2), Sym(3)):
        def involution(functor=functor):
            V = BasedFreeModule.free(Z, 2)
            k = 2
            swap = symmetricAction(functor, V, k, (1, 0))
            return agree(True, swap.compose(swap).equals(ModuleMap.identity(swap.domain)))
        jobs.append(_job(f"crosseffects/symmetric-action/{functor.name}", {"functor": functor.name, "k": 2},
                         "the swap on cr_2(F)(V, V) squares to 1", involution))

    hypotheses = []
    for n in (2, 3):
        hypotheses += [
            ("plus", Sym(n), Z, True), ("diag", Div(n), Z, True), ("vanishing", Ext(n), Z, True),
            ("diag", Sym(n), Z, False), ("plus", Div(n), Z, False),
            ("plus", Sym(n), Q, True), ("diag", Sym(n), Q, True), ("plus", Div(n), Q, True),
        ]
    checks = {"plus": plusMapsBijective, "diag": diagonalMapsBijective, "vanishing": vanishesBelowDegree}
    for hypothesis, functor, ring, expected in hypotheses:
        def characterizes(hypothesis=hypothesis, functor=functor, ring=ring, expected=expected):
            return agree(expected, checks[hypothesis](functor, ring).passed)
        jobs.append(_job(f"crosseffects/hypothesis/{hypothesis}/{functor.name}/{ring.name}",
                         {"functor": functor.name, "ring": ring.name, "hypothesis": hypothesis},
                         f"{hypothesis} maps characterize Sym, Div and Lambda", characterizes))
    jobs += _abwJobs()
    return jobs


# lambda

def lambdaJobs(ctx: SuiteContext) -> List[CheckJob]:
    jobs = []
    for name, d, n, N in catalogueGrid():
        def identity(name=name, d=d, n=n, N=N):
            result = verifyIdentity(name, d, n, N)
            expected = {"passed": True, "counterexample": None, "values": None}
            computed = {"passed": result.passed, "counterexample": result.counterexample,
                        "values": list(result.values) if result.values else None}
            return agree(expected, computed)
        jobs.append(_job(f"lambda/{name}/d={d}/n={n}/N={N}", {"identity": name, "d": d, "n": n, "N": N},
                         CATALOGUE[name].description, identity))

    for rank, n in _grid((1, 2, 3), (1, 2, 3)):
        for k in range(n):
            def schur(rank=rank, n=n, k=k):
                x = SplitRing(1, rank).xClass()
                return agree(predictions.schurRank(rank, n, k), schurOp(n, k, x).rankAtOnes())
            jobs.append(_job(f"lambda/schur-rank/r={rank}/n={n}/k={k}", {"r": rank, "n": n, "k": k},
                             "rank L_k^n(V)", schur))

    for d, n in _grid((1, 2, 3), (1, 2, 3, 4)):
        def bottRank(d=d, n=n):
            return agree(n ** d, bott(n, SplitRing(d, 1).conormalClass()).rankAtOnes())
        jobs.append(_job(f"lambda/bott-rank/d={d}/n={n}", {"d": d, "n": n}, "theta^n(C) at ones = n^d", bottRank))
    return jobs


SUITE_BUILDERS: Dict[str, Callable[[SuiteContext], List[CheckJob]]] = {
    "thm32": thm32Jobs,
    "rem36": rem36Jobs,
    "thm51": thm51Jobs,
    "ex52": ex52Jobs,
    "thm64": thm64Jobs,
    "cor63": cor63Jobs,
    "lemma61": lemma61Jobs,
    "lemma22": lemma22Jobs,
    "prop24": prop24Jobs,
    "doldkan": doldkanJobs,
    "crosseffects": crosseffectsJobs,
    "lambda": lambdaJobs,
    "rem65": rem65Jobs,
    "ex66_conjecture": ex66Jobs,
}

SUITE_DESCRIPTIONS: Dict[str, str] = {
    "thm32": "Homology of Kos^n(f) for a principal ideal is L_k^n(V) (x) (I/I^2)^{(x)k}",
    "rem36": "Homology of dual-Kos^n(f) is coL_k^n(V) (x) (I/I^2)^{(x)k}",
    "thm51": "Homology of P.^{(x)n} with its symmetric group action",
    "ex52": "The swap acts on H_1(P.^{(x)2}) by the sign",
    "thm64": "N Sym^2 Gamma of a two-generator complete intersection",
    "cor63": "N Sym^2 Gamma when 2 is invertible",
    "lemma61": "Euler classes: [N Sym^n Gamma(C)] = sigma_n([C])",
    "lemma22": "Cross-effect description of N F Gamma(P -> Q)",
    "prop24": "u^n(f): Kos^n(f) -> N Sym^n Gamma(f) and homotopy invariance",
    "doldkan": "Dold-Kan round trip and the nondegenerate-basis fast path",
    "crosseffects": "Cross effects, diagonal and plus maps, degree hypotheses",
    "lambda": "Lambda-ring identity catalogue",
    "rem65": "Long exact sequences of D^2, T^2, Lambda^2 and the characteristic 2 case",
    "ex66_conjecture": "Conjectured N Sym^3 Gamma for two generators (informational)",
}


def buildJobs(config: ScenarioConfig) -> List[CheckJob]:
    """
    Expand a scenario into its check jobs, sorted by name.

    Raises:
        ValidationError: If the scenario instance misses a suite requirement
        UnsupportedIdeal: If the scenario ideal has no resolution recipe
    """
    ctx = SuiteContext(config)
    jobs: List[CheckJob] = []
    for suite in config.suites():
        built = SUITE_BUILDERS[suite](ctx)
        logger.info("Suite %s expands to %d checks", suite, len(built))
        jobs.extend(built)
    names = [job.name for job in jobs]
    if len(set(names)) != len(names):
        duplicates = sorted({name for name in names if names.count(name) > 1})
        raise RuntimeError(f"Duplicate check names: {duplicates[:3]}")
    return sorted(jobs, key=lambda job: job.name)

