"""
The short sequence Lambda^2 P (x) Lambda^2 Q -> Sym^2(P (x) Q) -> Sym^2 P (x) Sym^2 Q.

The first map sends (p1 ^ p2) (x) (q1 ^ q2) to (p1q1)(p2q2) - (p1q2)(p2q1); the
second multiplies out (p1q1)(p2q2) to p1p2 (x) q1q2.
"""

from dataclasses import dataclass

from algebra.sparseMatrix import SparseMatrix
from functors.basedModule import BasedFreeModule, ModuleMap, tensorProduct
from functors.functorTags import Ext, Sym


@dataclass
class AbwSequence:
    source: BasedFreeModule
    middle: BasedFreeModule
    target: BasedFreeModule
    first: ModuleMap
    second: ModuleMap


def abwSequence(P: BasedFreeModule, Q: BasedFreeModule) -> AbwSequence:
    ring = P.ring
    source = tensorProduct(Ext(2).applyObject(P), Ext(2).applyObject(Q))
    pq = tensorProduct(P, Q)
    middle = Sym(2).applyObject(pq)
    target = tensorProduct(Sym(2).applyObject(P), Sym(2).applyObject(Q))

    def pairIndex(a: int, b: int) -> int:
        return a * Q.rank + b

    middleTuples = {t: i for i, t in enumerate(Sym(2).indexTuples(pq.rank))}
    symQ = {t: i for i, t in enumerate(Sym(2).indexTuples(Q.rank))}
    symP = {t: i for i, t in enumerate(Sym(2).indexTuples(P.rank))}

    firstEntries = {}
    column = 0
    for p1, p2 in Ext(2).indexTuples(P.rank):
        for q1, q2 in Ext(2).indexTuples(Q.rank):
            plus = tuple(sorted((pairIndex(p1, q1), pairIndex(p2, q2))))
            minus = tuple(sorted((pairIndex(p1, q2), pairIndex(p2, q1))))
            firstEntries[(middleTuples[plus], column)] = ring.one()
            firstEntries[(middleTuples[minus], column)] = ring.neg(ring.one())
            column += 1

    secondEntries = {}
    for (x, y), j in middleTuples.items():
        p1, q1 = divmod(x, Q.rank)
        p2, q2 = divmod(y, Q.rank)
        row = symP[tuple(sorted((p1, p2)))] * len(symQ) + symQ[tuple(sorted((q1, q2)))]
        key = (row, j)
        secondEntries[key] = secondEntries.get(key, 0) + 1

    first = ModuleMap(source, middle, SparseMatrix(ring, middle.rank, source.rank, firstEntries))
    second = ModuleMap(middle, target, SparseMatrix(ring, target.rank, middle.rank, {
        k: ring.fromInt(v) for k, v in secondEntries.items()
    }))
    return AbwSequence(source=source, middle=middle, target=target, first=first, second=second)
