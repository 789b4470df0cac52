"""
Example usage of the Koszul homology lab as a Python library.

This script demonstrates how to build resolutions, Koszul complexes and
N F Gamma complexes programmatically and compare their homology with
the predicted modules, the same way the khl suites do.
"""

from algebra.ringDescriptor import gradedPoly, integers, rationals
from complexes.equivariant import characterOnHomology, tensorPower
from complexes.homology import homology
from crossEffects.crossEffect import crossEffect
from functors.basedModule import BasedFreeModule
from functors.functorTags import Sym
from harness import predictions
from harness.report import emitReport
from harness.runner import runScenario
from harness.scenarioConfig import scenarioFromDict
from koszul.koszulComplex import koszulComplex
from koszul.resolutions import conormalFor, resolutionFor
from lambdaRing.operations import schurOp
from lambdaRing.splitRing import SplitRing
from simplicial.normalization import nfg


def exampleKoszulOverIntegers():
    """Example: H_k(Kos^2(f)) for V = (Z/2)^2."""
    print("=" * 50)
    print("Example 1: Koszul homology over Z")
    print("=" * 50)

    conormal = conormalFor(integers(), [2])
    resolution = resolutionFor(2, conormal)
    descriptor = homology(koszulComplex(resolution.presentation(), 2))

    for k in range(3):
        expected = predictions.koszulPrediction(2, 2, k, conormal).homology(conormal)
        print(f"H_{k}: computed {descriptor[k].asDict()}  predicted {expected.asDict()}")


def exampleSymmetricSquare():
    """Example: N Sym^2 Gamma of the resolution of Q[x,y]/(x,y)."""
    print("\n" + "=" * 50)
    print("Example 2: N Sym^2 Gamma for two generators")
    print("=" * 50)

    ring = gradedPoly(rationals(), ["x", "y"])
    conormal = conormalFor(ring, [ring.parse("x"), ring.parse("y")])
    resolution = resolutionFor(2, conormal)
    descriptor = homology(nfg(resolution.complex, Sym(2)), 5)

    for k in range(5):
        print(f"H_{k}: {descriptor[k].asDict()}")


def exampleSwapCharacter():
    """Example: the swap acts on H_1 of P.^{(x)2} by the sign."""
    print("\n" + "=" * 50)
    print("Example 3: Swap character on a tensor square")
    print("=" * 50)

    ring = gradedPoly(rationals(), ["x"])
    resolution = resolutionFor(1, conormalFor(ring, [ring.parse("x")]))
    power = tensorPower(resolution.complex, 2)
    print(f"Trace on H_1 by internal degree: {characterOnHomology(power, (1, 0), 1, 4)}")


def exampleLambdaAndCrossEffects():
    """Example: Schur ranks from the lambda-ring and a cross effect rank."""
    print("\n" + "=" * 50)
    print("Example 4: Lambda-ring ranks and cross effects")
    print("=" * 50)

    x = SplitRing(1, 2).xClass()
    print(f"rank s_1^3(x) for x of rank 2: {schurOp(3, 1, x).rankAtOnes()}")

    V = BasedFreeModule.free(rationals(), 1)
    print(f"rank cr_2(Sym^2)(Q, Q): {crossEffect(Sym(2), [V, V]).rank}")


def exampleRunSuite():
    """Example: run a suite on one scenario instance and render the report."""
    print("\n" + "=" * 50)
    print("Example 5: Run the thm32 suite on one instance")
    print("=" * 50)

    config = scenarioFromDict({
        "suite": "thm32",
        "ring": {"kind": "integers"},
        "ideal": ["2"],
        "rank": 2,
        "n": 2,
    })
    report = runScenario(config, timing=False)
    print(emitReport(report, "text"))


if __name__ == "__main__":
    print("Koszul Homology Lab - Example Usage\n")

    exampleKoszulOverIntegers()
    exampleSymmetricSquare()
    exampleSwapCharacter()
    exampleLambdaAndCrossEffects()
    exampleRunSuite()

    print("\nFor command-line usage, run: ./khl --help")
