"""
Scenario files for the verification harness.

A scenario is a JSON object naming a suite and, optionally, one instance
(ring, ideal, module rank r, n) to run it on instead of the suite's built-in
grid. Parsing goes through pydantic; its errors are reported as
ValidationError naming the offending parameter, JSON syntax errors as
ParseError with a line number.
"""

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import pydantic
from pydantic import BaseModel, ConfigDict, Field, field_validator

from algebra.ringDescriptor import RingDescriptor, gradedPoly, integers, integersMod, rationals
from harness.predictions import defaultWindow
from utils.errors import ParseError, ValidationError

logger = logging.getLogger(__name__)

SUITES: Tuple[str, ...] = (
    "thm32", "rem36", "thm51", "ex52", "thm64", "cor63", "lemma61", "lemma22",
    "prop24", "doldkan", "crosseffects", "lambda", "rem65", "ex66_conjecture",
)
ALL_SUITES = "all"

_FIELD_PATTERN = re.compile(r"^(?:F_?|GF\(|Z/)(\d+)\)?$")


class RingSpec(BaseModel):
    """Coefficient ring of a scenario."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["integers", "rationals", "integers_mod", "graded_poly"]
    base: Optional[str] = Field(default=None, description="Base field of a graded ring: Q, F_p, GF(p) or Z/p")
    vars: List[str] = Field(default_factory=list)
    modulus: Optional[int] = Field(default=None, ge=2)

    def build(self) -> RingDescriptor:
        """
        Construct the ring descriptor.

        Raises:
            ValidationError: If the kind lacks its parameters
        """
        if self.kind == "integers":
            return integers()
        if self.kind == "rationals":
            return rationals()
        if self.kind == "integers_mod":
            if self.modulus is None:
                raise ValidationError("ring.modulus", "integers_mod needs a modulus")
            return integersMod(self.modulus)
        if not self.vars:
            raise ValidationError("ring.vars", "graded_poly needs at least one variable")
        base = _parseBaseField(self.base or "Q")
        try:
            return gradedPoly(base, self.vars)
        except ValueError as e:
            raise ValidationError("ring", str(e)) from e


def _parseBaseField(text: str) -> RingDescriptor:
    cleaned = text.strip().replace(" ", "")
    if cleaned in ("Q", "QQ", "rationals"):
        return rationals()
    match = _FIELD_PATTERN.match(cleaned)
    if match is None:
        raise ValidationError("ring.base", f"Unknown base field {text!r}; use Q or F_p")
    base = integersMod(int(match.group(1)))
    if not base.isField:
        raise ValidationError("ring.base", f"{text!r} is not a field")
    return base


class ScenarioConfig(BaseModel):
    """A validated scenario: the suite to run and an optional instance."""

    model_config = ConfigDict(extra="forbid")

    suite: str
    ring: Optional[RingSpec] = None
    ideal: List[str] = Field(default_factory=list)
    rank: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    window: Optional[int] = Field(default=None, ge=0)
    seed: int = 0
    output: Optional[str] = None

    @field_validator("suite")
    @classmethod
    def _knownSuite(cls, value: str) -> str:
        if value != ALL_SUITES and value not in SUITES:
            raise ValueError(f"unknown suite {value!r}; expected one of {', '.join(SUITES + (ALL_SUITES,))}")
        return value

    def suites(self) -> List[str]:
        """The suites this scenario runs; 'all' expands to the full catalogue."""
        return list(SUITES) if self.suite == ALL_SUITES else [self.suite]

    def hasInstance(self) -> bool:
        return self.ring is not None


@dataclass
class ScenarioInstance:
    """A concrete (R, I, r, n) with the ideal generators parsed into R."""

    ring: RingDescriptor
    generators: List[Any]
    rank: int
    n: int
    window: Optional[int]

    def describe(self) -> str:
        ideal = ", ".join(self.ring.format(g) for g in self.generators)
        return f"{self.ring.name}/({ideal}) r={self.rank} n={self.n}"


# Suite requirements on a user-supplied instance

_FIXED_N = {"ex52": 2, "thm64": 2, "cor63": 2, "rem65": 2, "ex66_conjecture": 3}
_PRINCIPAL_SUITES = {"thm32", "rem36", "prop24", "ex52"}
_GRADED_SUITES = {"ex52", "thm64", "cor63", "rem65", "ex66_conjecture"}
_TWO_GENERATOR_SUITES = {"thm64", "ex66_conjecture"}
INSTANCE_SUITES = _PRINCIPAL_SUITES | _GRADED_SUITES | {"thm51"}


def _parseGenerators(ring: RingDescriptor, texts: List[str]) -> List[Any]:
    generators = []
    for i, text in enumerate(texts):
        try:
            generators.append(ring.parse(text))
        except Exception as e:
            raise ValidationError(f"ideal[{i}]", f"cannot read {text!r} in {ring.name}: {e}") from e
    return generators


def _generatorDegrees(ring: RingDescriptor, generators: List[Any]) -> List[int]:
    return [ring.degreeOf(g) or 0 for g in generators]


def unmetRequirement(suite: str, config: ScenarioConfig, ring: RingDescriptor,
                     generators: List[Any]) -> Optional[Tuple[str, str]]:
    """(parameter, reason) for the first requirement of the suite the instance misses, or None."""
    if suite not in INSTANCE_SUITES:
        return None
    if not generators:
        return "ideal", f"{suite} needs ideal generators"
    if config.rank is None:
        return "rank", f"{suite} needs the module rank"
    if config.n is None and suite not in _FIXED_N:
        return "n", f"{suite} needs n"
    if suite in _FIXED_N and config.n not in (None, _FIXED_N[suite]):
        return "n", f"{suite} is stated for n = {_FIXED_N[suite]}"
    if suite in _PRINCIPAL_SUITES and len(generators) != 1:
        return "ideal", f"{suite} needs a principal ideal"
    if suite in _GRADED_SUITES and not ring.isGraded:
        return "ring", f"{suite} needs a graded polynomial ring"
    if suite in _TWO_GENERATOR_SUITES and len(generators) != 2:
        return "ideal", f"{suite} needs a graded ideal with exactly 2 generators, got {len(generators)}"
    if suite == "rem65" and len(generators) not in (1, 2):
        return "ideal", f"rem65 needs 1 or 2 generators, got {len(generators)}"
    if suite == "cor63" and ring.characteristic == 2:
        return "ring", "cor63 needs 2 to be invertible"
    if ring.isGraded and any(ring.degreeOf(g) is None or ring.degreeOf(g) < 1 for g in generators):
        return "ideal", "generators must be homogeneous of positive degree"
    return None


def instanceFor(config: ScenarioConfig, suite: str) -> Optional[ScenarioInstance]:
    """
    The scenario's instance if it applies to the suite.

    For a single suite a missing parameter raises; under 'all' a suite whose
    requirements the instance misses falls back to its built-in grid.

    Raises:
        ValidationError: If a single-suite scenario misses a parameter
    """
    if config.ring is None or suite not in INSTANCE_SUITES:
        return None
    ring = config.ring.build()
    generators = _parseGenerators(ring, config.ideal)
    problem = unmetRequirement(suite, config, ring, generators)
    if problem is not None:
        if config.suite == ALL_SUITES:
            logger.debug("Instance does not apply to %s (%s); using its grid", suite, problem[1])
            return None
        raise ValidationError(*problem)
    n = config.n if config.n is not None else _FIXED_N[suite]
    window = config.window
    if window is None and ring.isGraded:
        window = defaultWindow(_generatorDegrees(ring, generators), n)
    return ScenarioInstance(ring=ring, generators=generators, rank=config.rank, n=n, window=window)


# Parsing

def _rejectDuplicateKeys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result = {}
    for key, value in pairs:
        if key in result:
            raise ParseError("Duplicate key", field=key)
        result[key] = value
    return result


def _firstParameter(error: pydantic.ValidationError) -> Tuple[str, str]:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "scenario"
    return location, first.get("msg", "invalid value")


def scenarioFromDict(data: Dict[str, Any]) -> ScenarioConfig:
    """
    Validate a decoded scenario.

    Raises:
        ValidationError: Naming the first missing or invalid parameter
    """
    try:
        config = ScenarioConfig.model_validate(data)
    except pydantic.ValidationError as e:
        raise ValidationError(*_firstParameter(e)) from e
    if config.ring is not None:
        config.ring.build()
        for suite in config.suites():
            instanceFor(config, suite)
    return config


def parseScenarioText(text: str) -> ScenarioConfig:
    """
    Parse a scenario from JSON text.

    Raises:
        ParseError: Malformed JSON (with its line) or a non-object document
        ValidationError: Naming the missing or invalid parameter
    """
    try:
        data = json.loads(text, object_pairs_hook=_rejectDuplicateKeys)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from e
    if not isinstance(data, dict):
        raise ParseError("A scenario must be a JSON object", line=1)
    return scenarioFromDict(data)


def parseScenario(path: str) -> ScenarioConfig:
    """
    Read and validate a scenario file.

    Args:
        path: Path to a JSON scenario

    Returns:
        Validated ScenarioConfig

    Raises:
        ParseError: If the file cannot be read or is malformed
        ValidationError: Naming the missing or invalid parameter
    """
    scenarioPath = Path(path)
    try:
        text = scenarioPath.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read scenario {path}: {e.strerror or e}") from e
    config = parseScenarioText(text)
    logger.info("Loaded scenario %s for suite %s", path, config.suite)
    return config


def defaultScenario(suite: str, seed: int = 0, window: Optional[int] = None) -> ScenarioConfig:
    """A scenario with no instance: the suite runs its built-in grid."""
    return scenarioFromDict({"suite": suite, "seed": seed, "window": window})
