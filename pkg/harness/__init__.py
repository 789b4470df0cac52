"""Harness module: scenarios, verification suites, parallel runner and reports."""

from harness.scenarioConfig import (
    ALL_SUITES, SUITES, RingSpec, ScenarioConfig, ScenarioInstance, defaultScenario, instanceFor, parseScenario,
    parseScenarioText, scenarioFromDict,
)
from harness import predictions
from harness.randomInstances import HomotopicPair, homotopicPairs, randomComplexes, randomGradedComplexes, randomMap
from harness.report import REPORT_VERSION, CheckRecord, Report, emitReport, renderCsv, renderJson, renderText
from harness.suites import SUITE_BUILDERS, SUITE_DESCRIPTIONS, CheckJob, CheckOutcome, buildJobs
from harness.runner import runJob, runJobs, runScenario

__version__ = REPORT_VERSION

__all__ = [
    "ALL_SUITES", "SUITES", "RingSpec", "ScenarioConfig", "ScenarioInstance", "defaultScenario", "instanceFor",
    "parseScenario", "parseScenarioText", "scenarioFromDict", "predictions", "HomotopicPair", "homotopicPairs",
    "randomComplexes", "randomGradedComplexes", "randomMap", "REPORT_VERSION", "CheckRecord", "Report",
    "emitReport", "renderCsv", "renderJson", "renderText", "SUITE_BUILDERS", "SUITE_DESCRIPTIONS", "CheckJob",
    "CheckOutcome", "buildJobs", "runJob", "runJobs", "runScenario", "__version__",
]
