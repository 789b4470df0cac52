import csv
import io
import json
import random

import pytest

import main
from complexes.homology import homology
from functors.functorTags import Div, Sym
from harness import predictions
from harness.randomInstances import homotopicPair, randomComplexes
from harness.report import CheckRecord, Report, emitReport, renderCsv, renderJson, renderText
from harness.runner import runJob, runJobs, runScenario
from harness.scenarioConfig import SUITES, defaultScenario, instanceFor, parseScenario, parseScenarioText, scenarioFromDict
from harness.suites import SUITE_BUILDERS, SUITE_DESCRIPTIONS, CheckJob, Memo, agree, buildJobs, elementaryDivisors
from koszul.resolutions import conormalFor, quotientHilbertFunction, resolutionFor
from simplicial.normalization import nfg
from utils.errors import IoError, NotChainMap, ParseError, ValidationError
from utils.settings import getSettings

GRADED_XY = {"kind": "graded_poly", "base": "Q", "vars": ["x", "y"]}


# Scenarios

def testMinimalScenarioIsValid():
    config = parseScenarioText('{"suite": "thm32", "ring": {"kind": "integers"}, "ideal": ["2"], "rank": 2, "n": 2}')
    instance = instanceFor(config, "thm32")
    assert instance.generators == [2]
    assert instance.window is None
    assert config.suites() == ["thm32"]


def testAllExpandsToEverySuite():
    assert defaultScenario("all").suites() == list(SUITES)


def testGradedInstanceGetsDefaultWindow():
    config = scenarioFromDict({"suite": "thm64", "ring": GRADED_XY, "ideal": ["x", "y"], "rank": 1})
    instance = instanceFor(config, "thm64")
    assert instance.n == 2
    assert instance.window == 2 * 2 + 2


def testInstanceWindowHoldsEveryPrediction():
    config = scenarioFromDict({"suite": "thm32", "ring": {"kind": "graded_poly", "base": "Q", "vars": ["x"]},
                               "ideal": ["x**3"], "rank": 3, "n": 3})
    instance = instanceFor(config, "thm32")
    conormal = conormalFor(instance.ring, instance.generators)
    quotientTop = max(t for t in range(20) if quotientHilbertFunction(conormal, t))
    for k in range(instance.n + 1):
        degrees = predictions.koszulPrediction(instance.rank, instance.n, k, conormal).degrees
        if degrees:
            assert max(degrees) + quotientTop < instance.window
    assert instance.window == predictions.defaultWindow([3], 3) == 12


def testDefaultWindowOfLinearIdeals():
    assert predictions.defaultWindow([1], 3) == 4
    assert predictions.defaultWindow([1, 1], 2) == 6
    assert predictions.defaultWindow([1, 1], 4) == 9


def testInstanceMissingSuiteRequirementNamesParameter():
    with pytest.raises(ValidationError) as error:
        scenarioFromDict({"suite": "thm64", "ring": GRADED_XY, "ideal": ["x"], "rank": 1})
    assert error.value.parameter == "ideal"


def testUnderAllAnInstanceOnlyAppliesWhereItFits():
    config = scenarioFromDict({"suite": "all", "ring": {"kind": "integers"}, "ideal": ["2"], "rank": 1, "n": 2})
    assert instanceFor(config, "thm32") is not None
    assert instanceFor(config, "thm64") is None


@pytest.mark.parametrize("data, parameter", [
    ({"suite": "thm99"}, "suite"),
    ({"suite": "thm32", "rank": 0}, "rank"),
    ({"suite": "thm32", "colour": "red"}, "colour"),
    ({"suite": "thm32", "ring": {"kind": "integers_mod"}}, "ring.modulus"),
    ({"suite": "thm32", "ring": {"kind": "graded_poly", "base": "F_4", "vars": ["x"]}}, "ring.base"),
    ({"suite": "thm32", "ring": {"kind": "integers"}, "ideal": ["2"], "n": 2}, "rank"),
])
def testInvalidScenarios(data, parameter):
    with pytest.raises(ValidationError) as error:
        scenarioFromDict(data)
    assert error.value.parameter == parameter


def testMalformedJsonReportsLine():
    with pytest.raises(ParseError) as error:
        parseScenarioText("{")
    assert error.value.line == 1


def testDuplicateKeysAreRejected():
    with pytest.raises(ParseError) as error:
        parseScenarioText('{"suite": "thm32", "suite": "rem36"}')
    assert error.value.field == "suite"


def testNonObjectScenarioIsRejected():
    with pytest.raises(ParseError):
        parseScenarioText("[1, 2]")


def testScenarioFileRoundTrip(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"suite": "rem36", "seed": 5}), encoding="utf-8")
    config = parseScenario(str(path))
    assert config.suite == "rem36"
    assert config.seed == 5
    with pytest.raises(ParseError):
        parseScenario(str(tmp_path / "missing.json"))


# Reports

def _record(name, status, computed=1):
    return CheckRecord(name=name, params={"n": 2}, expected={"formula": "f", "value": 1}, computed=computed,
                       status=status, millis=0)


def testEmptyReportRendersAsPassingJson():
    document = json.loads(renderJson(Report(config={"suite": "thm32"})))
    assert document == {"version": "1.0.0", "config": {"suite": "thm32"}, "checks": [], "status": "pass"}


def testCsvHasOneRowPerCheck():
    rows = list(csv.reader(io.StringIO(renderCsv(Report(records=[_record("a", "pass")])))))
    assert rows[0] == ["name", "status", "millis", "params", "expected", "computed"]
    assert rows[1][:3] == ["a", "pass", "0"]
    assert json.loads(rows[1][3]) == {"n": 2}


def testConjecturesDoNotGateStatus():
    report = Report(records=[_record("a", "pass"), _record("b", "conjecture:disagree", 2)])
    assert report.passed
    assert report.counts()["conjecture:disagree"] == 1
    assert report.failures() == []


def testTextReportListsFailures():
    report = Report(records=[_record("a", "pass"), _record("b", "fail", 2)])
    text = renderText(report)
    assert "FAILED b" in text
    assert text.rstrip().endswith("Status: fail")


def testEmitReportWritesFile(tmp_path):
    path = tmp_path / "report.json"
    text = emitReport(Report(), "json", str(path))
    assert path.read_text(encoding="utf-8") == text


def testEmitReportErrors(tmp_path):
    with pytest.raises(ValueError):
        emitReport(Report(), "xml")
    with pytest.raises(IoError):
        emitReport(Report(), "json", str(tmp_path))


# Runner

def _failingChainMap():
    raise NotChainMap(1)


def testBugSignalBecomesFailedRecord():
    record = runJob(CheckJob(name="broken", params={}, formula="f", run=_failingChainMap), timing=False)
    assert record.status == "fail"
    assert record.computed["error"] == "NotChainMap"
    assert record.expected == {"formula": "f", "value": None}


def _crashingCheck():
    raise IndexError("list index out of range")


def testUnexpectedErrorBecomesFailedRecord():
    record = runJob(CheckJob(name="crash", params={}, formula="f", run=_crashingCheck), timing=False)
    assert record.status == "fail"
    assert record.computed == {"error": "IndexError", "message": "list index out of range"}


def testCrashingCheckDoesNotStopTheRun():
    jobs = [
        CheckJob(name="a", params={}, formula="f", run=lambda: agree(1, 1)),
        CheckJob(name="b", params={}, formula="f", run=_crashingCheck),
        CheckJob(name="c", params={}, formula="f", run=lambda: agree(2, 2)),
    ]
    report = runScenario(defaultScenario("lemma22"), workers=2, timing=False, jobs=jobs)
    assert [record.status for record in report.records] == ["pass", "fail", "pass"]
    assert not report.passed
    assert [record.name for record in report.failures()] == ["b"]


def testCrossEffectsSuiteChecksAbwSequence():
    jobs = [job for job in buildJobs(defaultScenario("crosseffects")) if job.name.startswith("crosseffects/abw/")]
    names = {job.name for job in jobs}
    assert "crosseffects/abw/rank/Z/2,2" in names
    assert "crosseffects/abw/exact/Q/3,3" in names
    assert len(jobs) == 16
    report = runScenario(defaultScenario("crosseffects"), timing=False, jobs=jobs)
    assert report.passed
    record = next(r for r in report.records if r.name == "crosseffects/abw/rank/Z/2,2")
    assert record.computed == {"source": 1, "middle": 10, "target": 9}


def testConjectureJobStatus():
    job = CheckJob(name="guess", params={}, formula="f", run=lambda: agree(1, 2), conjecture=True)
    assert runJob(job, timing=False).status == "conjecture:disagree"


def testRecordsAreOrderedByNameForAnyWorkerCount():
    jobs = [CheckJob(name=name, params={}, formula="f", run=lambda: agree(1, 1)) for name in ("c", "a", "b")]
    for workers in (1, 3):
        assert [record.name for record in runJobs(jobs, workers, timing=False)] == ["a", "b", "c"]


def testMemoBuildsOnce():
    memo = Memo()
    calls = []

    def build():
        calls.append(1)
        return 42

    assert memo.get("key", build) == 42
    assert memo.get("key", build) == 42
    assert len(calls) == 1


def testEverySuiteHasBuilderAndDescription():
    assert set(SUITE_BUILDERS) == set(SUITES)
    assert set(SUITE_DESCRIPTIONS) == set(SUITES)


@pytest.mark.parametrize("suite", ["lambda", "crosseffects", "thm32"])
def testBuiltJobNamesAreUniqueAndSorted(suite):
    names = [job.name for job in buildJobs(defaultScenario(suite))]
    assert names
    assert names == sorted(set(names))
    assert all(name.startswith(suite + "/") for name in names)


def testScenarioRunIsReproducible():
    config = scenarioFromDict({"suite": "thm32", "ring": {"kind": "integers"}, "ideal": ["2"], "rank": 2, "n": 2})
    first = runScenario(config, timing=False)
    second = runScenario(config, workers=2, timing=False)
    assert first.passed
    assert renderJson(first) == renderJson(second)
    homologyRecord = next(r for r in first.records if r.name == "thm32/Z:(2)/r=2/n=2/k=0/homology")
    assert homologyRecord.computed == {"free_rank": 0, "torsion": [2, 2, 2]}


@pytest.mark.slow
def testSwapCharacterSuitePasses():
    assert runScenario(defaultScenario("ex52"), timing=False).passed


@pytest.mark.slow
def testCrossEffectSuitePasses():
    report = runScenario(defaultScenario("lemma22"), workers=2, timing=False)
    assert report.failures() == []


# Predictions

def testRankHelpers():
    assert predictions.tensorPowerRanks([1, 1], 2) == [1, 2, 1]
    assert predictions.binomialRanks(1, 1, 2) == [1, 2, 1]
    assert predictions.tensorPowerRanks([2, 3], 3) == predictions.binomialRanks(2, 3, 3)


def testAlternatingDefectOfExactSequence():
    assert predictions.alternatingDefect([{0: 1}, {0: 3}, {0: 2}], 2) == {}
    assert predictions.alternatingDefect([{1: 1}, {1: 3}], 2) == {1: -2}


def testElementaryDivisorsSplitTorsion(Z):
    conormal = conormalFor(Z, [6])
    descriptor = homology(resolutionFor(1, conormal).complex)
    assert elementaryDivisors([descriptor]) == {
        "0": {"free_rank": 0, "elementary_divisors": [2, 3]},
        "1": {"free_rank": 0, "elementary_divisors": []},
    }


def testCharacterPredictionOfSwap(Qx):
    conormal = conormalFor(Qx, [Qx.parse("x")])
    assert predictions.characterPrediction(1, 2, 1, conormal, (2,), 4) == {1: -1}


@pytest.mark.slow
def testSymmetricSquareOfTwoGeneratorResolution(Qxy):
    conormal = conormalFor(Qxy, [Qxy.parse("x"), Qxy.parse("y")])
    descriptor = homology(nfg(resolutionFor(2, conormal).complex, Sym(2)), 5)
    assert descriptor[0].asDict() == {"hilbert": {"0": 3}}
    assert descriptor[1].asDict() == {"hilbert": {"1": 2}}
    assert descriptor[2].asDict() == {"hilbert": {"2": 3}}
    for k in range(5):
        expected = predictions.symSquareTwoGenerators(2, k, conormal).homology(conormal, 5)
        assert descriptor[k].asDict() == expected.asDict()


def testDividedSquareInCharacteristicTwo(F2x):
    conormal = conormalFor(F2x, [F2x.parse("x")])
    descriptor = homology(nfg(resolutionFor(1, conormal).complex, Div(2)), 4)
    assert descriptor[0].asDict() == {"hilbert": {"0": 1, "1": 1}}


# Random instances

def testRandomComplexesAreReproducible(Z):
    first = randomComplexes(3, Z, 4)
    second = randomComplexes(3, Z, 4)
    assert [c.ranks() for c in first] == [c.ranks() for c in second]
    for a, b in zip(first, second):
        assert all(a.differential(k).matrix == b.differential(k).matrix for k in range(1, a.length + 1))


def testHomotopicPairDiffersByHomotopy(Z):
    pair = homotopicPair(random.Random(11), Z)
    firstP, firstQ = pair.components(1)
    secondP, secondQ = pair.components(2)
    assert (secondP - firstP).equals(pair.homotopy.compose(pair.f))
    assert (secondQ - firstQ).equals(pair.f.compose(pair.homotopy))


# Command line

def testListSuites(capsys):
    assert main.main(["list-suites"]) == main.EXIT_PASS
    assert "thm32" in capsys.readouterr().out


def testMissingScenarioFileIsInputError(tmp_path, capsys):
    assert main.main(["thm32", "--config", str(tmp_path / "none.json")]) == main.EXIT_INPUT
    assert "Error" in capsys.readouterr().err


def testInvalidInstanceIsInputError(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"suite": "thm64", "ring": GRADED_XY, "ideal": ["x"], "rank": 1}), encoding="utf-8")
    assert main.main(["thm64", "--config", str(path)]) == main.EXIT_INPUT


def testCommandLineWritesReport(tmp_path):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({"suite": "thm32", "ring": {"kind": "integers"}, "ideal": ["2"], "rank": 1,
                                    "n": 2}), encoding="utf-8")
    out = tmp_path / "report.csv"
    code = main.main(["thm32", "--config", str(scenario), "--out", str(out), "--format", "csv", "--no-timing"])
    assert code == main.EXIT_PASS
    rows = list(csv.reader(io.StringIO(out.read_text(encoding="utf-8"))))
    assert len(rows) > 1
    assert all(row[1] == "pass" for row in rows[1:])


def testSettingsReadEnvironment(monkeypatch):
    monkeypatch.setenv("KHL_JOBS", "4")
    monkeypatch.setenv("KHL_FORMAT", "CSV")
    settings = getSettings(reload=True)
    assert settings.jobs == 4
    assert settings.outputFormat == "csv"

    monkeypatch.setenv("KHL_JOBS", "many")
    monkeypatch.delenv("KHL_FORMAT")
    settings = getSettings(reload=True)
    assert settings.jobs == 1
    assert settings.outputFormat == "json"
