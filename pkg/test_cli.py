import json
from pathlib import Path

import pytest
from click.testing import CliRunner

import projtc
from projtc.cli import entryPoint
from projtc.validate import CheckKeys


def _invoke(*args):
    return CliRunner().invoke(entryPoint, [str(a) for a in args])


def testComputeJson(corpusDir):
    result = _invoke("compute", "--json", corpusDir.joinpath("s1-eta-eps15.yaml"))
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["lower"] == 30
    assert report["upper"] == 30
    assert report["exact"] is True
    assert report["lower_source"] == "Cor 4.10"
    assert report["upper_source"] == "Thm 5.1"
    assert report["lower_rule"] == "kernel-height"
    assert report["upper_rule"] == "closed-manifold-projective"
    assert report["checks.powerVanishing"] == "pass"


def testComputeIsDeterministic(corpusDir):
    path = corpusDir.joinpath("rp2-cubed-rank3.yaml")
    first, second = _invoke("compute", "--json", path), _invoke("compute", "--json", path)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def testComputeIsDefault(corpusDir):
    result = _invoke(corpusDir.joinpath("torus-l1-l2.yaml"), "--json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert (report["lower"], report["upper"]) == (2, 2)
    assert report["lower_source"] == "Thm 3.8"
    assert report["lower_rule"] == "relative-height"
    assert (report["genus.lower"], report["genus.upper"]) == (1, 1)


def testTwistReport(corpusDir):
    report = json.loads(_invoke("compute", "--json", corpusDir.joinpath("rp2-eta-2eps.yaml")).output)
    assert report["twist.height_v"] == 4
    assert report["twist.height_v_twisted"] == 4
    assert report["dual_sw.m"] == 2
    assert (report["lower"], report["upper"]) == (5, 5)
    assert (report["lower_source"], report["upper_source"]) == ("Cor 4.10", "Thm 5.1")


def testComputeTables(corpusDir):
    result = _invoke("compute", "-q", corpusDir.joinpath("s2-hopf.yaml"))
    assert result.exit_code == 0, result.output
    assert "[1, 1]" in result.output


def testCheck(corpusDir):
    result = _invoke("check", "--json", corpusDir.joinpath("rp2-eta-2eps.yaml"))
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert {f"checks.{key}" for key in CheckKeys} <= set(report)
    assert "fail" not in {report[f"checks.{key}"] for key in CheckKeys}


@pytest.mark.parametrize("path", sorted(Path(__file__).parent.joinpath("configs", "corpus").glob("*.yaml")), ids=lambda p: p.stem)
def testEveryCheckOnCorpus(path):
    result = _invoke("check", "--json", path)
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["checks.kernelEnumeration"] == "pass"
    assert "fail" not in {report[f"checks.{key}"] for key in CheckKeys}


def testCorpus():
    result = _invoke("corpus", "--json")
    assert result.exit_code == 0, result.output
    entries = json.loads(result.output)
    assert len(entries) == 13
    assert {e["status"] for e in entries.values()} == {"ok"}


def testCorpusMismatch(corpusDir, tmp_path):
    text = corpusDir.joinpath("rp2-eta.yaml").read_text(encoding="utf-8")
    tmp_path.joinpath("rp2-eta.yaml").write_text(text.replace("lower: 3", "lower: 4"), encoding="utf-8")
    result = _invoke("corpus", "--json", tmp_path)
    assert result.exit_code == 2


def testBadSpec(tmp_path):
    path = tmp_path.joinpath("bad.yaml")
    path.write_text("base: {dim: 1}\n", encoding="utf-8")
    assert _invoke("compute", path).exit_code == 1
    assert _invoke("check", path).exit_code == 1
    assert _invoke("corpus", "-q", tmp_path).exit_code == 1


def testVersion():
    result = _invoke("--version")
    assert result.exit_code == 0
    assert projtc.__version__ in result.output
