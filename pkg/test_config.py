import textwrap

import pytest

from projtc.config import Options, loadSpec, parseSpec, parseSpecDocument, renderSpec
from projtc.errors import SpecError


RP3 = textwrap.dedent("""\
    version: 0.1.0
    name: rp3
    base:
      dim: 3
      closedManifold: true
      generators:
        - {name: beta, degree: 1, power: 4}
    bundle:
      rank: 2
      sw: "1 + beta"
    """)


def _replace(old: str, new: str) -> str:
    assert old in RP3
    return RP3.replace(old, new)


def testLoadCorpusSpecs(corpusDir):
    files = sorted(corpusDir.glob("*.yaml"))
    assert len(files) == 13
    for path in files:
        parsed = loadSpec(path.read_text(encoding="utf-8"))
        assert parsed.bundle.name == path.stem
        assert parsed.document.Expected is not None


def testLoadSpec():
    parsed = loadSpec(RP3)
    spec = parsed.bundle
    assert spec.rank == 2
    assert spec.baseDim == 3
    assert spec.closedManifold
    assert spec.totalSw.value == spec.base.parse("1 + beta")
    assert parsed.Options.Pipeline == "auto"
    assert parsed.Options.Checks == []
    assert parsed.twist is None


def testFactoredClass(corpusDir):
    spec = parseSpec(corpusDir.joinpath("torus-l1-l2.yaml").read_text(encoding="utf-8"))
    assert spec.totalSw.value == spec.base.parse("1 + a1 + a2 + a1*a2")


def testTwist(corpusDir):
    parsed = loadSpec(corpusDir.joinpath("rp2-eta-2eps.yaml").read_text(encoding="utf-8"))
    assert parsed.twist == parsed.bundle.base.parse("beta")
    with pytest.raises(SpecError, match="degree-1"):
        loadSpec(RP3 + "options:\n  twist: beta^2\n")


def testMissingTotalClass():
    with pytest.raises(SpecError, match="missing total SW class"):
        loadSpec(_replace('  sw: "1 + beta"\n', ""))
    with pytest.raises(SpecError, match="missing total SW class"):
        loadSpec(_replace('  sw: "1 + beta"\n', "  sw: null\n"))
    with pytest.raises(SpecError, match="missing total SW class") as e:
        loadSpec(_replace('  rank: 2\n  sw: "1 + beta"\n', "").replace("bundle:\n", "bundle: {}\n"))
    assert e.value.line == 8
    with pytest.raises(SpecError, match="missing total SW class"):
        loadSpec(_replace('  rank: 2\n  sw: "1 + beta"\n', ""))


def testRankBoundIsLocated():
    with pytest.raises(SpecError, match="Class exceeds rank bound") as e:
        loadSpec(_replace('sw: "1 + beta"', 'sw: "1 + beta^3"'))
    assert (e.value.line, e.value.column) == (10, 7)
    assert str(e.value).startswith("10:7: ")


def testUndeclaredGenerator():
    with pytest.raises(SpecError, match="Undeclared generator `gamma`") as e:
        loadSpec(_replace('sw: "1 + beta"', 'sw: "1 + gamma"'))
    assert e.value.line == 10


def testExpressionSyntax():
    with pytest.raises(SpecError, match="column"):
        loadSpec(_replace('sw: "1 + beta"', 'sw: "1 + + beta"'))


@pytest.mark.parametrize("old, new, message, line", [
    ("name: beta", "name: vL", "reserved", 7),
    ("degree: 1", "degree: 0", "base.generators.0.degree", 7),
    ("rank: 2", "rank: 0", "bundle.rank", 9),
    ("rank: 2", "rank: 2\n  colour: red", "Unknown field", 10),
    ("version: 0.1.0", "version: 9.0.0", "Version too new", 1),
    ("name: beta, degree: 1, power: 4", "name: beta, degree: 1, power: 4, rhs: beta", "not homogeneous", 7),
])
def testSchemaErrors(old, new, message, line):
    with pytest.raises(SpecError, match=message) as e:
        loadSpec(_replace(old, new))
    assert e.value.line == line


def testRuleErrorIsLocatedAtItsGenerator():
    text = _replace("    - {name: beta, degree: 1, power: 4}\n", (
        "    - {name: beta, degree: 1, power: 4}\n"
        "    - {name: gamma, degree: 1, power: 2}\n"
        "    - name: delta\n"
        "      degree: 2\n"
        "      power: 2\n"
        "      rhs: \"beta\"\n"))
    with pytest.raises(SpecError, match="Rule of `delta` is not homogeneous") as e:
        loadSpec(text)
    assert e.value.line == 12


def testDuplicateGenerator():
    text = _replace("    - {name: beta, degree: 1, power: 4}\n", "    - {name: beta, degree: 1, power: 4}\n    - {name: beta, degree: 1, power: 2}\n")
    with pytest.raises(SpecError, match="Duplicate generator") as e:
        loadSpec(text)
    assert e.value.line == 8


def testInvalidYaml():
    with pytest.raises(SpecError, match="Invalid YAML") as e:
        loadSpec("base: [1, 2\nbundle: {}\n")
    assert e.value.line is not None
    with pytest.raises(SpecError):
        loadSpec("- just\n- a list\n")


def testPipelineMustFitRank():
    with pytest.raises(SpecError, match="Circle pipeline"):
        loadSpec(_replace("rank: 2", "rank: 3") + "options:\n  pipeline: circle\n")
    with pytest.raises(SpecError, match="Projective pipeline"):
        loadSpec(RP3 + "options:\n  pipeline: projective\n")
    with pytest.raises(SpecError, match="options.checks"):
        loadSpec(RP3 + "options:\n  checks: [noSuchCheck]\n")


def testMaxDim(corpusDir):
    text = corpusDir.joinpath("s1-eta-eps15.yaml").read_text(encoding="utf-8")
    assert loadSpec(text).bundle.rank == 16
    with pytest.raises(SpecError, match="exceeds the cap"):
        loadSpec(text, maxDim=10)


def testRenderSpec(corpusDir):
    for path in sorted(corpusDir.glob("*.yaml")):
        parsed = loadSpec(path.read_text(encoding="utf-8"))
        assert parseSpec(renderSpec(parsed.bundle, parsed.Options)) == parsed.bundle


def testRenderNontrivialRule():
    text = textwrap.dedent("""\
        base:
          dim: 2
          generators:
            - {name: t, degree: 1, power: 2}
            - {name: u, degree: 1, power: 2, rhs: "t*u"}
        bundle:
          rank: 3
          sw: "1 + u + t*u"
        """)
    spec = parseSpec(text)
    assert parseSpec(renderSpec(spec, Options(checks=["dualInversion"]))) == spec
    assert parseSpecDocument(renderSpec(spec)).Base.Generators[1].Rhs == "t*u"


def testMinorVersionMismatchWarns():
    with pytest.warns(UserWarning, match="Minor version mismatch"):
        loadSpec(_replace("version: 0.1.0", "version: 0.0.1"))
