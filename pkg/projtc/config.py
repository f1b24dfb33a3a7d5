"""Bundle spec files: YAML validated by marshmallow, located errors, and rendering back to YAML."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from marshmallow import Schema, fields, post_load, validate, validates, ValidationError, RAISE

from projtc.algebra import Element, GeneratorSpec, PresentedRing, parseExpression
from projtc.bundle import BundleSpec, TotalSwClass
from projtc.consts import Consts
from projtc.errors import ProjtcError, SpecError
from projtc.utils import versionCheck
from projtc.validate.checks import CheckKeys


__all__ = [
    "SpecFile",
    "ParsedSpec",
    "parseSpecDocument",
    "loadSpec",
    "parseSpec",
    "renderSpec",
]


def _swField(value):
    if isinstance(value, str):
        return
    if isinstance(value, list) and len(value) > 0 and all(isinstance(x, str) for x in value):
        return
    raise ValidationError("Total SW class must be an expression or a non-empty list of factor expressions.")


class GeneratorSchema(Schema):
    class Meta:
        unknown = RAISE
    name = fields.Str(required=True, metadata={"description": "Identifier used in expressions. `v`, `vL` and `vR` are reserved."})
    degree = fields.Int(required=True, validate=validate.Range(min=1), metadata={"description": "Positive cohomological degree."})
    power = fields.Int(required=True, validate=validate.Range(min=1), metadata={"description": "Rewrite exponent `e` of the rule `name^e -> rhs`."})
    rhs = fields.Str(load_default="0", dump_default="0", metadata={"description": "Right-hand side, over this and earlier generators."})

    @validates("name")
    def _checkName(self, value, **kwargs):
        if value in Consts.ReservedNames:
            raise ValidationError(f"`{value}` is reserved for enhancement classes.")

    @post_load
    def _(self, data, **kwargs):
        return Generator(**data)


class BaseSchema(Schema):
    class Meta:
        unknown = RAISE
    dim = fields.Int(required=True, validate=validate.Range(min=0), metadata={"description": "Top degree n of the base cohomology."})
    closedManifold = fields.Bool(load_default=False, metadata={"description": "Assert the base is a closed manifold. Never verified."})
    generators = fields.List(fields.Nested(GeneratorSchema()), load_default=list, metadata={"description": "Generators in declaration order."})

    @post_load
    def _(self, data, **kwargs):
        return Base(**data)


class BundleSchema(Schema):
    class Meta:
        unknown = RAISE
    rank = fields.Int(required=True, validate=validate.Range(min=1), metadata={"description": "Rank d + 1 of the vector bundle."})
    sw = fields.Raw(required=True, validate=_swField, error_messages={"required": "missing total SW class", "null": "missing total SW class"}, metadata={"description": "Total Stiefel-Whitney class, or a list of factors whose product it is."})

    @post_load
    def _(self, data, **kwargs):
        return Bundle(**data)


class OptionsSchema(Schema):
    class Meta:
        unknown = RAISE
    pipeline = fields.Str(load_default="auto", validate=validate.OneOf(["auto", "circle", "projective"]), metadata={"description": "Bound pipeline. `auto` routes rank 2 to the circle pipeline and rank >= 3 to the projective one."})
    checks = fields.List(fields.Str(validate=validate.OneOf(CheckKeys)), load_default=list, metadata={"description": "Checks to run alongside `compute`."})
    twist = fields.Str(load_default=None, allow_none=True, metadata={"description": "Degree-1 base class w_1(L) for the twisting report."})

    @post_load
    def _(self, data, **kwargs):
        return Options(**data)


class HeightsSchema(Schema):
    class Meta:
        unknown = RAISE
    vL = fields.Int(load_default=None, allow_none=True)
    vR = fields.Int(load_default=None, allow_none=True)
    sum = fields.Int(load_default=None, allow_none=True)

    @post_load
    def _(self, data, **kwargs):
        return Heights(**data)


class ExpectedSchema(Schema):
    class Meta:
        unknown = RAISE
    lower = fields.Int(load_default=None, allow_none=True)
    upper = fields.Int(load_default=None, allow_none=True)
    heights = fields.Nested(HeightsSchema(), load_default=None, allow_none=True)
    dualSwM = fields.Int(load_default=None, allow_none=True)

    @post_load
    def _(self, data, **kwargs):
        return Expected(**data)


class SpecFileSchema(Schema):
    class Meta:
        unknown = RAISE
    version = fields.Str(load_default=None, allow_none=True, metadata={"description": "Package version the file was written for."})
    name = fields.Str(load_default="", metadata={"description": "Label shown in reports."})
    base = fields.Nested(BaseSchema(), required=True)
    bundle = fields.Nested(BundleSchema(), required=True, error_messages={"required": "missing total SW class", "null": "missing total SW class"})
    options = fields.Nested(OptionsSchema(), load_default=None, allow_none=True)
    expected = fields.Nested(ExpectedSchema(), load_default=None, allow_none=True, metadata={"description": "Values `corpus` compares the report against."})

    @post_load
    def _(self, data, **kwargs):
        return SpecFile(**data)


@dataclass
class Generator:
    name: str
    degree: int
    power: int
    rhs: str = "0"

    @property
    def Name(self) -> str:
        return self.name

    @property
    def Degree(self) -> int:
        return self.degree

    @property
    def Power(self) -> int:
        return self.power

    @property
    def Rhs(self) -> str:
        return self.rhs


@dataclass
class Base:
    dim: int
    closedManifold: bool = False
    generators: List[Generator] = field(default_factory=list)

    @property
    def Dim(self) -> int:
        return self.dim

    @property
    def ClosedManifold(self) -> bool:
        return self.closedManifold

    @property
    def Generators(self) -> List[Generator]:
        return self.generators


@dataclass
class Bundle:
    rank: int
    sw: Union[str, List[str]]

    @property
    def Rank(self) -> int:
        return self.rank

    @property
    def Factors(self) -> List[str]:
        if isinstance(self.sw, str):
            return [self.sw]
        return list(self.sw)


@dataclass
class Options:
    pipeline: str = "auto"
    checks: List[str] = field(default_factory=list)
    twist: Optional[str] = None

    @property
    def Pipeline(self) -> str:
        return self.pipeline

    @property
    def Checks(self) -> List[str]:
        return self.checks

    @property
    def Twist(self) -> Optional[str]:
        return self.twist


@dataclass
class Heights:
    vL: Optional[int] = None
    vR: Optional[int] = None
    sum: Optional[int] = None


@dataclass
class Expected:
    lower: Optional[int] = None
    upper: Optional[int] = None
    heights: Optional[Heights] = None
    dualSwM: Optional[int] = None

    def flat(self) -> Dict[str, int]:
        """Expected values under the keys of `Report.flat()`."""
        result = {"lower": self.lower, "upper": self.upper, "dual_sw.m": self.dualSwM}
        if self.heights is not None:
            result.update({"heights.v_l": self.heights.vL, "heights.v_r": self.heights.vR, "heights.sum": self.heights.sum})
        return {key: value for key, value in result.items() if value is not None}


@dataclass
class SpecFile:
    base: Base
    bundle: Bundle
    version: Optional[str] = None
    name: str = ""
    options: Optional[Options] = None
    expected: Optional[Expected] = None

    @property
    def Base(self) -> Base:
        return self.base

    @property
    def Bundle(self) -> Bundle:
        return self.bundle

    @property
    def Name(self) -> str:
        return self.name

    @property
    def Options(self) -> Options:
        if self.options is None:
            return Options()
        return self.options

    @property
    def Expected(self) -> Optional[Expected]:
        return self.expected

    def serialize(self) -> dict:
        return SpecFileSchema().dump(self)


@dataclass(frozen=True)
class ParsedSpec:
    document: SpecFile
    bundle: BundleSpec
    twist: Optional[Element] = None

    @property
    def Name(self) -> str:
        return self.bundle.name

    @property
    def Options(self) -> Options:
        return self.document.Options


class _Locator:
    """Maps a key path in the document to the 1-based (line, column) of its YAML node."""
    def __init__(self, node: Optional[yaml.Node]):
        self._node = node

    def at(self, *path) -> Tuple[Optional[int], Optional[int]]:
        node = self._node
        if node is None:
            return None, None
        for key in path:
            child = None
            if isinstance(node, yaml.MappingNode):
                child = next((v for k, v in node.value if k.value == key), None)
            elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and 0 <= key < len(node.value):
                child = node.value[key]
            if child is None:
                break
            node = child
        return node.start_mark.line + 1, node.start_mark.column + 1

    def error(self, message: str, *path) -> SpecError:
        return SpecError(message, *self.at(*path))


def _firstMessage(messages: Any, path: Tuple = ()) -> Tuple[Tuple, str]:
    if isinstance(messages, dict):
        # a missing class outranks the other bundle fields
        key = sorted(messages.keys(), key=lambda k: (k != "sw", str(k)))[0]
        return _firstMessage(messages[key], path + (key,))
    if isinstance(messages, list) and messages:
        if all(isinstance(m, str) for m in messages):
            return path, messages[0]
        return _firstMessage(messages[0], path)
    return path, str(messages)


def _compose(text: str) -> Tuple[Any, _Locator]:
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        if mark is None:
            raise SpecError(f"Invalid YAML: {e.problem or e}")
        raise SpecError(f"Invalid YAML: {e.problem or e}", mark.line + 1, mark.column + 1)
    except yaml.YAMLError as e:
        raise SpecError(f"Invalid YAML: {e}")
    return data, _Locator(node)


def parseSpecDocument(text: str) -> SpecFile:
    """Parse and schema-validate a spec file without building any ring.

    Raises:
        SpecError: On YAML or schema errors, located at the offending node.
    """
    return _parseDocument(text)[0]


def _parseDocument(text: str) -> Tuple[SpecFile, _Locator]:
    data, locator = _compose(text)
    if not isinstance(data, dict):
        raise SpecError("Spec must be a mapping with `base` and `bundle` sections.", *locator.at())
    try:
        document = SpecFileSchema().load(data)
    except ValidationError as e:
        path, message = _firstMessage(e.messages)
        joined = ".".join(str(p) for p in path)
        raise locator.error(f"{joined}: {message}" if joined else message, *path)
    if document.version is not None:
        try:
            versionCheck(document.version)
        except SpecError as e:
            raise locator.error(e.message, "version")
        except ValueError as e:
            raise locator.error(f"Invalid version `{document.version}`: {e}", "version")
    return document, locator


def _rawElement(text: str, names: Dict[str, int], width: int) -> Element:
    """Expression as an unreduced element over the first `width` generators."""
    monomials = set()
    for term in parseExpression(text):
        if term.isZero:
            continue
        vector = [0] * width
        for factor in term.factors:
            if names.get(factor.name, width) >= width:
                raise SpecError(f"Undeclared generator `{factor.name}` (column {factor.column}).")
            vector[names[factor.name]] += factor.exponent
        monomials ^= {tuple(vector)}
    return Element(frozenset(monomials))


def _buildBase(base: Base, locator: _Locator) -> PresentedRing:
    names = dict()
    specs = list()
    ring = PresentedRing(specs, base.Dim)
    for i, g in enumerate(base.Generators):
        if g.Name in names:
            raise locator.error(f"Duplicate generator `{g.Name}`.", "base", "generators", i, "name")
        names[g.Name] = i
        try:
            rhs = _rawElement(g.Rhs, names, i + 1)
        except SpecError as e:
            raise locator.error(f"Rule of `{g.Name}`: {e.message}", "base", "generators", i, "rhs")
        except ProjtcError as e:
            raise locator.error(f"Rule of `{g.Name}`: {e}", "base", "generators", i, "rhs")
        specs.append(GeneratorSpec(g.Name, g.Degree, g.Power, rhs))
        try:
            ring = PresentedRing(specs, base.Dim)
        except ProjtcError as e:
            path = ("base", "generators", i) + (("rhs",) if str(e).startswith("Rule of") else ())
            raise locator.error(str(e), *path)
    return ring


def _parseIn(ring: PresentedRing, text: str, locator: _Locator, *path) -> Element:
    try:
        return ring.parse(text)
    except ProjtcError as e:
        raise locator.error(str(e), *path)


def loadSpec(text: str, maxDim: int = Consts.MaxDim) -> ParsedSpec:
    """Parse a spec file into a validated `BundleSpec` plus its options.

    Args:
        text (str): YAML document.
        maxDim (int, optional): Reject bundles whose fiberwise square has dimension n + 2d above it.

    Raises:
        SpecError: With the line and column of the offending node.
    """
    document, locator = _parseDocument(text)
    base = _buildBase(document.Base, locator)
    bundle = document.Bundle
    rank, n = bundle.Rank, document.Base.Dim

    if n + 2 * (rank - 1) > maxDim:
        raise locator.error(f"dim E²_B = {n + 2 * (rank - 1)} exceeds the cap {maxDim} (see `--max-dim`).", "bundle", "rank")

    factors = bundle.Factors
    value = base.one()
    for i, factor in enumerate(factors):
        path = ("bundle", "sw") if isinstance(bundle.sw, str) else ("bundle", "sw", i)
        value = base.mul(value, _parseIn(base, factor, locator, *path))

    pipeline = document.Options.Pipeline
    if pipeline == "circle" and rank != 2:
        raise locator.error(f"Circle pipeline needs rank 2, got {rank}.", "options", "pipeline")
    if pipeline == "projective" and rank < 3:
        raise locator.error(f"Projective pipeline needs rank >= 3, got {rank}.", "options", "pipeline")

    try:
        spec = BundleSpec(base, n, rank, TotalSwClass(value, rank), document.Base.ClosedManifold, document.Name)
    except ProjtcError as e:
        raise locator.error(str(e), "bundle", "sw")

    twist = None
    if document.Options.Twist is not None:
        twist = _parseIn(base, document.Options.Twist, locator, "options", "twist")
        if not base.isHomogeneous(twist) or base.degreeOf(twist) not in (None, 1):
            raise locator.error("Twist must be a degree-1 base class.", "options", "twist")
    return ParsedSpec(document, spec, twist)


def parseSpec(text: str, maxDim: int = Consts.MaxDim) -> BundleSpec:
    return loadSpec(text, maxDim).bundle


def renderSpec(spec: BundleSpec, options: Optional[Options] = None, expected: Optional[Expected] = None) -> str:
    """YAML text that `parseSpec` reads back into an equal `BundleSpec`."""
    base = spec.base
    generators = list()
    for g in base.Generators:
        rhs = base.render(g.rhs.padded(base.NumGenerators))
        generators.append({"name": g.name, "degree": g.degree, "power": g.power, "rhs": rhs})
    document = SpecFile(
        Base(spec.baseDim, spec.closedManifold, [Generator(**g) for g in generators]),
        Bundle(spec.rank, base.render(spec.totalSw.value)),
        name=spec.name,
        options=options,
        expected=expected)
    data = document.serialize()
    data = {key: value for key, value in data.items() if value is not None}
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
