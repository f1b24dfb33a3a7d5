"""Finitely presented graded-commutative algebras over GF(2).

A ring is given by an ordered list of generators. Generator `g` of degree `k`
carries a single power rule `g^e -> rhs`, where `rhs` is homogeneous of degree
`e * k` and only involves `g` (with exponent below `e`) and the generators
declared before it. Everything above `topDimension` is zero.

The leading terms `g^e` are pairwise coprime, so the rules form a Gröbner basis
and the normal form of a monomial does not depend on the rewrite order.
"""
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from projtc.errors import PresentationError
from projtc.algebra.expression import parseExpression


__all__ = [
    "Monomial",
    "Element",
    "GeneratorSpec",
    "PresentedRing",
]


Monomial = Tuple[int, ...]

_IDENT = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Element:
    """A formal GF(2) sum of monomials. A monomial is present (coefficient 1) or absent.

    Args:
        monomials (FrozenSet[Monomial]): Exponent vectors, one entry per generator.
    """
    monomials: FrozenSet[Monomial] = frozenset()

    @property
    def IsZero(self) -> bool:
        return not self.monomials

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self.monomials, reverse=True))

    def padded(self, length: int) -> "Element":
        """Read this element over a ring with `length` generators whose leading generators are ours."""
        return Element(frozenset(m + (0,) * (length - len(m)) for m in self.monomials))

    @staticmethod
    def of(*monomials: Monomial) -> "Element":
        result = set()
        for m in monomials:
            result ^= {tuple(m)}
        return Element(frozenset(result))


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator and its power rule `name^power -> rhs`.

    Args:
        name (str): Identifier used in expressions.
        degree (int): Positive cohomological degree.
        power (int): Rewrite exponent `e`.
        rhs (Element): Right-hand side. Its exponent vectors may be shorter than
            the ring's; they are read over the generators declared up to and
            including this one.
    """
    name: str
    degree: int
    power: int
    rhs: Element = Element()


class PresentedRing:
    """A graded-commutative GF(2) algebra with power-rule normal forms, truncated above `topDimension`.

    Args:
        generators (Sequence[GeneratorSpec]): Generators in declaration order.
        topDimension (int): Classes of degree above it vanish.
        baseGenerators (int, optional): Number of leading generators spanning the
            coefficient ring of a Leray-Hirsch extension. Defaults to 0.
        baseDimension (int, optional): Monomials whose degree in the leading
            `baseGenerators` generators exceeds it vanish. Defaults to None.
    """
    def __init__(self, generators: Sequence[GeneratorSpec], topDimension: int, baseGenerators: int = 0, baseDimension: Optional[int] = None):
        if topDimension < 0:
            raise PresentationError(f"Top dimension must be non-negative, got {topDimension}.")
        if baseGenerators < 0 or baseGenerators > len(generators):
            raise PresentationError(f"Invalid number of base generators {baseGenerators}.")
        if (baseGenerators > 0) != (baseDimension is not None):
            raise PresentationError("`baseGenerators` and `baseDimension` must be given together.")
        self._generators = tuple(generators)
        self._topDimension = topDimension
        self._baseGenerators = baseGenerators
        self._baseDimension = baseDimension
        self._names: Dict[str, int] = dict()
        for i, g in enumerate(self._generators):
            self._checkGenerator(i, g)
            self._names[g.name] = i
        n = len(self._generators)
        self._degrees = tuple(g.degree for g in self._generators)
        self._powers = tuple(g.power for g in self._generators)
        self._rhs = tuple(tuple(sorted(g.rhs.padded(n).monomials)) for g in self._generators)
        self._cache: Dict[Monomial, FrozenSet[Monomial]] = dict()
        self._bases: Dict[int, Tuple[Monomial, ...]] = dict()

    def _checkGenerator(self, index: int, g: GeneratorSpec):
        if not _IDENT.match(g.name):
            raise PresentationError(f"Invalid generator name `{g.name}`.")
        if g.name in self._names:
            raise PresentationError(f"Duplicate generator `{g.name}`.")
        if g.degree < 1:
            raise PresentationError(f"Generator `{g.name}` has degree {g.degree}; degrees must be positive.")
        if g.power < 1:
            raise PresentationError(f"Generator `{g.name}` has rewrite exponent {g.power}; it must be positive.")
        target = g.power * g.degree
        for m in g.rhs.monomials:
            if len(m) > index + 1 and any(m[index + 1:]):
                raise PresentationError(f"Rule of `{g.name}` refers to a generator declared after it.")
            if any(e < 0 for e in m):
                raise PresentationError(f"Rule of `{g.name}` has a negative exponent.")
            if len(m) > index and m[index] >= g.power:
                raise PresentationError(f"Rule of `{g.name}` must have exponent below {g.power} in `{g.name}`.")
            degree = sum(e * self._generators[i].degree for i, e in enumerate(m[:index + 1]))
            if degree != target:
                raise PresentationError(f"Rule of `{g.name}` is not homogeneous of degree {target} (found a term of degree {degree}).")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PresentedRing):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self):
        return (self.Names, self._degrees, self._powers, self._rhs, self._topDimension, self._baseGenerators, self._baseDimension)

    def __repr__(self) -> str:
        return f"PresentedRing({', '.join(self.Names)}; top={self._topDimension})"

    @property
    def Generators(self) -> Tuple[GeneratorSpec, ...]:
        return self._generators

    @property
    def Names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self._generators)

    @property
    def NumGenerators(self) -> int:
        return len(self._generators)

    @property
    def TopDimension(self) -> int:
        return self._topDimension

    @property
    def BaseGenerators(self) -> int:
        return self._baseGenerators

    @property
    def BaseDimension(self) -> Optional[int]:
        return self._baseDimension

    def index(self, name: str) -> int:
        if name not in self._names:
            raise PresentationError(f"Undeclared generator `{name}`.")
        return self._names[name]

    # ---------------------------------------------------------------- monomials

    def monomialDegree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self._degrees))

    def _vanishes(self, m: Monomial) -> bool:
        if self.monomialDegree(m) > self._topDimension:
            return True
        if self._baseGenerators > 0:
            baseDegree = sum(e * d for e, d in zip(m[:self._baseGenerators], self._degrees))
            return baseDegree > self._baseDimension
        return False

    def _reduceMonomial(self, m: Monomial) -> FrozenSet[Monomial]:
        if self._vanishes(m):
            return frozenset()
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        # rewrite the last generator over its bound; rules only push exponents to earlier ones
        index = next((i for i in reversed(range(len(m))) if m[i] >= self._powers[i]), None)
        if index is None:
            result = frozenset((m,))
        else:
            rest = list(m)
            rest[index] -= self._powers[index]
            acc = set()
            for r in self._rhs[index]:
                acc ^= self._reduceMonomial(tuple(a + b for a, b in zip(rest, r)))
            result = frozenset(acc)
        self._cache[m] = result
        return result

    def _checkMonomial(self, m: Monomial) -> Monomial:
        n = len(self._generators)
        if len(m) > n:
            if any(m[n:]):
                raise PresentationError(f"Monomial {m} refers to an undeclared generator.")
            m = m[:n]
        if any(e < 0 for e in m):
            raise PresentationError(f"Monomial {m} has a negative exponent.")
        return tuple(m) + (0,) * (n - len(m))

    def collect(self, monomials: Iterable[Monomial]) -> Element:
        """Sum raw monomials (with GF(2) multiplicity) and reduce to normal form."""
        acc = set()
        for m in monomials:
            acc ^= self._reduceMonomial(self._checkMonomial(m))
        return Element(frozenset(acc))

    # --------------------------------------------------------------- arithmetic

    def normalForm(self, raw: Element) -> Element:
        """Reduce every monomial by the power rules and drop everything above the top dimension.

        Exponent vectors shorter than the number of generators are read over the leading generators.

        Raises:
            PresentationError: If a monomial uses an undeclared generator.
        """
        return self.collect(raw.monomials)

    def add(self, x: Element, y: Element) -> Element:
        return self.normalForm(Element(x.monomials ^ y.monomials))

    def mul(self, x: Element, y: Element) -> Element:
        acc = set()
        xs = [self._checkMonomial(a) for a in x.monomials]
        ys = [self._checkMonomial(b) for b in y.monomials]
        for a in xs:
            for b in ys:
                acc ^= self._reduceMonomial(tuple(i + j for i, j in zip(a, b)))
        return Element(frozenset(acc))

    def pow(self, x: Element, k: int) -> Element:
        if k < 0:
            raise PresentationError(f"Negative exponent {k}.")
        result = self.one()
        base = self.normalForm(x)
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k > 0:
                base = self.mul(base, base)
        return result

    def sum(self, elements: Iterable[Element]) -> Element:
        acc = set()
        for x in elements:
            acc ^= x.monomials
        return self.normalForm(Element(frozenset(acc)))

    # ----------------------------------------------------------------- elements

    def zero(self) -> Element:
        return Element()

    def one(self) -> Element:
        return self.collect([(0,) * len(self._generators)])

    def generator(self, name: str) -> Element:
        exponents = [0] * len(self._generators)
        exponents[self.index(name)] = 1
        return self.collect([tuple(exponents)])

    def monomial(self, **exponents: int) -> Element:
        """`ring.monomial(a=2, b=1)` is `a^2*b` in normal form."""
        vector = [0] * len(self._generators)
        for name, e in exponents.items():
            vector[self.index(name)] += e
        return self.collect([tuple(vector)])

    def embed(self, x: Element) -> Element:
        """Read an element of a prefix ring (same leading generators) in this ring."""
        return self.normalForm(x.padded(len(self._generators)))

    def degreeOf(self, x: Element) -> Optional[int]:
        """Degree of a homogeneous element, None for zero.

        Raises:
            PresentationError: If `x` is inhomogeneous.
        """
        degrees = {self.monomialDegree(m) for m in x.monomials}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise PresentationError(f"Element `{self.render(x)}` is not homogeneous.")
        return degrees.pop()

    def isHomogeneous(self, x: Element) -> bool:
        return len({self.monomialDegree(m) for m in x.monomials}) <= 1

    def gradedPart(self, x: Element, degree: int) -> Element:
        return Element(frozenset(m for m in x.monomials if self.monomialDegree(m) == degree))

    # -------------------------------------------------------------------- bases

    def monomialBasis(self, degree: int) -> List[Monomial]:
        """All normal-form monomials of exactly `degree`, in descending lexicographic order.

        Raises:
            PresentationError: If `degree` is outside `[0, topDimension]`.
        """
        if degree < 0 or degree > self._topDimension:
            raise PresentationError(f"Degree {degree} is outside [0, {self._topDimension}].")
        if degree not in self._bases:
            found = list()
            self._enumerate(0, degree, [], found)
            self._bases[degree] = tuple(sorted(found, reverse=True))
        return list(self._bases[degree])

    def _enumerate(self, index: int, remaining: int, prefix: List[int], found: List[Monomial]):
        if index == len(self._generators):
            if remaining == 0 and not self._vanishes(tuple(prefix)):
                found.append(tuple(prefix))
            return
        d = self._degrees[index]
        for e in range(min(self._powers[index] - 1, remaining // d) + 1):
            prefix.append(e)
            self._enumerate(index + 1, remaining - e * d, prefix, found)
            prefix.pop()

    def bettiNumbers(self) -> List[int]:
        return [len(self.monomialBasis(k)) for k in range(self._topDimension + 1)]

    def coordinates(self, x: Element, degree: int) -> np.ndarray:
        """GF(2) coordinate vector of the degree-`degree` part of `x` over `monomialBasis(degree)`."""
        basis = self.monomialBasis(degree)
        position = {m: i for i, m in enumerate(basis)}
        vector = np.zeros(len(basis), dtype=np.uint8)
        for m in self.gradedPart(x, degree).monomials:
            vector[position[m]] = 1
        return vector

    # ------------------------------------------------------------------ text io

    def parse(self, text: str) -> Element:
        """Parse an expression over this ring's generators into normal form.

        Raises:
            ExpressionSyntaxError: On malformed input.
            PresentationError: On an undeclared generator.
        """
        monomials = list()
        for term in parseExpression(text):
            if term.isZero:
                continue
            vector = [0] * len(self._generators)
            for factor in term.factors:
                if factor.name not in self._names:
                    raise PresentationError(f"Undeclared generator `{factor.name}` (column {factor.column}).")
                vector[self._names[factor.name]] += factor.exponent
            monomials.append(tuple(vector))
        return self.collect(monomials)

    def renderMonomial(self, m: Monomial) -> str:
        factors = list()
        for g, e in zip(self._generators, m):
            if e == 1:
                factors.append(g.name)
            elif e > 1:
                factors.append(f"{g.name}^{e}")
        return "*".join(factors) if factors else "1"

    def render(self, x: Element) -> str:
        if not x.monomials:
            return "0"
        ordered = sorted(x.monomials, key=lambda m: (self.monomialDegree(m), tuple(-e for e in m)))
        return " + ".join(self.renderMonomial(m) for m in ordered)
