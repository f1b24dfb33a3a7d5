"""Recursive-descent parser for class expressions.

Grammar (whitespace is insignificant):

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := "0" | "1" | ident ("^" uint)?
    ident  := [A-Za-z][A-Za-z0-9_]*

There are no parentheses, so every term is a single monomial. The parser only
produces sparse monomials; resolving names against a ring happens in
`PresentedRing.parse`.
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from projtc.errors import ExpressionSyntaxError


__all__ = [
    "Factor",
    "Term",
    "parseExpression",
]


_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[+*^]))")


@dataclass(frozen=True)
class Factor:
    name: str
    exponent: int
    # 1-based column of the identifier, for diagnostics
    column: int


@dataclass(frozen=True)
class Term:
    """A product of factors. `isZero` marks a term containing the factor `0`."""
    factors: Tuple[Factor, ...]
    isZero: bool = False


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = list()
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            column = position + 1 + (len(text[position:]) - len(text[position:].lstrip()))
            raise ExpressionSyntaxError(f"Unexpected character `{text[column - 1]}`", column)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        if self._index < len(self._tokens):
            return self._tokens[self._index]
        return None

    def _next(self) -> Tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise ExpressionSyntaxError("Unexpected end of expression", len(self._text) + 1)
        self._index += 1
        return token

    def _atOp(self, op: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "op" and token[1] == op

    def expr(self) -> List[Term]:
        terms = [self.term()]
        while self._atOp("+"):
            self._next()
            terms.append(self.term())
        token = self._peek()
        if token is not None:
            raise ExpressionSyntaxError(f"Unexpected `{token[1]}`", token[2])
        return terms

    def term(self) -> Term:
        factors = list()
        isZero = False
        factor = self.factor()
        while True:
            if factor == 0:
                isZero = True
            elif isinstance(factor, Factor):
                factors.append(factor)
            if not self._atOp("*"):
                break
            self._next()
            factor = self.factor()
        return Term(tuple(factors), isZero)

    def factor(self):
        kind, value, column = self._next()
        if kind == "number":
            if value not in ("0", "1"):
                raise ExpressionSyntaxError(f"Only the constants `0` and `1` are allowed, got `{value}`", column)
            return int(value)
        if kind != "ident":
            raise ExpressionSyntaxError(f"Expected a generator or a constant, got `{value}`", column)
        exponent = 1
        if self._atOp("^"):
            self._next()
            expKind, expValue, expColumn = self._next()
            if expKind != "number":
                raise ExpressionSyntaxError(f"Expected an exponent after `^`, got `{expValue}`", expColumn)
            exponent = int(expValue)
        return Factor(value, exponent, column)


def parseExpression(text: str) -> List[Term]:
    """Parse `text` into its list of terms.

    Args:
        text (str): Expression following the grammar of this module.

    Raises:
        ExpressionSyntaxError: With the 1-based column of the offending token.

    Returns:
        List[Term]: One entry per `+`-separated term, in source order.
    """
    if text is None or text.strip() == "":
        raise ExpressionSyntaxError("Empty expression", 1)
    return _Parser(text).expr()
