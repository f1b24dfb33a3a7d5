from projtc.algebra.ring import Monomial, Element, GeneratorSpec, PresentedRing
from projtc.algebra.expression import parseExpression
from projtc.algebra.linalg import gf2RowEchelon, gf2Rank, gf2InRowSpan
