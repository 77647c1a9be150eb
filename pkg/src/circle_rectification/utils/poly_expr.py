"""
Polynomial expressions in k and m.

Grammar (whitespace insensitive):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := 'k' | 'm' | rational | '(' expr ')' | '-' atom
    rational := int ('/' uint)?

Unary minus is part of the atom, so "-k^2" is (-k)^2 = k^2 and "-2^2"
is 4. Literals are rationals only, so lowering to BivarPoly is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Union

from ..taylor.polynomials import BivarPoly, to_text
from .exceptions import ExpressionSyntaxError, ZeroDenominatorError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class RationalLit:
    num: int
    den: int = 1


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class Add:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Sub:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Mul:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Var, RationalLit, Neg, Add, Sub, Mul, Pow]

END = "end of input"
INTEGER = "integer"
ATOM_START = frozenset({"k", "m", INTEGER, "(", "-"})


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def tokenize(src: str) -> List[Token]:
    """Split ``src`` into tokens; offsets are byte offsets into its UTF-8 encoding."""
    tokens = []
    i = 0
    offset = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            offset += len(ch.encode("utf-8"))
            continue
        if ch.isascii() and ch.isdigit():
            start = i
            while i < len(src) and src[i].isascii() and src[i].isdigit():
                i += 1
            tokens.append(Token(INTEGER, src[start:i], offset))
            offset += i - start
            continue
        kind = ch if ch in "km+-*/^()" else "invalid"
        tokens.append(Token(kind, ch, offset))
        i += 1
        offset += len(ch.encode("utf-8"))
    tokens.append(Token(END, "", offset))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def fail(self, expected: FrozenSet[str]):
        token = self.current
        found = "end of input" if token.kind == END else repr(token.text)
        raise ExpressionSyntaxError(f"Unexpected {found}", token.offset, expected, self.src)

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self.fail(frozenset({kind}))
        return self.advance()

    def parse(self) -> PolyExpr:
        expr = self.expr()
        if self.current.kind != END:
            self.fail(frozenset({"+", "-", "*", END}))
        return expr

    def expr(self) -> PolyExpr:
        node = self.term()
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> PolyExpr:
        node = self.factor()
        while self.current.kind == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> PolyExpr:
        node = self.atom()
        if self.current.kind == "^":
            self.advance()
            node = Pow(node, int(self.expect(INTEGER).text))
        return node

    def atom(self) -> PolyExpr:
        kind = self.current.kind
        if kind in ("k", "m"):
            return Var(self.advance().kind)
        if kind == INTEGER:
            return self.rational()
        if kind == "(":
            self.advance()
            node = self.expr()
            if self.current.kind != ")":
                self.fail(frozenset({")", "+", "-", "*"}))
            self.advance()
            return node
        if kind == "-":
            self.advance()
            return Neg(self.atom())
        self.fail(ATOM_START)

    def rational(self) -> RationalLit:
        num = int(self.advance().text)
        if self.current.kind != "/":
            return RationalLit(num)
        self.advance()
        token = self.expect(INTEGER)
        den = int(token.text)
        if den == 0:
            raise ZeroDenominatorError("Zero denominator", token.offset, frozenset(), self.src)
        return RationalLit(num, den)


def parse_poly_expr(src: str) -> PolyExpr:
    """
    Parse a polynomial expression in k and m.

    Args:
        src: Expression text, e.g. "k^2*m - 1/3"

    Returns:
        PolyExpr: Abstract syntax tree

    Raises:
        ExpressionSyntaxError: With the byte offset and the expected tokens
        ZeroDenominatorError: If a rational literal has denominator 0
    """
    return _Parser(src).parse()


def lower(expr: PolyExpr) -> BivarPoly:
    """Exact BivarPoly of an expression tree."""
    if isinstance(expr, Var):
        return BivarPoly.k() if expr.name == "k" else BivarPoly.m()
    if isinstance(expr, RationalLit):
        return BivarPoly.constant(Fraction(expr.num, expr.den))
    if isinstance(expr, Neg):
        return -lower(expr.operand)
    if isinstance(expr, Add):
        return lower(expr.left) + lower(expr.right)
    if isinstance(expr, Sub):
        return lower(expr.left) - lower(expr.right)
    if isinstance(expr, Mul):
        return lower(expr.left) * lower(expr.right)
    if isinstance(expr, Pow):
        return lower(expr.base) ** expr.exponent
    raise TypeError(f"Not an expression node: {expr!r}")


def parse_poly(src: str) -> BivarPoly:
    """Parse and lower in one step."""
    return lower(parse_poly_expr(src))


def canonical_text(src: str) -> str:
    """Canonical printed form of an expression; parses back to the same polynomial."""
    return to_text(parse_poly(src))
