"""Recursive-descent parser and evaluator for the expression language.

Grammar (whitespace insignificant, binary operators left associative,
"^" tighter than "*", unary "-" tighter than binary operators):

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom | "w" "^" unary
    atom     := rational | "w" | "(" expr ")" | "{" list "|" list "}"
    list     := (expr ("," expr)*)?
    rational := integer ("/" integer)?

"w" (alias: the Greek omega) is the first infinite number.  "{X|Y}" is
a name literal, evaluated to its mediator; "()" only groups.  Rational
literals with a non-power-of-two denominator evaluate to exponent-zero
normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import names
from . import normalform as nf
from .dyadic import Dyadic
from .errors import (EmptyInputError, ParseError, SurrealError,
                     UnbalancedBraceError)

_MAX_DEPTH = 200
_SYMBOLS = set("+-*/^(){}|,")


@dataclass(frozen=True)
class Span:
    start: int
    end: int

    def __str__(self):
        return f"{self.start}..{self.end}"


@dataclass(frozen=True)
class Literal:
    value: object
    span: Span


@dataclass(frozen=True)
class NameLit:
    left: tuple
    right: tuple
    span: Span


@dataclass(frozen=True)
class Neg:
    operand: object
    span: Span


@dataclass(frozen=True)
class Add:
    lhs: object
    rhs: object
    span: Span


@dataclass(frozen=True)
class Sub:
    lhs: object
    rhs: object
    span: Span


@dataclass(frozen=True)
class Mul:
    lhs: object
    rhs: object
    span: Span


@dataclass(frozen=True)
class Div:
    lhs: object
    rhs: object
    span: Span


@dataclass(frozen=True)
class OmegaPow:
    exponent: object
    span: Span


class Token(NamedTuple):
    kind: str
    text: str
    start: int
    end: int

    @property
    def span(self):
        return Span(self.start, self.end)


def _tokenize(text: str) -> list[Token]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("num", text[i:j], i, j))
            i = j
            continue
        if ch in ("w", "ω"):
            toks.append(Token("omega", ch, i, i + 1))
            i += 1
            continue
        if ch in _SYMBOLS:
            toks.append(Token(ch, ch, i, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", Span(i, i + 1),
                         expected=("number", "w", "operator", "bracket"))
    toks.append(Token("eof", "", n, n))
    return toks


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.i = 0
        self.depth = 0

    def peek(self, ahead: int = 0) -> Token:
        k = min(self.i + ahead, len(self.toks) - 1)
        return self.toks[k]

    def take(self, kind: str) -> Token:
        tok = self.toks[self.i]
        if tok.kind != kind:
            if kind in ")}":
                raise UnbalancedBraceError(
                    f"expected {kind!r}", tok.span, expected=(kind,))
            raise ParseError(f"expected {kind!r}", tok.span, expected=(kind,))
        self.i += 1
        return tok

    def _enter(self, span: Span):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError("expression nests too deeply", span)

    def expr(self):
        self._enter(self.peek().span)
        try:
            node = self.term()
            while self.peek().kind in "+-":
                op = self.take(self.peek().kind)
                rhs = self.term()
                cls = Add if op.kind == "+" else Sub
                node = cls(node, rhs, Span(node.span.start, rhs.span.end))
            return node
        finally:
            self.depth -= 1

    def term(self):
        node = self.unary()
        while self.peek().kind in "*/":
            op = self.take(self.peek().kind)
            rhs = self.unary()
            cls = Mul if op.kind == "*" else Div
            node = cls(node, rhs, Span(node.span.start, rhs.span.end))
        return node

    def unary(self):
        self._enter(self.peek().span)
        try:
            if self.peek().kind == "-":
                op = self.take("-")
                inner = self.unary()
                return Neg(inner, Span(op.start, inner.span.end))
            return self.power()
        finally:
            self.depth -= 1

    def power(self):
        if self.peek().kind == "omega" and self.peek(1).kind == "^":
            w = self.take("omega")
            self.take("^")
            inner = self.unary()
            return OmegaPow(inner, Span(w.start, inner.span.end))
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok.kind == "num":
            return self.rational()
        if tok.kind == "omega":
            self.take("omega")
            return Literal(nf.OMEGA, tok.span)
        if tok.kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if tok.kind == "{":
            open_tok = self.take("{")
            left = self.exprlist()
            self.take("|")
            right = self.exprlist()
            close = self.take("}")
            return NameLit(left, right, Span(open_tok.start, close.end))
        if tok.kind in ")}":
            raise UnbalancedBraceError(
                f"unmatched {tok.text!r}", tok.span)
        raise ParseError("expected an expression", tok.span,
                         expected=("number", "w", "-", "(", "{"))

    def exprlist(self):
        if self.peek().kind in ("|", "}"):
            return ()
        items = [self.expr()]
        while self.peek().kind == ",":
            self.take(",")
            items.append(self.expr())
        return tuple(items)

    def rational(self):
        head = self.take("num")
        num = int(head.text)
        end = head.end
        if self.peek().kind == "/" and self.peek(1).kind == "num":
            self.take("/")
            den_tok = self.take("num")
            den = int(den_tok.text)
            end = den_tok.end
            if den == 0:
                raise ParseError("zero denominator in rational literal",
                                 Span(head.start, end))
            value = _literal_value(Fraction(num, den))
        else:
            value = Dyadic(num)
        return Literal(value, Span(head.start, end))


def _literal_value(f: Fraction):
    den = f.denominator
    if den & (den - 1) == 0:
        return Dyadic(f.numerator, den.bit_length() - 1)
    return nf.from_terms([(nf.ZERO, f)])


def parse(text: str):
    """Parse into an expression tree, or raise exactly one ParseError."""
    toks = _tokenize(text)
    if toks[0].kind == "eof":
        raise EmptyInputError("empty input", Span(0, 0))
    p = _Parser(toks)
    node = p.expr()
    trailing = p.peek()
    if trailing.kind != "eof":
        if trailing.kind in ")}":
            raise UnbalancedBraceError(
                f"unmatched {trailing.text!r}", trailing.span)
        raise ParseError("unexpected trailing input", trailing.span)
    return node


def evaluate(node):
    """Bottom-up evaluation to a canonical Surreal.

    Domain errors raised below get the offending node's span attached.
    """
    try:
        if isinstance(node, Literal):
            return node.value
        if isinstance(node, Neg):
            return nf.neg(evaluate(node.operand))
        if isinstance(node, Add):
            return nf.add(evaluate(node.lhs), evaluate(node.rhs))
        if isinstance(node, Sub):
            return nf.sub(evaluate(node.lhs), evaluate(node.rhs))
        if isinstance(node, Mul):
            return nf.mul(evaluate(node.lhs), evaluate(node.rhs))
        if isinstance(node, Div):
            return nf.div(evaluate(node.lhs), evaluate(node.rhs))
        if isinstance(node, OmegaPow):
            return nf.omega_pow(evaluate(node.exponent))
        if isinstance(node, NameLit):
            name = names.Name([evaluate(e) for e in node.left],
                              [evaluate(e) for e in node.right])
            return names.resolve(name)
    except (SurrealError, ZeroDivisionError) as err:
        if getattr(err, "span", None) is None:
            err.span = node.span
        raise
    raise TypeError(f"not an expression node: {node!r}")


render = nf.render
