"""Recursive-descent parser for the C-like function subset.

One function per input. Grammar reference: docs/grammar.md.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CodeclError
from .ast import (
    Assignment,
    AstFunction,
    Binary,
    Block,
    Call,
    CallStmt,
    Declaration,
    Expr,
    FloatLit,
    For,
    If,
    IntLit,
    Name,
    Param,
    Return,
    Unary,
    While,
)

TYPE_KEYWORDS = {"int", "float", "long", "double", "char", "bool", "void"}
CONTROL_KEYWORDS = {"if", "else", "while", "for", "return"}
KEYWORDS = TYPE_KEYWORDS | CONTROL_KEYWORDS

_PUNCT = [
    "<=", ">=", "==", "!=", "&&", "||", "+=", "-=", "*=", "/=", "%=",
    "(", ")", "{", "}", ",", ";", "=", "<", ">", "+", "-", "*", "/", "%", "!",
]
_ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%="}


class ParseError(CodeclError):
    """Malformed input, with the 1-based line/column of the offending token."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # "word" | "int" | "float" | "punct" | "eof"
    text: str
    line: int
    col: int


def _lex(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("word", source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            kind = "int"
            if j < n - 0 and j < n and source[j] == "." and j + 1 < n and source[j + 1].isdigit():
                kind = "float"
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            tokens.append(_Token(kind, source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if source.startswith(p, i):
                tokens.append(_Token("punct", p, line, start_col))
                col += len(p)
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.cur.line, self.cur.col)

    def advance(self) -> _Token:
        tok = self.cur
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.cur.text == text and self.cur.kind != "eof":
            self.advance()
            return True
        return False

    def expect(self, text: str) -> _Token:
        if self.cur.text != text or self.cur.kind == "eof":
            raise self.error(f"expected {text!r}, found {self.cur.text!r}" if self.cur.kind != "eof"
                             else f"expected {text!r}, found end of input")
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> str:
        tok = self.cur
        if tok.kind != "word" or tok.text in KEYWORDS:
            raise self.error(f"expected {what}, found {tok.text!r}" if tok.kind != "eof"
                             else f"expected {what}, found end of input")
        self.advance()
        return tok.text

    def expect_type(self) -> str:
        tok = self.cur
        if tok.kind != "word" or tok.text not in TYPE_KEYWORDS:
            raise self.error(f"expected a type keyword, found {tok.text!r}" if tok.kind != "eof"
                             else "expected a type keyword, found end of input")
        self.advance()
        return tok.text

    # -- grammar productions -------------------------------------------------

    def function(self) -> AstFunction:
        ret_type = self.expect_type()
        name = self.expect_ident("function name")
        self.expect("(")
        params: list[Param] = []
        if not self.accept(")"):
            while True:
                ptype = self.expect_type()
                pname = self.expect_ident("parameter name")
                params.append(Param(ptype, pname))
                if self.accept(")"):
                    break
                self.expect(",")
        body = self.block()
        if self.cur.kind != "eof":
            raise self.error(f"trailing input after function body: {self.cur.text!r}")
        return AstFunction(ret_type, name, tuple(params), body)

    def block(self) -> Block:
        self.expect("{")
        statements: list = []
        while not self.accept("}"):
            if self.cur.kind == "eof":
                raise self.error("unexpected end of input, expected '}'")
            statements.append(self.statement())
        return Block(tuple(statements))

    def statement(self):
        tok = self.cur
        if tok.text in TYPE_KEYWORDS:
            stmt = self.declaration()
            self.expect(";")
            return stmt
        if tok.text == "if":
            return self.if_statement()
        if tok.text == "while":
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            return While(cond, self.statement())
        if tok.text == "for":
            return self.for_statement()
        if tok.text == "return":
            self.advance()
            value = None if self.cur.text == ";" else self.expression()
            self.expect(";")
            return Return(value)
        if tok.text == "{":
            return self.block()
        if tok.kind == "word" and tok.text not in KEYWORDS:
            nxt = self.peek().text
            if nxt in _ASSIGN_OPS:
                stmt = self.assignment()
                self.expect(";")
                return stmt
            if nxt == "(":
                name = self.expect_ident()
                call = self.call_tail(name)
                self.expect(";")
                return CallStmt(call)
        raise self.error(f"expected a statement, found {tok.text!r}" if tok.kind != "eof"
                         else "expected a statement, found end of input")

    def declaration(self) -> Declaration:
        dtype = self.expect_type()
        name = self.expect_ident("variable name")
        init = self.expression() if self.accept("=") else None
        return Declaration(dtype, name, init)

    def assignment(self) -> Assignment:
        target = self.expect_ident("assignment target")
        op = self.cur.text
        if op not in _ASSIGN_OPS:
            raise self.error(f"expected an assignment operator, found {op!r}")
        self.advance()
        return Assignment(target, op, self.expression())

    def if_statement(self) -> If:
        self.expect("if")
        self.expect("(")
        cond = self.expression()
        self.expect(")")
        then = self.statement()
        orelse = self.statement() if self.accept("else") else None
        return If(cond, then, orelse)

    def for_statement(self) -> For:
        self.expect("for")
        self.expect("(")
        init = None
        if self.cur.text != ";":
            init = self.declaration() if self.cur.text in TYPE_KEYWORDS else self.assignment()
        self.expect(";")
        cond = None if self.cur.text == ";" else self.expression()
        self.expect(";")
        update = None if self.cur.text == ")" else self.assignment()
        self.expect(")")
        return For(init, cond, update, self.statement())

    def call_tail(self, name: str) -> Call:
        self.expect("(")
        args: list[Expr] = []
        if not self.accept(")"):
            while True:
                args.append(self.expression())
                if self.accept(")"):
                    break
                self.expect(",")
        return Call(name, tuple(args))

    # -- expressions (precedence climbing) ------------------------------------

    _BINOP_PRECEDENCE = {
        "||": 1, "&&": 2,
        "==": 3, "!=": 3,
        "<": 4, ">": 4, "<=": 4, ">=": 4,
        "+": 5, "-": 5,
        "*": 6, "/": 6, "%": 6,
    }

    def expression(self) -> Expr:
        return self.binary(1)

    def binary(self, min_prec: int) -> Expr:
        left = self.unary()
        while True:
            op = self.cur.text
            prec = self._BINOP_PRECEDENCE.get(op)
            if self.cur.kind != "punct" or prec is None or prec < min_prec:
                return left
            self.advance()
            right = self.binary(prec + 1)
            left = Binary(op, left, right)

    def unary(self) -> Expr:
        if self.cur.kind == "punct" and self.cur.text in ("-", "!"):
            op = self.advance().text
            return Unary(op, self.unary())
        return self.primary()

    def primary(self) -> Expr:
        tok = self.cur
        if tok.kind == "int":
            self.advance()
            return IntLit(tok.text)
        if tok.kind == "float":
            self.advance()
            return FloatLit(tok.text)
        if tok.text == "(":
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        if tok.kind == "word" and tok.text not in KEYWORDS:
            name = self.expect_ident()
            if self.cur.text == "(":
                return self.call_tail(name)
            return Name(name)
        raise self.error(f"expected an expression, found {tok.text!r}" if tok.kind != "eof"
                         else "expected an expression, found end of input")


def parse_function(source: str) -> AstFunction:
    """Parse one function definition; raise ParseError with line/column."""
    return _Parser(_lex(source)).function()
