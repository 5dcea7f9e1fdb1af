"""AST node types for the C-like function subset, plus token emission.

All nodes are frozen dataclasses compared structurally, so two parses of
the same text are `==`. The token walk (`AstFunction.tokens_with_roles`)
is the single source of truth for both the rendered text and the
identifier occurrence table: occurrence indexes are positions in that
stream, which keeps the table consistent with `render` by construction.

The accepted grammar is documented in docs/grammar.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

# Expression precedence, used to re-insert the minimal parentheses needed
# for the render -> parse round trip.
_PRECEDENCE = {
    "||": 1,
    "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, ">": 4, "<=": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}
_UNARY_PRECEDENCE = 7
_PRIMARY_PRECEDENCE = 8

TokenRole = Union[str, None]  # "decl" | "def" | "use" | "fn-name" | None


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class IntLit:
    text: str


@dataclass(frozen=True)
class FloatLit:
    text: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]


Expr = Union[Name, IntLit, FloatLit, Unary, Binary, Call]


# ---------------------------------------------------------------------------
# Statements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Declaration:
    type: str
    name: str
    init: Expr | None = None

    kind = "declaration"


@dataclass(frozen=True)
class Assignment:
    target: str
    op: str  # "=", "+=", "-=", "*=", "/=", "%="
    value: Expr

    kind = "assignment"


@dataclass(frozen=True)
class If:
    cond: Expr
    then: "Statement"
    orelse: "Statement | None" = None

    kind = "if"


@dataclass(frozen=True)
class While:
    cond: Expr
    body: "Statement"

    kind = "while"


@dataclass(frozen=True)
class For:
    init: "Declaration | Assignment | None"
    cond: Expr | None
    update: "Assignment | None"
    body: "Statement"

    kind = "for"


@dataclass(frozen=True)
class Return:
    value: Expr | None = None

    kind = "return"


@dataclass(frozen=True)
class CallStmt:
    call: Call

    kind = "call"


@dataclass(frozen=True)
class Block:
    statements: tuple["Statement", ...]

    kind = "block"


Statement = Union[Declaration, Assignment, If, While, For, Return, CallStmt, Block]


@dataclass(frozen=True)
class Param:
    type: str
    name: str


@dataclass(frozen=True)
class Occurrence:
    """One identifier token: its position in the canonical token stream."""

    name: str
    index: int
    role: str  # "decl" | "def" | "use" | "fn-name"


# ---------------------------------------------------------------------------
# Comments (the natural-language half of a sample)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Comment:
    """A whitespace-split natural-language comment."""

    words: tuple[str, ...]

    @classmethod
    def from_text(cls, text: str) -> "Comment":
        return cls(tuple(text.split()))

    @property
    def text(self) -> str:
        return " ".join(self.words)

    def __len__(self) -> int:
        return len(self.words)


# ---------------------------------------------------------------------------
# Function
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AstFunction:
    ret_type: str
    name: str
    params: tuple[Param, ...]
    body: Block

    @cached_property
    def tokens_with_roles(self) -> tuple[tuple[str, TokenRole], ...]:
        return tuple(_emit_function(self))

    @cached_property
    def tokens(self) -> tuple[str, ...]:
        return tuple(t for t, _ in self.tokens_with_roles)

    @cached_property
    def occurrences(self) -> dict[str, tuple[Occurrence, ...]]:
        """Identifier occurrence table: name -> occurrences in token order."""
        table: dict[str, list[Occurrence]] = {}
        for i, (text, role) in enumerate(self.tokens_with_roles):
            if role is not None:
                table.setdefault(text, []).append(Occurrence(text, i, role))
        return {name: tuple(occs) for name, occs in table.items()}

    @cached_property
    def variables(self) -> tuple[str, ...]:
        """Variable names (decl/def/use roles), in first-occurrence order.

        Call targets and the function's own name are excluded; they live
        in the function-name namespace.
        """
        seen: list[str] = []
        for text, role in self.tokens_with_roles:
            if role in ("decl", "def", "use") and text not in seen:
                seen.append(text)
        return tuple(seen)


def render(fn: AstFunction) -> str:
    """Render a function back to source text.

    The output re-parses to a structurally identical AST.
    """
    return _detokenize(fn.tokens)


def statement_tokens_with_roles(stmt: Statement) -> tuple[tuple[str, TokenRole], ...]:
    """Token stream of a single statement (same walk used for functions)."""
    return tuple(_emit_stmt(stmt))


# ---------------------------------------------------------------------------
# Token emission
# ---------------------------------------------------------------------------

def _emit_function(fn: AstFunction) -> Iterator[tuple[str, TokenRole]]:
    yield fn.ret_type, None
    yield fn.name, "fn-name"
    yield "(", None
    for i, p in enumerate(fn.params):
        if i:
            yield ",", None
        yield p.type, None
        yield p.name, "decl"
    yield ")", None
    yield from _emit_stmt(fn.body)


def _emit_stmt(s: Statement, semi: bool = True) -> Iterator[tuple[str, TokenRole]]:
    if isinstance(s, Declaration):
        yield s.type, None
        yield s.name, "decl"
        if s.init is not None:
            yield "=", None
            yield from _emit_expr(s.init, 0)
        if semi:
            yield ";", None
    elif isinstance(s, Assignment):
        yield s.target, "def"
        yield s.op, None
        yield from _emit_expr(s.value, 0)
        if semi:
            yield ";", None
    elif isinstance(s, If):
        yield "if", None
        yield "(", None
        yield from _emit_expr(s.cond, 0)
        yield ")", None
        yield from _emit_stmt(s.then)
        if s.orelse is not None:
            yield "else", None
            yield from _emit_stmt(s.orelse)
    elif isinstance(s, While):
        yield "while", None
        yield "(", None
        yield from _emit_expr(s.cond, 0)
        yield ")", None
        yield from _emit_stmt(s.body)
    elif isinstance(s, For):
        yield "for", None
        yield "(", None
        if s.init is not None:
            yield from _emit_stmt(s.init, semi=False)
        yield ";", None
        if s.cond is not None:
            yield from _emit_expr(s.cond, 0)
        yield ";", None
        if s.update is not None:
            yield from _emit_stmt(s.update, semi=False)
        yield ")", None
        yield from _emit_stmt(s.body)
    elif isinstance(s, Return):
        yield "return", None
        if s.value is not None:
            yield from _emit_expr(s.value, 0)
        if semi:
            yield ";", None
    elif isinstance(s, CallStmt):
        yield from _emit_expr(s.call, 0)
        if semi:
            yield ";", None
    elif isinstance(s, Block):
        yield "{", None
        for child in s.statements:
            yield from _emit_stmt(child)
        yield "}", None
    else:  # pragma: no cover - exhaustive over Statement
        raise TypeError(f"not a statement: {s!r}")


def _emit_expr(e: Expr, min_prec: int) -> Iterator[tuple[str, TokenRole]]:
    prec = _expr_precedence(e)
    parens = prec < min_prec
    if parens:
        yield "(", None
    if isinstance(e, Name):
        yield e.id, "use"
    elif isinstance(e, (IntLit, FloatLit)):
        yield e.text, None
    elif isinstance(e, Unary):
        yield e.op, None
        yield from _emit_expr(e.operand, _UNARY_PRECEDENCE)
    elif isinstance(e, Binary):
        # Left-associative: the right child needs strictly higher precedence
        # to stay unparenthesized.
        yield from _emit_expr(e.left, prec)
        yield e.op, None
        yield from _emit_expr(e.right, prec + 1)
    elif isinstance(e, Call):
        yield e.func, "fn-name"
        yield "(", None
        for i, a in enumerate(e.args):
            if i:
                yield ",", None
            yield from _emit_expr(a, 0)
        yield ")", None
    else:  # pragma: no cover - exhaustive over Expr
        raise TypeError(f"not an expression: {e!r}")
    if parens:
        yield ")", None


def _expr_precedence(e: Expr) -> int:
    if isinstance(e, Binary):
        return _PRECEDENCE[e.op]
    if isinstance(e, Unary):
        return _UNARY_PRECEDENCE
    return _PRIMARY_PRECEDENCE


# ---------------------------------------------------------------------------
# Detokenization (layout)
# ---------------------------------------------------------------------------

_NO_SPACE_BEFORE = {";", ",", ")"}
_CALL_HEADS = {"if", "while", "for", "return", "else"}


def _detokenize(tokens: tuple[str, ...]) -> str:
    lines: list[tuple[int, list[str]]] = []
    cur: list[str] = []
    indent = 0
    paren = 0
    toks = list(tokens)
    for i, t in enumerate(toks):
        if t == "(":
            paren += 1
        elif t == ")":
            paren -= 1
        if t == "}":
            if cur:
                lines.append((indent, cur))
                cur = []
            indent -= 1
            if i + 1 < len(toks) and toks[i + 1] == "else":
                cur = ["}"]
            else:
                lines.append((indent, ["}"]))
        elif t == "{":
            cur.append("{")
            lines.append((indent, cur))
            cur = []
            indent += 1
        elif t == ";" and paren == 0:
            cur.append(";")
            lines.append((indent, cur))
            cur = []
        else:
            cur.append(t)
    if cur:
        lines.append((indent, cur))
    return "\n".join("    " * ind + _join_line(parts) for ind, parts in lines)


def _join_line(parts: list[str]) -> str:
    out: list[str] = []
    for i, t in enumerate(parts):
        if i == 0:
            out.append(t)
            continue
        prev = parts[i - 1]
        if t in _NO_SPACE_BEFORE:
            out.append(t)
        elif prev == "(":
            out.append(t)
        elif t == "(" and prev not in _CALL_HEADS and (prev[0].isalnum() or prev[0] == "_"):
            out.append(t)  # call or parameter list: f(x)
        else:
            out.append(" " + t)
    return "".join(out)
