"""Dataflow facts and structural editing over the frontend AST.

def/use sets are computed over whole statement subtrees, so the
reordering safety test is conservative for compound statements. Trees
are immutable: every edit returns a rebuilt function.
"""

from __future__ import annotations

from typing import Iterator

from .ast import (
    Assignment,
    AstFunction,
    Binary,
    Block,
    Call,
    CallStmt,
    Declaration,
    Expr,
    For,
    If,
    Name,
    Param,
    Return,
    Statement,
    Unary,
    While,
)

# Statement kinds that may form a basic block. Control flow (and return,
# which transfers control) ends a block; see the reorder operator.
_STRAIGHT_LINE_KINDS = ("declaration", "assignment", "call")


def expr_uses(e: Expr | None) -> set[str]:
    """Variable names read by an expression. Call targets are not
    variables and are excluded; call arguments are included."""
    if e is None:
        return set()
    if isinstance(e, Name):
        return {e.id}
    if isinstance(e, Unary):
        return expr_uses(e.operand)
    if isinstance(e, Binary):
        return expr_uses(e.left) | expr_uses(e.right)
    if isinstance(e, Call):
        out: set[str] = set()
        for a in e.args:
            out |= expr_uses(a)
        return out
    return set()


def def_use(stmt: Statement) -> tuple[set[str], set[str]]:
    """(defs, uses) of a statement, including everything nested in it."""
    if isinstance(stmt, Declaration):
        return {stmt.name}, expr_uses(stmt.init)
    if isinstance(stmt, Assignment):
        uses = expr_uses(stmt.value)
        if stmt.op != "=":  # compound assignment reads the target too
            uses = uses | {stmt.target}
        return {stmt.target}, uses
    if isinstance(stmt, Return):
        return set(), expr_uses(stmt.value)
    if isinstance(stmt, CallStmt):
        return set(), expr_uses(stmt.call)
    if isinstance(stmt, If):
        defs, uses = def_use(stmt.then)
        if stmt.orelse is not None:
            d2, u2 = def_use(stmt.orelse)
            defs, uses = defs | d2, uses | u2
        return defs, uses | expr_uses(stmt.cond)
    if isinstance(stmt, While):
        defs, uses = def_use(stmt.body)
        return defs, uses | expr_uses(stmt.cond)
    if isinstance(stmt, For):
        defs, uses = def_use(stmt.body)
        for part in (stmt.init, stmt.update):
            if part is not None:
                d2, u2 = def_use(part)
                defs, uses = defs | d2, uses | u2
        return defs, uses | expr_uses(stmt.cond)
    if isinstance(stmt, Block):
        defs, uses = set(), set()
        for child in stmt.statements:
            d2, u2 = def_use(child)
            defs, uses = defs | d2, uses | u2
        return defs, uses
    raise TypeError(f"not a statement: {stmt!r}")


def _expr_has_call(e: Expr | None) -> bool:
    if e is None:
        return False
    if isinstance(e, Call):
        return True
    if isinstance(e, Unary):
        return _expr_has_call(e.operand)
    if isinstance(e, Binary):
        return _expr_has_call(e.left) or _expr_has_call(e.right)
    return False


def has_call(stmt: Statement) -> bool:
    """True iff a call expression appears anywhere in the statement."""
    if isinstance(stmt, Declaration):
        return _expr_has_call(stmt.init)
    if isinstance(stmt, Assignment):
        return _expr_has_call(stmt.value)
    if isinstance(stmt, Return):
        return _expr_has_call(stmt.value)
    if isinstance(stmt, CallStmt):
        return True
    if isinstance(stmt, If):
        return (_expr_has_call(stmt.cond) or has_call(stmt.then)
                or (stmt.orelse is not None and has_call(stmt.orelse)))
    if isinstance(stmt, While):
        return _expr_has_call(stmt.cond) or has_call(stmt.body)
    if isinstance(stmt, For):
        return any(part is not None and has_call(part) for part in (stmt.init, stmt.update)) \
            or _expr_has_call(stmt.cond) or has_call(stmt.body)
    if isinstance(stmt, Block):
        return any(has_call(child) for child in stmt.statements)
    raise TypeError(f"not a statement: {stmt!r}")


def swappable(s1: Statement, s2: Statement) -> bool:
    """Whether two adjacent straight-line statements may be exchanged.

    True iff they have no def-use, use-def or def-def overlap and neither
    contains a call (calls are treated as side-effecting and pinned).
    """
    if has_call(s1) or has_call(s2):
        return False
    d1, u1 = def_use(s1)
    d2, u2 = def_use(s2)
    return not (d1 & u2) and not (u1 & d2) and not (d1 & d2)


# ---------------------------------------------------------------------------
# Tree traversal
# ---------------------------------------------------------------------------

def child_statements(stmt: Statement) -> tuple[Statement, ...]:
    """Directly nested statements (for-header parts are not children)."""
    if isinstance(stmt, If):
        return (stmt.then,) if stmt.orelse is None else (stmt.then, stmt.orelse)
    if isinstance(stmt, (While, For)):
        return (stmt.body,)
    if isinstance(stmt, Block):
        return stmt.statements
    return ()


def iter_statements(fn: AstFunction) -> Iterator[Statement]:
    """All statements in the function, preorder."""
    stack: list[Statement] = [fn.body]
    while stack:
        stmt = stack.pop()
        yield stmt
        stack.extend(reversed(child_statements(stmt)))


def iter_blocks(fn: AstFunction) -> Iterator[Block]:
    for stmt in iter_statements(fn):
        if isinstance(stmt, Block):
            yield stmt


def basic_blocks(block: Block) -> list[list[int]]:
    """Maximal runs of straight-line statement indexes within a block."""
    runs: list[list[int]] = []
    cur: list[int] = []
    for i, stmt in enumerate(block.statements):
        if stmt.kind in _STRAIGHT_LINE_KINDS:
            cur.append(i)
        else:
            if cur:
                runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


# ---------------------------------------------------------------------------
# Structural editing (identity-based, returns a new function)
# ---------------------------------------------------------------------------

def replace_statement(fn: AstFunction, old: Statement, new: Statement) -> AstFunction:
    """Rebuild `fn` with the node `old` (matched by identity) replaced."""

    def walk(stmt: Statement) -> Statement:
        if stmt is old:
            return new
        if isinstance(stmt, Block):
            return Block(tuple(walk(c) for c in stmt.statements))
        if isinstance(stmt, If):
            orelse = None if stmt.orelse is None else walk(stmt.orelse)
            return If(stmt.cond, walk(stmt.then), orelse)
        if isinstance(stmt, While):
            return While(stmt.cond, walk(stmt.body))
        if isinstance(stmt, For):
            return For(stmt.init, stmt.cond, stmt.update, walk(stmt.body))
        return stmt

    return AstFunction(fn.ret_type, fn.name, fn.params, walk(fn.body))


# ---------------------------------------------------------------------------
# Renaming
# ---------------------------------------------------------------------------

def rename_identifiers(fn: AstFunction,
                       var_map: dict[str, str] | None = None,
                       fn_map: dict[str, str] | None = None) -> AstFunction:
    """Rebuild the function with identifiers renamed by namespace.

    `var_map` applies to variable occurrences (declarations, assignment
    targets, reads); `fn_map` applies to the function's own name and to
    call targets. The two namespaces never interact, so a variable that
    happens to share its name with a called function is left alone by
    `fn_map` and vice versa.
    """
    vmap = var_map or {}
    fmap = fn_map or {}

    def ren_expr(e: Expr) -> Expr:
        if isinstance(e, Name):
            return Name(vmap.get(e.id, e.id))
        if isinstance(e, Unary):
            return Unary(e.op, ren_expr(e.operand))
        if isinstance(e, Binary):
            return Binary(e.op, ren_expr(e.left), ren_expr(e.right))
        if isinstance(e, Call):
            return Call(fmap.get(e.func, e.func), tuple(ren_expr(a) for a in e.args))
        return e

    def ren_stmt(s: Statement) -> Statement:
        if isinstance(s, Declaration):
            init = None if s.init is None else ren_expr(s.init)
            return Declaration(s.type, vmap.get(s.name, s.name), init)
        if isinstance(s, Assignment):
            return Assignment(vmap.get(s.target, s.target), s.op, ren_expr(s.value))
        if isinstance(s, If):
            orelse = None if s.orelse is None else ren_stmt(s.orelse)
            return If(ren_expr(s.cond), ren_stmt(s.then), orelse)
        if isinstance(s, While):
            return While(ren_expr(s.cond), ren_stmt(s.body))
        if isinstance(s, For):
            init = None if s.init is None else ren_stmt(s.init)
            cond = None if s.cond is None else ren_expr(s.cond)
            update = None if s.update is None else ren_stmt(s.update)
            return For(init, cond, update, ren_stmt(s.body))
        if isinstance(s, Return):
            return Return(None if s.value is None else ren_expr(s.value))
        if isinstance(s, CallStmt):
            return CallStmt(ren_expr(s.call))
        if isinstance(s, Block):
            return Block(tuple(ren_stmt(c) for c in s.statements))
        raise TypeError(f"not a statement: {s!r}")

    params = tuple(Param(p.type, vmap.get(p.name, p.name)) for p in fn.params)
    return AstFunction(fn.ret_type, fmap.get(fn.name, fn.name), params, ren_stmt(fn.body))


def all_identifiers(fn: AstFunction) -> set[str]:
    """Every identifier appearing in the function, regardless of role."""
    return set(fn.occurrences)
