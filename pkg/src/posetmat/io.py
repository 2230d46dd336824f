"""Text formats: matrix files, DOT export, and the recipe expression DSL.

Matrix file layout::

    # optional comments anywhere
    3
    labels: 5 6 7
    1 0 0
    1 1 0
    1 0 1

The first significant line is the order, an optional ``labels:`` line
names the elements, then one space-separated 0/1 row per line.  The
labels line is omitted on output when the labels are the default 1..n.

Recipe grammar (whitespace optional)::

    expr    := operand OPER operand
    operand := NAME | '(' expr ')'
    OPER    := ('sq@' | 'up@' | 'dn@') INT

Names resolve against a symbol table; ``X*`` means the dual of ``X``
unless the table has a literal ``X*`` entry.  C2 (chain) and I2
(antichain) are always available.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .compose import CompositionKind, CompositionResult, compose
from .core import (
    InvalidPosetError,
    PosetMatrix,
    default_labels,
    dual,
    hasse_edges,
    validate_axioms,
)
from .generators import C2, I2


class MatrixParseError(Exception):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_candidate(text: str) -> tuple[tuple[tuple[int, ...], ...], tuple[str, ...] | None]:
    """Parse the text format without validating the order axioms."""
    items: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            items.append((lineno, line))
    if not items:
        raise MatrixParseError("empty input", 1)
    lineno, head = items[0]
    try:
        order = int(head)
    except ValueError:
        raise MatrixParseError(f"expected the order, got {head!r}", lineno) from None
    if order < 1:
        raise MatrixParseError(f"order must be positive, got {order}", lineno)
    rest = items[1:]
    labels: tuple[str, ...] | None = None
    if rest and rest[0][1].startswith("labels:"):
        lineno, line = rest[0]
        labels = tuple(line[len("labels:"):].split())
        if len(labels) != order:
            raise MatrixParseError(
                f"{len(labels)} labels for order {order}", lineno
            )
        if len(set(labels)) != order:
            raise MatrixParseError("labels must be distinct", lineno)
        rest = rest[1:]
    if len(rest) != order:
        where = rest[-1][0] if rest else lineno
        raise MatrixParseError(
            f"expected {order} rows, found {len(rest)}", where
        )
    rows = []
    for lineno, line in rest:
        cells = line.split()
        if len(cells) != order:
            raise MatrixParseError(
                f"row has {len(cells)} entries, expected {order}", lineno
            )
        row = []
        for cell in cells:
            if cell not in ("0", "1"):
                raise MatrixParseError(f"entry {cell!r} is not 0 or 1", lineno)
            row.append(int(cell))
        rows.append(tuple(row))
    return tuple(rows), labels


def parse_matrix(text: str) -> PosetMatrix:
    """Parse, validate the axioms, and require lower-triangular storage."""
    rows, labels = parse_candidate(text)
    return PosetMatrix.from_rows(rows, labels)


def serialize_matrix(m: PosetMatrix) -> str:
    """Canonical text for a matrix; round-trips through parse_matrix."""
    lines = [str(m.order)]
    if m.labels != default_labels(m.order):
        lines.append("labels: " + " ".join(m.labels))
    for row in m.rel:
        lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def to_dot(m: PosetMatrix) -> str:
    """Covering relation as a DOT digraph, edges directed lower -> upper."""
    lines = ["digraph poset {"]
    for label in m.labels:
        lines.append(f'  "{label}";')
    for lower, upper in hasse_edges(m):
        lines.append(f'  "{m.labels[lower]}" -> "{m.labels[upper]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


class RecipeError(Exception):
    """Recipe text failed to parse, resolve, or evaluate."""

    def __init__(self, message: str, span: tuple[int, int]):
        super().__init__(f"{message} (at {span[0]}..{span[1]})")
        self.span = span


@dataclass(frozen=True)
class RecipeRef:
    name: str
    matrix: PosetMatrix
    span: tuple[int, int]


@dataclass(frozen=True)
class RecipeCall:
    left: "RecipeExpr"
    kind: CompositionKind
    position: int
    right: "RecipeExpr"
    span: tuple[int, int]


RecipeExpr = Union[RecipeRef, RecipeCall]

_TOKEN = re.compile(
    r"\s*(?:(?P<oper>(sq|up|dn)@(\d+))|(?P<name>[A-Za-z_][A-Za-z0-9_]*\*?)|(?P<paren>[()]))"
)

BUILTINS: dict[str, PosetMatrix] = {"C2": C2, "I2": I2}


def _tokenize(text: str) -> list[tuple[str, str, tuple[int, int]]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == match.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise RecipeError(f"unrecognized input {stripped[:10]!r}", (at, at + 1))
        span = (match.end() - len(match.group().lstrip()), match.end())
        if match.group("oper"):
            tokens.append(("oper", match.group("oper"), span))
        elif match.group("name"):
            tokens.append(("name", match.group("name"), span))
        else:
            tokens.append(("paren", match.group("paren"), span))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens, symbols: Mapping[str, PosetMatrix], length: int):
        self.tokens = tokens
        self.symbols = symbols
        self.at = 0
        self.length = length

    def peek(self):
        return self.tokens[self.at] if self.at < len(self.tokens) else None

    def take(self):
        token = self.peek()
        if token is None:
            raise RecipeError("unexpected end of recipe", (self.length, self.length))
        self.at += 1
        return token

    def resolve(self, name: str, span) -> PosetMatrix:
        if name in self.symbols:
            return self.symbols[name]
        if name.endswith("*") and name[:-1] in self.symbols:
            return dual(self.symbols[name[:-1]])
        raise RecipeError(f"unknown name {name!r}", span)

    def operand(self) -> RecipeExpr:
        kind, value, span = self.take()
        if kind == "name":
            return RecipeRef(value, self.resolve(value, span), span)
        if kind == "paren" and value == "(":
            expr = self.expr()
            closer = self.take()
            if closer[0] != "paren" or closer[1] != ")":
                raise RecipeError("expected ')'", closer[2])
            return expr
        raise RecipeError(f"expected a name or '(', got {value!r}", span)

    def expr(self) -> RecipeExpr:
        left = self.operand()
        token = self.take()
        if token[0] != "oper":
            raise RecipeError(f"expected an operation, got {token[1]!r}", token[2])
        op, _, pos_text = token[1].partition("@")
        right = self.operand()
        return RecipeCall(
            left, CompositionKind(op), int(pos_text), right,
            (left.span[0], right.span[1]),
        )


def parse_recipe(text: str, symbols: Mapping[str, PosetMatrix] | None = None) -> RecipeExpr:
    """Parse a recipe expression, resolving every name immediately.

    The symbol table extends (and may shadow) the C2/I2 builtins.
    """
    table = dict(BUILTINS)
    if symbols:
        table.update(symbols)
    tokens = _tokenize(text)
    if not tokens:
        raise RecipeError("empty recipe", (0, len(text)))
    parser = _Parser(tokens, table, len(text))
    expr = parser.expr()
    leftover = parser.peek()
    if leftover is not None:
        raise RecipeError(
            f"trailing input {leftover[1]!r}; nest with parentheses", leftover[2]
        )
    return expr


def _eval(expr: RecipeExpr) -> PosetMatrix:
    if isinstance(expr, RecipeRef):
        return expr.matrix
    left = _eval(expr.left)
    right = _eval(expr.right)
    if not 1 <= expr.position <= left.order:
        raise RecipeError(
            f"position {expr.position} out of range 1..{left.order}", expr.span
        )
    result = compose(left, expr.kind, expr.position, right)
    try:
        return result.poset()
    except InvalidPosetError as err:
        raise RecipeError(f"subexpression is not a valid poset: {err}", expr.span) from err


def eval_recipe(expr: RecipeExpr) -> CompositionResult:
    """Evaluate a parsed recipe; the top level keeps its validation report."""
    if isinstance(expr, RecipeRef):
        m = expr.matrix
        return CompositionResult(m.rel, m.labels, validate_axioms(m.rel))
    left = _eval(expr.left)
    right = _eval(expr.right)
    if not 1 <= expr.position <= left.order:
        raise RecipeError(
            f"position {expr.position} out of range 1..{left.order}", expr.span
        )
    return compose(left, expr.kind, expr.position, right)
