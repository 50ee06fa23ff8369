"""A tiny expression language for multilinear-map composites.

Grammar (whitespace-insensitive)::

    expr   := term (COMPOSE term)*
    term   := factor (TENSOR factor)*
    factor := IDENT | '(' expr ')'

COMPOSE is '∘' or the standalone identifier 'o'; TENSOR is '⊗' or the
three-character ASCII token '(x)'.  COMPOSE binds looser than TENSOR.  Chains
are represented right-associated; both operations are associative, so nothing
depends on which way a flat chain leans.  Identifiers beginning with ``id_``
denote identity maps of the named space.

Offsets and spans are byte offsets into the UTF-8 encoding of the source
string, so ASCII and Unicode spellings of the same expression report
positions consistently with what a shell or editor shows for the raw bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import EvalDimensionMismatch, ParseError, UnboundName
from .linalg import DimensionMismatch, MultiLinMap, Space, compose, identity, kron

__all__ = [
    "Name",
    "Id",
    "Tensor",
    "Compose",
    "MapExpr",
    "Env",
    "parse",
    "eval_expr",
    "pretty",
]


@dataclass(frozen=True)
class Name:
    name: str
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Id:
    space: str
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Tensor:
    left: "MapExpr"
    right: "MapExpr"
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Compose:
    left: "MapExpr"
    right: "MapExpr"
    span: tuple[int, int] = field(default=(0, 0), compare=False)


MapExpr = Union[Name, Id, Tensor, Compose]


@dataclass(frozen=True)
class Env:
    """Immutable evaluation environment: map bindings plus named spaces."""

    bindings: Mapping[str, MultiLinMap]
    spaces: Mapping[str, Space]


# -- lexer ---------------------------------------------------------------


_IDENT_EXPECTED = ("identifier", "'('")


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT | TENSOR | COMPOSE | LPAREN | RPAREN | END
    text: str
    span: tuple[int, int]


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def _lex(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    byte_at = [0] * (len(src) + 1)
    for k, ch in enumerate(src):
        byte_at[k + 1] = byte_at[k] + len(ch.encode("utf-8"))
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        start = byte_at[i]
        if ch == "(":
            if src[i : i + 3] == "(x)":
                tokens.append(_Token("TENSOR", "(x)", (start, byte_at[i + 3])))
                i += 3
            else:
                tokens.append(_Token("LPAREN", "(", (start, byte_at[i + 1])))
                i += 1
        elif ch == ")":
            tokens.append(_Token("RPAREN", ")", (start, byte_at[i + 1])))
            i += 1
        elif ch == "⊗":
            tokens.append(_Token("TENSOR", ch, (start, byte_at[i + 1])))
            i += 1
        elif ch == "∘":
            tokens.append(_Token("COMPOSE", ch, (start, byte_at[i + 1])))
            i += 1
        elif _is_ident_char(ch) and not ch.isdigit():
            j = i
            while j < n and _is_ident_char(src[j]):
                j += 1
            text = src[i:j]
            kind = "COMPOSE" if text == "o" else "IDENT"
            tokens.append(_Token(kind, text, (start, byte_at[j])))
            i = j
        else:
            raise ParseError(
                f"unexpected character {ch!r}", start, _IDENT_EXPECTED + ("')'", "'∘'", "'⊗'")
            )
    tokens.append(_Token("END", "", (byte_at[n], byte_at[n])))
    return tokens


# -- parser --------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> MapExpr:
        parts = [self.term()]
        while self.peek().kind == "COMPOSE":
            self.advance()
            parts.append(self.term())
        return _fold(Compose, parts)

    def term(self) -> MapExpr:
        parts = [self.factor()]
        while self.peek().kind == "TENSOR":
            self.advance()
            parts.append(self.factor())
        return _fold(Tensor, parts)

    def factor(self) -> MapExpr:
        tok = self.peek()
        if tok.kind == "IDENT":
            self.advance()
            if tok.text.startswith("id_") and len(tok.text) > 3:
                return Id(tok.text[3:], tok.span)
            return Name(tok.text, tok.span)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expr()
            closer = self.peek()
            if closer.kind != "RPAREN":
                raise ParseError(
                    f"expected ')' but found {_describe(closer)}",
                    closer.span[0],
                    ("')'", "'∘'", "'⊗'"),
                )
            self.advance()
            return _respan(inner, (tok.span[0], closer.span[1]))
        raise ParseError(
            f"expected an operand but found {_describe(tok)}", tok.span[0], _IDENT_EXPECTED
        )


def _describe(tok: _Token) -> str:
    return "end of input" if tok.kind == "END" else repr(tok.text)


def _fold(node, parts: list[MapExpr]) -> MapExpr:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = node(p, out, (p.span[0], out.span[1]))
    return out


def _respan(e: MapExpr, span: tuple[int, int]) -> MapExpr:
    if isinstance(e, Name):
        return Name(e.name, span)
    if isinstance(e, Id):
        return Id(e.space, span)
    if isinstance(e, Tensor):
        return Tensor(e.left, e.right, span)
    return Compose(e.left, e.right, span)


def parse(src: str) -> MapExpr:
    parser = _Parser(_lex(src))
    out = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "END":
        raise ParseError(
            f"unexpected {_describe(trailing)} after a complete expression",
            trailing.span[0],
            ("'∘'", "'⊗'", "end of input"),
        )
    return out


# -- evaluation ----------------------------------------------------------


def eval_expr(e: MapExpr, env: Env) -> MultiLinMap:
    if isinstance(e, Name):
        try:
            return env.bindings[e.name]
        except KeyError:
            raise UnboundName(f"unbound map name {e.name!r}", e.name, e.span) from None
    if isinstance(e, Id):
        try:
            return identity(env.spaces[e.space])
        except KeyError:
            raise UnboundName(f"unbound space name {e.space!r}", e.space, e.span) from None
    if isinstance(e, Tensor):
        return kron(eval_expr(e.left, env), eval_expr(e.right, env))
    f = eval_expr(e.left, env)
    g = eval_expr(e.right, env)
    try:
        return compose(f, g)
    except DimensionMismatch as exc:
        raise EvalDimensionMismatch(str(exc), e.span) from exc


# -- pretty printer ------------------------------------------------------


def _prec(e: MapExpr) -> int:
    if isinstance(e, Compose):
        return 1
    if isinstance(e, Tensor):
        return 2
    return 3


def _render(e: MapExpr, parent_prec: int) -> str:
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Id):
        return f"id_{e.space}"
    op = " ∘ " if isinstance(e, Compose) else " ⊗ "
    mine = _prec(e)
    body = op.join(_render(part, mine) for part in _chain(e))
    return f"({body})" if mine < parent_prec else body


def _chain(e: MapExpr) -> list[MapExpr]:
    node = type(e)
    parts: list[MapExpr] = []
    cur: MapExpr = e
    while isinstance(cur, node):
        parts.append(cur.left)
        cur = cur.right
    parts.append(cur)
    return parts


def pretty(e: MapExpr) -> str:
    """Canonical Unicode rendering with minimal parentheses."""
    return _render(e, 0)
