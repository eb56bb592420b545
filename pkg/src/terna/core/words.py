"""Word parser and evaluator for group and loop words.

Word Syntax:
    expr := term (op term)*          left-associative
    op   := '*' | '/' | '\\' | juxtaposition (same as '*')
    term := atom ('^-1')?
    atom := variable | '(' expr ')'

Variables are single lowercase letters.

Examples:
    ab^-1c              (a * b^-1) * c
    b*(c*a^-1)          explicit grouping
    ((a/b^-1)\\c)^-1     divisions and inverse of a subterm
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping

import numpy as np

from terna.exceptions import AlgebraError

if TYPE_CHECKING:
    from terna.core.magma import MagmaTable

_TOKEN_RE = re.compile(r"\s*(?:(\^-1)|([a-z])|([*/\\()]))")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Inv:
    arg: "Word"


@dataclass(frozen=True)
class BinOp:
    op: str  # '*', '/' or '\\'
    left: "Word"
    right: "Word"


Word = Var | Inv | BinOp


class WordParseError(AlgebraError):
    """Error parsing a group or loop word."""

    pass


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise WordParseError(f"unexpected character '{text[pos]}' in word '{text}'")
        tokens.append(next(g for g in match.groups() if g))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise WordParseError(f"word '{self.text}' ends unexpectedly")
        self.pos += 1
        return token

    def expr(self) -> Word:
        node = self.term()
        while True:
            token = self.peek()
            if token in ("*", "/", "\\"):
                self.take()
                node = BinOp(token, node, self.term())
            elif token is not None and (token == "(" or token.isalpha()):
                node = BinOp("*", node, self.term())
            else:
                return node

    def term(self) -> Word:
        node = self.atom()
        while self.peek() == "^-1":
            self.take()
            node = Inv(node)
        return node

    def atom(self) -> Word:
        token = self.take()
        if token == "(":
            node = self.expr()
            if self.take() != ")":
                raise WordParseError(f"missing ')' in word '{self.text}'")
            return node
        if token.isalpha():
            return Var(token)
        raise WordParseError(f"unexpected '{token}' in word '{self.text}'")


def parse_word(text: str) -> Word:
    """Parse a word.

    Args:
        text: Word text, e.g. ``"(b*a^-1)*c"``.

    Returns:
        The parsed word tree.

    Raises:
        WordParseError: If the text does not follow the word syntax.
    """
    parser = _Parser(text)
    if not parser.tokens:
        raise WordParseError("empty word")
    node = parser.expr()
    if parser.peek() is not None:
        raise WordParseError(f"trailing '{parser.peek()}' in word '{text}'")
    return node


def variables(word: Word) -> set[str]:
    if isinstance(word, Var):
        return {word.name}
    if isinstance(word, Inv):
        return variables(word.arg)
    return variables(word.left) | variables(word.right)


def uses(word: Word) -> set[str]:
    """Operators the word needs: any of ``*``, ``/``, ``\\`` and ``^-1``."""
    if isinstance(word, Var):
        return set()
    if isinstance(word, Inv):
        return {"^-1"} | uses(word.arg)
    return {word.op} | uses(word.left) | uses(word.right)


def evaluate(word: Word, table: MagmaTable, env: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate ``word`` elementwise over arrays of element indices."""
    if isinstance(word, Var):
        if word.name not in env:
            raise AlgebraError(f"variable '{word.name}' is not bound")
        return env[word.name]
    if isinstance(word, Inv):
        return table.inverse[evaluate(word.arg, table, env)]
    left = evaluate(word.left, table, env)
    right = evaluate(word.right, table, env)
    if word.op == "*":
        return table.mul[left, right]
    if word.op == "\\":
        return table.ldiv[left, right]
    return table.rdiv[left, right]


def render(word: Word) -> str:
    """Fully parenthesized text that parses back to the same tree."""
    if isinstance(word, Var):
        return word.name
    if isinstance(word, Inv):
        inner = render(word.arg)
        return f"{inner}^-1" if isinstance(word.arg, Var) else f"({inner})^-1"
    left = render(word.left)
    right = render(word.right)
    if isinstance(word.left, BinOp):
        left = f"({left})"
    if isinstance(word.right, BinOp):
        right = f"({right})"
    return f"{left}{word.op}{right}"


def ternary_table(word: Word | str, table: MagmaTable) -> np.ndarray:
    """Materialize ``word`` in variables a, b, c as an ``n x n x n`` cube."""
    if isinstance(word, str):
        word = parse_word(word)
    extra = variables(word) - {"a", "b", "c"}
    if extra:
        raise AlgebraError(f"ternary words use a, b, c only; got {', '.join(sorted(extra))}")
    a, b, c = np.indices((table.n,) * 3)
    cube = evaluate(word, table, {"a": a, "b": b, "c": c})
    return np.broadcast_to(cube, (table.n,) * 3).astype(np.int64)
