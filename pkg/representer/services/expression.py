"""
Recursive-descent parser for the regulariser mini-language.

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := atom ("^" factor)?
    atom   := NUMBER | "norm" | "coord" "(" INT ")" | FUNC "(" expr ")"
            | "(" expr ")" | "-" atom
    FUNC   := "exp" | "abs" | "sqrt" | "max0"
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from representer.constants import ErrorMessages
from representer.errors import ParseError, RegulariserEvaluationError

FUNCS = ("exp", "abs", "sqrt", "max0")

_TOKEN = re.compile(
    r"\s*(?:(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


# ---------------- AST ---------------- #

@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Norm:
    pass


@dataclass(frozen=True)
class Coord:
    index: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Number, Norm, Coord, Call, Neg, BinOp]


# ---------------- LEXER / PARSER ---------------- #

def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"Unexpected character {text[start]!r}", start, ["NUMBER", "norm", "coord", "(", "-", *FUNCS])
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def _advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _expect(self, text: str) -> Token:
        if self.current.text != text:
            raise ParseError(f"Unexpected {self.current.text or 'end of input'!r}", self.current.pos, [text])
        return self._advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"Unexpected {self.current.text!r}", self.current.pos, ["+", "-", "*", "/", "^", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.current.text in ("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.current.text in ("*", "/"):
            op = self._advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        base = self.atom()
        if self.current.text == "^":
            self._advance()
            return BinOp("^", base, self.factor())
        return base

    def atom(self) -> Node:
        tok = self.current
        if tok.kind == "number":
            self._advance()
            return Number(float(tok.text))
        if tok.kind == "name":
            self._advance()
            if tok.text == "norm":
                return Norm()
            if tok.text == "coord":
                self._expect("(")
                idx = self.current
                if idx.kind != "number" or not idx.text.isdigit():
                    raise ParseError("Coordinate index must be an integer", idx.pos, ["INT"])
                self._advance()
                self._expect(")")
                return Coord(int(idx.text))
            if tok.text in FUNCS:
                self._expect("(")
                arg = self.expr()
                self._expect(")")
                return Call(tok.text, arg)
            raise ParseError(f"Unknown name {tok.text!r}", tok.pos, ["norm", "coord", *FUNCS])
        if tok.text == "(":
            self._advance()
            node = self.expr()
            self._expect(")")
            return node
        if tok.text == "-":
            self._advance()
            return Neg(self.atom())
        raise ParseError(
            f"Unexpected {tok.text or 'end of input'!r}", tok.pos, ["NUMBER", "norm", "coord", "(", "-", *FUNCS]
        )


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


# ---------------- EVALUATION ---------------- #

_FUNC_IMPL = {
    "exp": np.exp,
    "abs": np.abs,
    "sqrt": np.sqrt,
    "max0": lambda x: np.maximum(x, 0.0),
}

_BINOP_IMPL = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
    "^": np.power,
}


def evaluate_tree(node: Node, coords: np.ndarray, norm_value: float) -> np.float64:
    """
    IEEE double evaluation; NaN is left for the caller to reject.
    """
    if isinstance(node, Number):
        return np.float64(node.value)
    if isinstance(node, Norm):
        return np.float64(norm_value)
    if isinstance(node, Coord):
        if node.index >= coords.size:
            raise RegulariserEvaluationError(
                f"{ErrorMessages.COORD_OUT_OF_RANGE}: coord({node.index}) in dimension {coords.size}", coords
            )
        value = coords[node.index]
        if np.iscomplexobj(value) and value.imag != 0:
            raise RegulariserEvaluationError(f"{ErrorMessages.EVALUATION_FAILED}: complex coordinate", coords)
        return np.float64(np.real(value))
    with np.errstate(all="ignore"):
        if isinstance(node, Neg):
            return -evaluate_tree(node.arg, coords, norm_value)
        if isinstance(node, Call):
            return np.float64(_FUNC_IMPL[node.func](evaluate_tree(node.arg, coords, norm_value)))
        left = evaluate_tree(node.left, coords, norm_value)
        right = evaluate_tree(node.right, coords, norm_value)
        return np.float64(_BINOP_IMPL[node.op](left, right))


def uses_norm(node: Node) -> bool:
    if isinstance(node, Norm):
        return True
    if isinstance(node, (Call, Neg)):
        return uses_norm(node.arg)
    if isinstance(node, BinOp):
        return uses_norm(node.left) or uses_norm(node.right)
    return False


# ---------------- PRETTY PRINTING ---------------- #

def format_tree(node: Node) -> str:
    """
    Source text that parses back to the same tree.
    """
    if isinstance(node, Number):
        # overflowing literals parse to inf
        return repr(float(node.value)) if np.isfinite(node.value) else "1e999"
    if isinstance(node, Norm):
        return "norm"
    if isinstance(node, Coord):
        return f"coord({node.index})"
    if isinstance(node, Call):
        return f"{node.func}({format_tree(node.arg)})"
    if isinstance(node, Neg):
        return f"-({format_tree(node.arg)})"
    return f"({format_tree(node.left)} {node.op} {format_tree(node.right)})"


# ---------------- MONOTONICITY IN THE NORM ---------------- #

@dataclass(frozen=True)
class Shape:
    """
    Behaviour of a subexpression as a function of t = ||f|| on [0, inf).

    trend: 2 strictly increasing, 1 nondecreasing, 0 constant,
    -1 nonincreasing, -2 strictly decreasing, None unknown.
    """
    trend: Optional[int]
    nonneg: bool
    const: Optional[float] = None


_UNKNOWN = Shape(None, False)


def _add(a: Shape, b: Shape) -> Shape:
    nonneg = a.nonneg and b.nonneg
    if a.trend is None or b.trend is None:
        return Shape(None, nonneg)
    if a.const is not None and b.const is not None:
        return Shape(0, a.const + b.const >= 0, a.const + b.const)
    if a.trend >= 0 and b.trend >= 0:
        return Shape(max(a.trend, b.trend), nonneg)
    if a.trend <= 0 and b.trend <= 0:
        return Shape(min(a.trend, b.trend), nonneg)
    return Shape(None, nonneg)


def _negate(a: Shape) -> Shape:
    if a.trend is None:
        return _UNKNOWN
    const = None if a.const is None else -a.const
    return Shape(-a.trend, const is not None and const >= 0, const)


def _scale(a: Shape, k: float) -> Shape:
    if a.trend is None:
        return _UNKNOWN
    if k == 0:
        return Shape(0, True, 0.0)
    trend = a.trend if k > 0 else -a.trend
    const = None if a.const is None else a.const * k
    nonneg = (a.nonneg and k > 0) or (const is not None and const >= 0)
    return Shape(trend, nonneg, const)


def _limit(trend: int) -> int:
    # max0 flattens strict trends
    return max(-1, min(1, trend))


def shape_of(node: Node) -> Shape:
    if isinstance(node, Number):
        return Shape(0, node.value >= 0, node.value)
    if isinstance(node, Norm):
        return Shape(2, True)
    if isinstance(node, Coord):
        return _UNKNOWN
    if isinstance(node, Neg):
        return _negate(shape_of(node.arg))
    if isinstance(node, Call):
        a = shape_of(node.arg)
        if a.trend is None:
            return Shape(None, node.func in ("exp", "abs", "sqrt", "max0"))
        if a.const is not None:
            with np.errstate(all="ignore"):
                value = float(_FUNC_IMPL[node.func](a.const))
            return Shape(0, value >= 0, value) if not np.isnan(value) else _UNKNOWN
        if node.func == "exp":
            return Shape(a.trend, True)
        if node.func == "sqrt":
            # NaN below zero
            return Shape(a.trend, True) if a.nonneg else Shape(None, True)
        if node.func == "max0":
            return Shape(_limit(a.trend), True)
        # abs
        if a.nonneg:
            return Shape(a.trend, True)
        return Shape(None, True)
    a, b = shape_of(node.left), shape_of(node.right)
    if node.op == "+":
        return _add(a, b)
    if node.op == "-":
        return _add(a, _negate(b))
    if node.op == "*":
        if b.const is not None:
            return _scale(a, b.const)
        if a.const is not None:
            return _scale(b, a.const)
        if a.trend is not None and b.trend is not None and a.nonneg and b.nonneg and a.trend > 0 and b.trend > 0:
            return Shape(min(a.trend, b.trend) if min(a.trend, b.trend) == 1 else 2, True)
        return Shape(None, a.nonneg and b.nonneg)
    if node.op == "/":
        if b.const is not None and b.const != 0:
            return _scale(a, 1.0 / b.const)
        return Shape(None, False)
    # "^"
    if a.const is not None and b.const is not None:
        with np.errstate(all="ignore"):
            value = float(np.power(a.const, b.const))
        return Shape(0, value >= 0, value) if not np.isnan(value) else _UNKNOWN
    if b.const is not None and a.trend is not None and a.nonneg:
        if b.const > 0:
            return Shape(a.trend, True)
        if b.const == 0:
            return Shape(0, True, 1.0)
    return Shape(None, a.nonneg)
