"""Recursive-descent parser for rational quaternion literals.

Grammar (whitespace is insignificant)::

    quat   := ["-"] term { ("+" | "-") term }
    term   := rat [unit] | unit
    unit   := "i" | "j" | "k"
    rat    := int ["/" posint]
    vector := "[" quat "," quat "]"
    matrix := "[" row ";" row "]"
    row    := quat { "," quat }

Only the first term may carry a sign of its own. A 2x4 matrix doubles as a
four-tuple of column vectors (x, y, z, t).
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import ParseError
from .linalg import Mat2xN, Vec2
from .scalars import Quaternion

_UNITS = {"i": 1, "j": 2, "k": 3}


@dataclass(frozen=True)
class QuatNode:
    value: Quaternion
    span: tuple[int, int]


@dataclass(frozen=True)
class VecNode:
    components: tuple[QuatNode, QuatNode]
    span: tuple[int, int]

    @property
    def value(self) -> Vec2:
        return Vec2(self.components[0].value, self.components[1].value)


@dataclass(frozen=True)
class MatNode:
    rows: tuple[tuple[QuatNode, ...], tuple[QuatNode, ...]]
    span: tuple[int, int]

    @property
    def value(self) -> Mat2xN:
        r1, r2 = self.rows
        return Mat2xN.from_rows([q.value for q in r1], [q.value for q in r2])


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, *expected):
        self.skip_ws()
        raise ParseError(self.pos, expected or ("end of input",), self.text)

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(repr(ch))
        self.pos += 1

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("integer")
        return int(self.text[start : self.pos])

    def term(self) -> list:
        coeffs = [mpq(0)] * 4
        ch = self.peek()
        if ch in _UNITS:
            self.pos += 1
            coeffs[_UNITS[ch]] = mpq(1)
            return coeffs
        if not ch.isdigit():
            self.error("integer", "'i'", "'j'", "'k'")
        num = self.digits()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.digits()
            if den == 0:
                self.skip_ws()
                raise ParseError(den_pos, ("positive integer",), self.text)
        ch = self.peek()
        slot = _UNITS.get(ch, 0)
        if slot:
            self.pos += 1
        coeffs[slot] = mpq(num, den)
        return coeffs

    def quat(self) -> QuatNode:
        self.skip_ws()
        start = self.pos
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        total = [sign * c for c in self.term()]
        while self.peek() in ("+", "-") and self.peek():
            sign = 1 if self.peek() == "+" else -1
            self.pos += 1
            total = [a + sign * b for a, b in zip(total, self.term())]
        return QuatNode(Quaternion(*total), (start, self.pos))

    def row(self, length: int | None = None) -> list:
        items = [self.quat()]
        while self.peek() == ",":
            if length is not None and len(items) == length:
                self.error("']'")
            self.pos += 1
            items.append(self.quat())
        return items

    def bracketed(self):
        self.skip_ws()
        start = self.pos
        self.expect("[")
        first = self.row()
        if self.peek() == ";":
            self.pos += 1
            second = self.row(len(first))
            if len(second) != len(first):
                self.error("','")
            self.expect("]")
            if len(first) < 2:
                raise ParseError(start, ("at least two columns",), self.text)
            return MatNode((tuple(first), tuple(second)), (start, self.pos))
        if len(first) != 2:
            self.error("';'")
        self.expect("]")
        return VecNode((first[0], first[1]), (start, self.pos))

    def end(self):
        if self.peek():
            self.error("end of input")


def parse(text: str):
    """Parse a quaternion, vector or matrix literal into a syntax node."""
    p = _Parser(text)
    node = p.bracketed() if p.peek() == "[" else p.quat()
    p.end()
    return node


def parse_quaternion(text: str) -> Quaternion:
    p = _Parser(text)
    node = p.quat()
    p.end()
    return node.value


def parse_vector(text: str) -> Vec2:
    node = parse(text)
    if not isinstance(node, VecNode):
        raise ParseError(0, ("vector '[q, q]'",), text)
    return node.value


def parse_matrix(text: str) -> Mat2xN:
    node = parse(text)
    if not isinstance(node, MatNode):
        raise ParseError(0, ("matrix '[row; row]'",), text)
    return node.value


def render_vector(v: Vec2) -> str:
    return f"[{Quaternion.coerce(v.x1)}, {Quaternion.coerce(v.x2)}]"


def render_matrix(A: Mat2xN) -> str:
    r1, r2 = A.rows()
    row = lambda r: ", ".join(str(Quaternion.coerce(q)) for q in r)  # noqa: E731
    return f"[{row(r1)}; {row(r2)}]"


def canonical(text: str) -> str:
    """Render the parsed value back in canonical form."""
    node = parse(text)
    if isinstance(node, QuatNode):
        return str(node.value)
    if isinstance(node, VecNode):
        return render_vector(node.value)
    return render_matrix(node.value)
