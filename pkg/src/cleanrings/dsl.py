"""Ring-expression language: parser, canonical renderer, and builder.

Grammar (whitespace-insensitive; 'x' is the left-associative product):

    expr    := term { "x" term }
    term    := "F2" | "Z" int | "B" int
             | "M" "(" int "," expr ")"
             | "UT" "(" int "," expr ")"
             | "T" "(" expr "," sigma "," int ")"
             | "(" expr ")"
    sigma   := "id" | "swap" "(" int "," int ")"
    int     := decimal digits, no sign

`Z` and `B` also accept a parenthesized argument ("B(3)" for "B3").
Swap factor positions are 1-based and must name product factors of equal
size. Quotients, unital adjunctions and custom endomorphism maps need
non-textual payloads and are deliberately not expressible here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import CleanRingsError, InvalidEndomorphismError, SizeCapError
from .rings import (
    DEFAULT_SIZE_CAP,
    Endomorphism,
    FiniteRing,
    make_boolean,
    make_matrix_ring,
    make_product,
    make_trunc_skew_poly,
    make_ut_ring,
    make_zmod,
)


class ParseError(CleanRingsError, ValueError):
    """Lexical or syntactic violation, located by byte offset."""

    def __init__(self, message: str, offset: int, expected: str = ""):
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.message = message
        self.offset = offset
        self.expected = expected


Span = tuple[int, int]


@dataclass(frozen=True)
class SigmaId:
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class SigmaSwap:
    i: int  # 1-based factor positions
    j: int
    span: Span = field(default=(0, 0), compare=False)


Sigma = Union[SigmaId, SigmaSwap]


@dataclass(frozen=True)
class F2Node:
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ZmodNode:
    n: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BooleanNode:
    k: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class MatrixNode:
    n: int
    child: "SpecAst"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class UTNode:
    n: int
    child: "SpecAst"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ProductNode:
    children: tuple["SpecAst", ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class TruncSkewNode:
    child: "SpecAst"
    sigma: Sigma
    n: int
    span: Span = field(default=(0, 0), compare=False)


SpecAst = Union[F2Node, ZmodNode, BooleanNode, MatrixNode, UTNode, ProductNode, TruncSkewNode]


def ast_size(ast: SpecAst) -> int:
    """Number of elements of the ring an ast denotes, without building it."""
    if isinstance(ast, F2Node):
        return 2
    if isinstance(ast, ZmodNode):
        return ast.n
    if isinstance(ast, BooleanNode):
        return 2**ast.k
    if isinstance(ast, MatrixNode):
        return ast_size(ast.child) ** (ast.n * ast.n)
    if isinstance(ast, UTNode):
        return ast_size(ast.child) ** (ast.n * (ast.n + 1) // 2)
    if isinstance(ast, ProductNode):
        out = 1
        for c in ast.children:
            out *= ast_size(c)
        return out
    if isinstance(ast, TruncSkewNode):
        return ast_size(ast.child) ** ast.n
    raise TypeError(f"not an ast node: {ast!r}")


def render(ast: SpecAst) -> str:
    """Canonical textual form; parse(render(ast)) == ast."""
    if isinstance(ast, F2Node):
        return "F2"
    if isinstance(ast, ZmodNode):
        return f"Z{ast.n}"
    if isinstance(ast, BooleanNode):
        return f"B{ast.k}"
    if isinstance(ast, MatrixNode):
        return f"M({ast.n},{render(ast.child)})"
    if isinstance(ast, UTNode):
        return f"UT({ast.n},{render(ast.child)})"
    if isinstance(ast, ProductNode):
        parts = []
        for c in ast.children:
            text = render(c)
            parts.append(f"({text})" if isinstance(c, ProductNode) else text)
        return " x ".join(parts)
    if isinstance(ast, TruncSkewNode):
        if isinstance(ast.sigma, SigmaId):
            sig = "id"
        else:
            sig = f"swap({ast.sigma.i},{ast.sigma.j})"
        return f"T({render(ast.child)},{sig},{ast.n})"
    raise TypeError(f"not an ast node: {ast!r}")


_KEYWORDS = ("swap", "UT", "F2", "id", "M", "Z", "B", "T", "x")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[tuple[str, str, int]]:
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        ch = self.text[self.pos]
        if ch in "(),":
            return (ch, ch, self.pos)
        if ch.isdigit():
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            return ("INT", self.text[self.pos : end], self.pos)
        for kw in _KEYWORDS:
            if self.text.startswith(kw, self.pos):
                return ("KW", kw, self.pos)
        raise ParseError(f"unrecognized input {self.text[self.pos:self.pos + 8]!r}", self.pos,
                         "a ring constructor, integer, parenthesis or 'x'")

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.pos = tok[2] + len(tok[1])
        return tok


class _Parser:
    def __init__(self, text: str):
        self.lx = _Lexer(text)

    def parse(self) -> SpecAst:
        ast = self.expr()
        tok = self.lx.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2], "end of input")
        return ast

    def expr(self) -> SpecAst:
        start = self.lx.pos
        first = self.term()
        children = [first]
        while True:
            tok = self.lx.peek()
            if tok is None or tok[:2] != ("KW", "x"):
                break
            self.lx.take()
            children.append(self.term())
        if len(children) == 1:
            return first
        return ProductNode(tuple(children), span=(start, self.lx.pos))

    def expect(self, kind: str, what: str):
        tok = self.lx.take()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.lx.text), what)
        if tok[0] != kind and tok[1] != kind:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], what)
        return tok

    def integer(self, what: str) -> tuple[int, int]:
        tok = self.expect("INT", what)
        return int(tok[1]), tok[2]

    def maybe_wrapped_integer(self, what: str) -> tuple[int, int]:
        # lenient form: "B(3)" and "Z(4)" as well as "B3"/"Z4"
        tok = self.lx.peek()
        if tok is not None and tok[1] == "(":
            self.lx.take()
            value = self.integer(what)
            self.expect(")", "')'")
            return value
        return self.integer(what)

    def term(self) -> SpecAst:
        tok = self.lx.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.lx.text), "a ring term")
        kind, text, pos = tok
        if text == "(":
            self.lx.take()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if kind != "KW":
            raise ParseError(f"unexpected {text!r}", pos, "a ring term")
        self.lx.take()
        if text == "F2":
            return F2Node(span=(pos, self.lx.pos))
        if text == "Z":
            n, npos = self.maybe_wrapped_integer("a modulus")
            if n < 2:
                raise ParseError(f"modulus must be >= 2, got {n}", npos)
            return ZmodNode(n, span=(pos, self.lx.pos))
        if text == "B":
            k, kpos = self.maybe_wrapped_integer("a bit count")
            if k < 1:
                raise ParseError(f"bit count must be >= 1, got {k}", kpos)
            return BooleanNode(k, span=(pos, self.lx.pos))
        if text == "M":
            self.expect("(", "'('")
            n, npos = self.integer("a matrix dimension")
            if n < 1:
                raise ParseError(f"matrix dimension must be >= 1, got {n}", npos)
            self.expect(",", "','")
            child = self.expr()
            self.expect(")", "')'")
            return MatrixNode(n, child, span=(pos, self.lx.pos))
        if text == "UT":
            self.expect("(", "'('")
            n, npos = self.integer("a matrix dimension")
            if n < 2:
                raise ParseError(f"upper-triangular dimension must be >= 2, got {n}", npos)
            self.expect(",", "','")
            child = self.expr()
            self.expect(")", "')'")
            return UTNode(n, child, span=(pos, self.lx.pos))
        if text == "T":
            self.expect("(", "'('")
            child = self.expr()
            self.expect(",", "','")
            sigma = self.sigma(child)
            self.expect(",", "','")
            n, npos = self.integer("a truncation degree")
            if n < 2:
                raise ParseError(f"truncation degree must be >= 2, got {n}", npos)
            self.expect(")", "')'")
            return TruncSkewNode(child, sigma, n, span=(pos, self.lx.pos))
        raise ParseError(f"unexpected {text!r}", pos, "a ring term")

    def sigma(self, child: SpecAst) -> Sigma:
        tok = self.lx.take()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.lx.text), "'id' or 'swap(i,j)'")
        kind, text, pos = tok
        if text == "id":
            return SigmaId(span=(pos, self.lx.pos))
        if text == "swap":
            self.expect("(", "'('")
            i, _ = self.integer("a factor position")
            self.expect(",", "','")
            j, jpos = self.integer("a factor position")
            self.expect(")", "')'")
            if not isinstance(child, ProductNode):
                raise ParseError("swap needs a product ring as coefficient ring", pos)
            k = len(child.children)
            if not (1 <= i <= k and 1 <= j <= k):
                raise ParseError(f"swap positions must lie in 1..{k}", jpos)
            if ast_size(child.children[i - 1]) != ast_size(child.children[j - 1]):
                raise ParseError(f"swap factors {i} and {j} differ in size", jpos)
            return SigmaSwap(i, j, span=(pos, self.lx.pos))
        raise ParseError(f"unexpected {text!r}", pos, "'id' or 'swap(i,j)'")


def parse_ring_expr(text: str) -> SpecAst:
    """Parse a ring expression; raises ParseError with a byte offset."""
    return _Parser(text).parse()


def build_ring(ast: SpecAst, *, cap: Optional[int] = None) -> FiniteRing:
    """Build the ring an ast denotes; labels are the canonical rendering."""
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    try:
        return _build(ast, cap)
    except (SizeCapError, InvalidEndomorphismError) as exc:
        if getattr(exc, "span", None) is None:
            exc.span = getattr(ast, "span", None)
        raise


def _build(ast: SpecAst, cap: int) -> FiniteRing:
    label = render(ast)
    if isinstance(ast, F2Node):
        return make_zmod(2, cap=cap, label=label)
    if isinstance(ast, ZmodNode):
        return make_zmod(ast.n, cap=cap, label=label)
    if isinstance(ast, BooleanNode):
        return make_boolean(ast.k, cap=cap, label=label)
    if isinstance(ast, MatrixNode):
        size = ast_size(ast)
        if size > cap:
            raise SizeCapError(
                f"{label} has {size} elements, above the size cap {cap}; "
                f"rerun with a cap of at least {size}",
                required=size,
            )
        return make_matrix_ring(_build(ast.child, cap), ast.n, cap=cap, label=label)
    if isinstance(ast, UTNode):
        size = ast_size(ast)
        if size > cap:
            raise SizeCapError(
                f"{label} has {size} elements, above the size cap {cap}; "
                f"rerun with a cap of at least {size}",
                required=size,
            )
        return make_ut_ring(_build(ast.child, cap), ast.n, cap=cap, label=label)
    if isinstance(ast, ProductNode):
        factors = [_build(c, cap) for c in ast.children]
        return make_product(factors, cap=cap, label=label)
    if isinstance(ast, TruncSkewNode):
        size = ast_size(ast)
        if size > cap:
            raise SizeCapError(
                f"{label} has {size} elements, above the size cap {cap}; "
                f"rerun with a cap of at least {size}",
                required=size,
            )
        base = _build(ast.child, cap)
        if isinstance(ast.sigma, SigmaId):
            sigma = Endomorphism.identity(base)
        else:
            sigma = Endomorphism.swap_factors(base, ast.sigma.i - 1, ast.sigma.j - 1)
        return make_trunc_skew_poly(base, sigma, ast.n, cap=cap, label=label)
    raise TypeError(f"not an ast node: {ast!r}")


def build_from_text(text: str, *, cap: Optional[int] = None) -> FiniteRing:
    return build_ring(parse_ring_expr(text), cap=cap)
