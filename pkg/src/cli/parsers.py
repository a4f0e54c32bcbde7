"""
Text forms of scalars, polynomials, algebra elements and super vectors.

One tokenizer and one recursive-descent grammar serve every input slot:

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom (('^' | '**') INT)?
    atom   := NUMBER | 'sqrt2' | NAME | GEN '[' index ']' | 'C1' | 'C2' | '(' expr ')'
    index  := ['-'] INT ['/' '2']

What a NAME means depends on the slot: polynomial variables for ``--h`` and
vector components, generators for algebra elements. Division is only by
nonzero scalars. Printing is the inverse: ``str`` of an element or
``format_vector`` of a vector parses back to the same value.
"""

import re
from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, TypeVar

from src.algebra.poly import Poly2
from src.algebra.scalar import SQRT2, Scalar
from src.algebra.superalgebra import (
    AlgebraElement,
    Generator,
    GeneratorKind,
    Sector,
)
from src.core.exceptions import (
    DivisionByZeroError,
    ParseError,
    SectorMismatchError,
    UnknownVariableError,
)
from src.modules.vectors import VARIABLE_NAMES, SuperVector

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()\[\]]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split text into tokens; raises ParseError on any other character."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"Unexpected character {text[bad]!r}", position=bad)
        num, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        if num is not None:
            tokens.append(Token("num", num, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# ===== Values =====
#
# Algebra expressions are evaluated as linear maps {Generator | None: Scalar},
# the None key holding a bare scalar. Polynomial slots evaluate to Poly2.

Linear = dict[Generator | None, Scalar]

V = TypeVar("V")


@dataclass(frozen=True)
class _Domain(Generic[V]):
    """How the grammar's leaves and operators evaluate in one slot."""

    number: Callable[[Scalar], V]
    name: Callable[[Token, "_Parser[V]"], V]
    add: Callable[[V, V], V]
    neg: Callable[[V], V]
    mul: Callable[[V, V, Token], V]
    as_scalar: Callable[[V], Scalar | None]
    power: Callable[[V, int, Token], V]


class _Parser(Generic[V]):
    def __init__(self, text: str, domain: _Domain[V]) -> None:
        self.tokens = tokenize(text)
        self.i = 0
        self.domain = domain

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> Token:
        tok = self.current
        if not self.accept(op):
            raise ParseError(f"Expected '{op}'", position=tok.position)
        return tok

    def expect_int(self) -> int:
        tok = self.current
        if tok.kind != "num":
            raise ParseError("Expected an integer", position=tok.position)
        self.i += 1
        return int(tok.text)

    def parse(self) -> V:
        if self.current.kind == "end":
            raise ParseError("Empty expression", position=self.current.position)
        value = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"Unexpected {self.current.text!r}", position=self.current.position)
        return value

    def expr(self) -> V:
        value = self.term()
        while True:
            if self.accept("+"):
                value = self.domain.add(value, self.term())
            elif self.accept("-"):
                value = self.domain.add(value, self.domain.neg(self.term()))
            else:
                return value

    def term(self) -> V:
        value = self.unary()
        while True:
            tok = self.current
            if self.accept("*"):
                value = self.domain.mul(value, self.unary(), tok)
            elif self.accept("/"):
                divisor = self.domain.as_scalar(self.unary())
                if divisor is None:
                    raise ParseError("Can only divide by a scalar", position=tok.position)
                if divisor.is_zero:
                    raise DivisionByZeroError(details={"position": tok.position})
                value = self.domain.mul(value, self.domain.number(divisor.inverse()), tok)
            else:
                return value

    def unary(self) -> V:
        if self.accept("-"):
            return self.domain.neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> V:
        base = self.atom()
        tok = self.current
        if self.accept("^") or self.accept("**"):
            return self.domain.power(base, self.expect_int(), tok)
        return base

    def atom(self) -> V:
        tok = self.current
        if tok.kind == "num":
            self.i += 1
            return self.domain.number(Scalar(int(tok.text)))
        if tok.kind == "name":
            self.i += 1
            if tok.text == "sqrt2":
                return self.domain.number(SQRT2)
            return self.domain.name(tok, self)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "end":
            raise ParseError("Unexpected end of input", position=tok.position)
        raise ParseError(f"Unexpected {tok.text!r}", position=tok.position)


# ===== Polynomials and scalars =====


def _poly_domain(variables: tuple[str, ...]) -> _Domain[Poly2]:
    pairs = zip(variables, (Poly2.var1(), Poly2.var2()), strict=False)
    generators = dict(pairs)

    def name(tok: Token, parser: "_Parser[Poly2]") -> Poly2:
        if tok.text not in generators:
            raise UnknownVariableError(tok.text, variables)
        return generators[tok.text]

    def mul(a: Poly2, b: Poly2, tok: Token) -> Poly2:
        return a * b

    def as_scalar(p: Poly2) -> Scalar | None:
        if any(exp != (0, 0) for exp in p.terms):
            return None
        return p.constant_term()

    def power(p: Poly2, n: int, tok: Token) -> Poly2:
        return p**n

    return _Domain(
        number=Poly2.constant,
        name=name,
        add=lambda a, b: a + b,
        neg=lambda a: -a,
        mul=mul,
        as_scalar=as_scalar,
        power=power,
    )


def parse_poly(text: str, variables: tuple[str, ...] = ("t",)) -> Poly2:
    """
    Parse a polynomial whose variables are named by ``variables``.

    The first name maps to the first variable, the second (if any) to the
    second, e.g. ``parse_poly("u^2*s - 1/2", ("u", "s"))``.

    Raises:
        ParseError: malformed input, with the character position
        UnknownVariableError: a name outside ``variables``
    """
    return _Parser(text, _poly_domain(variables)).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse an element of Q(sqrt2) such as ``-3/2``, ``sqrt2/2`` or ``1 + 2*sqrt2``."""
    return parse_poly(text, ()).constant_term()


# ===== Algebra elements =====

_INDEXED = {"L": GeneratorKind.L, "W": GeneratorKind.W, "G": GeneratorKind.G}
_CENTRAL = {"C1": GeneratorKind.C1, "C2": GeneratorKind.C2}


def _read_index2(parser: "_Parser[Linear]", kind: GeneratorKind) -> int:
    """Doubled index from ``[n]`` or ``[n/2]``."""
    parser.expect("[")
    sign = -1 if parser.accept("-") else 1
    start = parser.current.position
    n = sign * parser.expect_int()
    idx2 = 2 * n
    if parser.accept("/"):
        den_tok = parser.current
        if parser.expect_int() != 2:
            raise ParseError("Indices are integers or halves", position=den_tok.position)
        idx2 = n
    parser.expect("]")
    if idx2 % 2 and kind is not GeneratorKind.G:
        raise ParseError(f"{kind.value} takes integer indices", position=start)
    return idx2


def _linear_domain() -> _Domain[Linear]:
    def number(c: Scalar) -> Linear:
        return {None: c} if not c.is_zero else {}

    def name(tok: Token, parser: "_Parser[Linear]") -> Linear:
        if tok.text in _CENTRAL:
            return {Generator(_CENTRAL[tok.text]): Scalar(1)}
        if tok.text in _INDEXED:
            kind = _INDEXED[tok.text]
            return {Generator(kind, _read_index2(parser, kind)): Scalar(1)}
        raise ParseError(f"Unknown generator {tok.text!r}", position=tok.position)

    def add(a: Linear, b: Linear) -> Linear:
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, Scalar(0)) + c
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def as_scalar(v: Linear) -> Scalar | None:
        if any(k is not None for k in v):
            return None
        return v.get(None, Scalar(0))

    def mul(a: Linear, b: Linear, tok: Token) -> Linear:
        ca, cb = as_scalar(a), as_scalar(b)
        if ca is None and cb is None:
            raise ParseError("Generators cannot be multiplied", position=tok.position)
        c, v = (ca, b) if ca is not None else (cb, a)
        assert c is not None
        return {k: c * x for k, x in v.items()} if not c.is_zero else {}

    def power(v: Linear, n: int, tok: Token) -> Linear:
        c = as_scalar(v)
        if c is None:
            raise ParseError("Generators cannot be raised to a power", position=tok.position)
        return number(c**n)

    return _Domain(
        number=number,
        name=name,
        add=add,
        neg=lambda v: {k: -c for k, c in v.items()},
        mul=mul,
        as_scalar=as_scalar,
        power=power,
    )


def infer_sector(gens: list[Generator], sector: Sector | None = None) -> Sector:
    """
    Sector from the parity of G indices; ``sector`` is the fallback and must agree.

    Raises:
        SectorMismatchError: integer and half-integer G indices mixed, or
            a G index contradicting ``sector``
    """
    parities = {g.idx2 % 2 for g in gens if g.kind is GeneratorKind.G}
    if len(parities) > 1:
        raise SectorMismatchError("Expression mixes integer and half-integer G indices")
    if not parities:
        return sector or Sector.RAMOND
    inferred = Sector.NEVEU_SCHWARZ if parities == {1} else Sector.RAMOND
    if sector is not None and sector is not inferred:
        raise SectorMismatchError(
            f"G indices belong to the {inferred.value} sector, not {sector.value}",
            details={"inferred": inferred.value, "requested": sector.value},
        )
    return inferred


def parse_algebra_expr(text: str, sector: Sector | None = None) -> AlgebraElement:
    """
    Parse e.g. ``2*L[3] - sqrt2*G[1/2] + C2`` into an element.

    Raises:
        ParseError: malformed input or a bare nonzero scalar term
        SectorMismatchError: inconsistent G indices
    """
    value = _Parser(text, _linear_domain()).parse()
    if None in value:
        raise ParseError("Scalar terms need a generator", position=0)
    gens = [g for g in value if g is not None]
    resolved = infer_sector(gens, sector)
    return AlgebraElement(resolved, {g: c for g, c in value.items() if g is not None})


# ===== Vectors =====

_PART = re.compile(r"\s*(even|odd)\s*:", re.IGNORECASE)


def parse_vector_expr(text: str, kind: Sector) -> SuperVector:
    """
    Parse ``even: <poly> ; odd: <poly>``; either part may be omitted and a
    bare polynomial is the even part.

    Raises:
        ParseError: malformed input or a repeated part
        UnknownVariableError: a variable not valid for the kind and part
    """
    even_names, odd_names = VARIABLE_NAMES[kind]
    parts: dict[str, Poly2] = {}
    offset = 0
    for chunk in text.split(";"):
        match = _PART.match(chunk)
        label = match.group(1).lower() if match else "even"
        body = chunk[match.end():] if match else chunk
        body_offset = offset + (match.end() if match else 0)
        if label in parts:
            raise ParseError(f"Repeated {label} part", position=offset)
        names = even_names if label == "even" else odd_names
        try:
            parts[label] = parse_poly(body, names)
        except ParseError as e:
            raise ParseError(e.message, position=(e.position or 0) + body_offset) from e
        offset += len(chunk) + 1
    return SuperVector(kind, parts.get("even", Poly2.zero()), parts.get("odd", Poly2.zero()))

