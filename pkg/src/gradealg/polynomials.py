"""Sparse multivariate polynomials over an exact field.

A monomial is a tuple of exponents, one slot per ring variable. A polynomial
is a map monomial -> nonzero coefficient. Rings are lightweight descriptors
(variable names + field); all values are immutable once built, which is what
lets Groebner results be cached by value elsewhere.

Monomial orders are key objects: ``order.key(mon)`` is a tuple that sorts
ascending in the order, so ``max(terms, key=order.key)`` is the leading
monomial. grevlex, lex and block orders (for elimination) are provided.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .errors import AmbientMismatch, ParseError
from .fields import GFElement, PrimeField, RationalField

Monomial = tuple
Field = Union[RationalField, PrimeField]


# ---------------------------------------------------------------------------
# monomial helpers

def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial:
    # caller guarantees b | a
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree d, lexicographic in slot order."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# monomial orders

class GrevlexOrder:
    """Graded reverse lexicographic."""

    kind = "grevlex"

    def key(self, mon: Monomial):
        return (sum(mon), tuple(-e for e in reversed(mon)))

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder)

    def __hash__(self):
        return hash("grevlex")

    def __repr__(self):
        return "grevlex"


class LexOrder:
    """Pure lexicographic, first variable strongest."""

    kind = "lex"

    def key(self, mon: Monomial):
        return mon

    def __eq__(self, other):
        return isinstance(other, LexOrder)

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "lex"


class BlockOrder:
    """Compare variable blocks left to right, grevlex inside each block.

    With the eliminated variables in the front block this is an elimination
    order: any monomial touching the front block beats every monomial that
    does not.
    """

    kind = "block"

    def __init__(self, blocks: Sequence[Sequence[int]]):
        blocks = tuple(tuple(b) for b in blocks)
        seen = [i for b in blocks for i in b]
        if len(set(seen)) != len(seen):
            raise ValueError("order blocks overlap")
        self.blocks = blocks

    def key(self, mon: Monomial):
        return tuple(
            (sum(mon[i] for i in b), tuple(-mon[i] for i in reversed(b)))
            for b in self.blocks
        )

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.blocks == self.blocks

    def __hash__(self):
        return hash(("block", self.blocks))

    def __repr__(self):
        return f"block{self.blocks}"


GREVLEX = GrevlexOrder()
LEX = LexOrder()


def elimination_order(front: Iterable[int], nvars: int) -> BlockOrder:
    """Block order putting ``front`` variables above the rest."""
    front = tuple(sorted(front))
    rest = tuple(i for i in range(nvars) if i not in set(front))
    return BlockOrder((front, rest))


# ---------------------------------------------------------------------------
# rings and polynomials

class PolyRing:
    """k[x1, ..., xn] for an exact field k: variable names plus the field."""

    def __init__(self, variables: Sequence[str], field: Field):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")
        self.variables = variables
        self.field = field
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, value) -> "Polynomial":
        c = self.field(value)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, i: int) -> "Polynomial":
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): self.field.one})

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, mon: Monomial, coeff=None) -> "Polynomial":
        c = self.field.one if coeff is None else self.field(coeff)
        return Polynomial(self, {tuple(mon): c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return _parse(text, self)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.variables)}]"


class Bidegree(NamedTuple):
    x_degree: int
    y_degree: int


class Polynomial:
    """Immutable sparse polynomial. Arithmetic via operators."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def degrees_present(self) -> set:
        return {sum(m) for m in self.terms}

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise AmbientMismatch(
                    f"operands in {self.ring!r} and {other.ring!r}"
                )
            return other
        if isinstance(other, (int, Fraction, GFElement)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GFElement)):
            c0 = self.ring.field(other)
            if not c0:
                return self.ring.zero
            return Polynomial(self.ring, {m: c * c0 for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                c = c1 * c2
                s = terms.get(m)
                if s is None:
                    terms[m] = c
                else:
                    s = s + c
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- leading data -------------------------------------------------------

    def leading_monomial(self, order) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order) -> "Polynomial":
        c = self.leading_coeff(order)
        return self * (self.ring.field.one / c)

    # -- structure ----------------------------------------------------------

    def bidegree(self, x_indices, y_indices) -> Optional[Bidegree]:
        """Bidegree w.r.t. a variable split, or None if not bihomogeneous.

        x_indices and y_indices must partition the ring's variables.
        """
        xs, ys = set(x_indices), set(y_indices)
        if xs & ys or xs | ys != set(range(self.ring.nvars)):
            raise ValueError("variable split must partition the ring variables")
        if not self.terms:
            return None
        pairs = {
            (sum(m[i] for i in xs), sum(m[i] for i in ys)) for m in self.terms
        }
        if len(pairs) != 1:
            return None
        return Bidegree(*pairs.pop())

    def map_into(self, target: PolyRing, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to images[i] (a target polynomial)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        if target.field != self.ring.field:
            raise AmbientMismatch("ring map must preserve the field")
        out = target.zero
        for m, c in self.terms.items():
            piece = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    piece = piece * images[i] ** e
            out = out + piece
        return out

    def rename_into(self, target: PolyRing, name_map: Optional[dict] = None) -> "Polynomial":
        """Move to another ring matching variables by name (or by name_map)."""
        name_map = name_map or {}
        images = []
        for v in self.ring.variables:
            w = name_map.get(v, v)
            images.append(target.var(target.var_index(w)))
        return self.map_into(target, images)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GFElement)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- printing -----------------------------------------------------------

    def sorted_terms(self, order=GREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            negative = isinstance(c, Fraction) and c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == self.ring.field.one:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


def bidegree(poly: Polynomial, x_indices, y_indices) -> Optional[Bidegree]:
    return poly.bidegree(x_indices, y_indices)


# ---------------------------------------------------------------------------
# parser
#
#   expr   := ['-'] term (('+' | '-') term)*
#   term   := factor ('*' factor)*
#   factor := atom [('^' | '**') INT]
#   atom   := '(' expr ')' | NAME | INT ['/' INT]

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)"
    r"|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad character at position {pos}: {text[pos:pos+10]!r}")
        pos = m.end()
        if m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        elif m.lastgroup == "int":
            tokens.append(("int", int(m.group("int"))))
        else:
            op = m.group("op")
            tokens.append(("pow" if op in ("^", "**") else op, op))
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i][0]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}")
        return tok

    def expr(self) -> Polynomial:
        negate = False
        if self.peek() == "-":
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "pow":
            self.next()
            e = self.expect("int")[1]
            base = base ** e
        return base

    def atom(self) -> Polynomial:
        kind, value = self.next()
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            return self.ring.var(self.ring.var_index(value))
        if kind == "int":
            numer = value
            if self.peek() == "/":
                self.next()
                denom = self.expect("int")[1]
                if denom == 0:
                    raise ParseError("zero denominator")
                try:
                    return self.ring.constant(
                        self.ring.field.from_fraction(numer, denom)
                    )
                except ZeroDivisionError as e:
                    raise ParseError(str(e)) from None
            return self.ring.constant(numer)
        raise ParseError(f"unexpected token {value!r}")


def _parse(text: str, ring: PolyRing) -> Polynomial:
    if not text.strip():
        raise ParseError("empty expression")
    parser = _Parser(_tokenize(text), ring)
    poly = parser.expr()
    if parser.peek() != "end":
        raise ParseError(f"trailing input: {parser.tokens[parser.i][1]!r}")
    return poly


def parse_poly(text: str, variables: Sequence[str], field: Field) -> Polynomial:
    """Parse ``text`` in k[variables] for the given exact field."""
    return PolyRing(variables, field).parse(text)
