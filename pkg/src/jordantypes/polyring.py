"""Weighted polynomial rings, their divided-power duals, the expression
parser, and the contraction action.

Monomials are plain exponent tuples.  Divided powers are a basis choice with
contraction as the action: x_i^k sends X_i^[a] to X_i^[a-k] with no
factorials, so characteristic-p computations stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    ExpressionSyntaxError,
    InvalidArgumentError,
    NotHomogeneousError,
    UnknownVariableError,
)
from .linalg import FieldSpec

Monomial = tuple


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring (graded, possibly with weights) or regular local ring."""

    variables: tuple
    weights: tuple = ()
    field: FieldSpec = dc_field(default_factory=FieldSpec)
    local: bool = False

    def __post_init__(self):
        variables = tuple(self.variables)
        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "weights", weights)
        if len(set(variables)) != len(variables):
            raise InvalidArgumentError("variable names must be distinct")
        if not variables:
            raise InvalidArgumentError("need at least one variable")
        if len(weights) != len(variables):
            raise InvalidArgumentError("one weight per variable")
        if any(w < 1 for w in weights):
            raise InvalidArgumentError("weights must be >= 1")
        if self.local and any(w != 1 for w in weights):
            # The m-adic order of a local ring ignores weights; only the
            # standard filtration is supported.
            raise InvalidArgumentError("local mode requires all weights equal 1")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def weighted_degree(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def grevlex_key(self, mono: Monomial):
        """Sort key: descending sort by this key is graded reverse
        lexicographic order (weighted degree first)."""
        return (self.weighted_degree(mono),
                tuple(-mono[i] for i in range(len(mono) - 1, -1, -1)))

    def monomials_of_degree(self, d: int):
        """All monomials of weighted degree exactly d, grevlex descending."""
        out = []

        def rec(i, remaining, expos):
            if i == self.nvars - 1:
                w = self.weights[i]
                if remaining % w == 0:
                    out.append(tuple(expos + [remaining // w]))
                return
            w = self.weights[i]
            for e in range(remaining // w, -1, -1):
                rec(i + 1, remaining - e * w, expos + [e])

        if d >= 0:
            rec(0, d, [])
        out.sort(key=self.grevlex_key, reverse=True)
        return out

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def variable_monomial(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.nvars))


def weighted_degree(mono: Monomial, ring: RingSpec) -> int:
    return ring.weighted_degree(mono)


class _BasePoly:
    """Shared term store for polynomials and divided-power forms."""

    __slots__ = ("ring", "terms")

    dual = False

    def __init__(self, ring: RingSpec, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            f = ring.field
            for mono, coeff in terms.items():
                c = f.coerce(coeff)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Maximum weighted degree of a term (None for the zero element)."""
        if not self.terms:
            return None
        return max(self.ring.weighted_degree(m) for m in self.terms)

    def order(self):
        """Minimum weighted degree of a term (None for zero); the m-adic
        order for local-mode elements."""
        if not self.terms:
            return None
        return min(self.ring.weighted_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.weighted_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def constant_term(self):
        return self.terms.get(self.ring.unit_monomial(), self.ring.field.coerce(0))

    def homogeneous_component(self, d: int):
        return type(self)(self.ring, {m: c for m, c in self.terms.items()
                                      if self.ring.weighted_degree(m) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda mc: self.ring.grevlex_key(mc[0]), reverse=True)

    def add(self, other):
        f = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            new = f.add(terms.get(m, f.coerce(0)), c)
            if new:
                terms[m] = new
            else:
                terms.pop(m, None)
        return type(self)(self.ring, terms)

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return type(self)(self.ring)
        return type(self)(self.ring, {m: f.mul(c, v) for m, v in self.terms.items()})

    def sub(self, other):
        return self.add(other.scale(-1))

    def __eq__(self, other):
        return (type(self) is type(other) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"{type(self).__name__}({render(self)})"


class Poly(_BasePoly):
    """Element of the polynomial ring."""

    dual = False

    def mul(self, other: "Poly") -> "Poly":
        f = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                new = f.add(terms.get(m, f.coerce(0)), f.mul(c1, c2))
                if new:
                    terms[m] = new
                else:
                    terms.pop(m, None)
        return Poly(self.ring, terms)

    def monomial_mul(self, mono: Monomial, coeff=1) -> "Poly":
        f = self.ring.field
        coeff = f.coerce(coeff)
        return Poly(self.ring, {tuple(a + b for a, b in zip(mono, m)): f.mul(coeff, c)
                                for m, c in self.terms.items()})

    def power(self, k: int) -> "Poly":
        if k < 0:
            raise InvalidArgumentError("negative power")
        result = Poly(self.ring, {self.ring.unit_monomial(): 1})
        for _ in range(k):
            result = result.mul(self)
        return result

    @classmethod
    def variable(cls, ring: RingSpec, name: str) -> "Poly":
        i = ring.variables.index(name)
        return cls(ring, {ring.variable_monomial(i): 1})

    @classmethod
    def constant(cls, ring: RingSpec, c) -> "Poly":
        return cls(ring, {ring.unit_monomial(): c})


class DividedPowerPoly(_BasePoly):
    """Element of the divided-power dual, on the basis X_1^[a_1]...X_r^[a_r]."""

    dual = True


def contract(g: Poly, f: DividedPowerPoly) -> DividedPowerPoly:
    """The contraction action: x^a sends X^[b] to X^[b-a], annihilating on
    exponent underflow; extended bilinearly."""
    if g.ring.variables != f.ring.variables:
        raise InvalidArgumentError("contraction requires matching rings")
    fld = f.ring.field
    terms = {}
    for gm, gc in g.terms.items():
        for fm, fc in f.terms.items():
            target = tuple(b - a for a, b in zip(gm, fm))
            if any(e < 0 for e in target):
                continue
            new = fld.add(terms.get(target, fld.coerce(0)), fld.mul(gc, fc))
            if new:
                terms[target] = new
            else:
                terms.pop(target, None)
    return DividedPowerPoly(f.ring, terms)


# --- expression parsing ----------------------------------------------------

_TOKEN_INT = "int"
_TOKEN_NAME = "name"
_TOKEN_OP = "op"
_TOKEN_END = "end"


def _tokenize(src: str):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append((_TOKEN_INT, src[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append((_TOKEN_NAME, src[i:j], i))
            i = j
        elif ch in "+-*^()/":
            tokens.append((_TOKEN_OP, ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append((_TOKEN_END, "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: RingSpec, dual: bool):
        self.src = src
        self.ring = ring
        self.dual = dual
        self.tokens = _tokenize(src)
        self.pos = 0
        self.poly_cls = DividedPowerPoly if dual else Poly

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value, at = self.peek()
        if kind != _TOKEN_OP or value != op:
            raise ExpressionSyntaxError(f"expected {op!r}", at)
        return self.advance()

    def _match_variable(self, name: str):
        """Resolve a name to a variable index; dual mode also matches the
        uppercase spelling of each variable."""
        for i, v in enumerate(self.ring.variables):
            if name == v or (self.dual and name.lower() == v.lower()):
                return i
        return None

    def _name_factor(self, name: str, at: int):
        idx = self._match_variable(name)
        if idx is not None:
            return [idx]
        # Implicit products like "yz" split into single-letter variables.
        if len(name) > 1:
            indices = []
            for k, ch in enumerate(name):
                idx = self._match_variable(ch)
                if idx is None:
                    raise UnknownVariableError(
                        f"unknown variable {name!r} at position {at}"
                        f" (not splittable at {ch!r})")
                indices.append(idx)
            return indices
        raise UnknownVariableError(f"unknown variable {name!r} at position {at}")

    def parse(self):
        result = self.parse_expr()
        kind, value, at = self.peek()
        if kind != _TOKEN_END:
            raise ExpressionSyntaxError(f"unexpected trailing {value!r}", at)
        return result

    def parse_expr(self):
        sign = 1
        kind, value, _ = self.peek()
        if kind == _TOKEN_OP and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        result = self.parse_term().scale(sign)
        while True:
            kind, value, _ = self.peek()
            if kind == _TOKEN_OP and value in "+-":
                self.advance()
                term = self.parse_term()
                result = result.add(term if value == "+" else term.scale(-1))
            else:
                return result

    def parse_term(self):
        result = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == _TOKEN_OP and value == "*":
                self.advance()
                result = self._poly_mul(result, self.parse_factor())
            elif kind in (_TOKEN_INT, _TOKEN_NAME) or (kind == _TOKEN_OP and value == "("):
                result = self._poly_mul(result, self.parse_factor())
            else:
                return result

    def _poly_mul(self, a, b):
        # Dual elements never multiply each other; products only assemble
        # coefficient * monomial factors, which stay within one term store.
        f = self.ring.field
        terms = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                new = f.add(terms.get(m, f.coerce(0)), f.mul(c1, c2))
                if new:
                    terms[m] = new
                else:
                    terms.pop(m, None)
        return self.poly_cls(self.ring, terms)

    def _exponent(self):
        kind, value, _ = self.peek()
        if kind == _TOKEN_OP and value == "^":
            self.advance()
            kind, value, at = self.advance()
            if kind != _TOKEN_INT:
                raise ExpressionSyntaxError("expected integer exponent", at)
            return int(value)
        return 1

    def parse_factor(self):
        kind, value, at = self.advance()
        if kind == _TOKEN_INT:
            num = int(value)
            kind2, value2, _ = self.peek()
            if kind2 == _TOKEN_OP and value2 == "/":
                self.advance()
                kind3, value3, at3 = self.advance()
                if kind3 != _TOKEN_INT:
                    raise ExpressionSyntaxError("expected integer denominator", at3)
                den = int(value3)
                if den == 0:
                    raise ExpressionSyntaxError("zero denominator", at3)
                f = self.ring.field
                coeff = (f.coerce(num) / f.coerce(den) if f.is_rational
                         else f.mul(f.coerce(num), f.inv(f.coerce(den))))
                return self.poly_cls(self.ring, {self.ring.unit_monomial(): coeff})
            return self.poly_cls(self.ring, {self.ring.unit_monomial(): num})
        if kind == _TOKEN_NAME:
            indices = self._name_factor(value, at)
            expo = [0] * self.ring.nvars
            for idx in indices[:-1]:
                expo[idx] += 1
            expo[indices[-1]] += self._exponent()
            return self.poly_cls(self.ring, {tuple(expo): 1})
        if kind == _TOKEN_OP and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            k = self._exponent()
            result = self.poly_cls(self.ring, {self.ring.unit_monomial(): 1})
            for _ in range(k):
                result = self._poly_mul(result, inner)
            return result
        raise ExpressionSyntaxError(f"unexpected token {value!r}", at)


def parse(src: str, ring: RingSpec, dual: bool = False):
    """Parse an expression into a Poly (dual=False) or DividedPowerPoly.

    Integer (or a/b rational) coefficients, + - * operators, ^ exponents,
    parentheses.  Implicit multiplication: adjacency, and single-letter
    variable runs like "yz"; multi-letter names require explicit *.  In dual
    mode uppercase names denote divided powers, so X^4 means X^[4].
    """
    return _Parser(src, ring, dual).parse()


def _render_coeff(c) -> str:
    return str(c)


def render(p: _BasePoly) -> str:
    """Canonical rendering; parse(render(p), ...) == p."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms():
        factors = []
        for i, e in enumerate(mono):
            if e == 0:
                continue
            name = p.ring.variables[i]
            if p.dual:
                name = name.upper()
            factors.append(name if e == 1 else f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            piece = _render_coeff(coeff)
        elif coeff == 1:
            piece = body
        elif coeff == -1:
            piece = f"-{body}"
        else:
            piece = f"{_render_coeff(coeff)}*{body}"
        pieces.append(piece)
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out
