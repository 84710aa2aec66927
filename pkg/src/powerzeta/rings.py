"""Exact coefficient rings: the integers and sparse multivariate polynomials.

A ``RingModel`` describes the ring (plain integers, or integer polynomials in
a fixed ordered set of variables, optionally with Laurent-style negative
exponents).  A ``RingElement`` is a canonical sparse sum of monomials with
arbitrary-precision integer coefficients, so every identity checked by the
higher layers is exact rather than approximate.

Elements are immutable after construction and every operation returns a new
canonical value; they can be shared freely between threads or tasks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "ModelMismatchError",
    "ParseError",
    "RingModel",
    "RingElement",
    "create_model",
    "integer_model",
    "polynomial_model",
    "parse_element",
    "format_element",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class ModelMismatchError(ValueError):
    """Two operands live in different coefficient rings."""


class ParseError(ValueError):
    """Element text is malformed; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class RingModel:
    """A computable coefficient ring.

    kind: ``"integers"`` or ``"polynomial"``.
    variables: ordered variable names (empty for the integers).
    min_exponent: lowest exponent accepted when an element is built from user
        data; 0 gives ordinary polynomials, a negative value admits Laurent
        monomials such as ``L^-1``.
    """

    kind: str
    variables: tuple[str, ...] = ()
    min_exponent: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.kind not in ("integers", "polynomial"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.min_exponent > 0:
            raise ValueError("min_exponent must be <= 0")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        for name in self.variables:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if self.kind == "integers" and self.variables:
            raise ValueError("the integer ring has no variables")
        if self.kind == "integers" and self.min_exponent != 0:
            raise ValueError("the integer ring has min_exponent 0")
        if self.kind == "polynomial" and not self.variables:
            raise ValueError("a polynomial ring needs at least one variable")

    # -- element constructors -------------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def one(self) -> RingElement:
        return self.const(1)

    def const(self, value: int) -> RingElement:
        """The constant element ``value``."""
        if not isinstance(value, int):
            raise TypeError(f"constant must be an int, got {type(value).__name__}")
        return RingElement(self, {(0,) * len(self.variables): value})

    def variable(self, name: str) -> RingElement:
        """The element equal to one of the model's variables."""
        if name not in self.variables:
            raise ValueError(f"unknown variable {name!r} in {self}")
        exps = tuple(1 if v == name else 0 for v in self.variables)
        return RingElement(self, {exps: 1})

    def monomial(self, exponents, coefficient: int = 1) -> RingElement:
        """A single monomial, e.g. ``monomial((2, 1), 3)`` is ``3*u^2*v``."""
        return RingElement(self, {tuple(exponents): coefficient})

    def element(self, terms: dict) -> RingElement:
        return RingElement(self, terms)

    def parse(self, text: str) -> RingElement:
        return parse_element(self, text)

    def __str__(self) -> str:
        if self.kind == "integers":
            return "Z"
        body = ",".join(self.variables)
        if self.min_exponent < 0:
            return f"Z[{body}; min_exponent={self.min_exponent}]"
        return f"Z[{body}]"


def create_model(kind: str, variables=(), min_exponent: int = 0) -> RingModel:
    """Build a ring model; raises ValueError on duplicate names or a positive floor."""
    return RingModel(kind, tuple(variables), min_exponent)


def integer_model() -> RingModel:
    return RingModel("integers")


def polynomial_model(*variables: str, min_exponent: int = 0) -> RingModel:
    """Integer polynomial ring in the given variables, e.g. ``polynomial_model("u", "v")``."""
    return RingModel("polynomial", tuple(variables), min_exponent)


class RingElement:
    """A canonical sparse sum of monomials over a :class:`RingModel`.

    The term map sends exponent tuples (one entry per model variable) to
    nonzero integer coefficients; zero is the empty map.  Two elements are
    equal iff their models and canonical term maps are equal.
    """

    __slots__ = ("model", "_terms", "_hash")

    def __init__(self, model: RingModel, terms: dict):
        nvars = len(model.variables)
        floor = model.min_exponent
        canonical: dict[tuple[int, ...], int] = {}
        for raw_exps, coeff in terms.items():
            exps = tuple(raw_exps)
            if len(exps) != nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars} for {model}"
                )
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient must be an int, got {type(coeff).__name__}")
            for e in exps:
                if not isinstance(e, int):
                    raise TypeError("exponents must be ints")
                if e < floor:
                    raise ValueError(f"exponent {e} below min_exponent {floor} of {model}")
            if coeff:
                canonical[exps] = canonical.get(exps, 0) + coeff
                if not canonical[exps]:
                    del canonical[exps]
        self.model = model
        self._terms = canonical
        self._hash = None

    @classmethod
    def _raw(cls, model: RingModel, terms: dict) -> RingElement:
        # Internal fast path for arithmetic results: drops zeros, skips the
        # exponent floor so Laurent models stay closed under multiplication.
        obj = object.__new__(cls)
        obj.model = model
        obj._terms = {e: c for e, c in terms.items() if c}
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        """The canonical term map.  Treat as read-only."""
        return self._terms

    # -- ring operations -------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, RingElement):
            if other.model != self.model:
                raise ModelMismatchError(f"cannot combine {self.model} with {other.model}")
            return other
        if isinstance(other, int):
            return self.model.const(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, 0) + coeff
        return RingElement._raw(self.model, merged)

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement._raw(self.model, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc[exps] = acc.get(exps, 0) + c1 * c2
        return RingElement._raw(self.model, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RingElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._inverted_monomial_power(-n)
        result = self.model.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _inverted_monomial_power(self, n: int) -> RingElement:
        # x^-n exists in the model only for unit monomials in a Laurent ring.
        if self.model.min_exponent >= 0:
            raise ValueError(f"negative powers are not available in {self.model}")
        if len(self._terms) != 1:
            raise ValueError("negative powers require a single monomial")
        ((exps, coeff),) = self._terms.items()
        if coeff not in (1, -1):
            raise ValueError("negative powers require a unit coefficient")
        return RingElement._raw(self.model, {tuple(-n * e for e in exps): coeff**n})

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self == self.model.one()

    def is_effective(self) -> bool:
        """True iff every coefficient in canonical form is nonnegative."""
        return all(c >= 0 for c in self._terms.values())

    def constant_value(self) -> int:
        """The integer value of a constant element."""
        if not self._terms:
            return 0
        zero_exps = (0,) * len(self.model.variables)
        if set(self._terms) != {zero_exps}:
            raise ValueError(f"{self} is not constant")
        return self._terms[zero_exps]

    def coefficient(self, exponents) -> int:
        return self._terms.get(tuple(exponents), 0)

    def degree_in(self, name: str) -> int:
        """Largest exponent of ``name`` across terms; the zero element has none."""
        if name not in self.model.variables:
            raise ValueError(f"unknown variable {name!r} in {self.model}")
        if not self._terms:
            raise ValueError("the zero element has no degree")
        idx = self.model.variables.index(name)
        return max(e[idx] for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero element has no degree")
        return max(sum(e) for e in self._terms)

    # -- equality and text --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.model.const(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.model == other.model and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.model, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {self.model}>"


def _grlex_key(item):
    exps, _ = item
    return (sum(exps), tuple(-e for e in exps))


def _monomial_text(variables, exps, coeff) -> str:
    factors = []
    if abs(coeff) != 1 or not any(exps):
        factors.append(str(abs(coeff)))
    for name, e in zip(variables, exps):
        if e == 1:
            factors.append(name)
        elif e != 0:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_element(a: RingElement) -> str:
    """Canonical text in graded-lexicographic term order; round-trips through parse."""
    if not a.terms:
        return "0"
    items = sorted(a.terms.items(), key=_grlex_key)
    pieces = []
    for i, (exps, coeff) in enumerate(items):
        body = _monomial_text(a.model.variables, exps, coeff)
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


# -- parsing ----------------------------------------------------------------------
#
# Grammar (whitespace insignificant, ^ binds tightest, then *, then + and -):
#   expr   := ["+"|"-"] term (("+"|"-") term)*
#   term   := factor ("*" factor)*
#   factor := atom ["^" ["-"] INT]
#   atom   := INT | NAME | "(" expr ")"

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if match.group("int") is not None:
            tokens.append(("int", match.group("int"), match.start("int")))
        elif match.group("name") is not None:
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, model: RingModel, text: str):
        self.model = model
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> RingElement:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return value

    def expr(self) -> RingElement:
        sign = 1
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.advance()
            sign = -1 if text == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def term(self) -> RingElement:
        value = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> RingElement:
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            exponent = self.exponent_literal()
            if exponent >= 0:
                return base**exponent
            return self.negative_power(base, exponent)
        return base

    def exponent_literal(self) -> int:
        sign = 1
        kind, text, pos = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            sign = -1
            kind, text, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer exponent", pos)
        self.advance()
        return sign * int(text)

    def negative_power(self, base: RingElement, exponent: int) -> RingElement:
        _, _, pos = self.tokens[self.index - 1]
        if len(base.terms) != 1 or set(base.terms.values()) - {1, -1}:
            raise ParseError("negative exponents need a single unit monomial base", pos)
        ((exps, coeff),) = base.terms.items()
        scaled = tuple(exponent * e for e in exps)
        for e in scaled:
            if e < self.model.min_exponent:
                raise ParseError(
                    f"exponent {e} below min_exponent {self.model.min_exponent}", pos
                )
        return RingElement(self.model, {scaled: coeff**exponent})

    def atom(self) -> RingElement:
        kind, text, pos = self.advance()
        if kind == "int":
            return self.model.const(int(text))
        if kind == "name":
            if text not in self.model.variables:
                raise ParseError(f"unknown variable {text!r} in {self.model}", pos)
            return self.model.variable(text)
        if kind == "op" and text == "(":
            value = self.expr()
            kind, text, pos = self.advance()
            if not (kind == "op" and text == ")"):
                raise ParseError("expected ')'", pos)
            return value
        raise ParseError(f"expected a number, variable or '(', got {text!r}", pos)


def parse_element(model: RingModel, text: str) -> RingElement:
    """Parse element text (see module grammar); raises :class:`ParseError` with position."""
    return _Parser(model, text).parse()
