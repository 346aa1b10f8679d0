"""Coefficient rings: arbitrary-precision integers, rationals, and polynomial rings.

A ring object is the descriptor every other module programs against. Elements
are plain values (``int``, ``Fraction``, or :class:`Polynomial`); the ring
supplies arithmetic, divisibility, gcd/lcm, unit tests, canonical unit
normalization, and text conversion. All operations are exact and pure.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import GraphError, ParseError, RingMismatchError
from .polynomials import INT, RAT, Polynomial, exact_divide, parse_polynomial, poly_gcd

_INT_LITERAL = re.compile(r"[+-]?\d+\Z")
_RAT_LITERAL = re.compile(r"[+-]?\d+(/\d+)?\Z")


class Ring:
    """Shared behaviour; concrete rings fill in the primitive operations."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def divides(self, a, b) -> bool:
        """True iff a*q == b for some ring element q; divides(0, 0) is True."""
        if self.is_zero(a):
            if self.is_zero(b):
                return True
            raise ZeroDivisionError("only 0 is divisible by 0")
        return self.exact_div(b, a) is not None

    def lcm(self, a, b):
        """Normalized least common multiple; requires nonzero arguments."""
        if self.is_zero(a) or self.is_zero(b):
            raise ValueError("lcm requires nonzero arguments")
        q = self.exact_div(self.mul(a, b), self.gcd(a, b))
        return self.normalize(q)

    def product(self, items):
        out = self.one
        for item in items:
            out = self.mul(out, item)
        return out


class IntegerRing(Ring):
    """The integers with Euclidean gcd and nonnegative normalization."""

    kind = "int"
    zero = 0
    one = 1
    description = "ZZ"

    def check(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise RingMismatchError(f"{a!r} is not an integer ring element")
        return a

    def from_int(self, k: int) -> int:
        return int(k)

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def neg(self, a):
        return -self.check(a)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def is_zero(self, a) -> bool:
        return self.check(a) == 0

    def is_unit(self, a) -> bool:
        return self.check(a) in (1, -1)

    def exact_div(self, a, b):
        if self.check(b) == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(self.check(a), b)
        return q if r == 0 else None

    def gcd(self, a, b):
        if self.check(a) == 0 and self.check(b) == 0:
            raise ValueError("gcd(0, 0) is undefined")
        return math.gcd(a, b)

    def normalize(self, a):
        return abs(self.check(a))

    def element_from_text(self, text: str):
        if not _INT_LITERAL.match(text.strip()):
            raise ParseError(f"malformed integer literal {text!r}", 0)
        return int(text)

    def to_text(self, a) -> str:
        return str(self.check(a))

    def to_document(self) -> dict:
        return {"kind": "int"}

    def __repr__(self):
        return "IntegerRing()"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")


class RationalRing(Ring):
    """The rationals; a field, so every nonzero element is a unit."""

    kind = "rat"
    zero = Fraction(0)
    one = Fraction(1)
    description = "QQ"

    def check(self, a):
        if isinstance(a, bool):
            raise RingMismatchError("bool is not a rational ring element")
        if isinstance(a, int):
            return Fraction(a)
        if isinstance(a, Fraction):
            return a
        raise RingMismatchError(f"{a!r} is not a rational ring element")

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def neg(self, a):
        return -self.check(a)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def is_zero(self, a) -> bool:
        return self.check(a) == 0

    def is_unit(self, a) -> bool:
        return self.check(a) != 0

    def exact_div(self, a, b):
        if self.check(b) == 0:
            raise ZeroDivisionError("division by zero")
        return self.check(a) / b

    def gcd(self, a, b):
        if self.check(a) == 0 and self.check(b) == 0:
            raise ValueError("gcd(0, 0) is undefined")
        return Fraction(1)

    def normalize(self, a):
        return Fraction(0) if self.is_zero(a) else Fraction(1)

    def element_from_text(self, text: str):
        if not _RAT_LITERAL.match(text.strip()):
            raise ParseError(f"malformed rational literal {text!r}", 0)
        head, _, tail = text.strip().partition("/")
        if tail:
            if int(tail) == 0:
                raise ParseError("zero denominator", 0)
            return Fraction(int(head), int(tail))
        return Fraction(int(head))

    def to_text(self, a) -> str:
        return str(self.check(a))

    def to_document(self) -> dict:
        return {"kind": "rat"}

    def __repr__(self):
        return "RationalRing()"

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("RationalRing")


class PolynomialRing(Ring):
    """Multivariate polynomials over ZZ or QQ in a fixed ordered variable set."""

    kind = "poly"

    def __init__(self, coeff_kind: str, variables):
        if coeff_kind not in (INT, RAT):
            raise ValueError(f"unknown coefficient kind {coeff_kind!r}")
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable name")
        for name in variables:
            if not re.match(r"[A-Za-z_][A-Za-z_0-9]*\Z", name):
                raise ValueError(f"bad variable name {name!r}")
        self.coeff_kind = coeff_kind
        self.variables = variables
        self.zero = Polynomial.zero(variables, coeff_kind)
        self.one = Polynomial.constant(1, variables, coeff_kind)

    @property
    def description(self) -> str:
        base = "ZZ" if self.coeff_kind == INT else "QQ"
        return f"{base}[{','.join(self.variables)}]"

    def check(self, a):
        if (
            not isinstance(a, Polynomial)
            or a.variables != self.variables
            or a.coeff_kind != self.coeff_kind
        ):
            raise RingMismatchError(f"{a!r} is not an element of {self.description}")
        return a

    def from_int(self, k: int) -> Polynomial:
        return Polynomial.constant(int(k), self.variables, self.coeff_kind)

    def constant(self, value) -> Polynomial:
        return Polynomial.constant(value, self.variables, self.coeff_kind)

    def variable(self, name: str) -> Polynomial:
        return Polynomial.variable(name, self.variables, self.coeff_kind)

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def neg(self, a):
        return -self.check(a)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def is_zero(self, a) -> bool:
        return self.check(a).is_zero()

    def is_unit(self, a) -> bool:
        return self.check(a).is_unit()

    def exact_div(self, a, b):
        return exact_divide(self.check(a), self.check(b))

    def gcd(self, a, b):
        return poly_gcd(self.check(a), self.check(b))

    def normalize(self, a):
        return self.check(a).normalized()

    def element_from_text(self, text: str):
        return parse_polynomial(text, self.variables, self.coeff_kind)

    def to_text(self, a) -> str:
        return str(self.check(a))

    def to_document(self) -> dict:
        return {
            "kind": "poly",
            "coefficients": self.coeff_kind,
            "variables": list(self.variables),
        }

    def __repr__(self):
        return f"PolynomialRing({self.coeff_kind!r}, {self.variables!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.coeff_kind == self.coeff_kind
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash(("PolynomialRing", self.coeff_kind, self.variables))


ZZ = IntegerRing()
QQ = RationalRing()


def ring_from_document(document: dict) -> Ring:
    """Build a ring from its JSON descriptor, e.g. {"kind": "poly", ...}."""
    if not isinstance(document, dict) or "kind" not in document:
        raise GraphError("BAD_RING", "ring descriptor must be an object with a 'kind'")
    kind = document["kind"]
    if kind == "int":
        return ZZ
    if kind == "rat":
        return QQ
    if kind == "poly":
        coefficients = document.get("coefficients")
        variables = document.get("variables")
        if coefficients not in (INT, RAT):
            raise GraphError(
                "BAD_RING", "polynomial ring needs 'coefficients': 'int' or 'rat'"
            )
        if not isinstance(variables, list) or not variables:
            raise GraphError(
                "BAD_RING", "polynomial ring needs a nonempty 'variables' list"
            )
        try:
            return PolynomialRing(coefficients, variables)
        except ValueError as exc:
            raise GraphError("BAD_RING", str(exc)) from exc
    raise GraphError("BAD_RING", f"unknown ring kind {kind!r}")
