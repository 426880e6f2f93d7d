"""Exact coefficient rings for the loop parameter delta.

Three contexts are supported and a computation fixes exactly one of them:

* ``Symbolic()``          -- integer polynomials in an indeterminate delta
* ``RationalDelta(q)``    -- rationals, delta specialised to ``q``
* ``PrimeField(p, d)``    -- the field F_p, delta specialised to ``d mod p``

No floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ContextMismatch(ValueError):
    pass


class Poly:
    """Integer polynomial in delta, coefficients stored in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def delta(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, other) -> "Poly":
        """Quotient of an exact division in Z[delta]; raises if inexact."""
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return Poly()
        q = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            c //= lead
            q[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return Poly(q)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("delta" if k == 1 else f"delta^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class GF:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise ContextMismatch(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pow__(self, n: int):
        return GF(pow(self.v, n, self.p), self.p)

    def inverse(self) -> "GF":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return GF(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * GF(o, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, GF):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return False

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF({self.v}, {self.p})"


Scalar = Union[Poly, Fraction, GF]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class Symbolic:
    kind = "symbolic"
    characteristic = 0
    is_field = False

    @property
    def zero(self):
        return Poly()

    @property
    def one(self):
        return Poly((1,))

    @property
    def delta(self):
        return Poly.delta()

    def coerce(self, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly((x,))
        raise ContextMismatch(f"cannot use {x!r} in the symbolic context")

    def specialize(self, poly: Poly):
        return poly

    def exact_div(self, a, b):
        return a.exact_div(b)

    def delta_is_zero(self) -> bool:
        return False

    def delta_invertible(self) -> bool:
        return False

    def describe(self) -> str:
        return "symbolic"


@dataclass(frozen=True)
class RationalDelta:
    value: Fraction
    kind = "rational"
    characteristic = 0
    is_field = True

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def delta(self):
        return self.value

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise ContextMismatch(f"cannot use {x!r} in a rational context")

    def specialize(self, poly: Poly):
        return poly(self.value) if poly.coeffs else Fraction(0)

    def exact_div(self, a, b):
        return a / b

    def delta_is_zero(self) -> bool:
        return self.value == 0

    def delta_invertible(self) -> bool:
        return self.value != 0

    def describe(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class PrimeField:
    p: int
    delta_value: int
    kind = "prime"
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "delta_value", self.delta_value % self.p)

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return GF(0, self.p)

    @property
    def one(self):
        return GF(1, self.p)

    @property
    def delta(self):
        return GF(self.delta_value, self.p)

    def coerce(self, x):
        if isinstance(x, GF):
            if x.p != self.p:
                raise ContextMismatch(f"mixing F_{x.p} into F_{self.p}")
            return x
        if isinstance(x, int):
            return GF(x, self.p)
        if isinstance(x, Fraction):
            return GF(x.numerator, self.p) / GF(x.denominator, self.p)
        raise ContextMismatch(f"cannot use {x!r} in F_{self.p}")

    def specialize(self, poly: Poly):
        acc = 0
        for c in reversed(poly.coeffs):
            acc = (acc * self.delta_value + c) % self.p
        return GF(acc, self.p)

    def exact_div(self, a, b):
        return a / b

    def delta_is_zero(self) -> bool:
        return self.delta_value == 0

    def delta_invertible(self) -> bool:
        return self.delta_value != 0

    def describe(self) -> str:
        return f"{self.delta_value} mod {self.p}"


Context = Union[Symbolic, RationalDelta, PrimeField]


def make_context(delta, p: int = 0) -> Context:
    """Build a context from a CLI-style delta (int, Fraction, 'a/b' or 'symbolic')."""
    if isinstance(delta, str):
        if delta.strip().lower() == "symbolic":
            if p:
                raise ValueError("symbolic delta is only available in characteristic 0")
            return Symbolic()
        delta = Fraction(delta.strip())
    if p:
        delta = Fraction(delta)
        if delta.denominator % p == 0:
            raise ValueError(f"delta={delta} is not defined in F_{p}")
        return PrimeField(p, delta.numerator * pow(delta.denominator, -1, p))
    return RationalDelta(Fraction(delta))


def is_zero(x) -> bool:
    return not x
