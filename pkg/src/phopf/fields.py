"""Exact base fields: arbitrary-precision rationals and prime fields F_p.

Scalars are either `fractions.Fraction` (over Q) or `FpScalar` (over F_p).
Both support +, -, *, /, **-1, ==, bool; generic code never needs to know
which field it is working over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError


class FpScalar:
    """Residue modulo a prime p with exact field arithmetic."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _other(self, x):
        if isinstance(x, FpScalar):
            if x.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, x.p))
            return x.val
        if isinstance(x, int):
            return x % self.p
        return None

    def __add__(self, x):
        v = self._other(x)
        return NotImplemented if v is None else FpScalar(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, x):
        v = self._other(x)
        return NotImplemented if v is None else FpScalar(self.val - v, self.p)

    def __rsub__(self, x):
        v = self._other(x)
        return NotImplemented if v is None else FpScalar(v - self.val, self.p)

    def __mul__(self, x):
        v = self._other(x)
        return NotImplemented if v is None else FpScalar(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, x):
        v = self._other(x)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpScalar(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, x):
        v = self._other(x)
        if v is None:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpScalar(v * pow(self.val, self.p - 2, self.p), self.p)

    def __pow__(self, n):
        if n < 0:
            if self.val == 0:
                raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
            return FpScalar(pow(self.val, -n * (self.p - 2), self.p), self.p)
        return FpScalar(pow(self.val, n, self.p), self.p)

    def __neg__(self):
        return FpScalar(-self.val, self.p)

    def __eq__(self, x):
        v = self._other(x)
        return NotImplemented if v is None else self.val == v

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


class Rationals:
    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def scalar(self, n):
        return Fraction(n)

    def parse(self, text):
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError("bad rational scalar %r: %s" % (text, exc)) from None

    def format(self, x):
        return str(Fraction(x))

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise SchemaError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "Fp:%d" % p

    def zero(self):
        return FpScalar(0, self.p)

    def one(self):
        return FpScalar(1, self.p)

    def scalar(self, n):
        return FpScalar(n, self.p)

    def parse(self, text):
        try:
            return FpScalar(int(str(text)), self.p)
        except ValueError:
            raise SchemaError("bad F_%d scalar %r" % (self.p, text)) from None

    def format(self, x):
        return "%d" % (x.val if isinstance(x, FpScalar) else x % self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()

_prime_fields = {}


def GF(p):
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_name(name):
    """Parse a field tag: "Q", or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if isinstance(name, str) and name.startswith("Fp:"):
        try:
            return GF(int(name[3:]))
        except ValueError:
            pass
    raise SchemaError("unknown field %r" % (name,))
