"""Exact scalar arithmetic over Q and over prime fields F_p with p odd.

Rational scalars are stdlib ``fractions.Fraction`` (always reduced, exact).
Prime-field scalars are ``ModP`` instances carrying the least non-negative
residue.  Every other module treats scalars opaquely through a ``Field``
context object, so the same code runs over both ground fields.

The characteristic-2 exclusion is baked in: ``PrimeField(2)`` raises.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Bad field spec, malformed scalar text, or mixed-field arithmetic."""


def is_prime(n):
    """Deterministic primality by trial division; fine for n < 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue in F_p, canonical representative in [0, p).

    Supports +, -, *, /, unary -, **, == (against ModP of the same p and
    against int, reducing the int mod p).  Arithmetic with a ModP of a
    different p raises FieldError rather than guessing.
    """

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return ModP(-self.val, self.p)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return ModP(pow(self.val, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        # hash of the canonical residue; matches hash(int) for 0 <= val < p
        return hash(self.val)

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __repr__(self):
        return f"ModP({self.val}, {self.p})"

    def __str__(self):
        return str(self.val)


class Field:
    """Common interface of the two ground fields."""

    kind = None  # "rational" | "prime"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def contains(self, value):
        raise NotImplementedError


class RationalField(Field):
    kind = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        """Parse "-?digits(/digits)?" into a reduced Fraction."""
        text = text.strip()
        num, slash, den = text.partition("/")
        try:
            n = int(num)
        except ValueError:
            raise FieldError(f"malformed rational {text!r}") from None
        if not slash:
            return Fraction(n)
        try:
            d = int(den)
        except ValueError:
            raise FieldError(f"malformed rational {text!r}") from None
        if d == 0:
            raise FieldError(f"zero denominator in {text!r}")
        if d < 0:
            # keep the accepted grammar strict: denominator is digits only
            raise FieldError(f"malformed rational {text!r}")
        return Fraction(n, d)

    def contains(self, value):
        return isinstance(value, Fraction)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    def to_spec(self):
        return {"kind": "rational"}


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"{p!r} is not prime")
        if p == 2:
            raise FieldError("characteristic 2 is excluded (p must be odd)")
        self.p = p

    def zero(self):
        return ModP(0, self.p)

    def one(self):
        return ModP(1, self.p)

    def from_int(self, n):
        return ModP(n, self.p)

    def parse(self, text):
        """Parse "-?digits" into the canonical residue mod p."""
        text = text.strip()
        try:
            n = int(text)
        except ValueError:
            raise FieldError(f"malformed residue {text!r} for F_{self.p}") from None
        if "/" in text:  # unreachable, int() already rejected; kept for clarity
            raise FieldError(f"no fractions in F_{self.p}")
        return ModP(n, self.p)

    def contains(self, value):
        return isinstance(value, ModP) and value.p == self.p

    def elements(self):
        """All p field elements, in residue order."""
        return [ModP(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_spec(self):
        return {"kind": "prime", "p": self.p}


QQ = RationalField()


def make_field(kind, p=None):
    """Field from its spec: ("rational", None) or ("prime", p)."""
    if kind == "rational":
        if p is not None:
            raise FieldError("rational field takes no p")
        return QQ
    if kind == "prime":
        if p is None:
            raise FieldError("prime field needs p")
        return PrimeField(p)
    raise FieldError(f"unknown field kind {kind!r}")


def parse_scalar(text, field):
    """Parse scalar text in the given field (see Field.parse)."""
    if not isinstance(text, str):
        raise FieldError(f"scalar must be a string, got {type(text).__name__}")
    return field.parse(text)


def scalar_str(value):
    """Canonical text form, inverse of parse for canonical inputs."""
    return str(value)
