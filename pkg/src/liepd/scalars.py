"""Exact scalars.

The working field is the rationals, represented by :class:`fractions.Fraction`
(always reduced, positive denominator, zero is ``0/1``).  Prime fields
``GF(p)`` for ``p in {2, 3, 5}`` exist only for the finite-model oracle that
enumerates hom-sets; they are never used by the symbolic kernel itself.
"""
from fractions import Fraction

from .errors import DomainError

SMALL_PRIMES = (2, 3, 5)


class FpScalar:
    """Residue class modulo a small prime.  Immutable."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus):
        if modulus not in SMALL_PRIMES:
            raise ValueError(f"unsupported modulus {modulus}")
        if isinstance(residue, Fraction):
            if residue.denominator % modulus == 0:
                raise DomainError(f"{residue} has no image in GF({modulus})")
            residue = residue.numerator * pow(residue.denominator, -1, modulus)
        object.__setattr__(self, "residue", int(residue) % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FpScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.residue
        if isinstance(other, (int, Fraction)):
            return FpScalar(other, self.modulus).residue
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.residue, self.modulus)

    def __pos__(self):
        return self

    def inverse(self):
        if self.residue == 0:
            raise DomainError("inverse of zero")
        return FpScalar(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * FpScalar(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpScalar(o, self.modulus) * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (FpScalar, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.residue == o

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"FpScalar({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


class RationalField:
    """The field Q.  Elements are Fractions."""

    name = "Q"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, FpScalar):
            raise TypeError("cannot lift a residue class to Q")
        if isinstance(value, str):
            return parse_scalar(value)
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a small prime p.  Finite-model use only."""

    def __init__(self, p):
        if p not in SMALL_PRIMES:
            raise ValueError(f"GF({p}) is not supported; use one of {SMALL_PRIMES}")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def __call__(self, value):
        if isinstance(value, FpScalar):
            if value.modulus != self.p:
                raise ValueError("mixed moduli")
            return value
        if isinstance(value, str):
            value = parse_scalar(value)
        return FpScalar(value, self.p)

    @property
    def zero(self):
        return FpScalar(0, self.p)

    @property
    def one(self):
        return FpScalar(1, self.p)

    def elements(self):
        return [FpScalar(r, self.p) for r in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """``"Q"`` -> QQ, ``"Fp:2"`` / ``"F2"`` -> GF(2)."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise ValueError(f"unknown field {name!r}")


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inv(a):
    if a == 0:
        raise DomainError("inverse of zero")
    if isinstance(a, FpScalar):
        return a.inverse()
    return 1 / Fraction(a)


def parse_scalar(text):
    """Parse ``"n"`` or ``"n/d"``; no decimals."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise DomainError("zero denominator")
    return Fraction(n, d)


def format_scalar(a):
    if isinstance(a, FpScalar):
        return str(a.residue)
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
