"""Exact scalars over the rationals and over prime fields.

Rationals are :class:`fractions.Fraction`; prime-field elements are
:class:`Mod`.  A :class:`FieldSpec` is the factory for both and knows how to
parse and print literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class ``v mod p`` with ``0 <= v < p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine F{self.p} and F{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        raise FieldMismatch(f"cannot combine F{self.p} with {type(other).__name__}")

    def __add__(self, other):
        return Mod(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Mod(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Mod(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        d = self._coerce(other) % self.p
        if d == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return Mod(self.v * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, other):
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return Mod(self._coerce(other) * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Mod]


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p == 0``) or the prime field ``F_p``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ValidationError(f"F{self.p}: {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q`` or ``F<p>`` (e.g. ``F5``)."""
        text = text.strip()
        if text == "Q":
            return cls(0)
        if text.startswith("F") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise ValidationError(f"unknown field {text!r}; expected Q or F<prime>")

    @property
    def kind(self) -> str:
        return "Rationals" if self.p == 0 else "PrimeField"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, Mod or literal string into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.p == 0:
            if isinstance(value, Mod):
                raise FieldMismatch("prime-field element used over Q")
            return Fraction(value)
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatch(f"F{value.p} element used over F{self.p}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F{self.p}")
            return Mod(value.numerator, self.p) / value.denominator
        return Mod(int(value), self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def parse_scalar(self, text: str) -> Scalar:
        """``a/b`` or ``a``; over F_p the value is reduced mod p."""
        text = text.strip()
        try:
            if "/" in text:
                a, b = text.split("/")
                num, den = int(a), int(b)
            else:
                num, den = int(text), 1
        except ValueError:
            raise ValidationError(f"bad scalar literal {text!r}") from None
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return self(Fraction(num, den))

    def format_scalar(self, c: Scalar) -> str:
        return str(c)

    def to_json(self) -> str:
        return self.name


QQ = FieldSpec(0)
