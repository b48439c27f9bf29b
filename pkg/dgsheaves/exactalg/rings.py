# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Coefficient rings: the integers, the rationals and prime fields."""

from fractions import Fraction

from sympy import isprime

from ..errors import InvalidRingError

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "Fp"


class CoefficientRing:
    """Exact coefficient ring.

    Elements are plain Python values: ``int`` over ℤ, ``Fraction`` over ℚ and
    ``int`` in ``range(p)`` over 𝔽p.
    """

    def __init__(self, kind, p=None):
        """Constructor.

        :param kind: one of ``"Z"``, ``"Q"``, ``"Fp"``.
        :param p: the characteristic, required (and prime) for ``"Fp"``.
        """
        if kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise InvalidRingError({"ring": kind, "p": p})
        if kind == PRIME_FIELD:
            try:
                p = int(p)
            except (TypeError, ValueError):
                raise InvalidRingError({"ring": kind, "p": p})
            if not isprime(p):
                raise InvalidRingError({"ring": kind, "p": p})
        else:
            p = None
        self.kind = kind
        self.p = p

    @classmethod
    def from_tag(cls, tag):
        """Builds a ring from its JSON tag ``{"ring": ..., "p": ...}``."""
        if isinstance(tag, CoefficientRing):
            return tag
        if isinstance(tag, str):
            return cls(tag)
        try:
            return cls(tag["ring"], tag.get("p"))
        except (KeyError, TypeError, AttributeError):
            raise InvalidRingError(tag)

    def to_tag(self):
        """JSON tag of the ring."""
        tag = {"ring": self.kind}
        if self.p is not None:
            tag["p"] = self.p
        return tag

    @property
    def characteristic(self):
        """0 for ℤ and ℚ, p for 𝔽p."""
        return self.p or 0

    @property
    def is_field(self):
        """Whether every nonzero element is a unit."""
        return self.kind != INTEGERS

    @property
    def zero(self):
        """Additive unit."""
        return self.coerce(0)

    @property
    def one(self):
        """Multiplicative unit."""
        return self.coerce(1)

    def coerce(self, value):
        """Converts an int, Fraction or decimal string into a ring element."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == RATIONALS:
            return Fraction(value)
        if self.kind == INTEGERS:
            value = Fraction(value)
            if value.denominator != 1:
                raise InvalidRingError(f"{value} is not an integer")
            return int(value.numerator)
        value = Fraction(value)
        num = value.numerator % self.p
        den = value.denominator % self.p
        if den == 0:
            raise InvalidRingError(f"{value} has no image in F{self.p}")
        return (num * pow(den, -1, self.p)) % self.p

    def reduce(self, value):
        """Normal form of the result of ``+``, ``-`` or ``*`` on elements."""
        if self.kind == PRIME_FIELD:
            return value % self.p
        return value

    def is_unit(self, value):
        """Whether ``value`` is invertible."""
        if self.kind == INTEGERS:
            return value in (1, -1)
        return value != 0

    def inverse(self, value):
        """Multiplicative inverse of a unit."""
        if not self.is_unit(value):
            raise ZeroDivisionError(f"{value} is not a unit of {self}")
        if self.kind == INTEGERS:
            return value
        if self.kind == RATIONALS:
            return 1 / Fraction(value)
        return pow(value, -1, self.p)

    def quo(self, a, b):
        """Euclidean quotient: ``a - quo(a, b) * b`` is smaller than ``b``."""
        if self.kind == INTEGERS:
            return a // b
        return self.reduce(a * self.inverse(b))

    def divides(self, a, b):
        """Whether ``a`` divides ``b``."""
        if a == 0:
            return b == 0
        if self.kind == INTEGERS:
            return b % a == 0
        return True

    def size(self, value):
        """Euclidean size used for pivot choice."""
        if self.kind == INTEGERS:
            return abs(value)
        return 0 if value == 0 else 1

    def normalize(self, value):
        """Unit factor turning ``value`` into its canonical associate."""
        if value == 0:
            return self.one
        if self.kind == INTEGERS:
            return -1 if value < 0 else 1
        return self.inverse(value)

    def format(self, value):
        """Decimal string of an element."""
        if isinstance(value, Fraction) and value.denominator == 1:
            return str(value.numerator)
        return str(value)

    def __eq__(self, other):
        """Rings compare by kind and characteristic."""
        if not isinstance(other, CoefficientRing):
            return NotImplemented
        return (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        """Hash by kind and characteristic."""
        return hash((self.kind, self.p))

    def __str__(self):
        """Short name: Z, Q or F<p>."""
        return f"F{self.p}" if self.kind == PRIME_FIELD else self.kind

    def __repr__(self):
        """Representation."""
        return f"CoefficientRing({self!s})"


ZZ = CoefficientRing(INTEGERS)
QQ = CoefficientRing(RATIONALS)


def prime_field(p):
    """The field with ``p`` elements."""
    return CoefficientRing(PRIME_FIELD, p)
