"""Exception types shared across the package.

Everything derives from Gf2mError, which is a ValueError: callers that do not
care about the fine-grained type can catch either.  The command line maps
Gf2mError to exit code 2 (bad input) and anything else to exit code 3.
"""

from __future__ import annotations


class Gf2mError(ValueError):
    """Base class for all validation errors raised by this package."""


class UnsupportedDegree(Gf2mError):
    """Field degree m outside the supported range, or no registry entry."""


class NotIrreducible(Gf2mError):
    """A user-supplied defining polynomial factors over GF(2)."""


class NotPrimitive(Gf2mError):
    """A user-supplied defining polynomial is irreducible but not primitive."""


class FieldMismatch(Gf2mError):
    """Two elements from different field instances were combined."""


class ZeroInverse(Gf2mError, ZeroDivisionError):
    """Multiplicative inverse of the zero element requested."""


class DivisionByZero(Gf2mError, ZeroDivisionError):
    """Field division with a zero divisor."""


class ZeroToZero(Gf2mError):
    """0**0 requested; left undefined here."""


class DivisionByZeroPoly(Gf2mError, ZeroDivisionError):
    """Polynomial division with a zero divisor."""


class DegreeZero(Gf2mError):
    """Irreducibility or primitivity asked of a constant polynomial."""


class NotIrreducibleInput(Gf2mError):
    """An operation that needs an irreducible polynomial got a reducible one."""


class DependentBasis(Gf2mError):
    """A proposed basis is linearly dependent over GF(2)."""


class DimensionMismatch(Gf2mError):
    """Matrix/vector sizes do not agree."""


class WidthMismatch(Gf2mError):
    """A register state has the wrong number of bits."""


class BadConnectionPolynomial(Gf2mError):
    """LFSR connection polynomial must have degree >= 1 and constant term 1."""


class LengthMismatch(Gf2mError):
    """Hamming distance of words with different lengths."""


class TooFewWords(Gf2mError):
    """Minimum distance of a code with fewer than two words."""


class BoundViolation(Gf2mError):
    """Code parameters break the Singleton bound."""


class UnsupportedTrinomial(Gf2mError):
    """Complexity formulas here only cover x^m + x^k + 1 with 1 <= k < m."""
