"""GF(2^m) field construction and element arithmetic.

A field is built from a primitive polynomial phi of degree m.  Elements are
m-bit vectors in the standard (polynomial) basis: bit i is the coefficient
of alpha^i, where alpha is the primitive element, i.e. a root of phi.  The
printed vector form follows the usual table convention with the coefficient
of alpha^(m-1) leftmost, so alpha in GF(2^4) prints as "0010".

Construction walks alpha^0, alpha^1, ... alpha^(2^m-2) by repeated
multiply-by-alpha with reduction mod phi, recording log and antilog tables.
Those tables are the canonical multiplication oracle (mul_power); mul_poly
recomputes the same product from the carry-less polynomial definition, and
the circuit-level paths live in the mastrovito module.

Memory for the tables grows as 2^m: degrees up to 24 are comfortable,
the contractual cap is 32.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterator

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    Gf2mError,
    NotIrreducible,
    NotPrimitive,
    UnsupportedDegree,
    ZeroInverse,
    ZeroToZero,
)
from .polynomial import Gf2Poly, is_irreducible, is_primitive, primitive_poly

__all__ = ["GF2m", "FieldElement", "PowerForm", "build_field"]


@dataclass(frozen=True)
class PowerForm:
    """Exponential representation: alpha^exponent, or ZERO (exponent None)."""

    exponent: int | None

    ZERO: ClassVar["PowerForm"]

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __str__(self) -> str:
        return "-" if self.exponent is None else f"α^{self.exponent}"


PowerForm.ZERO = PowerForm(None)


class GF2m:
    """An immutable GF(2^m) instance with log/antilog tables."""

    characteristic = 2

    def __init__(self, m: int, prime_poly: Gf2Poly | None = None):
        if not isinstance(m, int) or not 2 <= m <= 32:
            raise UnsupportedDegree(f"m must be an integer in 2..32, got {m}")
        if prime_poly is None:
            prime_poly = primitive_poly(m)
        if prime_poly.degree != m:
            raise Gf2mError(
                f"defining polynomial has degree {prime_poly.degree}, expected {m}")
        if not is_irreducible(prime_poly):
            raise NotIrreducible(f"{prime_poly.to_terms()} factors over GF(2)")
        if not is_primitive(prime_poly):
            raise NotPrimitive(f"{prime_poly.to_terms()} is irreducible but its "
                               "root does not generate the multiplicative group")
        self.m = m
        self.prime_poly = prime_poly
        self.order = 1 << m
        self._phi = prime_poly.bits
        self._build_tables()

    def _build_tables(self) -> None:
        m, phi = self.m, self._phi
        n = self.order - 1
        antilog = np.zeros(n, dtype=np.uint32)
        log = np.full(self.order, -1, dtype=np.int32)
        cur = 1
        high = 1 << m
        for e in range(n):
            antilog[e] = cur
            log[cur] = e
            cur <<= 1
            if cur & high:
                cur ^= phi
        antilog.flags.writeable = False
        log.flags.writeable = False
        self.antilog_table = antilog
        self.log_table = log

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GF2m)
                and other.m == self.m and other._phi == self._phi)

    def __hash__(self) -> int:
        return hash((GF2m, self.m, self._phi))

    def __repr__(self) -> str:
        return f"GF2m({self.m}, Gf2Poly('{self.prime_poly.to_binary()}'))"

    # -- element construction ---------------------------------------------

    def element(self, value: "int | str | FieldElement") -> "FieldElement":
        """Coerce an int, a polynomial/vector string, or an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            bits = Gf2Poly.parse(value).bits
        elif isinstance(value, int) and not isinstance(value, bool):
            bits = value
        else:
            raise Gf2mError(f"cannot make a field element from {value!r}")
        if not 0 <= bits < self.order:
            raise Gf2mError(f"value {value!r} does not fit in {self.m} bits")
        return FieldElement(self, bits)

    __call__ = element

    def alpha(self, e: int) -> "FieldElement":
        """alpha^e for any integer exponent e."""
        return FieldElement(self, int(self.antilog_table[e % (self.order - 1)]))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for bits in range(self.order):
            yield FieldElement(self, bits)

    def nonzero_elements(self) -> Iterator["FieldElement"]:
        for bits in range(1, self.order):
            yield FieldElement(self, bits)

    def _same_field(self, *elems: "FieldElement") -> None:
        for e in elems:
            if not isinstance(e, FieldElement):
                raise Gf2mError(f"expected a FieldElement, got {e!r}")
            if e.field != self:
                raise FieldMismatch("elements belong to different fields")

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        """Coordinate-wise XOR; doubles as subtraction."""
        self._same_field(a, b)
        return FieldElement(self, a.bits ^ b.bits)

    def mul_power(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        """Multiply through the log/antilog tables (exponent addition)."""
        self._same_field(a, b)
        if a.bits == 0 or b.bits == 0:
            return self.zero
        e = (int(self.log_table[a.bits]) + int(self.log_table[b.bits]))
        return FieldElement(self, int(self.antilog_table[e % (self.order - 1)]))

    def mul_poly(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        """Multiply as polynomials and reduce mod the defining polynomial."""
        self._same_field(a, b)
        product = Gf2Poly(a.bits) * Gf2Poly(b.bits)
        return FieldElement(self, (product % self.prime_poly).bits)

    mul = mul_power

    def inverse(self, a: "FieldElement") -> "FieldElement":
        """Multiplicative inverse by the square-after-multiply register chain."""
        self._same_field(a)
        if a.bits == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.inversion_trace(a)[-1]

    def inversion_trace(self, a: "FieldElement") -> list["FieldElement"]:
        """Register values 1, a^2, a^6, ... a^(2^m-2) of the inversion circuit.

        The register starts at 1 and is updated m-1 times with
        r <- (r * a)^2, so step k holds a^(2^(k+1) - 2) and the last
        entry is a^(2^m - 2) = 1/a.
        """
        self._same_field(a)
        if a.bits == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        r = self.one
        trace = [r]
        for _ in range(self.m - 1):
            r = self.square(self.mul_power(r, a))
            trace.append(r)
        return trace

    def divide(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        self._same_field(a, b)
        if b.bits == 0:
            raise DivisionByZero("division by the zero element")
        return self.mul_power(a, self.inverse(b))

    def square(self, a: "FieldElement") -> "FieldElement":
        """a*a via exponent doubling (the squaring matrix lives in mastrovito)."""
        self._same_field(a)
        if a.bits == 0:
            return self.zero
        e = int(self.log_table[a.bits])
        return self.alpha(2 * e)

    def pow(self, a: "FieldElement", n: int) -> "FieldElement":
        self._same_field(a)
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise Gf2mError(f"exponent must be a non-negative integer, got {n!r}")
        if a.bits == 0:
            if n == 0:
                raise ZeroToZero("0**0 is undefined here")
            return self.zero
        if n == 0:
            return self.one
        e = int(self.log_table[a.bits])
        return self.alpha(e * n)

    # -- representations ----------------------------------------------------

    def to_power_form(self, a: "FieldElement") -> PowerForm:
        self._same_field(a)
        if a.bits == 0:
            return PowerForm.ZERO
        return PowerForm(int(self.log_table[a.bits]))

    def from_power_form(self, p: PowerForm) -> "FieldElement":
        if p.exponent is None:
            return self.zero
        if not 0 <= p.exponent <= self.order - 2:
            raise Gf2mError(
                f"exponent {p.exponent} outside 0..{self.order - 2}")
        return self.alpha(p.exponent)

    def vector_str(self, a: "FieldElement") -> str:
        """m-bit vector, coefficient of alpha^(m-1) leftmost."""
        self._same_field(a)
        return format(a.bits, f"0{self.m}b")

    def poly_str(self, a: "FieldElement") -> str:
        """Sum of alpha powers, highest degree first; "0" for the zero element."""
        self._same_field(a)
        if a.bits == 0:
            return "0"
        parts = []
        for i in range(self.m - 1, -1, -1):
            if (a.bits >> i) & 1:
                parts.append("1" if i == 0 else "α" if i == 1 else f"α^{i}")
        return " + ".join(parts)

    def format_row(self, a: "FieldElement") -> tuple[str, str, str]:
        """(power, polynomial, vector) strings, one representation table row."""
        return (str(self.to_power_form(a)), self.poly_str(a), self.vector_str(a))

    def table_rows(self) -> list[tuple[str, str, str]]:
        """All 2^m rows of the representation table: 0 first, then alpha^0.."""
        rows = [self.format_row(self.zero)]
        rows += [self.format_row(self.alpha(e)) for e in range(self.order - 1)]
        return rows


def build_field(m: int, prime_poly: Gf2Poly | None = None) -> GF2m:
    """Construct GF(2^m), defaulting to the registry polynomial for m."""
    return GF2m(m, prime_poly)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific GF(2^m), value-compared by (field, bits)."""

    field: GF2m
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < self.field.order:
            raise Gf2mError(f"bits {self.bits} outside field of order "
                            f"{self.field.order}")

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self.field.add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self.field.mul_power(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self.field.divide(self, other)

    def __pow__(self, n: int) -> "FieldElement":
        return self.field.pow(self, n)

    def inverse(self) -> "FieldElement":
        return self.field.inverse(self)

    def square(self) -> "FieldElement":
        return self.field.square(self)

    @property
    def power(self) -> PowerForm:
        return self.field.to_power_form(self)

    def vector_str(self) -> str:
        return self.field.vector_str(self)

    def poly_str(self) -> str:
        return self.field.poly_str(self)

    def __int__(self) -> int:
        return self.bits

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return self.vector_str()

    def __repr__(self) -> str:
        return f"FieldElement('{self.vector_str()}', m={self.field.m})"
