"""Field construction, the three representations, and element arithmetic."""

from __future__ import annotations

import pytest

from gf2m import GF2m, FieldElement, Gf2Poly, PowerForm, build_field
from gf2m.errors import (
    DivisionByZero,
    FieldMismatch,
    Gf2mError,
    NotIrreducible,
    NotPrimitive,
    UnsupportedDegree,
    ZeroInverse,
    ZeroToZero,
)

# Power -> vector for GF(2^4) over x^4 + x + 1, most significant bit first.
GF16_VECTORS = ["0001", "0010", "0100", "1000", "0011", "0110", "1100",
                "1011", "0101", "1010", "0111", "1110", "1111", "1101",
                "1001"]

# Power -> vector for GF(2^3) over x^3 + x + 1.
GF8_VECTORS = ["001", "010", "100", "011", "110", "111", "101"]


# -- construction --------------------------------------------------------------

def test_rejects_out_of_range_degree():
    for m in (1, 0, -3, 33, "4"):
        with pytest.raises(UnsupportedDegree):
            GF2m(m)  # type: ignore[arg-type]


def test_rejects_wrong_degree_polynomial(field4):
    with pytest.raises(Gf2mError):
        GF2m(4, Gf2Poly.parse("1011"))


def test_rejects_reducible_polynomial():
    with pytest.raises(NotIrreducible):
        GF2m(4, Gf2Poly.parse("10101"))  # (x^2+x+1)^2


def test_rejects_irreducible_but_imprimitive_polynomial():
    with pytest.raises(NotPrimitive):
        GF2m(4, Gf2Poly.parse("11111"))  # order of x is 5


def test_alternate_primitive_polynomial_accepted():
    f = GF2m(4, Gf2Poly.parse("11001"))  # x^4 + x^3 + 1
    assert f.alpha(4).bits == 0b1001
    assert {e.bits for e in f.elements()} == set(range(16))


def test_field_identity_and_hash(field4):
    assert field4 == GF2m(4)
    assert hash(field4) == hash(GF2m(4))
    assert field4 != GF2m(4, Gf2Poly.parse("11001"))
    assert field4 != GF2m(3)
    assert build_field(4) == field4


# -- representation tables ------------------------------------------------------

def test_gf16_power_to_vector_table(field4):
    assert [field4.alpha(e).vector_str() for e in range(15)] == GF16_VECTORS


def test_gf8_power_to_vector_table(field3):
    assert [field3.alpha(e).vector_str() for e in range(7)] == GF8_VECTORS


def test_gf8_worked_lines_use_mod2_coefficients(field3):
    # alpha^4 = alpha * (1 + alpha) = alpha + alpha^2: no "2 alpha" term
    assert field3.alpha(4).poly_str() == "α^2 + α"
    # alpha^6 = (alpha^3)^2 = 1 + alpha^2, not 1 + alpha
    assert field3.alpha(6).poly_str() == "α^2 + 1"


def test_table_rows_shape_and_anchors(field4):
    rows = field4.table_rows()
    assert len(rows) == 16
    assert rows[0] == ("-", "0", "0000")
    assert rows[1] == ("α^0", "1", "0001")
    assert rows[8] == ("α^7", "α^3 + α + 1", "1011")
    assert rows[15] == ("α^14", "α^3 + 1", "1001")


def test_power_form_str_and_zero(field4):
    assert str(PowerForm(13)) == "α^13"
    assert str(PowerForm.ZERO) == "-"
    assert PowerForm.ZERO.is_zero
    assert field4.to_power_form(field4.zero) is PowerForm.ZERO
    assert field4.to_power_form(field4.alpha(5)) == PowerForm(5)
    assert field4.from_power_form(PowerForm(5)) == field4.alpha(5)
    assert field4.from_power_form(PowerForm.ZERO) == field4.zero
    with pytest.raises(Gf2mError):
        field4.from_power_form(PowerForm(15))


def test_element_coercions(field4):
    assert field4(5).bits == 5
    assert field4("0110").bits == 0b0110
    assert field4("0x9").bits == 9
    assert field4("x^3+1").bits == 0b1001
    assert field4(field4(7)) == field4(7)
    with pytest.raises(Gf2mError):
        field4(16)
    with pytest.raises(Gf2mError):
        field4("10011")  # degree 4 does not fit
    with pytest.raises(Gf2mError):
        field4(3.5)  # type: ignore[arg-type]
    with pytest.raises(Gf2mError):
        field4(True)  # type: ignore[arg-type]


def test_vector_str_is_msb_first(field4):
    assert field4.alpha(1).vector_str() == "0010"
    assert field4.alpha(5).vector_str() == "0110"


# -- arithmetic ------------------------------------------------------------------

def test_addition_worked_example(field4):
    # alpha^7 + alpha^10 = (a^3+a+1) + (a^2+a+1) = a^3 + a^2 = alpha^6
    assert field4.alpha(7) + field4.alpha(10) == field4.alpha(6)
    assert field4.alpha(7) - field4.alpha(10) == field4.alpha(6)


def test_mul_power_equals_mul_poly_exhaustively(field4):
    for a in field4.elements():
        for b in field4.elements():
            assert field4.mul_power(a, b) == field4.mul_poly(a, b)


def test_multiplication_edge_cases(field4):
    a = field4.alpha(9)
    assert (field4.zero * a).is_zero
    assert field4.one * a == a
    # exponents add mod 15
    assert field4.alpha(9) * field4.alpha(9) == field4.alpha(3)


def test_inverse_and_division(field4):
    for a in field4.nonzero_elements():
        assert a * a.inverse() == field4.one
        assert field4.divide(a, a) == field4.one
    assert field4.alpha(3) / field4.alpha(5) == field4.alpha(13)
    with pytest.raises(ZeroInverse):
        field4.zero.inverse()
    with pytest.raises(DivisionByZero):
        field4.one / field4.zero
    assert isinstance(ZeroInverse("x"), ZeroDivisionError)
    assert isinstance(DivisionByZero("x"), ZeroDivisionError)


def test_inversion_trace_register_sequence(field4):
    # r starts at 1 and runs r <- (r a)^2: powers 0, 2, 6, 14 of a
    a = field4.alpha(1)
    trace = field4.inversion_trace(a)
    assert [t.power.exponent for t in trace] == [0, 2, 6, 14]
    assert trace[-1] == a.inverse()
    for b in field4.nonzero_elements():
        tr = field4.inversion_trace(b)
        assert tr[0] == field4.one
        assert tr[-1] * b == field4.one


def test_square_matches_self_product(field4):
    for a in field4.elements():
        assert a.square() == a * a
        assert field4.square(a) == a * a


def test_pow_semantics(field4):
    a = field4.alpha(7)
    assert field4.pow(a, 0) == field4.one
    assert field4.pow(a, 1) == a
    assert field4.pow(a, 15) == field4.one
    assert a ** 3 == a * a * a
    assert field4.pow(field4.zero, 4) == field4.zero
    with pytest.raises(ZeroToZero):
        field4.pow(field4.zero, 0)
    with pytest.raises(Gf2mError):
        field4.pow(a, -1)


def test_fermat_property_small_fields():
    for m in (2, 3, 4, 5):
        field = GF2m(m)
        for a in field.nonzero_elements():
            assert field.pow(a, field.order - 1) == field.one


def test_cross_field_operations_rejected(field3, field4):
    with pytest.raises(FieldMismatch):
        field4.add(field4.one, field3.one)
    with pytest.raises(FieldMismatch):
        field3.element(field4.one)
    with pytest.raises(Gf2mError):
        field4.add(field4.one, 3)  # type: ignore[arg-type]


def test_element_dunders(field4):
    a = field4.alpha(5)
    assert int(a) == 0b0110
    assert bool(a) and not bool(field4.zero)
    assert str(a) == "0110"
    assert repr(a) == "FieldElement('0110', m=4)"
    with pytest.raises(Gf2mError):
        FieldElement(field4, 16)


def test_iteration_counts(field4):
    assert len(list(field4.elements())) == 16
    assert len(list(field4.nonzero_elements())) == 15
    assert field4.characteristic == 2
