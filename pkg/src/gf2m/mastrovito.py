"""Bit-parallel multiplication over GF(2^m) as explicit matrix and circuit
artifacts, plus the bit-serial interleaved multiplier and its NAND rewrite.

The product c = a*b is the matrix-vector product c = Z(a) . b where column
j of Z is the coefficient vector of x^j * a(x) mod phi(x).  Fixing a = a
power alpha^i collapses Z to a constant binary matrix (column j is the
vector of alpha^(i+j)), whose circuit is pure XOR.  The squaring map is the
constant matrix with column j = vector of alpha^(2j).

Row i of a constant matrix reads directly as an output equation, e.g.
"z0 = a0 + a1 + a2"; xor_count totals the "+" operators, and
xor_count_estimate gives the m^2/2 - m rule-of-thumb those counts are
usually compared against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, Gf2mError, UnsupportedTrinomial
from .field import GF2m, FieldElement
from .netlist import NetlistBuilder, XorNetlist
from .polynomial import Gf2Poly, is_irreducible, is_primitive

__all__ = [
    "MastrovitoMatrix",
    "SerialStepSpec",
    "build_z_matrix",
    "symbolic_z_matrix",
    "mat_vec_mul",
    "constant_mul_matrix",
    "squaring_matrix",
    "constant_equations",
    "xor_count",
    "xor_count_estimate",
    "emit_netlist",
    "general_multiplier_netlist",
    "serial_interleaved_multiply",
    "complexity_report",
    "ComplexityReport",
    "LITERATURE_ROWS",
]


@dataclass(frozen=True)
class MastrovitoMatrix:
    """m x m binary matrix; rows[i] holds bit j = z_ij.

    kind records provenance: "general" (from a concrete element, source =
    its bits), "constant" (source = the exponent i of alpha^i), or
    "squaring" (source unused).
    """

    field: GF2m
    rows: tuple[int, ...]
    kind: str
    source: int = 0

    @property
    def m(self) -> int:
        return self.field.m

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_array(self) -> np.ndarray:
        m = self.m
        return np.array([[(r >> j) & 1 for j in range(m)] for r in self.rows],
                        dtype=np.uint8)

    def row_terms(self, i: int) -> tuple[int, ...]:
        """Indices j with z_ij = 1, ascending."""
        return tuple(j for j in range(self.m) if (self.rows[i] >> j) & 1)


def _cols_to_rows(cols: list[int], m: int) -> tuple[int, ...]:
    rows = [0] * m
    for j, col in enumerate(cols):
        for i in range(m):
            rows[i] |= ((col >> i) & 1) << j
    return tuple(rows)


def _xtime(bits: int, m: int, phi: int) -> int:
    bits <<= 1
    if bits >> m & 1:
        bits ^= phi
    return bits


def build_z_matrix(a: FieldElement) -> MastrovitoMatrix:
    """Z(a) with column j = vector of x^j * a(x) mod phi(x)."""
    field = a.field
    m, phi = field.m, field.prime_poly.bits
    cols = [a.bits]
    for _ in range(m - 1):
        cols.append(_xtime(cols[-1], m, phi))
    return MastrovitoMatrix(field, _cols_to_rows(cols, m), "general", a.bits)


def symbolic_z_matrix(field: GF2m) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Entry (i, j) as the set of a-indices feeding it, for display.

    entry[i][j] lists the k with z_ij = sum over k of a_k: exactly those k
    where x^(j+k) mod phi has coefficient 1 at x^i.
    """
    m, phi = field.m, field.prime_poly.bits
    power = 1
    contrib: list[int] = []  # contrib[e] = bits of x^e mod phi
    for _ in range(2 * m - 1):
        contrib.append(power)
        power = _xtime(power, m, phi)
    entries = [[[] for _ in range(m)] for _ in range(m)]
    for j in range(m):
        for k in range(m):
            bits = contrib[j + k]
            for i in range(m):
                if (bits >> i) & 1:
                    entries[i][j].append(k)
    return tuple(tuple(tuple(cell) for cell in row) for row in entries)


def mat_vec_mul(z: MastrovitoMatrix, b: FieldElement) -> FieldElement:
    """c_i = GF(2) inner product of row i with b (AND then XOR-fold)."""
    if z.m != b.field.m:
        raise DimensionMismatch(f"{z.m}x{z.m} matrix against {b.field.m}-bit vector")
    bits = 0
    for i, row in enumerate(z.rows):
        bits |= ((row & b.bits).bit_count() & 1) << i
    return FieldElement(b.field, bits)


def constant_mul_matrix(field: GF2m, i: int) -> MastrovitoMatrix:
    """Matrix of the map b -> alpha^i * b; column j = vector of alpha^(i+j)."""
    n = field.order - 1
    if not 0 <= i <= n - 1:
        raise Gf2mError(f"constant power {i} outside 0..{n - 1}")
    cols = [int(field.antilog_table[(i + j) % n]) for j in range(field.m)]
    return MastrovitoMatrix(field, _cols_to_rows(cols, field.m), "constant", i)


def squaring_matrix(field: GF2m) -> MastrovitoMatrix:
    """Matrix of the squaring map; column j = vector of alpha^(2j)."""
    n = field.order - 1
    cols = [int(field.antilog_table[(2 * j) % n]) for j in range(field.m)]
    return MastrovitoMatrix(field, _cols_to_rows(cols, field.m), "squaring")


def constant_equations(field: GF2m, i: int) -> list[str]:
    """The output equations of the alpha^i constant multiplier.

    One line per output, e.g. "z0 = a0 + a1 + a2".
    """
    z = constant_mul_matrix(field, i)
    lines = []
    for r in range(field.m):
        terms = z.row_terms(r)
        rhs = " + ".join(f"a{j}" for j in terms) if terms else "0"
        lines.append(f"z{r} = {rhs}")
    return lines


def xor_count(z: MastrovitoMatrix) -> int:
    """XOR gates of the row-wise fold: sum of max(0, popcount(row) - 1)."""
    return sum(max(0, row.bit_count() - 1) for row in z.rows)


def xor_count_estimate(m: int) -> Fraction:
    """The m^2/2 - m estimate for an average constant multiplier."""
    if m < 1:
        raise Gf2mError("estimate needs m >= 1")
    return Fraction(m * m, 2) - m


@dataclass(frozen=True)
class SerialStepSpec:
    """Emission source for one combinational step of the serial multiplier.

    Inputs p_0..p_{m-1} (accumulator), a_0..a_{m-1} (multiplicand) and b
    (the current multiplier bit); outputs p_0..p_{m-1} give the next
    accumulator value (p*x mod phi) xor (b and a).
    """

    field: GF2m
    mode: str = "xor"


def emit_netlist(source: MastrovitoMatrix | SerialStepSpec) -> XorNetlist:
    """Emit a gate netlist for a matrix or a serial multiplier step.

    Constant and squaring matrices become pure XOR fan-in trees over the
    a inputs.  A general-kind matrix stands for the two-operand multiplier
    of its field (the concrete element it was built from does not narrow
    the circuit), emitted as the f-network feeding an AND/XOR inner-product
    network.  A SerialStepSpec becomes one step of the serial recurrence,
    with every XOR expanded through four NANDs in nand mode.
    """
    if isinstance(source, SerialStepSpec):
        return _serial_step_netlist(source.field, source.mode)
    if source.kind == "general":
        return general_multiplier_netlist(source.field)
    return _linear_netlist(source)


def _linear_netlist(z: MastrovitoMatrix) -> XorNetlist:
    m = z.m
    what = (f"constant multiplier alpha^{z.source}" if z.kind == "constant"
            else "squaring map")
    nb = NetlistBuilder(f"{what} over GF(2^{m})")
    names = [nb.add_input(f"a_{j}") for j in range(m)]
    for i in range(m):
        terms = z.row_terms(i)
        nb.output(f"z_{i}", nb.xor_tree([names[j] for j in terms]))
    return nb.build()


def general_multiplier_netlist(field: GF2m) -> XorNetlist:
    """The two-operand multiplier: f-network, m^2 ANDs, then XOR folds."""
    m = field.m
    nb = NetlistBuilder(f"general multiplier over GF(2^{m})")
    a = [nb.add_input(f"a_{k}") for k in range(m)]
    b = [nb.add_input(f"b_{j}") for j in range(m)]
    entries = symbolic_z_matrix(field)
    znodes: dict[tuple[int, ...], str] = {}
    for i in range(m):
        products = []
        for j in range(m):
            key = entries[i][j]
            if key not in znodes:
                znodes[key] = nb.xor_tree([a[k] for k in key])
            products.append(nb.gate("AND", znodes[key], b[j]))
        nb.output(f"c_{i}", nb.xor_tree(products))
    return nb.build()


def _serial_step_netlist(field: GF2m, mode: str) -> XorNetlist:
    if mode not in ("xor", "nand"):
        raise Gf2mError(f"mode must be xor or nand, got {mode!r}")
    m, phi = field.m, field.prime_poly.bits
    nb = NetlistBuilder(f"serial multiplier step ({mode}) over GF(2^{m})")
    p = [nb.add_input(f"p_{i}") for i in range(m)]
    a = [nb.add_input(f"a_{i}") for i in range(m)]
    b = nb.add_input("b")
    f = p[m - 1]  # bit shifted out, folded back through phi
    for i in range(m):
        shifted = p[i - 1] if i else None
        if (phi >> i) & 1:
            reduced = f if shifted is None else nb.xor2(shifted, f, mode)
        else:
            reduced = nb.const(0) if shifted is None else shifted
        cond = nb.gate("AND", b, a[i])
        nb.output(f"p_{i}", nb.xor2(reduced, cond, mode))
    return nb.build()


def _xor_bits(x: int, y: int, mask: int, mode: str) -> int:
    if mode == "xor":
        return x ^ y
    # the four-NAND rewrite, applied bitwise on masked ints
    def nand(p: int, q: int) -> int:
        return ~(p & q) & mask
    t = nand(x, y)
    return nand(nand(x, t), nand(t, y))


def _serial_mul_bits(m: int, phi: int, a: int, b: int,
                     mode: str) -> tuple[int, list[int]]:
    mask = (1 << (m + 1)) - 1
    p = 0
    trace = []
    for k in range(1, m + 1):
        p <<= 1
        if p >> m & 1:
            p = _xor_bits(p, phi, mask, mode)
        if (b >> (m - k)) & 1:
            p = _xor_bits(p, a, mask, mode)
        trace.append(p)
    return p, trace


def serial_interleaved_multiply(a: FieldElement, b: FieldElement,
                                mode: str = "xor"
                                ) -> tuple[FieldElement, tuple[FieldElement, ...]]:
    """MSB-first interleaved product over m steps, with the accumulator trace.

    Step k folds the top multiplier bit in: p <- (p*x mod phi) + b_{m-k}*a.
    In nand mode every XOR runs through the four-NAND identity; the result
    must be bit-identical to xor mode.
    """
    if a.field != b.field:
        raise FieldMismatch("operands from different fields")
    if mode not in ("xor", "nand"):
        raise Gf2mError(f"mode must be xor or nand, got {mode!r}")
    field = a.field
    bits, raw = _serial_mul_bits(field.m, field.prime_poly.bits,
                                 a.bits, b.bits, mode)
    trace = tuple(FieldElement(field, r) for r in raw)
    return FieldElement(field, bits), trace


# Published complexity rows for multipliers over the trinomial u^n + u^k + 1
# (2 < 2k < n), echoed as-is: the mixed n/m symbols and the first row's AND
# count (2m^2 + 2m where the classical figure is n^2) are reproduced, not
# normalized.  None of these designs except ours are implemented here.
LITERATURE_ROWS: tuple[tuple[str, str, str, str, str], ...] = (
    ("PB Mastrovito (a)", "2m^2 + 2m", "0", "n^2 - 1",
     "T_A + ceil(log2(4n)) T_X"),
    ("WDB (a)", "n^2", "0", "n^2 - 1", "T_A + ceil(log2(4n)) T_X"),
    ("PB mod reduction", "n^2", "0", "n^2 - 1", "T_A + ceil(log2(4n-4)) T_X"),
    ("PB Montgomery (a)", "n^2", "0", "n^2 - 1",
     "<= T_A + ceil(log2(4n-8)) T_X"),
    ("WDB (b)", "n^2", "0", "n^2 - 1", "T_A + ceil(log2(2n+2k-2)) T_X"),
    ("PB Mastrovito (b)", "n^2", "0", "n^2 - 1",
     "T_A + ceil(log2(2n+2k-3)) T_X"),
    ("PB Mastrovito (c)", "n^2", "0", "n^2 + (k^2 - 3k)/2",
     "T_A + ceil(log2(2n+k-2)) T_X"),
    ("SPB Mastrovito", "n^2", "0", "n^2", "T_A + ceil(log2(2n)) T_X"),
    ("SPB matrix-vector product", "n^2", "0", "3(n^2 - n)/2 - k(n - k)",
     "T_A + ceil(log2(2n-k)) T_X"),
    ("PB Montgomery (b)", "n^2", "0", "n^2 - 1", "T_A + ceil(log2(2n-k)) T_X"),
    ("SPB binary XOR tree", "n^2", "0", "n^2 - 1",
     "T_A + ceil(log2(2n-k)) T_X"),
    ("SPB multiplier based on NAND", "2m", "8m", "0", "2T_A + 4T_N"),
)

_NOTES = (
    "published rows mix the symbols n and m for the same extension degree;"
    " they are echoed verbatim, not normalized",
    "the first row's AND count (2m^2 + 2m) conflicts with the classical n^2"
    " figure of the other parallel designs; reproduced as printed",
    "published rows are literature constants for designs not implemented"
    " here; measured rows are netlist counts from this library",
)


@dataclass(frozen=True)
class ComplexityReport:
    m: int
    k: int
    literature: tuple[tuple[str, str, str, str, str], ...]
    measured: tuple[tuple[str, str, str, str, str], ...]
    notes: tuple[str, ...]


def complexity_report(m: int, k: int) -> ComplexityReport:
    """Literature rows plus measured netlist counts for x^m + x^k + 1.

    The published table covers trinomials with 2 < 2k < m; outside that,
    or when x^m + x^k + 1 cannot define a field here, UnsupportedTrinomial.
    """
    if not (isinstance(m, int) and isinstance(k, int) and 1 <= k < m):
        raise UnsupportedTrinomial(f"need integers 1 <= k < m, got k={k}, m={m}")
    if not 2 < 2 * k < m:
        raise UnsupportedTrinomial(
            f"published rows require 2 < 2k < m; k={k}, m={m} falls outside")
    tri = Gf2Poly((1 << m) | (1 << k) | 1)
    if not (is_irreducible(tri) and is_primitive(tri)):
        raise UnsupportedTrinomial(
            f"{tri.to_terms()} does not define a field in this library")
    field = GF2m(m, tri)
    par = general_multiplier_netlist(field)
    pc = par.gate_counts()
    step_x = emit_netlist(SerialStepSpec(field, "xor"))
    step_n = emit_netlist(SerialStepSpec(field, "nand"))
    cx, cn = step_x.gate_counts(), step_n.gate_counts()
    measured = (
        ("measured parallel (this library)", str(pc["AND"]), str(pc["NAND"]),
         str(pc["XOR"]), f"{par.depth} gate levels"),
        ("measured serial step x m, xor mode",
         f"{m} x {cx['AND']}", f"{m} x {cx['NAND']}", f"{m} x {cx['XOR']}",
         f"{step_x.depth} gate levels per step"),
        ("measured serial step x m, nand mode",
         f"{m} x {cn['AND']}", f"{m} x {cn['NAND']}", f"{m} x {cn['XOR']}",
         f"{step_n.depth} gate levels per step"),
    )
    return ComplexityReport(m, k, LITERATURE_ROWS, measured, _NOTES)
