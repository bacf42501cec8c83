"""
Polynomial division in hardware: the LFSR divider
=================================================

A linear feedback shift register wired from the divisor polynomial
performs long division one dividend bit per clock: the register holds
the running remainder and the feedback bit stream spells the quotient.
This script clocks through a full division, checks it against software
long division, and measures sequence-generator periods.
"""

from gf2m import Gf2Poly, divide, from_polynomial, period, poly_divmod

# -- divide p = x^7 + x^6 + x^3 + x^2 + x by g = x^5 + x^3 + x^2 + 1 -------------

g = Gf2Poly.parse("101101")
p = Gf2Poly.parse("11001110")
print(f"dividing  p = {p.to_terms('x')}")
print(f"by        g = {g.to_terms('x')}")
print()

remainder, rows = divide(p, g)
print("clock | in | register (r0..r4) | feedback")
print(f"{0:>5} |  - | {'0' * (g.bits.bit_length() - 1)}             |")
for r in rows:
    regs = "".join(map(str, r.regs_after))
    print(f"{r.clock:>5} |  {r.input_bit} | {regs}             | {r.feedback}")
print()

quotient_bits = "".join(str(r.feedback) for r in rows)
print(f"feedback stream : {quotient_bits}")
print(f"remainder       : {remainder.to_terms('x')}")

# -- the same division in software -------------------------------------------------

q, r = poly_divmod(p, g)
print(f"long division   : q = {q.to_terms('x')}, r = {r.to_terms('x')}")
assert r == remainder
assert q == Gf2Poly.parse(quotient_bits.lstrip("0") or "0")
print("register and long division agree")
print()

# -- maximal-length sequences --------------------------------------------------------
# With a primitive connection polynomial, a free-running register visits
# every nonzero state: period 2^m - 1.

from gf2m import primitive_poly

for m in (3, 4, 5):
    cfg = from_polynomial(primitive_poly(m), "external")
    seed = (1,) + (0,) * (m - 1)
    print(f"m = {m}: {primitive_poly(m).to_terms('x'):<18} "
          f"period {period(cfg, seed)}")

# a non-primitive (though irreducible) choice falls short of the maximum
cfg = from_polynomial(Gf2Poly.parse("11111"), "external")
print(f"m = 4: {'x^4+x^3+x^2+x+1':<18} period {period(cfg, (1, 0, 0, 0))} "
      "(irreducible but not primitive)")
