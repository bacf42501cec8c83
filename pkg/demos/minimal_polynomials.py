"""
Conjugacy classes, minimal polynomials, and basis coordinates
=============================================================

Squaring permutes GF(2^m): each orbit {b, b^2, b^4, ...} is a conjugacy
class, and the monic polynomial with exactly those roots has binary
coefficients -- the minimal polynomial.  This script partitions GF(2^4),
factors X^15 + 1, and shows the dual and normal coordinate systems.
"""

from gf2m import (
    GF2m,
    Gf2Poly,
    basis_table,
    conjugacy_class,
    find_dual_basis,
    minimal_polynomial,
    normal_basis,
    roots_in_field,
    trace,
)

field = GF2m(4)

# -- partition the field into conjugacy classes --------------------------------

seen: set[int] = set()
classes = []
for b in field.elements():
    if b.bits in seen:
        continue
    cls = conjugacy_class(b)
    seen.update(r.bits for r in cls.members)
    classes.append(cls)

print("conjugacy classes of GF(2^4) and their minimal polynomials:")
for cls in classes:
    mp = minimal_polynomial(cls.members[0])
    labels = ", ".join(str(r.power) for r in cls.members)
    print(f"  {{{labels}}}")
    print(f"      -> {mp.to_terms('X', ascending=True, spaced=True)}")
print()

# -- every root of the minimal polynomial lies in the class ---------------------

f = Gf2Poly.parse("11001")  # X^4 + X^3 + 1
roots = roots_in_field(f, field)
print(f"roots of {f.to_terms('X')} in GF(2^4): "
      + ", ".join(str(r.power)
                  for r in sorted(roots, key=lambda r: r.power.exponent)))
print()

# -- the product of all minimal polynomials is X^(2^m - 1) + 1 -------------------

prod = Gf2Poly.parse("1")
for cls in classes:
    if cls.members[0].is_zero:
        continue  # X itself divides X^16 + X, not X^15 + 1
    prod = prod * minimal_polynomial(cls.members[0])
print(f"product over the nonzero classes = {prod.to_terms('X')}")
print()

# -- trace, dual basis, normal basis ---------------------------------------------

ones = [str(b.power) for b in field.nonzero_elements() if trace(b) == 1]
print(f"elements with trace 1: {', '.join(ones)}")

standard = tuple(field.alpha(k) if k else field.one for k in range(4))
dual = find_dual_basis(standard)
print("dual of {1, a, a^2, a^3}: " + ", ".join(str(mu.power) for mu in dual))
normal = normal_basis(field)
print("normal basis: " + ", ".join(str(g.power) for g in normal))
print()

# -- coordinates of every element in all three bases -----------------------------

print("power | standard | dual | normal")
for label, triple in basis_table(field):
    std = "".join(map(str, triple.standard))
    dl = "".join(map(str, triple.dual))
    nr = "".join(map(str, triple.normal))
    print(f"{label:<5} | {std}     | {dl} | {nr}")
