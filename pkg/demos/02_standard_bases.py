"""
Standard bases in the local ring
================================

Mora's tangent-cone algorithm computes standard bases for local orders.
From a standard basis the dimension of the quotient is a count of
standard monomials.
"""

# %%
from vfindex import NEGDEGREVLEX, DEGREVLEX, parse_polynomial, quotient_dimension, standard_basis
from vfindex.localbases import is_standard_basis, standard_monomials, syzygies

names = ("x", "y")
gens = [parse_polynomial(t, names) for t in ("y - x^2", "x*y")]
sb = standard_basis(gens, NEGDEGREVLEX)
print("basis:", [str(g) for g in sb])
print("certified by S-pairs:", is_standard_basis(sb))
print("standard monomials:", standard_monomials(sb))
print("dim O/I =", quotient_dimension(sb))

# %%
# A factor that is a unit locally disappears.  x(1 - x) has zeros at 0 and 1,
# but only the one at the origin is seen by the local order.
ideal = [parse_polynomial(t, names) for t in ("x - x^2", "y")]
print("local length :", quotient_dimension(standard_basis(ideal, NEGDEGREVLEX)))
print("affine length:", quotient_dimension(standard_basis(ideal, DEGREVLEX)))

# %%
# Syzygies of (x, y): the Koszul relation.
print([str(s) for s in syzygies([parse_polynomial("x", names), parse_polynomial("y", names)])])
