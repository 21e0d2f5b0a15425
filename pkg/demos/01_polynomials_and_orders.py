"""
Polynomials and monomial orders
===============================

Polynomials carry exact rational coefficients and a fixed tuple of variable
names.  A local order ranks low-degree monomials higher, which is what makes
computations in the local ring at the origin possible.
"""

# %%
# Parsing and printing round-trip exactly.
from vfindex import DEGREVLEX, NEGDEGREVLEX, parse_polynomial, weighted_local
from vfindex.polyalg import compare_monomials

f = parse_polynomial("(x + y)^2 - 1/2*x*y^3", ("x", "y"))
print("f        =", f)
print("df/dx    =", f.partial("x"))
print("gradient =", [str(g) for g in f.gradient()])

# %%
# The leading term depends on the order.  Under degrevlex the highest degree
# wins, under the local order the lowest.
for name, order in [("degrevlex", DEGREVLEX), ("negdegrevlex", NEGDEGREVLEX),
                    ("weighted (1, 3)", weighted_local((1, 3)))]:
    exps, coeff = f.leading_term(order)
    print(f"{name:>16}: leading exponent {exps}, coefficient {coeff}")

# %%
# Comparing two monomials directly: 1 beats x locally.
print(compare_monomials((0, 0), (1, 0), NEGDEGREVLEX))
