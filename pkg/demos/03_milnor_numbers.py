"""
Milnor numbers
==============

The Milnor number of an isolated hypersurface singularity is the dimension
of the local algebra of its gradient ideal.  For a Brieskorn polynomial
x^a + y^b + z^c it equals (a-1)(b-1)(c-1).
"""

# %%
from vfindex import milnor_number, parse_polynomial
from vfindex.germs import NonIsolatedError

xyz = ("x", "y", "z")
for a, b, c in [(2, 7, 14), (3, 4, 12), (2, 3, 5)]:
    f = parse_polynomial(f"x^{a} + y^{b} + z^{c}", xyz)
    print(f"mu({f}) = {milnor_number(f)}   (product formula: {(a - 1) * (b - 1) * (c - 1)})")

# %%
# A non-isolated singularity is reported along with a direction where the
# local algebra is infinite.
try:
    milnor_number(parse_polynomial("x*y", xyz))
except NonIsolatedError as exc:
    print("x*y:", exc, "| direction:", exc.direction)
