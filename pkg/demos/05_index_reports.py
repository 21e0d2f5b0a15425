"""
Index reports and conservation
==============================

A full report collects the homological, GSV, Schwartz and virtual indices
and checks the identity GSV = Schwartz + (-1)^n mu.  The conservation
check perturbs a field and certifies that the index does not move.
"""

# %%
from fractions import Fraction

from vfindex import GermVariety, VectorFieldGerm, full_report, parse_polynomial
from vfindex.germs import weighted_euler_field
from vfindex.indices import conservation_check

xyz = ("x", "y", "z")
V = GermVariety(xyz, (parse_polynomial("x^2 + y^7 + z^14", xyz),))
report = full_report(weighted_euler_field((7, 2, 1), xyz), V, weights=(7, 2, 1))
for key, value in report.to_dict().items():
    print(f"{key:>22}: {value}")

# %%
# The Euler field on the A1 surface, perturbed by a rotation.
sphere = GermVariety(xyz, (parse_polynomial("x^2 + y^2 + z^2", xyz),))
v = weighted_euler_field((1, 1, 1), xyz)
w = VectorFieldGerm(tuple(parse_polynomial(t, xyz) for t in ("2*y", "-2*x", "0")))
for verdict in conservation_check(v, w, sphere, [Fraction(1, 5), Fraction(-1, 3), 1]):
    print(f"eps = {verdict.epsilon}: {verdict.status}, index {verdict.index}")
