"""
The homological index
=====================

A vector field tangent to a hypersurface germ acts on its Kähler forms by
contraction.  The Euler characteristic of the resulting complex is the
homological index.  On the smooth germ it is the Poincaré-Hopf index.
"""

# %%
from vfindex import GermVariety, VectorFieldGerm, homological_index, parse_polynomial
from vfindex.germs import poincare_hopf_index, weighted_euler_field

xy = ("x", "y")
cusp = GermVariety(xy, (parse_polynomial("x^2 + y^3", xy),))
euler = weighted_euler_field((3, 2), xy)
index, homology = homological_index(euler, cusp, return_homology=True)
print("cusp, Euler field:", "homology", homology.dims, "index", index)

# %%
# Rescaling by a unit and adding a multiple of f do not change the index.
f = cusp.defining[0]
other = euler.scale(parse_polynomial("1 + x", xy)) + VectorFieldGerm(
    (parse_polynomial("y", xy), parse_polynomial("x", xy))).scale(f)
print("perturbed field index:", homological_index(other, cusp))

# %%
# On the smooth plane the homological index counts zeros with multiplicity.
plane = GermVariety(xy, ())
v = VectorFieldGerm(tuple(parse_polynomial(t, xy) for t in ("x^2", "y^3")))
print("smooth plane:", homological_index(v, plane), "=", poincare_hopf_index(v))
