"""Small constructors shared by the test modules."""

from vfindex.germs import GermVariety, VectorFieldGerm
from vfindex.polyalg import parse_polynomial

XY = ("x", "y")
XYZ = ("x", "y", "z")


def names(n):
    return XYZ[:n] if n <= 3 else tuple(f"x{i}" for i in range(n))


def poly(text, variables):
    return parse_polynomial(text, variables)


def germ(fs, variables):
    return GermVariety(tuple(variables), tuple(poly(f, variables) for f in fs))


def field(comps, variables):
    return VectorFieldGerm(tuple(poly(c, variables) for c in comps))
