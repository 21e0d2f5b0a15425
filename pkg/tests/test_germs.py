import itertools
import math

import pytest

from helpers import XY, XYZ, field, germ, poly
from oracles import local_dimension
from vfindex.germs import (
    GermError,
    NonIsolatedError,
    is_isolated_hypersurface_singularity,
    is_tangent,
    milnor_algebra_dimension,
    milnor_number,
    poincare_hopf_index,
    quasihomogeneous_degree,
    tangency_defects,
    weighted_euler_field,
)
from vfindex.polyalg import NEGDEGREVLEX, weighted_local


def test_germ_dimensions():
    V = germ(["x^2 + y^7 + z^14"], XYZ)
    assert (V.ambient_dim, V.codim, V.dim) == (3, 1, 2)
    assert V.is_hypersurface and not V.is_smooth_ambient
    W = germ([], XY)
    assert W.is_smooth_ambient and W.dim == 2


def test_germ_must_pass_through_origin():
    with pytest.raises(GermError):
        germ(["x + 1"], XY)
    with pytest.raises(GermError):
        field(["x + 1", "y"], XY)


def test_too_many_equations():
    with pytest.raises(GermError):
        germ(["x", "y", "x*y"], XY)


@pytest.mark.parametrize(
    "f, mu",
    [
        ("x^2 + y^7 + z^14", 78),
        ("x^3 + y^4 + z^12", 66),
        ("x^2 + y^2", 1),
        ("x^2 + y^3", 2),
        ("x^2 + y^2 + z^2", 1),
        ("x^3 + y^3 + z^3", 8),
    ],
)
def test_milnor_numbers(f, mu):
    variables = XYZ if "z" in f else XY
    assert milnor_number(poly(f, variables)) == mu


@pytest.mark.parametrize("a, b, c", [(2, 2, 2), (2, 3, 4), (3, 3, 3), (2, 5, 3), (4, 2, 3)])
def test_brieskorn_product(a, b, c):
    f = poly(f"x^{a} + y^{b} + z^{c}", XYZ)
    assert milnor_number(f) == (a - 1) * (b - 1) * (c - 1)


@pytest.mark.parametrize("f", ["x^3 + x*y^3", "x^2*y + y^4", "x^3 + y^3 + x^2*y^2", "x^4 + y^4 + x^3"])
def test_milnor_number_matches_linear_algebra(f):
    p = poly(f, XY)
    assert milnor_number(p) == local_dimension(p.gradient())


def test_milnor_number_accepts_germ():
    assert milnor_number(germ(["x^2 + y^3"], XY)) == 2


def test_milnor_number_is_order_independent():
    f = poly("x^2 + y^7 + z^14", XYZ)
    assert milnor_number(f, weighted_local((7, 2, 1))) == 78


def test_non_isolated():
    f = poly("x*y", XYZ)
    ok, mu = is_isolated_hypersurface_singularity(f)
    assert not ok and mu is None
    with pytest.raises(NonIsolatedError) as info:
        milnor_number(f)
    assert info.value.direction == "z"
    assert milnor_algebra_dimension(f) == math.inf


def test_smooth_point_has_mu_zero():
    assert milnor_number(poly("x + y^2", XY)) == 0


def test_poincare_hopf_examples():
    assert poincare_hopf_index(field(["x", "y"], XY)) == 1
    # (y, x) generates the maximal ideal, so the local algebra is one-dimensional
    assert poincare_hopf_index(field(["y", "x"], XY)) == 1
    assert poincare_hopf_index(field(["x^2", "y^3"], XY)) == 6


@pytest.mark.parametrize("exps", list(itertools.product([1, 2, 3], repeat=3))[::4])
def test_poincare_hopf_monomial_product(exps):
    comps = [f"{v}^{a}" for v, a in zip(XYZ, exps)]
    assert poincare_hopf_index(field(comps, XYZ)) == math.prod(exps)


def test_poincare_hopf_non_isolated():
    with pytest.raises(NonIsolatedError):
        poincare_hopf_index(field(["x*y", "x*y"], XY))


def test_poincare_hopf_dimension_check():
    with pytest.raises(GermError):
        poincare_hopf_index(field(["x", "y"], XY), ambient_dim=3)


def test_poincare_hopf_against_oracle():
    v = field(["x^2 + y^3 + x*y", "x*y^2 - y^3"], XY)
    assert poincare_hopf_index(v) == local_dimension(v.components)


def test_vector_field_derivation():
    v = field(["7*x", "2*y", "z"], XYZ)
    f = poly("x^2 + y^7 + z^14", XYZ)
    assert v.apply(f) == f.scale(14)


def test_tangency():
    V = germ(["x^2 + y^7 + z^14"], XYZ)
    assert is_tangent(field(["7*x", "2*y", "z"], XYZ), V)
    assert tangency_defects(field(["x", "y", "z"], XYZ), V) == [0]


def test_tangency_is_linear():
    V = germ(["x^2 + y^2 + z^2"], XYZ)
    a = field(["2*y", "-2*x", "0"], XYZ)
    b = field(["x", "y", "z"], XYZ)
    assert is_tangent(a, V) and is_tangent(b, V)
    assert is_tangent(a + b.scale(3), V)


def test_tangency_up_to_units():
    # v(f) = 2 f (1 + x): in (f) only after dividing by a unit
    V = germ(["x^2 + y^3"], XY)
    v = field(["3*x + 3*x^2", "2*y + 2*x*y"], XY)
    assert is_tangent(v, V)


def test_weighted_euler_field():
    v = weighted_euler_field((3, 2), XY)
    assert v == field(["3*x", "2*y"], XY)
    with pytest.raises(GermError):
        weighted_euler_field((0, 1), XY)
    with pytest.raises(GermError):
        weighted_euler_field((1,), XY)


def test_quasihomogeneous_degree():
    assert quasihomogeneous_degree(poly("x^2 + y^7 + z^14", XYZ), (7, 2, 1)) == 14
    assert quasihomogeneous_degree(poly("x^2 + y^3", XY), (1, 1)) is None


def test_euler_field_of_quasihomogeneous_is_tangent():
    for f, w in [("x^3 + y^4 + z^12", (4, 3, 1)), ("x^2 + y^5", (5, 2))]:
        variables = XYZ if len(w) == 3 else XY
        V = germ([f], variables)
        assert is_tangent(weighted_euler_field(w, variables), V, NEGDEGREVLEX)
