"""Hypersurface and complete-intersection germs and vector fields on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .localbases import membership, standard_basis, quotient_dimension, _pure_power_bounds, _by_position
from .polyalg import NEGDEGREVLEX, MonomialOrder, Polynomial, VariableMismatchError

__all__ = [
    "GermError",
    "NonIsolatedError",
    "NotTangentError",
    "GermVariety",
    "VectorFieldGerm",
    "is_isolated_hypersurface_singularity",
    "milnor_number",
    "milnor_algebra_dimension",
    "poincare_hopf_index",
    "is_tangent",
    "tangency_defects",
    "weighted_euler_field",
    "quasihomogeneous_degree",
]


class GermError(ValueError):
    """A mathematical precondition on the germ or field fails."""


class NonIsolatedError(GermError):
    """A quotient that should be finite-dimensional is not.

    ``direction`` names a variable whose powers all survive in the quotient.
    """

    def __init__(self, message: str, direction: str | None = None):
        super().__init__(message)
        self.direction = direction


class NotTangentError(GermError):
    pass


@dataclass(frozen=True)
class GermVariety:
    """The germ at 0 of ``{f_1 = ... = f_k = 0}`` in ``C^N``.

    ``k = 0`` encodes the smooth germ ``(C^N, 0)``.
    """

    variables: tuple
    defining: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "defining", tuple(self.defining))
        if not self.variables:
            raise GermError("a germ needs at least one ambient variable")
        if len(self.defining) > len(self.variables):
            raise GermError("more defining equations than ambient variables")
        for f in self.defining:
            if f.variables != self.variables:
                raise VariableMismatchError("defining polynomial over the wrong variables")
            if f.constant_term() != 0:
                raise GermError(f"defining polynomial {f} does not vanish at the origin")

    @property
    def ambient_dim(self) -> int:
        return len(self.variables)

    @property
    def codim(self) -> int:
        return len(self.defining)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    @property
    def is_smooth_ambient(self) -> bool:
        return not self.defining

    @property
    def is_hypersurface(self) -> bool:
        return len(self.defining) == 1


@dataclass(frozen=True)
class VectorFieldGerm:
    """Polynomial vector field ``sum v_i d/dx_i`` vanishing at the origin."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise GermError("a vector field needs at least one component")
        names = comps[0].variables
        if len(names) != len(comps):
            raise GermError(f"{len(comps)} components for {len(names)} variables")
        for c in comps:
            if c.variables != names:
                raise VariableMismatchError("components over different variables")
            if c.constant_term() != 0:
                raise GermError("vector field does not vanish at the origin")

    @property
    def variables(self) -> tuple:
        return self.components[0].variables

    @property
    def ambient_dim(self) -> int:
        return len(self.components)

    def apply(self, g: Polynomial) -> Polynomial:
        """Derivative ``v(g) = sum v_j dg/dx_j``."""
        total = Polynomial.zero(self.variables)
        for j, vj in enumerate(self.components):
            total = total + vj * g.partial(j)
        return total

    def __add__(self, other: "VectorFieldGerm") -> "VectorFieldGerm":
        return VectorFieldGerm(tuple(a + b for a, b in zip(self.components, other.components)))

    def scale(self, c) -> "VectorFieldGerm":
        """Multiply by a rational or by a polynomial function."""
        return VectorFieldGerm(tuple(c * a for a in self.components))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def _order(order):
    return NEGDEGREVLEX if order is None else order


def _missing_direction(basis, variables):
    for gens in _by_position(basis.leading_monomials, basis.rank):
        bounds = _pure_power_bounds(gens, len(variables))
        for i, b in enumerate(bounds):
            if b is None:
                return variables[i]
    return None


def _local_dimension(gens: Sequence[Polynomial], variables, order):
    basis = standard_basis(list(gens), _order(order), rank=1, variables=variables)
    return quotient_dimension(basis), basis


def milnor_algebra_dimension(f: Polynomial, order: MonomialOrder | None = None):
    """``dim O/(df/dx_1, ..., df/dx_N)`` at the origin, possibly ``math.inf``."""
    dim, _ = _local_dimension(f.gradient(), f.variables, order)
    return dim


def is_isolated_hypersurface_singularity(f: Polynomial, order=None):
    """Return ``(isolated, mu)``; ``mu`` is ``None`` when not isolated."""
    if f.constant_term() != 0:
        raise GermError("f does not vanish at the origin")
    dim = milnor_algebra_dimension(f, order)
    if dim == math.inf:
        return False, None
    return True, dim


def milnor_number(f: Polynomial, order=None) -> int:
    """Milnor number of an isolated hypersurface singularity at the origin.

    >>> from vfindex.polyalg import parse_polynomial
    >>> milnor_number(parse_polynomial("x^2 + y^3", "xy"))
    2
    """
    if isinstance(f, GermVariety):
        if not f.is_hypersurface:
            raise GermError("the Milnor number is only implemented for hypersurfaces")
        f = f.defining[0]
    if f.constant_term() != 0:
        raise GermError("f does not vanish at the origin")
    dim, basis = _local_dimension(f.gradient(), f.variables, order)
    if dim == math.inf:
        d = _missing_direction(basis, f.variables)
        raise NonIsolatedError(
            f"singularity of {f} is not isolated: Milnor algebra infinite along {d}", d
        )
    return dim


def poincare_hopf_index(v: VectorFieldGerm, ambient_dim: int | None = None, order=None) -> int:
    """``dim O_{C^N,0}/(v_1, ..., v_N)`` for a field with an isolated zero."""
    if ambient_dim is not None and ambient_dim != v.ambient_dim:
        raise GermError(f"field has {v.ambient_dim} components, ambient dimension {ambient_dim}")
    dim, basis = _local_dimension(v.components, v.variables, order)
    if dim == math.inf:
        d = _missing_direction(basis, v.variables)
        raise NonIsolatedError(f"zero of {v} at the origin is not isolated (along {d})", d)
    return dim


def tangency_defects(v: VectorFieldGerm, V: GermVariety, order=None) -> list:
    """Indices ``i`` with ``v(f_i)`` outside the ideal ``(f_1, ..., f_k)``."""
    if v.variables != V.variables:
        raise GermError("vector field and germ live over different variables")
    if V.is_smooth_ambient:
        return []
    basis = standard_basis(list(V.defining), _order(order))
    return [i for i, f in enumerate(V.defining) if not membership(v.apply(f), basis)]


def is_tangent(v: VectorFieldGerm, V: GermVariety, order=None) -> bool:
    """Whether ``v(f_i)`` lies in the local ideal of ``V`` for every ``i``."""
    return not tangency_defects(v, V, order)


def weighted_euler_field(weights: Sequence[int], variables: Sequence[str]) -> VectorFieldGerm:
    """The field ``sum w_i x_i d/dx_i``."""
    variables = tuple(variables)
    if len(weights) != len(variables):
        raise GermError("one weight per variable is required")
    if any(int(w) != w or w <= 0 for w in weights):
        raise GermError("weights must be positive integers")
    return VectorFieldGerm(
        tuple(Polynomial.variable(x, variables).scale(int(w)) for w, x in zip(weights, variables))
    )


def quasihomogeneous_degree(f: Polynomial, weights: Sequence[int]) -> int | None:
    """Weighted degree of ``f`` if every term has the same one, else ``None``."""
    degs = {sum(w * e for w, e in zip(weights, exps)) for exps, _ in f.items()}
    if len(degs) != 1:
        return None
    return degs.pop()
