"""Index calculus on hypersurface and complete-intersection germs.

The GSV index is computed as the homological index (the two agree on
hypersurfaces); the Schwartz index is recovered from
``GSV = Schwartz + (-1)^n mu``.  For complete intersections of codimension
at least two only the homological value is reported and never identified
with the GSV index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .germs import (
    GermError,
    GermVariety,
    NotTangentError,
    VectorFieldGerm,
    is_tangent,
    milnor_number,
    poincare_hopf_index,
    quasihomogeneous_degree,
    weighted_euler_field,
)
from .kaehler import kaehler_complex, module_homology
from .localbases import quotient_dimension, standard_basis
from .polyalg import DEGREVLEX, NEGDEGREVLEX

__all__ = [
    "IndexReport",
    "ConsistencyError",
    "IcisEqualityUnknown",
    "ConservationVerdict",
    "gsv_index",
    "gsv_by_transversal_formula",
    "schwartz_index",
    "virtual_index",
    "full_report",
    "conservation_check",
]


class ConsistencyError(RuntimeError):
    """An identity between computed indices failed: an engine bug."""


class IcisEqualityUnknown(GermError):
    """GSV index requested on a complete intersection of codimension >= 2."""


@dataclass
class IndexReport:
    N: int
    n: int
    k: int
    mu: int | None = None
    ind_ph: int | None = None
    ind_hom: int | None = None
    ind_gsv: int | None = None
    ind_sch: int | None = None
    ind_virtual: int | None = None
    homology: tuple | None = None
    gsv_equality_asserted: bool = True
    flags: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Fields in a fixed key order, absent ones dropped."""
        out = {}
        for key in ("ind_ph", "ind_hom", "ind_gsv", "ind_sch", "ind_virtual", "mu",
                    "homology", "N", "n", "k", "gsv_equality_asserted", "flags"):
            val = getattr(self, key)
            if val is None:
                continue
            if key == "homology":
                val = list(val)
            if key == "flags":
                if not val:
                    continue
                val = {k: val[k] for k in sorted(val)}
            out[key] = val
        return out


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _hom(v, V, order, method):
    cx = kaehler_complex(v, V, order)
    return module_homology(cx, method)


def gsv_index(v: VectorFieldGerm, V: GermVariety, order=None, *, allow_icis: bool = False,
              method: str = "leading") -> int:
    """GSV index, computed through the homological index.

    On the smooth germ this is the Poincaré-Hopf index.  Complete
    intersections of codimension >= 2 are refused unless ``allow_icis`` is
    set, in which case the homological value is returned as is.
    """
    if V.codim >= 2 and not allow_icis:
        raise IcisEqualityUnknown(
            "equality unknown for complete intersections: GSV and homological "
            "indices are only known to agree on hypersurfaces"
        )
    return _hom(v, V, order, method).euler_characteristic


def gsv_by_transversal_formula(V: GermVariety, weights, order=None) -> int:
    """``1 + (-1)^n mu`` for the weighted Euler field of a quasihomogeneous hypersurface.

    The weighted Euler field of a quasihomogeneous ``f`` is transversal to
    the link, which is what the formula needs; other fields are rejected by
    the quasihomogeneity check.
    """
    if not V.is_hypersurface:
        raise GermError("transversal formula implemented for hypersurfaces only")
    f = V.defining[0]
    if quasihomogeneous_degree(f, weights) is None:
        raise GermError(f"{f} is not quasihomogeneous for weights {tuple(weights)}")
    return 1 + _sign(V.dim) * milnor_number(f, order)


def _mu_or_zero(V: GermVariety, order) -> int:
    if V.is_smooth_ambient:
        return 0
    if not V.is_hypersurface:
        raise GermError("the Milnor number is only implemented for hypersurfaces")
    return milnor_number(V.defining[0], order)


def schwartz_index(v: VectorFieldGerm, V: GermVariety, order=None, method: str = "leading") -> int:
    """``GSV - (-1)^n mu``; ``mu = 0`` on the smooth germ."""
    mu = _mu_or_zero(V, order)
    return gsv_index(v, V, order, method=method) - _sign(V.dim) * mu


def virtual_index(v: VectorFieldGerm, V: GermVariety, order=None, method: str = "leading"):
    """Virtual index: the GSV index on hypersurfaces.

    For codimension >= 2 returns ``(value, False)``: the homological value,
    with the flag saying equality with GSV/virtual is not asserted.
    Otherwise returns ``(value, True)``.
    """
    if V.codim >= 2:
        return gsv_index(v, V, order, allow_icis=True, method=method), False
    return gsv_index(v, V, order, method=method), True


def full_report(v: VectorFieldGerm, V: GermVariety, order=None, *, weights=None,
                method: str = "leading") -> IndexReport:
    """Every index available for ``(v, V)``, cross-checked.

    With ``weights`` for which the single defining equation is
    quasihomogeneous and ``v`` is the matching weighted Euler field, the
    transversal formula is evaluated as a second route and must agree.
    """
    order = NEGDEGREVLEX if order is None else order
    N, n, k = V.ambient_dim, V.dim, V.codim
    report = IndexReport(N=N, n=n, k=k)
    result = _hom(v, V, order, method)
    report.homology = result.dims
    report.ind_hom = result.euler_characteristic
    report.flags["gsv_route"] = "homological"
    report.flags["homology_method"] = method

    if V.is_smooth_ambient:
        report.ind_ph = poincare_hopf_index(v, order=order)
        if report.ind_ph != report.ind_hom:
            raise ConsistencyError(
                f"smooth germ: homological index {report.ind_hom} != PH index {report.ind_ph}"
            )
    if k >= 2:
        report.gsv_equality_asserted = False
        report.ind_virtual = report.ind_hom
        report.flags["virtual_route"] = "homological (GSV/virtual equality not asserted)"
        return report

    mu = None if V.is_smooth_ambient else milnor_number(V.defining[0], order)
    report.mu = mu
    report.ind_gsv = report.ind_hom
    report.ind_virtual = report.ind_gsv
    report.ind_sch = report.ind_gsv - _sign(n) * (mu or 0)
    if report.ind_gsv != report.ind_sch + _sign(n) * (mu or 0):
        raise ConsistencyError("GSV != Schwartz + (-1)^n mu")

    if weights is not None and V.is_hypersurface:
        f = V.defining[0]
        if (quasihomogeneous_degree(f, weights) is not None
                and v == weighted_euler_field(weights, V.variables)):
            formula = gsv_by_transversal_formula(V, weights, order)
            report.flags["transversal_formula"] = formula
            if formula != report.ind_gsv:
                raise ConsistencyError(
                    f"homological GSV {report.ind_gsv} != transversal formula {formula}"
                )
            if report.ind_sch != 1:
                raise ConsistencyError(f"weighted Euler field has Schwartz index {report.ind_sch}")
    return report


@dataclass(frozen=True)
class ConservationVerdict:
    epsilon: Fraction
    status: str                 # "certified" or "inconclusive"
    index: int | None
    expected: int
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "certified" and self.index == self.expected


def _zero_count(gens, variables, order):
    basis = standard_basis(list(gens), order, rank=1, variables=variables)
    return quotient_dimension(basis)


def conservation_check(v: VectorFieldGerm, w: VectorFieldGerm, V: GermVariety,
                       epsilons: Iterable, order=None, method: str = "leading") -> list:
    """Compare the homological index of ``v + eps*w`` with that of ``v``.

    A case is certified when the zero scheme of ``v + eps*w`` on ``V`` is
    supported only at the origin: its local length is finite and equals its
    affine length (computed with a global order).  Then no zeros moved to
    smooth points and the index must be unchanged.  Otherwise the case is
    reported inconclusive.
    """
    order = NEGDEGREVLEX if order is None else order
    if not is_tangent(v, V, order):
        raise NotTangentError("v(f) not in (f): unperturbed field is not tangent")
    if not is_tangent(w, V, order):
        raise NotTangentError("v(f) not in (f): perturbation direction is not tangent")
    base = _hom(v, V, order, method).euler_characteristic
    names = V.variables
    verdicts = []
    for eps in epsilons:
        eps = Fraction(eps)
        vp = v + w.scale(eps)
        if not is_tangent(vp, V, order):
            raise NotTangentError(f"v(f) not in (f): perturbed field at eps={eps} is not tangent")
        gens = list(V.defining) + list(vp.components)
        local = _zero_count(gens, names, order)
        if local == math.inf:
            verdicts.append(ConservationVerdict(eps, "inconclusive", None, base,
                                                "zero at the origin is no longer isolated"))
            continue
        affine = _zero_count(gens, names, DEGREVLEX)
        if affine != local:
            verdicts.append(ConservationVerdict(
                eps, "inconclusive", None, base,
                f"extra zeros appeared: affine length {affine}, local length {local}"))
            continue
        idx = _hom(vp, V, order, method).euler_characteristic
        verdicts.append(ConservationVerdict(eps, "certified", idx, base))
    return verdicts
