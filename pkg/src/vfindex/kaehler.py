"""Kähler differentials of a germ, contraction by a vector field, homology.

For ``V = {f_1 = ... = f_k = 0}`` in ``C^N`` of dimension ``n = N - k`` the
module of ``j``-forms is presented as the free module on
``dx_I = dx_{i_1} ^ ... ^ dx_{i_j}`` (``i_1 < ... < i_j``) modulo
``f_i dx_I`` and ``df_i ^ dx_J``.  Contraction ``i_v`` lowers the degree by
one; the complex is truncated at degree ``n`` and the homological index is
its Euler characteristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .germs import GermError, GermVariety, NotTangentError, VectorFieldGerm, tangency_defects
from .localbases import (
    FreeModuleElement,
    ModuleOrder,
    PresentedModule,
    StandardBasis,
    membership,
    preimage,
    quotient_dimension,
    standard_basis,
    subquotient_dimension,
)
from .polyalg import NEGDEGREVLEX, MonomialOrder, Polynomial

__all__ = [
    "InfiniteHomologyError",
    "ComplexError",
    "exterior_basis",
    "KaehlerModule",
    "ContractionMap",
    "KaehlerComplex",
    "HomologyResult",
    "build_kaehler_module",
    "contraction",
    "compose",
    "kaehler_complex",
    "check_complex",
    "module_homology",
    "homological_index",
]


class InfiniteHomologyError(GermError):
    """Some homology group of the contraction complex is infinite-dimensional."""

    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree


class ComplexError(RuntimeError):
    """The maps built do not form a complex on the presented modules."""


def exterior_basis(N: int, j: int) -> list:
    """Index tuples of ``dx_I`` for ``|I| = j``, lexicographically ordered."""
    return list(combinations(range(N), j))


def _wedge_sign(l: int, J: tuple):
    # dx_l ^ dx_J = sign * dx_{J + l}
    if l in J:
        return 0, None
    below = sum(1 for i in J if i < l)
    return (-1) ** below, tuple(sorted(J + (l,)))


@dataclass(frozen=True)
class KaehlerModule:
    degree: int
    ambient_dim: int
    labels: tuple
    presentation: PresentedModule

    @property
    def rank(self) -> int:
        return self.presentation.rank

    @property
    def relations(self) -> tuple:
        return self.presentation.relations

    def label_str(self, i: int, variables) -> str:
        I = self.labels[i]
        if not I:
            return "1"
        return "^".join(f"d{variables[a]}" for a in I)


def build_kaehler_module(V: GermVariety, j: int) -> KaehlerModule:
    """Presentation of the ``j``-forms on ``V`` for ``0 <= j <= dim V``."""
    if not 0 <= j <= V.dim:
        raise GermError(f"form degree {j} outside 0..{V.dim}")
    N = V.ambient_dim
    names = V.variables
    labels = exterior_basis(N, j)
    index = {I: a for a, I in enumerate(labels)}
    zero = Polynomial.zero(names)
    rels = []
    for f in V.defining:
        for a in range(len(labels)):
            comps = [zero] * len(labels)
            comps[a] = f
            rels.append(FreeModuleElement(comps))
    if j >= 1:
        for f in V.defining:
            grad = f.gradient()
            for J in exterior_basis(N, j - 1):
                comps = [zero] * len(labels)
                for l in range(N):
                    if grad[l].is_zero():
                        continue
                    sign, I = _wedge_sign(l, J)
                    if sign:
                        comps[index[I]] = comps[index[I]] + grad[l].scale(sign)
                rel = FreeModuleElement(comps)
                if not rel.is_zero():
                    rels.append(rel)
    pres = PresentedModule(len(labels), tuple(rels), names)
    return KaehlerModule(j, N, tuple(labels), pres)


@dataclass(frozen=True)
class ContractionMap:
    """Matrix of ``i_v`` from ``j``-forms to ``(j-1)``-forms.

    ``matrix[r][c]`` is the coefficient of target generator ``r`` in the
    image of source generator ``c``.
    """

    source_degree: int
    source_labels: tuple
    target_labels: tuple
    matrix: tuple

    @property
    def target_degree(self) -> int:
        return self.source_degree - 1

    def column(self, c: int) -> FreeModuleElement:
        return FreeModuleElement(row[c] for row in self.matrix)

    def columns(self) -> list:
        return [self.column(c) for c in range(len(self.source_labels))]

    def apply(self, elem: FreeModuleElement) -> FreeModuleElement:
        if elem.rank != len(self.source_labels):
            raise ValueError("element rank does not match the source of the map")
        out = []
        for row in self.matrix:
            acc = Polynomial.zero(elem.variables)
            for a, b in zip(row, elem):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return FreeModuleElement(out)


def contraction(v: VectorFieldGerm, j: int) -> ContractionMap:
    """``i_v(dx_{i_1}^...^dx_{i_j}) = sum_l (-1)^(l+1) v_{i_l} dx_{I - i_l}``."""
    N = v.ambient_dim
    if not 1 <= j <= N:
        raise GermError(f"contraction degree {j} outside 1..{N}")
    src = exterior_basis(N, j)
    tgt = exterior_basis(N, j - 1)
    tindex = {I: r for r, I in enumerate(tgt)}
    zero = Polynomial.zero(v.variables)
    rows = [[zero] * len(src) for _ in tgt]
    for c, I in enumerate(src):
        for l, i in enumerate(I):
            r = tindex[I[:l] + I[l + 1:]]
            rows[r][c] = v.components[i] if l % 2 == 0 else -v.components[i]
    return ContractionMap(j, tuple(src), tuple(tgt), tuple(tuple(r) for r in rows))


def compose(outer: ContractionMap, inner: ContractionMap) -> tuple:
    """Matrix product ``outer * inner`` as a tuple of rows of polynomials."""
    if outer.source_labels != inner.target_labels:
        raise ValueError("maps are not composable")
    names = outer.matrix[0][0].variables
    out = []
    for row in outer.matrix:
        new = []
        for c in range(len(inner.source_labels)):
            acc = Polynomial.zero(names)
            for k, a in enumerate(row):
                b = inner.matrix[k][c]
                if a and b:
                    acc = acc + a * b
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


@dataclass(frozen=True)
class KaehlerComplex:
    """``0 -> Omega^n -> ... -> Omega^0 -> 0`` with ``maps[j]`` leaving degree ``j``."""

    germ: GermVariety
    field: VectorFieldGerm
    modules: tuple
    maps: dict
    order: MonomialOrder = NEGDEGREVLEX

    @property
    def top_degree(self) -> int:
        return self.germ.dim

    def shifts(self, j: int) -> tuple:
        """Degree of each generator ``dx_I``: the sum of the order weights over ``I``."""
        w = self.order.weights or (1,) * self.germ.ambient_dim
        return tuple(sum(w[i] for i in I) for I in self.modules[j].labels)

    def pot(self, j: int) -> ModuleOrder:
        return ModuleOrder(self.order, "pot", self.shifts(j))

    def top(self, j: int) -> ModuleOrder:
        return ModuleOrder(self.order, "top", self.shifts(j))


def kaehler_complex(v: VectorFieldGerm, V: GermVariety, order: MonomialOrder | None = None,
                    check_tangency: bool = True) -> KaehlerComplex:
    order = NEGDEGREVLEX if order is None else order
    if not order.is_local:
        raise GermError("the contraction complex needs a local order")
    if v.variables != V.variables:
        raise GermError("vector field and germ live over different variables")
    if check_tangency:
        bad = tangency_defects(v, V, order)
        if bad:
            raise NotTangentError(
                "v(f) not in (f): field is not tangent to the germ "
                f"(fails for equation {', '.join(str(i + 1) for i in bad)})"
            )
    n = V.dim
    modules = tuple(build_kaehler_module(V, j) for j in range(n + 1))
    maps = {j: contraction(v, j) for j in range(1, n + 1)}
    return KaehlerComplex(V, v, modules, maps, order)


def check_complex(cx: KaehlerComplex) -> None:
    """Verify ``i_v o i_v = 0`` and that every map preserves the relations."""
    n = cx.top_degree
    for j in range(2, n + 1):
        prod = compose(cx.maps[j - 1], cx.maps[j])
        if any(not p.is_zero() for row in prod for p in row):
            raise ComplexError(f"contraction squared is nonzero from degree {j}")
    for j in range(1, n + 1):
        target = cx.modules[j - 1]
        if not target.relations:
            continue
        rel_basis = standard_basis(list(target.relations), cx.pot(j - 1))
        for r in cx.modules[j].relations:
            image = cx.maps[j].apply(r)
            if not membership(image, rel_basis):
                raise ComplexError(f"contraction from degree {j} does not preserve relation {r}")


@dataclass(frozen=True)
class HomologyResult:
    dims: tuple
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h for i, h in enumerate(self.dims))


def _kernel_generators(cx: KaehlerComplex, j: int) -> list:
    module = cx.modules[j]
    names = cx.germ.variables
    if j == 0:
        return [FreeModuleElement.unit(0, 1, names)]
    target = cx.modules[j - 1]
    gens = preimage(
        cx.maps[j].columns(),
        list(target.relations),
        cx.pot(j - 1),
        tracking_shifts=cx.shifts(j),
        rank=target.rank,
        variables=names,
    )
    return gens + list(module.relations)


def _image_generators(cx: KaehlerComplex, j: int) -> list:
    gens = list(cx.modules[j].relations)
    if j < cx.top_degree:
        gens = cx.maps[j + 1].columns() + gens
    return gens


def _subquotient_by_presentation(K: StandardBasis, image: list, cx: KaehlerComplex, j: int):
    # K/I = O^m / phi^{-1}(I) where phi sends e_i to the i-th generator of K
    gens = list(K.generators)
    order = cx.pot(j)
    track = []
    for g in gens:
        d = 0
        for pos, comp in enumerate(g):
            for e, _ in comp.items():
                d = max(d, order.degree((pos, e)))
        track.append(d)
    pre = preimage(gens, image, order, tracking_shifts=track,
                   rank=K.rank, variables=K.variables)
    basis = standard_basis(pre, ModuleOrder(cx.order, "pot", tuple(track)),
                           rank=len(gens), variables=K.variables)
    return quotient_dimension(basis)


def module_homology(cx: KaehlerComplex, method: str = "leading", verify: bool = True) -> HomologyResult:
    """Dimensions ``h_0, ..., h_n`` of the homology of the contraction complex.

    For each degree the kernel is the preimage of the target relations under
    the lifted map, the image is the span of the incoming map's columns plus
    the relations.  ``method="leading"`` counts the monomials of the
    kernel's leading module that are missing from the image's (both under a
    degree-compatible order); ``method="presentation"`` presents the
    subquotient explicitly and counts its standard monomials.
    """
    if method not in ("leading", "presentation"):
        raise ValueError(f"unknown homology method {method!r}")
    if verify:
        check_complex(cx)
    dims = []
    witnesses = {}
    for j in range(cx.top_degree + 1):
        module = cx.modules[j]
        names = cx.germ.variables
        kernel = _kernel_generators(cx, j)
        image = _image_generators(cx, j)
        K = standard_basis(kernel, cx.top(j), rank=module.rank, variables=names)
        I = standard_basis(image, cx.top(j), rank=module.rank, variables=names)
        if method == "leading":
            h = subquotient_dimension(K, I)
        else:
            h = _subquotient_by_presentation(K, image, cx, j)
        if h == math.inf:
            raise InfiniteHomologyError(
                f"homology in degree {j} is infinite-dimensional: "
                "the field or the germ does not have an isolated singularity", j
            )
        dims.append(h)
        witnesses[j] = (K, I)
    return HomologyResult(tuple(dims), witnesses)


def homological_index(v: VectorFieldGerm, V: GermVariety, order=None, method: str = "leading",
                      return_homology: bool = False):
    """Euler characteristic ``sum (-1)^i h_i`` of the contraction complex."""
    cx = kaehler_complex(v, V, order)
    result = module_homology(cx, method)
    if return_homology:
        return result.euler_characteristic, result
    return result.euler_characteristic
