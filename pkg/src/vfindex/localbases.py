"""Standard bases of ideals and submodules of free modules.

Under a local order the normal form is Mora's tangent-cone reduction with the
ecart selection rule, so every computation describes the localization at the
origin.  Under a global order plain Buchberger reduction is used.

Internally a module element is a dict ``{(position, exponents): int}``;
coefficients are kept integral and primitive (fraction-free reduction), which
is legitimate because normal forms are only defined up to a unit anyway.
Public functions take and return :class:`FreeModuleElement` objects with
rational coefficients.
"""

from __future__ import annotations

import contextlib
import contextvars
import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .polyalg import NEGDEGREVLEX, MonomialOrder, Polynomial, VariableMismatchError

__all__ = [
    "FreeModuleElement",
    "PresentedModule",
    "ModuleOrder",
    "StandardBasis",
    "SPairLimitExceeded",
    "spair_limit",
    "trace_spairs",
    "mora_normal_form",
    "standard_basis",
    "is_standard_basis",
    "quotient_dimension",
    "subquotient_dimension",
    "standard_monomials",
    "syzygies",
    "preimage",
    "membership",
]


# ---------------------------------------------------------------------------
# Free module elements
# ---------------------------------------------------------------------------


class FreeModuleElement:
    """Vector of polynomials, an element of a free module of rank ``len``."""

    __slots__ = ("components", "_hash")

    def __init__(self, components: Iterable[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a free module element needs at least one component")
        names = comps[0].variables
        for c in comps:
            if not isinstance(c, Polynomial):
                raise TypeError(f"component {c!r} is not a Polynomial")
            if c.variables != names:
                raise VariableMismatchError("components over different variables")
        self.components = comps
        self._hash = None

    @classmethod
    def unit(cls, i: int, rank: int, variables: Sequence[str]) -> "FreeModuleElement":
        zero = Polynomial.zero(variables)
        one = Polynomial.constant(1, variables)
        return cls(one if k == i else zero for k in range(rank))

    @classmethod
    def zero(cls, rank: int, variables: Sequence[str]) -> "FreeModuleElement":
        return cls(Polynomial.zero(variables) for _ in range(rank))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def variables(self) -> tuple:
        return self.components[0].variables

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def _check(self, other):
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "FreeModuleElement"):
        self._check(other)
        return FreeModuleElement(a + b for a, b in zip(self, other))

    def __sub__(self, other: "FreeModuleElement"):
        self._check(other)
        return FreeModuleElement(a - b for a, b in zip(self, other))

    def __neg__(self):
        return FreeModuleElement(-a for a in self)

    def __mul__(self, scalar):
        return FreeModuleElement(scalar * a for a in self)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self):
        return f"FreeModuleElement{self}"


def _as_elements(gens) -> list:
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            g = FreeModuleElement([g])
        out.append(g)
    return out


@dataclass(frozen=True)
class PresentedModule:
    """Cokernel of ``relations`` inside the free module of the given rank."""

    rank: int
    relations: tuple = ()
    variables: tuple = ()

    def __post_init__(self):
        rels = tuple(_as_elements(self.relations))
        for r in rels:
            if r.rank != self.rank:
                raise ValueError(f"relation of rank {r.rank} in a rank-{self.rank} module")
        object.__setattr__(self, "relations", rels)


# ---------------------------------------------------------------------------
# Module orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleOrder:
    """Monomial order on ``x^a e_i`` extending a polynomial order.

    ``pot`` (position over term) compares positions first, lower index
    ranking higher.  ``top`` compares the degree ``deg(x^a) + shifts[i]``
    first, then the reverse-lexicographic tie-break, then the position;
    it is degree-compatible, which :func:`subquotient_dimension` relies on.
    Shifts also enter the ecart for both schemes.
    """

    monomial_order: MonomialOrder = NEGDEGREVLEX
    scheme: str = "pot"
    shifts: tuple = ()
    _key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.scheme not in ("pot", "top"):
            raise ValueError(f"unknown module order scheme {self.scheme!r}")
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))
        mo = self.monomial_order
        shifts = self.shifts
        sign = -1 if mo.is_local else 1

        if self.scheme == "pot":
            def raw(mon):
                return (-mon[0], mo.key(mon[1]))
        else:
            def raw(mon):
                pos, exps = mon
                s = shifts[pos] if pos < len(shifts) else 0
                k = mo.key(exps)
                return (k[0] + sign * s, k[1], -pos)

        object.__setattr__(self, "_key", lru_cache(maxsize=1 << 18)(raw))

    @property
    def is_local(self) -> bool:
        return self.monomial_order.is_local

    def key(self, mon) -> tuple:
        return self._key(mon)

    def shift(self, pos: int) -> int:
        return self.shifts[pos] if pos < len(self.shifts) else 0

    def degree(self, mon) -> int:
        return self.monomial_order.degree(mon[1]) + self.shift(mon[0])

    def with_shifts(self, shifts) -> "ModuleOrder":
        return ModuleOrder(self.monomial_order, self.scheme, tuple(shifts))

    def with_scheme(self, scheme: str) -> "ModuleOrder":
        return ModuleOrder(self.monomial_order, scheme, self.shifts)


def _module_order(order) -> ModuleOrder:
    if order is None:
        return ModuleOrder()
    if isinstance(order, MonomialOrder):
        return ModuleOrder(order)
    if isinstance(order, ModuleOrder):
        return order
    raise TypeError(f"not an order: {order!r}")


# ---------------------------------------------------------------------------
# Budget and trace hooks
# ---------------------------------------------------------------------------


class SPairLimitExceeded(RuntimeError):
    """Raised when the S-pair budget installed by :func:`spair_limit` runs out."""


@dataclass
class _Counter:
    limit: int | None
    used: int = 0


_budget: contextvars.ContextVar = contextvars.ContextVar("spair_budget", default=None)
_trace: contextvars.ContextVar = contextvars.ContextVar("spair_trace", default=None)


@contextlib.contextmanager
def spair_limit(limit: int | None):
    """Abort standard-basis computations after ``limit`` S-pair reductions."""
    token = _budget.set(_Counter(limit))
    try:
        yield
    finally:
        _budget.reset(token)


@contextlib.contextmanager
def trace_spairs(callback: Callable[[dict], None]):
    """Call ``callback(stats)`` after every standard-basis computation."""
    token = _trace.set(callback)
    try:
        yield
    finally:
        _trace.reset(token)


def _spend():
    counter = _budget.get()
    if counter is not None:
        counter.used += 1
        if counter.limit is not None and counter.used > counter.limit:
            raise SPairLimitExceeded(f"S-pair budget of {counter.limit} exhausted")


# ---------------------------------------------------------------------------
# Internal vector arithmetic
# ---------------------------------------------------------------------------


def _to_vec(elem: FreeModuleElement) -> dict:
    den = 1
    for comp in elem.components:
        for c in comp._terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
    vec = {}
    for pos, comp in enumerate(elem.components):
        for e, c in comp._terms.items():
            vec[(pos, e)] = int(c * den)
    return vec


def _from_vec(vec: dict, rank: int, variables: tuple, scale: Fraction = Fraction(1)) -> FreeModuleElement:
    parts = [dict() for _ in range(rank)]
    for (pos, e), c in vec.items():
        parts[pos][e] = Fraction(c) * scale
    return FreeModuleElement(Polynomial._raw(p, variables) for p in parts)


def _content(vec: dict) -> int:
    g = 0
    for c in vec.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(vec: dict, lead) -> dict:
    g = _content(vec)
    if vec[lead] < 0:
        g = -g
    if g != 1:
        vec = {m: c // g for m, c in vec.items()}
    return vec


def _divides(a, b) -> bool:
    # module monomials (pos, exps)
    if a[0] != b[0]:
        return False
    return all(x <= y for x, y in zip(a[1], b[1]))


def _lcm(a, b):
    return (a[0], tuple(max(x, y) for x, y in zip(a[1], b[1])))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a[1], b[1]))


class _Elt:
    __slots__ = ("vec", "lm", "lc", "ecart")

    def __init__(self, vec, lm, lc, ecart):
        self.vec = vec
        self.lm = lm
        self.lc = lc
        self.ecart = ecart


def _make_elt(vec: dict, order: ModuleOrder) -> _Elt:
    key = order.key
    lm = max(vec, key=key)
    vec = _primitive(vec, lm)
    deg = order.degree
    ecart = max(deg(m) for m in vec) - deg(lm)
    return _Elt(vec, lm, vec[lm], ecart)


def _sub_multiple(h: dict, a: int, b: int, shift, t: dict):
    """In place: h <- a*h - b * x^shift * t."""
    if a != 1:
        for m in h:
            h[m] *= a
    for (pos, e), c in t.items():
        mon = (pos, tuple(x + y for x, y in zip(e, shift)))
        val = h.get(mon, 0) - b * c
        if val:
            h[mon] = val
        else:
            del h[mon]


def _reduce_step(h: dict, lm, t: _Elt):
    hc = h[lm]
    g = math.gcd(hc, t.lc)
    a, b = t.lc // g, hc // g
    if a < 0:
        a, b = -a, -b
    shift = tuple(x - y for x, y in zip(lm[1], t.lm[1]))
    _sub_multiple(h, a, b, shift, t.vec)


def _tidy(h: dict) -> dict:
    g = _content(h)
    if g > 1:
        for m in h:
            h[m] //= g
    return h


def _nf_local(h: dict, T: list, order: ModuleOrder) -> dict:
    """Mora's weak normal form of ``h`` with respect to ``T`` (h is consumed)."""
    key = order.key
    deg = order.degree
    T = list(T)
    steps = 0
    while h:
        lm = max(h, key=key)
        best = None
        pos, exps = lm
        for t in T:
            tl = t.lm
            if tl[0] == pos and all(x <= y for x, y in zip(tl[1], exps)):
                if best is None or t.ecart < best.ecart:
                    best = t
                    if t.ecart == 0:
                        break
        if best is None:
            return h
        eh = max(deg(m) for m in h) - deg(lm)
        if best.ecart > eh:
            T.append(_Elt(dict(h), lm, h[lm], eh))
        _reduce_step(h, lm, best)
        steps += 1
        if steps % 8 == 0:
            _tidy(h)
    return h


def _nf_global_top(h: dict, T: list, order: ModuleOrder) -> dict:
    key = order.key
    steps = 0
    while h:
        lm = max(h, key=key)
        for t in T:
            if _divides(t.lm, lm):
                break
        else:
            return h
        _reduce_step(h, lm, t)
        steps += 1
        if steps % 8 == 0:
            _tidy(h)
    return h


def _nf_full_global(h: dict, T: list, order: ModuleOrder) -> dict:
    """Full reduction under a global order; returns a scaled remainder."""
    key = order.key
    rem: dict = {}
    while h:
        lm = max(h, key=key)
        t = next((t for t in T if _divides(t.lm, lm)), None)
        if t is None:
            rem[lm] = h.pop(lm)
            continue
        hc = h[lm]
        g = math.gcd(hc, t.lc)
        a, b = t.lc // g, hc // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for m in rem:
                rem[m] *= a
        shift = tuple(x - y for x, y in zip(lm[1], t.lm[1]))
        _sub_multiple(h, a, b, shift, t.vec)
    return rem


def _reduce(h: dict, T: list, order: ModuleOrder) -> dict:
    if order.is_local:
        return _nf_local(h, T, order)
    return _nf_global_top(h, T, order)


def _spoly(f: _Elt, g: _Elt) -> dict:
    L = _lcm(f.lm, g.lm)
    sf = tuple(x - y for x, y in zip(L[1], f.lm[1]))
    sg = tuple(x - y for x, y in zip(L[1], g.lm[1]))
    gcd = math.gcd(f.lc, g.lc)
    a, b = g.lc // gcd, f.lc // gcd
    h = {}
    for (pos, e), c in f.vec.items():
        h[(pos, tuple(x + y for x, y in zip(e, sf)))] = a * c
    _sub_multiple(h, 1, b, sg, g.vec)
    return h


# ---------------------------------------------------------------------------
# Standard basis algorithm
# ---------------------------------------------------------------------------


def _compute(vecs: list, order: ModuleOrder, use_product: bool) -> list:
    """Mora/Buchberger with Gebauer-Moeller pair management; returns _Elts."""
    elts: list = []
    active: list = []
    live: dict = {}
    heap: list = []
    counter = itertools.count()
    stats = {"spairs": 0, "zero_reductions": 0, "inserted": 0}
    deg = order.degree
    reduce_fn = _nf_local if order.is_local else _nf_global_top

    def insert(e: _Elt):
        idx = len(elts)
        elts.append(e)
        stats["inserted"] += 1
        lmh = e.lm
        cands = []
        for gi in active:
            g = elts[gi]
            if g.lm[0] == lmh[0]:
                cands.append((gi, _lcm(lmh, g.lm), use_product and _coprime(lmh, g.lm)))
        kept = []
        for n, (gi, L, cop) in enumerate(cands):
            if cop:
                kept.append((gi, L, cop))
                continue
            if any(_divides(L2, L) for _, L2, _ in cands[n + 1:]):
                continue
            if any(_divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((gi, L, cop))
        for pair, L in list(live.items()):
            if _divides(lmh, L):
                i, j = pair
                if _lcm(elts[i].lm, lmh) != L and _lcm(elts[j].lm, lmh) != L:
                    del live[pair]
        for gi, L, cop in kept:
            if cop:
                continue
            pair = (gi, idx)
            live[pair] = L
            heapq.heappush(heap, (deg(L), next(counter), pair))
        active[:] = [gi for gi in active if not _divides(lmh, elts[gi].lm)]
        active.append(idx)

    for v in vecs:
        if v:
            insert(_make_elt(dict(v), order))

    while heap:
        _, _, pair = heapq.heappop(heap)
        if pair not in live:
            continue
        del live[pair]
        _spend()
        stats["spairs"] += 1
        i, j = pair
        h = reduce_fn(_spoly(elts[i], elts[j]), [elts[a] for a in active], order)
        if h:
            insert(_make_elt(h, order))
        else:
            stats["zero_reductions"] += 1

    basis = [elts[i] for i in active]
    basis = _minimalize(basis)
    basis.sort(key=lambda e: order.key(e.lm), reverse=True)
    cb = _trace.get()
    if cb is not None:
        stats["size"] = len(basis)
        cb(stats)
    return basis


def _minimalize(basis: list) -> list:
    out = []
    for n, e in enumerate(basis):
        redundant = False
        for m, o in enumerate(basis):
            if m == n or not _divides(o.lm, e.lm):
                continue
            if o.lm != e.lm or m < n:
                redundant = True
                break
        if not redundant:
            out.append(e)
    return out


@dataclass(frozen=True)
class StandardBasis:
    """A minimal standard basis; generators are monic and sorted by leading term."""

    generators: tuple
    order: ModuleOrder
    rank: int
    variables: tuple
    _elts: tuple = field(repr=False, compare=False, default=())

    @property
    def leading_monomials(self) -> tuple:
        """``(position, exponents)`` of each generator's leading term."""
        return tuple(e.lm for e in self._elts)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _prepare(gens, rank, variables):
    gens = _as_elements(gens)
    if gens:
        rank = gens[0].rank if rank is None else rank
        variables = gens[0].variables if variables is None else tuple(variables)
        for g in gens:
            if g.rank != rank:
                raise ValueError(f"generator of rank {g.rank}, expected {rank}")
            if g.variables != variables:
                raise VariableMismatchError("generators over different variables")
    elif rank is None or variables is None:
        raise ValueError("empty generator list needs explicit rank and variables")
    return gens, rank, tuple(variables)


def _wrap(elts: list, order: ModuleOrder, rank: int, variables: tuple) -> StandardBasis:
    gens = tuple(_from_vec(e.vec, rank, variables, Fraction(1, e.lc)) for e in elts)
    return StandardBasis(gens, order, rank, variables, tuple(elts))


def standard_basis(gens, order=None, *, rank: int | None = None, variables=None) -> StandardBasis:
    """Minimal standard basis of the submodule generated by ``gens``.

    ``gens`` may mix :class:`Polynomial` (rank-1) and
    :class:`FreeModuleElement` objects.  Zero generators are ignored; an
    empty list needs ``rank`` and ``variables``.
    """
    order = _module_order(order)
    gens, rank, variables = _prepare(gens, rank, variables)
    vecs = [_to_vec(g) for g in gens if not g.is_zero()]
    elts = _compute(vecs, order, use_product=(rank == 1))
    return _wrap(elts, order, rank, variables)


def _basis_elts(basis) -> list:
    if isinstance(basis, StandardBasis):
        return list(basis._elts)
    raise TypeError("expected a StandardBasis")


def mora_normal_form(elem, basis, order=None) -> FreeModuleElement:
    """Normal form of ``elem`` with respect to ``basis``.

    ``basis`` is a :class:`StandardBasis` or a plain list of generators (then
    ``order`` is required).  Under a local order this is Mora's weak normal
    form: the result has a leading term outside the leading module and equals
    ``u * elem`` modulo the submodule for some unit ``u``.  Under a global
    order every term of the result is reduced.  The result is scaled to be
    monic (or is zero).
    """
    (elem,) = _as_elements([elem])
    if isinstance(basis, StandardBasis):
        order_ = basis.order if order is None else _module_order(order)
        if order_ != basis.order:
            raise ValueError("order does not match the order of the standard basis")
        elts = list(basis._elts)
        rank = basis.rank
    else:
        if order is None:
            raise ValueError("an order is required when reducing by a plain list")
        order_ = _module_order(order)
        gens = _as_elements(basis)
        rank = elem.rank
        elts = []
        for g in gens:
            if g.rank != rank:
                raise ValueError(f"rank mismatch: {g.rank} vs {rank}")
            if not g.is_zero():
                elts.append(_make_elt(_to_vec(g), order_))
    if elem.rank != rank:
        raise ValueError(f"rank mismatch: element {elem.rank} vs basis {rank}")
    h = _to_vec(elem)
    if order_.is_local:
        h = _nf_local(h, elts, order_)
    else:
        h = _nf_full_global(h, elts, order_)
    if not h:
        return FreeModuleElement.zero(rank, elem.variables)
    lm = max(h, key=order_.key)
    return _from_vec(h, rank, elem.variables, Fraction(1, h[lm]))


def membership(elem, basis: StandardBasis) -> bool:
    """Whether ``elem`` lies in the (localized, for local orders) submodule."""
    (elem,) = _as_elements([elem])
    if elem.rank != basis.rank:
        raise ValueError(f"rank mismatch: element {elem.rank} vs basis {basis.rank}")
    return mora_normal_form(elem, basis).is_zero()


def is_standard_basis(basis: StandardBasis) -> bool:
    """Check that every S-pair (same position) reduces to zero, no criteria."""
    elts = list(basis._elts)
    order = basis.order
    for i, j in itertools.combinations(range(len(elts)), 2):
        if elts[i].lm[0] != elts[j].lm[0]:
            continue
        if _reduce(_spoly(elts[i], elts[j]), elts, order):
            return False
    return True


# ---------------------------------------------------------------------------
# Counting standard monomials
# ---------------------------------------------------------------------------


def _by_position(lms, rank):
    per = [[] for _ in range(rank)]
    for pos, e in lms:
        per[pos].append(e)
    for p in range(rank):
        # keep only minimal generators of each monomial ideal
        gens = sorted(set(per[p]), key=sum)
        minimal = []
        for g in gens:
            if not any(all(a <= b for a, b in zip(h, g)) for h in minimal):
                minimal.append(g)
        per[p] = minimal
    return per


def _pure_power_bounds(gens, nvars):
    """Per-variable exponent bounds of pure powers in ``gens`` (None if missing)."""
    bounds = [None] * nvars
    for g in gens:
        support = [i for i, a in enumerate(g) if a]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
        elif not support:
            return [0] * nvars
    return bounds


def _box_outside(gens, bounds):
    """Exponent vectors in the box ``bounds`` not divisible by any of ``gens``."""
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(g, e)) for g in gens):
            yield e


def standard_monomials(basis: StandardBasis) -> list:
    """``(position, exponents)`` of all standard monomials; error if infinite."""
    nv = len(basis.variables)
    out = []
    for pos, gens in enumerate(_by_position(basis.leading_monomials, basis.rank)):
        bounds = _pure_power_bounds(gens, nv)
        if any(b is None for b in bounds):
            raise ValueError(f"infinitely many standard monomials in position {pos}")
        out.extend((pos, e) for e in _box_outside(gens, bounds))
    return out


def quotient_dimension(basis: StandardBasis):
    """Number of standard monomials of ``basis``, or ``math.inf``."""
    nv = len(basis.variables)
    total = 0
    for gens in _by_position(basis.leading_monomials, basis.rank):
        bounds = _pure_power_bounds(gens, nv)
        if any(b is None for b in bounds):
            return math.inf
        total += sum(1 for _ in _box_outside(gens, bounds))
    return total


def _colon(gens, b):
    return [tuple(max(x - y, 0) for x, y in zip(g, b)) for g in gens]


def subquotient_dimension(larger: StandardBasis, smaller: StandardBasis):
    """``dim_k(K / I)`` for submodules ``I`` inside ``K`` of the same free module.

    Both bases must share one degree-compatible order (``top`` scheme, or
    rank 1).  Then the quotient has a basis indexed by the monomials of the
    leading module of ``K`` missing from the leading module of ``I``.
    Returns ``math.inf`` when that set is infinite.  Containment ``I ⊆ K`` is
    the caller's responsibility.
    """
    order = larger.order
    if smaller.order != order:
        raise ValueError("both standard bases must use the same order")
    if larger.rank != smaller.rank:
        raise ValueError("rank mismatch")
    if order.scheme != "top" and larger.rank > 1:
        raise ValueError("subquotient counting needs a degree-compatible (top) module order")
    nv = len(larger.variables)
    big = _by_position(larger.leading_monomials, larger.rank)
    small = _by_position(smaller.leading_monomials, smaller.rank)
    count = 0
    for pos in range(larger.rank):
        seen = set()
        for b in big[pos]:
            col = _colon(small[pos], b)
            bounds = _pure_power_bounds(col, nv)
            if any(x is None for x in bounds):
                return math.inf
            for e in _box_outside(col, bounds):
                seen.add(tuple(x + y for x, y in zip(e, b)))
        count += len(seen)
    return count


# ---------------------------------------------------------------------------
# Syzygies and preimages
# ---------------------------------------------------------------------------


def preimage(columns, relations=(), order=None, *, tracking_shifts=None, variables=None,
             rank: int | None = None) -> list:
    """Generators of ``{a : sum a_i columns_i in <relations>}``.

    Computed as the part of a standard basis of the module generated by
    ``(columns_i, e_i)`` and ``(relations_j, 0)`` that lies in the tracking
    block, under a position-over-term order ranking the original positions
    first.  Returns rank-``len(columns)`` elements.
    """
    base = _module_order(order)
    cols, rank, variables = _prepare(list(columns), rank, variables)
    rels, _, _ = _prepare(list(relations), rank, variables)
    m = len(cols)
    if m == 0:
        return []
    shifts = list(base.shifts[:rank]) + [0] * max(0, rank - len(base.shifts))
    if tracking_shifts is None:
        tracking = []
        for c in cols:
            vec = _to_vec(c)
            tracking.append(max((base.degree(mon) for mon in vec), default=0))
    else:
        tracking = list(tracking_shifts)
    aug = ModuleOrder(base.monomial_order, "pot", tuple(shifts + tracking))
    vecs = [_aug_vector(c, rank + i, len(variables)) for i, c in enumerate(cols)]
    vecs.extend(_to_vec(r) for r in rels if not r.is_zero())
    elts = _compute(vecs, aug, use_product=False)
    out = []
    for e in elts:
        if e.lm[0] < rank:
            continue
        proj = {(pos - rank, ex): c for (pos, ex), c in e.vec.items()}
        out.append(_from_vec(proj, m, variables, Fraction(1, e.lc)))
    return out


def _aug_vector(col: FreeModuleElement, tracking_pos: int, nvars: int) -> dict:
    den = 1
    for comp in col.components:
        for c in comp._terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
    vec = {}
    for pos, comp in enumerate(col.components):
        for e, c in comp._terms.items():
            vec[(pos, e)] = int(c * den)
    vec[(tracking_pos, (0,) * nvars)] = den
    return vec


def syzygies(gens, order=None, **kwargs) -> list:
    """Generators of the relations ``sum s_i gens_i = 0``.

    >>> from vfindex.polyalg import parse_polynomial
    >>> x, y = (parse_polynomial(t, "xy") for t in "xy")
    >>> [str(s) for s in syzygies([x, y])]
    ['(y, -x)']
    """
    return preimage(gens, (), order, **kwargs)
