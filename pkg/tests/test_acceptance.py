"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (outside pytest's output
capture) naming the criterion and the measured quantity.  Run with
``pytest tests/test_acceptance.py -v``.
"""

import itertools
import math
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from helpers import XY, XYZ, field, germ, poly
from oracles import box_count
from vfindex.cli import read_germ_file
from vfindex.germs import (
    GermError,
    VectorFieldGerm,
    milnor_number,
    poincare_hopf_index,
    weighted_euler_field,
)
from vfindex.indices import conservation_check, full_report, gsv_by_transversal_formula, gsv_index
from vfindex.kaehler import ComplexError, check_complex, homological_index, kaehler_complex, module_homology
from vfindex.localbases import is_standard_basis, quotient_dimension, standard_basis
from vfindex.polyalg import NEGDEGREVLEX, Polynomial

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def verdict(capsys):
    def emit(name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
        with capsys.disabled():
            print("\n" + line, flush=True)
        assert ok, line
    return emit


def sign(n):
    return -1 if n % 2 else 1


# --- 1 ------------------------------------------------------------------


def test_criterion_1_milnor_numbers(verdict):
    results = []
    for text, want in [("x^2 + y^7 + z^14", 78), ("x^3 + y^4 + z^12", 66)]:
        start = time.perf_counter()
        mu = milnor_number(poly(text, XYZ))
        results.append((text, mu, want, time.perf_counter() - start))
    ok = all(mu == want and t < 5 for _, mu, want, t in results)
    detail = "; ".join(f"mu({t}) = {mu} in {s:.2f}s" for t, mu, _, s in results)
    verdict("C1 Milnor numbers 78 and 66 under 5 s each", ok, detail)


# --- 2 ------------------------------------------------------------------


def test_criterion_2_gsv_two_routes(verdict):
    start = time.perf_counter()
    rows = []
    for text, weights, want in [("x^2 + y^7 + z^14", (7, 2, 1), 79),
                                ("x^3 + y^4 + z^12", (4, 3, 1), 67)]:
        V = germ([text], XYZ)
        v = weighted_euler_field(weights, XYZ)
        hom = gsv_index(v, V)
        formula = gsv_by_transversal_formula(V, weights)
        rows.append((text, hom, formula, want))
    elapsed = time.perf_counter() - start
    ok = all(h == f == w for _, h, f, w in rows) and elapsed < 600
    detail = "; ".join(f"{t}: homological {h}, 1+(-1)^n mu {f}" for t, h, f, _ in rows)
    verdict("C2 GSV 79 and 67 by both routes within 10 min", ok, f"{detail} ({elapsed:.2f}s)")


# --- 3 ------------------------------------------------------------------


def _smooth_fields():
    cases = []
    for N in (1, 2, 3):
        names = XYZ[:N]
        for exps in itertools.product((1, 2, 3), repeat=N):
            cases.append(field([f"{x}^{a}" for x, a in zip(names, exps)], names))
    rng = random.Random(20261014)
    linear = 0
    while linear < 6:
        N = 2 + linear % 2
        names = XYZ[:N]
        mat = [[rng.randint(-4, 4) for _ in range(N)] for _ in range(N)]
        det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] if N == 2 else (
            sum(sign(sum(1 for i, j in itertools.combinations(range(3), 2) if p[i] > p[j]))
                * math.prod(mat[i][p[i]] for i in range(3))
                for p in itertools.permutations(range(3))))
        if det == 0:
            continue
        comps = [
            Polynomial({tuple(int(i == j) for i in range(N)): mat[r][j] for j in range(N)}, names)
            for r in range(N)
        ]
        cases.append(VectorFieldGerm(tuple(comps)))
        linear += 1
    return cases


def test_criterion_3_smooth_fields(verdict):
    start = time.perf_counter()
    cases = _smooth_fields()
    bad = []
    for v in cases:
        V = germ([], v.variables)
        idx, res = homological_index(v, V, return_homology=True)
        ph = poincare_hopf_index(v)
        if idx != ph or any(res.dims[1:]):
            bad.append(str(v))
    elapsed = time.perf_counter() - start
    ok = len(cases) >= 20 and not bad and elapsed < 120
    verdict("C3 smooth germs: hom = PH and h_j = 0 for j > 0", ok,
            f"{len(cases)} fields, {len(bad)} mismatches, {elapsed:.2f}s")


# --- 4 ------------------------------------------------------------------

EULER_CASES = [
    ("A1 curve", ["x^2 + y^2"], XY, (1, 1)),
    ("A2 curve", ["x^2 + y^3"], XY, (3, 2)),
    ("A3 curve", ["x^2 + y^4"], XY, (2, 1)),
    ("A4 curve", ["x^2 + y^5"], XY, (5, 2)),
    ("cusp", ["x^2 + y^3"], XY, (3, 2)),
    ("A1 surface", ["x^2 + y^2 + z^2"], XYZ, (1, 1, 1)),
    ("A2 surface", ["x^2 + y^2 + z^3"], XYZ, (3, 3, 2)),
]


def test_criterion_4_weighted_euler(verdict):
    rows = []
    for name, fs, names, w in EULER_CASES:
        V = germ(fs, names)
        idx = homological_index(weighted_euler_field(w, names), V)
        rows.append((name, idx, 1 + sign(V.dim) * milnor_number(V)))
    cusp = [r for r in rows if r[0] == "cusp"][0]
    ok = all(a == b for _, a, b in rows) and cusp[1] == -1
    verdict("C4 weighted Euler: hom index = 1 + (-1)^n mu", ok,
            ", ".join(f"{n} {a}" for n, a, _ in rows))


# --- 5 ------------------------------------------------------------------


def _corpus_files():
    out = []
    for path in sorted(CORPUS.glob("*.germ")):
        gf = read_germ_file(path)
        if gf.field is None:
            continue
        out.append((path.stem, gf))
    return out


def test_criterion_5_report_identities(verdict):
    checked, euler, bad = 0, 0, []
    reports = []
    for name, fs, names, w in EULER_CASES:
        V = germ(fs, names)
        reports.append((name, full_report(weighted_euler_field(w, names), V, weights=w), True))
    for name, gf in _corpus_files():
        if gf.germ.codim >= 2:
            continue
        try:
            rep = full_report(gf.field, gf.germ, weights=gf.weights)
        except GermError:
            # non-tangent or non-isolated corpus entries have no report
            continue
        is_euler = gf.weights is not None and gf.field == weighted_euler_field(gf.weights, gf.germ.variables)
        reports.append((name, rep, is_euler))
    for name, rep, is_euler in reports:
        checked += 1
        if rep.ind_gsv != rep.ind_sch + sign(rep.n) * (rep.mu or 0):
            bad.append(name)
        if is_euler:
            euler += 1
            if rep.ind_sch != 1:
                bad.append(name + " (Sch)")
    verdict("C5 GSV = Sch + (-1)^n mu; Sch = 1 for weighted Euler", not bad and euler > 0,
            f"{checked} reports, {euler} weighted Euler, failures {bad}")


# --- 6 ------------------------------------------------------------------


def test_criterion_6_conservation(verdict):
    V = germ(["x^2 + y^2 + z^2"], XYZ)
    v = field(["x", "y", "z"], XYZ)
    eps = [Fraction(1, 5), Fraction(-1, 5), Fraction(1, 3), Fraction(-1, 3), Fraction(1)]
    certified, wrong = 0, 0
    for w in (["2*y", "-2*x", "0"], ["2*z", "0", "-2*x"], ["0", "2*z", "-2*y"]):
        for ver in conservation_check(v, field(w, XYZ), V, eps):
            if ver.status == "certified":
                certified += 1
                wrong += ver.index != 2
    verdict("C6 conservation on the A1 surface", certified >= 10 and not wrong,
            f"{certified} of 15 certified, {wrong} with index != 2")


# --- 7 ------------------------------------------------------------------


def _corpus_bases():
    bases = []
    for name, gf in _corpus_files():
        V = gf.germ
        if V.is_hypersurface:
            f = V.defining[0]
            bases.append(standard_basis(list(f.gradient()) + [f], NEGDEGREVLEX))
        bases.append(standard_basis(list(gf.field.components), NEGDEGREVLEX))
        try:
            cx = kaehler_complex(gf.field, V)
            res = module_homology(cx)
        except GermError:
            # non-tangent or non-isolated corpus entries have no report
            continue
        for K, I in res.witnesses.values():
            bases.extend([K, I])
    return bases


def test_criterion_7_bases_and_dimensions(verdict):
    bases = _corpus_bases()
    uncertified = sum(not is_standard_basis(b) for b in bases)
    rng = random.Random(7)
    mismatches = 0
    for _ in range(50):
        N = rng.randint(1, 3)
        names = XYZ[:N]
        gens = [tuple(rng.randint(0, 5) for _ in range(N)) for _ in range(rng.randint(1, 5))]
        gens = [g for g in gens if any(g)] or [(1,) + (0,) * (N - 1)]
        if rng.random() < 0.7:
            gens += [tuple(rng.randint(1, 5) if i == j else 0 for i in range(N)) for j in range(N)]
        sb = standard_basis([Polynomial.monomial(g, names) for g in gens], NEGDEGREVLEX)
        got = quotient_dimension(sb)
        small, large = box_count(gens, N, 6), box_count(gens, N, 12)
        want = small if small == large else math.inf
        mismatches += got != want
    ok = not uncertified and not mismatches
    verdict("C7 S-pair certificates and brute-force dimensions", ok,
            f"{len(bases)} corpus bases, {uncertified} uncertified; 50 monomial ideals, {mismatches} mismatches")


# --- 8 ------------------------------------------------------------------

INVARIANCE = [
    (["x^2 + y^3"], XY, ["3*x", "2*y"]),
    (["x^2 + y^5"], XY, ["5*x", "2*y"]),
    (["x^2 + y^2 + z^2"], XYZ, ["x", "y", "z"]),
    (["x^2 + y^2 + z^3"], XYZ, ["3*x", "3*y", "2*z"]),
    (["x^2 + y^4"], XY, ["2*x", "y"]),
    (["x^3 + y^4 + z^12"], XYZ, ["4*x", "3*y", "z"]),
]


def test_criterion_8_complex_and_invariance(verdict):
    complexes, broken, germs, varied = 0, [], 0, []
    for fs, names, comps in INVARIANCE:
        V = germ(fs, names)
        v = field(comps, names)
        f = V.defining[0]
        variants = [v, v.scale(poly("1 + x", names)), v + field(names[::-1], names).scale(f)]
        indices = []
        for u in variants:
            cx = kaehler_complex(u, V)
            try:
                check_complex(cx)
            except ComplexError:
                broken.append(str(u))
            complexes += 1
            indices.append(module_homology(cx, verify=False).euler_characteristic)
        germs += 1
        if len(set(indices)) != 1:
            varied.append(fs[0])
    ok = germs >= 5 and not broken and not varied
    verdict("C8 i_v o i_v = 0, relations preserved, rescaling invariance", ok,
            f"{complexes} complexes on {germs} germs, {len(broken)} broken, {len(varied)} varying")
