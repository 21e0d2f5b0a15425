"""Command-line front end.

Germ files are small declarative texts::

    # Brieskorn surface with its weighted Euler field
    vars x y z;
    f: x^2 + y^7 + z^14;
    v: 7*x, 2*y, z;
    weights: 7 2 1;

One ``f:`` line per defining equation (none for the smooth germ).  The
``conserve`` command also reads ``w: ...;`` (perturbation direction) and
optionally ``eps: 1/5, -1/3;``.

Exit codes: 0 success, 1 mathematical precondition failed, 2 parse error,
3 S-pair budget exhausted.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .germs import (
    GermError,
    GermVariety,
    VectorFieldGerm,
    milnor_number,
    poincare_hopf_index,
    quasihomogeneous_degree,
    tangency_defects,
)
from .indices import (
    IndexReport,
    conservation_check,
    full_report,
    gsv_index,
    schwartz_index,
    virtual_index,
)
from .kaehler import kaehler_complex, module_homology
from .localbases import SPairLimitExceeded, spair_limit, trace_spairs
from .polyalg import NEGDEGREVLEX, PolynomialSyntaxError, format_rational, parse_polynomial, weighted_local

EXIT_OK, EXIT_MATH, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class GermFileError(ValueError):
    pass


@dataclass
class GermFile:
    path: str
    germ: GermVariety
    field: VectorFieldGerm | None
    weights: tuple | None = None
    direction: VectorFieldGerm | None = None
    epsilons: tuple | None = None

    def order(self, choice: str = "auto"):
        if choice == "negdegrevlex" or (choice == "auto" and self.weights is None):
            return NEGDEGREVLEX
        if self.weights is None:
            raise GermFileError("weighted order requested but the file has no weights line")
        return weighted_local(self.weights)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _split_list(body: str) -> list:
    # split on commas outside parentheses
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_germ_text(text: str, path: str = "<string>") -> GermFile:
    variables = None
    defining, field_text, weights, w_text, eps = [], None, None, None, None
    for raw in _strip_comments(text).split(";"):
        stmt = raw.strip()
        if not stmt:
            continue
        if stmt.startswith("vars") and (len(stmt) == 4 or stmt[4].isspace()):
            if variables is not None:
                raise GermFileError(f"{path}: duplicate vars statement")
            variables = tuple(stmt[4:].replace(",", " ").split())
            if not variables:
                raise GermFileError(f"{path}: empty vars statement")
            continue
        if ":" not in stmt:
            raise GermFileError(f"{path}: cannot parse statement {stmt!r}")
        key, body = (s.strip() for s in stmt.split(":", 1))
        if variables is None and key in ("f", "v", "w"):
            raise GermFileError(f"{path}: 'vars' must come before '{key}:'")
        try:
            if key == "f":
                defining.append(parse_polynomial(body, variables))
            elif key == "v":
                field_text = [parse_polynomial(p, variables) for p in _split_list(body)]
            elif key == "w":
                w_text = [parse_polynomial(p, variables) for p in _split_list(body)]
            elif key == "weights":
                weights = tuple(int(t) for t in body.replace(",", " ").split())
            elif key == "eps":
                eps = tuple(Fraction(t) for t in _split_list(body))
            else:
                raise GermFileError(f"{path}: unknown key {key!r}")
        except PolynomialSyntaxError as exc:
            raise GermFileError(f"{path}: in '{key}:' {exc}") from exc
        except ValueError as exc:
            if isinstance(exc, GermFileError):
                raise
            raise GermFileError(f"{path}: in '{key}:' {exc}") from exc
    if variables is None:
        raise GermFileError(f"{path}: missing 'vars' statement")
    for name, comps in (("v", field_text), ("w", w_text)):
        if comps is not None and len(comps) != len(variables):
            raise GermFileError(f"{path}: '{name}:' needs {len(variables)} components, got {len(comps)}")
    if weights is not None and len(weights) != len(variables):
        raise GermFileError(f"{path}: 'weights:' needs {len(variables)} entries")
    germ = GermVariety(variables, tuple(defining))
    field = VectorFieldGerm(tuple(field_text)) if field_text else None
    direction = VectorFieldGerm(tuple(w_text)) if w_text else None
    return GermFile(path, germ, field, weights, direction, eps)


def read_germ_file(path) -> GermFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GermFileError(f"cannot read {path}: {exc}") from exc
    return parse_germ_text(text, str(path))


def emit_json(payload) -> str:
    """Compact JSON with a stable key order; rationals become 'p/q' strings."""
    if isinstance(payload, IndexReport):
        payload = payload.to_dict()

    def convert(obj):
        if isinstance(obj, Fraction):
            return format_rational(obj)
        if isinstance(obj, dict):
            return {k: convert(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [convert(v) for v in obj]
        return obj

    return json.dumps(convert(payload), separators=(",", ":"))


def _need_field(gf: GermFile) -> VectorFieldGerm:
    if gf.field is None:
        raise GermError(f"{gf.path}: this command needs a 'v:' line")
    return gf.field


def _report_text(report: IndexReport) -> str:
    lines = [f"N = {report.N}, n = {report.n}, k = {report.k}"]
    for key in ("mu", "ind_ph", "ind_hom", "ind_gsv", "ind_sch", "ind_virtual"):
        val = getattr(report, key)
        if val is not None:
            lines.append(f"{key} = {val}")
    if report.homology is not None:
        lines.append("homology dims = " + " ".join(str(h) for h in report.homology))
    if not report.gsv_equality_asserted:
        lines.append("GSV/homological equality not asserted for complete intersections")
    return "\n".join(lines)


def _run_command(args, gf: GermFile) -> tuple:
    """Compute the requested quantity; returns a JSON-ready dict plus text."""
    order = gf.order(args.order)
    V = gf.germ
    cmd = args.command
    if cmd == "milnor":
        mu = milnor_number(V, order)
        return {"mu": mu}, f"mu = {mu}"
    if cmd == "ph-index":
        ind = poincare_hopf_index(_need_field(gf), order=order)
        return {"ind_ph": ind}, f"ind_ph = {ind}"
    if cmd == "tangent":
        bad = tangency_defects(_need_field(gf), V, order)
        if bad:
            eqs = ", ".join(str(i + 1) for i in bad)
            raise GermError(f"v(f) not in (f): field is not tangent (equation {eqs})")
        return {"tangent": True}, "tangent: v(f) in (f)"
    if cmd == "hom-index":
        cx = kaehler_complex(_need_field(gf), V, order)
        res = module_homology(cx, args.method)
        dims = " ".join(str(h) for h in res.dims)
        return ({"ind_hom": res.euler_characteristic, "homology": list(res.dims)},
                f"homology dims = {dims}\nind_hom = {res.euler_characteristic}")
    if cmd == "gsv":
        ind = gsv_index(_need_field(gf), V, order, allow_icis=args.homological_only, method=args.method)
        return {"ind_gsv": ind}, f"ind_gsv = {ind}"
    if cmd == "schwartz":
        ind = schwartz_index(_need_field(gf), V, order, method=args.method)
        return {"ind_sch": ind}, f"ind_sch = {ind}"
    if cmd == "virtual":
        ind, asserted = virtual_index(_need_field(gf), V, order, method=args.method)
        text = f"ind_virtual = {ind}"
        if not asserted:
            text += " (reported as homological; GSV/virtual equality not asserted)"
        return {"ind_virtual": ind, "gsv_equality_asserted": asserted}, text
    if cmd == "report":
        weights = gf.weights
        if weights is not None and not all(quasihomogeneous_degree(f, weights) is not None
                                           for f in V.defining):
            weights = None
        rep = full_report(_need_field(gf), V, order, weights=weights, method=args.method)
        return rep.to_dict(), _report_text(rep)
    if cmd == "conserve":
        if gf.direction is None:
            raise GermError(f"{gf.path}: 'conserve' needs a 'w:' line")
        eps = args.eps if args.eps is not None else gf.epsilons
        if not eps:
            raise GermError(f"{gf.path}: no epsilons given (use --eps or an 'eps:' line)")
        verdicts = conservation_check(_need_field(gf), gf.direction, V, eps, order, args.method)
        rows, lines = [], []
        for vd in verdicts:
            row = {"eps": vd.epsilon, "status": vd.status, "expected": vd.expected}
            if vd.index is not None:
                row["index"] = vd.index
            if vd.detail:
                row["detail"] = vd.detail
            rows.append(row)
            shown = vd.index if vd.index is not None else "-"
            verdict = ("unchanged" if vd.holds else "CHANGED") if vd.status == "certified" else vd.detail
            lines.append(f"eps = {format_rational(vd.epsilon)}: {vd.status}, index {shown} ({verdict})")
        if any(vd.status == "certified" and not vd.holds for vd in verdicts):
            raise GermError("conservation violated:\n" + "\n".join(lines))
        return {"verdicts": rows}, "\n".join(lines)
    raise AssertionError(cmd)


def _parse_eps(text: str):
    try:
        return tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad epsilon list {text!r}") from exc


COMMANDS = ("milnor", "ph-index", "tangent", "hom-index", "gsv", "schwartz", "virtual", "report", "conserve")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vfindex", description="Local indices of vector fields on singular germs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="germ file")
    p.add_argument("--all", metavar="DIR", help="(report) process every *.germ file in DIR")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--trace", action="store_true", help="print S-pair statistics to stderr")
    p.add_argument("--max-spairs", type=int, default=None, metavar="N",
                   help="abort after N S-pair reductions (exit 3)")
    p.add_argument("--order", choices=("auto", "negdegrevlex", "weighted"), default="auto",
                   help="local order; 'auto' uses the file's weights when present")
    p.add_argument("--method", choices=("leading", "presentation"), default="leading",
                   help="how homology dimensions are counted")
    p.add_argument("--eps", type=_parse_eps, default=None, help="(conserve) comma-separated rationals")
    p.add_argument("--homological-only", action="store_true",
                   help="(gsv) on complete intersections report the homological value")
    return p


def _one(args, path, out, err) -> int:
    try:
        gf = read_germ_file(path)
        with spair_limit(args.max_spairs):
            payload, text = _run_command(args, gf)
    except (GermFileError, PolynomialSyntaxError) as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except SPairLimitExceeded as exc:
        print(f"aborted: {exc}", file=err)
        return EXIT_BUDGET
    except GermError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_MATH
    if args.json:
        if args.all:
            payload = {"file": Path(path).name, **payload}
        print(emit_json(payload), file=out)
    else:
        if args.all:
            print(f"== {Path(path).name}", file=out)
        print(text, file=out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.all and args.command != "report":
        print("error: --all is only supported by 'report'", file=err)
        return EXIT_PARSE
    if bool(args.all) == bool(args.input):
        print("error: give exactly one of an input file or --all DIR", file=err)
        return EXIT_PARSE
    paths = sorted(Path(args.all).glob("*.germ")) if args.all else [args.input]

    def tracer(stats):
        print("spairs={spairs} zero={zero_reductions} inserted={inserted} size={size}".format(**stats),
              file=err)

    worst = EXIT_OK
    with contextlib.ExitStack() as stack:
        if args.trace:
            stack.enter_context(trace_spairs(tracer))
        for p in paths:
            worst = max(worst, _one(args, p, out, err))
    return worst


if __name__ == "__main__":
    sys.exit(main())
