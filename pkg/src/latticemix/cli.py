"""``latticemix`` command line: JSON in, JSON (or SVG) out.

Exit codes: 0 success or Realized, 1 usage/contract error, 2 Impossible or
excluded, 3 NonRealizable, 4 Unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import diagram, jsonio, pluecker
from .exactgeom import minkowski_sum, normalized_area
from .mixedarea import lattice_width, mixed_area
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_EXCLUDED, EXIT_NONREALIZABLE, EXIT_UNKNOWN = 0, 1, 2, 3, 4
BUDGET_ENV = "LATTICEMIX_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(arg: str):
    """Inline JSON, or the path of a JSON file."""
    try:
        text = Path(arg).read_text() if Path(arg).is_file() else arg
    except OSError:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON in {arg!r}: {e}") from None


def _polygon(arg: str):
    return jsonio.polygon_from_json(_load(arg))


def _direction(arg: str) -> tuple[int, int]:
    text = arg if arg.lstrip().startswith("[") else f"[{arg}]"
    u = _load(text)
    if not isinstance(u, list) or len(u) != 2 or not all(isinstance(x, int) for x in u):
        raise UsageError(f"direction must be two integers, got {arg!r}")
    return tuple(u)


def _vector(args: Sequence[str]) -> pluecker.PlueckerVector:
    if len(args) == 6:
        try:
            return pluecker.PlueckerVector(*(int(a) for a in args))
        except ValueError as e:
            raise UsageError(str(e)) from None
    if len(args) == 1:
        return jsonio.pluecker_from_json(_load(args[0]))
    raise UsageError("give the vector as one JSON list or as six integers")


def _nonneg(s: str) -> int:
    try:
        x = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    if x < 0:
        raise argparse.ArgumentTypeError(f"{x} is negative")
    return x


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return pluecker.DEFAULT_BUDGET
    try:
        return _nonneg(raw)
    except argparse.ArgumentTypeError as e:
        raise UsageError(f"{BUDGET_ENV}: {e}") from None


def _section_exit(status: diagram.SectionStatus) -> int:
    if status.excluded:
        return EXIT_EXCLUDED
    return EXIT_OK if status.realized else EXIT_UNKNOWN


_VERDICT_EXIT = {
    pluecker.RealizabilityStatus.REALIZED: EXIT_OK,
    pluecker.RealizabilityStatus.IMPOSSIBLE: EXIT_EXCLUDED,
    pluecker.RealizabilityStatus.NON_REALIZABLE: EXIT_NONREALIZABLE,
    pluecker.RealizabilityStatus.UNKNOWN: EXIT_UNKNOWN,
}


# -- handlers: each returns (document, exit code) ------------------------------------

def _cmd_area(a):
    P = _polygon(a.P)
    return {"polygon": jsonio.polygon_to_json(P), "normalizedArea": normalized_area(P)}, EXIT_OK


def _cmd_width(a):
    P, u = _polygon(a.P), _direction(a.u)
    return {"polygon": jsonio.polygon_to_json(P), "direction": list(u),
            "width": lattice_width(P, u)}, EXIT_OK


def _cmd_minksum(a):
    return jsonio.polygon_to_json(minkowski_sum(_polygon(a.P), _polygon(a.Q))), EXIT_OK


def _cmd_mixed_area(a):
    return mixed_area(_polygon(a.P), _polygon(a.Q)).to_json(), EXIT_OK


def _report(w1, w2, verdicts):
    return jsonio.section_report_to_json(jsonio.SectionReport.from_verdicts(w1, w2, verdicts))


def _cmd_diagram_bounds(a):
    return _report(a.w1, a.w2, []), EXIT_OK


def _cmd_diagram_classify(a):
    r = diagram.classify_value(a.w1, a.w2, a.v, a.box, a.verts)
    return _report(a.w1, a.w2, [r]), _section_exit(r.status)


def _cmd_witness_semigroup(a):
    pair = diagram.semigroup_witness(a.w1, a.w2, a.m1, a.m2)
    g1, g2 = diagram.section_bounds(a.w1, a.w2).generators
    v = a.m1 * g1 + a.m2 * g2
    r = diagram.SectionVerdict(diagram.DiagramTriple(a.w1, v, a.w2),
                               diagram.SectionStatus.REALIZED_SEMIGROUP, pair)
    return _report(a.w1, a.w2, [r]), EXIT_OK


def _cmd_witness_saturation(a):
    pair = diagram.saturation_witness(a.w1, a.w2, a.v)
    r = diagram.SectionVerdict(diagram.DiagramTriple(a.w1, a.v, a.w2),
                               diagram.SectionStatus.REALIZED_SATURATION, pair)
    return _report(a.w1, a.w2, [r]), EXIT_OK


def _cmd_diagram_brute(a):
    box = a.vmax + a.w1 * a.w2 if a.box is None else a.box
    params = {"box": box, "vertexCap": a.verts}
    found = diagram.brute_force_section(a.w1, a.w2, a.vmax, box, a.verts)
    verdicts = [diagram.SectionVerdict(
        diagram.DiagramTriple(a.w1, v, a.w2),
        diagram.SectionStatus.REALIZED_SEARCH if pair else diagram.SectionStatus.UNKNOWN_WITHIN_BOUNDS,
        pair, search=params) for v, pair in found.items()]
    return _report(a.w1, a.w2, verdicts), EXIT_OK


def _cmd_pluecker_check(a):
    v = _vector(a.v)
    st = pluecker.pluecker_status(v)
    code = EXIT_EXCLUDED if st.kind is pluecker.StatusKind.VIOLATES else EXIT_OK
    return jsonio.status_to_json(v, st), code


def _cmd_pluecker_reduce(a):
    w = _vector(a.v)
    lam, v = pluecker.k4_reduce(w)
    return {"v": list(w.as_tuple()), "lambda": list(lam.lambdas), "reduced": list(v.as_tuple())}, EXIT_OK


def _cmd_pluecker_realize(a):
    budget = _default_budget() if a.budget is None else a.budget
    r = pluecker.classify_realizability(_vector(a.v), budget)
    return jsonio.verdict_to_json(r), _VERDICT_EXIT[r.status]


def _cmd_pluecker_certify(a):
    v = _vector(a.v)
    c = pluecker.certify_nonrealizable(v)
    if c is None:
        return {"v": list(v.as_tuple()), "certificate": None}, EXIT_UNKNOWN
    return jsonio.certificate_to_json(c), EXIT_NONREALIZABLE


def _polygons_in(doc) -> tuple[list, list[str]]:
    """Polygons found in a polygon, list, witness, verdict or section document."""
    if isinstance(doc, list) and doc and isinstance(doc[0], list) and doc[0] and isinstance(doc[0][0], int):
        return [jsonio.polygon_from_json(doc)], ["P"]
    if isinstance(doc, list):
        polys, names = [], []
        for i, d in enumerate(doc, start=1):
            p, n = _polygons_in(d)
            polys += p
            names += n if len(p) > 1 else [f"P{i}"]
        return polys, names
    if not isinstance(doc, dict):
        raise UsageError("unrecognized document for svg")
    if "vertices" in doc:
        return [jsonio.polygon_from_json(doc)], ["P"]
    if "witness" in doc:
        return _polygons_in(doc["witness"]) if doc["witness"] else ([], [])
    if "values" in doc:
        polys, names = [], []
        for item in doc["values"]:
            if item.get("witness"):
                p, n = _polygons_in(item["witness"])
                polys += p
                names += [f"{k} (v={item['v']})" for k in n]
        return polys, names
    keys = [k for k in doc if isinstance(doc[k], dict) and "vertices" in doc[k]]
    if not keys:
        raise UsageError("unrecognized document for svg")
    return [jsonio.polygon_from_json(doc[k]) for k in keys], keys


def _cmd_svg(a):
    polys, names = [], []
    for arg in a.inputs:
        p, n = _polygons_in(_load(arg))
        polys += p
        names += n
    if not polys:
        raise UsageError("no polygons to draw")
    text = render_svg(polys, names, normals=not a.no_normals)
    if a.output:
        Path(a.output).write_text(text)
        return {"output": a.output, "polygons": len(polys)}, EXIT_OK
    return text, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latticemix", description="Exact mixed areas of lattice polygons.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(parent, name, fn, help_):
        s = parent.add_parser(name, help=help_)
        s.set_defaults(func=fn)
        return s

    s = cmd(sub, "area", _cmd_area, "normalized area of a polygon")
    s.add_argument("P")
    s = cmd(sub, "width", _cmd_width, "lattice width along a primitive direction")
    s.add_argument("P")
    s.add_argument("u", help="direction, e.g. '[0,1]' or '0,1'")
    for name, fn, h in (("minksum", _cmd_minksum, "Minkowski sum"),
                        ("mixed-area", _cmd_mixed_area, "mixed area by both kernels")):
        s = cmd(sub, name, fn, h)
        s.add_argument("P")
        s.add_argument("Q")

    d = sub.add_parser("diagram", help="sections of the width/mixed-area diagram")
    dsub = d.add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = cmd(dsub, "bounds", _cmd_diagram_bounds, "gap, semigroup and saturation bounds")
    s.add_argument("w1", type=_nonneg)
    s.add_argument("w2", type=_nonneg)
    s = cmd(dsub, "classify", _cmd_diagram_classify, "classify one value of a section")
    for name in ("w1", "w2", "v"):
        s.add_argument(name, type=_nonneg)
    s.add_argument("--box", type=_nonneg, default=None)
    s.add_argument("--verts", type=_nonneg, default=4)
    w = dsub.add_parser("witness", help="explicit witness constructions")
    wsub = w.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    s = cmd(wsub, "semigroup", _cmd_witness_semigroup, "witness for m1*w1/d + m2*w2/d")
    for name in ("w1", "w2", "m1", "m2"):
        s.add_argument(name, type=_nonneg)
    s = cmd(wsub, "saturation", _cmd_witness_saturation, "witness for v >= beta")
    for name in ("w1", "w2", "v"):
        s.add_argument(name, type=_nonneg)
    s = cmd(dsub, "brute", _cmd_diagram_brute, "bounded exhaustive search over a section")
    for name in ("w1", "w2", "vmax"):
        s.add_argument(name, type=_nonneg)
    s.add_argument("--box", type=_nonneg, default=None)
    s.add_argument("--verts", type=_nonneg, default=4)

    pl = sub.add_parser("pluecker", help="pairwise mixed areas of four polygons")
    psub = pl.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, fn, h in (("check", _cmd_pluecker_check, "Plücker-type inequalities"),
                        ("reduce", _cmd_pluecker_reduce, "K4-primitive reduction"),
                        ("certify", _cmd_pluecker_certify, "non-realizability certificate"),
                        ("realize", _cmd_pluecker_realize, "realize or classify")):
        s = cmd(psub, name, fn, h)
        s.add_argument("v", nargs="+", help="JSON list/object, file, or six integers")
    s.add_argument("--budget", type=_nonneg, default=None,
                   help=f"search box side (default from ${BUDGET_ENV} or {pluecker.DEFAULT_BUDGET})")

    s = cmd(sub, "svg", _cmd_svg, "draw polygons or witnesses as SVG")
    s.add_argument("inputs", nargs="+")
    s.add_argument("--output", "-o", default=None)
    s.add_argument("--no-normals", action="store_true")
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, code = args.func(args)
    except UsageError as e:
        print(f"latticemix: usage error: {e}", file=stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, KeyError) as e:
        print(f"latticemix: {type(e).__name__}: {e}", file=stderr)
        return EXIT_USAGE
    stdout.write(doc if isinstance(doc, str) else jsonio.dumps(doc))
    return code


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
