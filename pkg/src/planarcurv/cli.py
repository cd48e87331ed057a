"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 bad input.  Errors are printed
to stderr as one line ``error: <Kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .analysis import census, discharge, enumerate_positive_patterns, run_checks
from .analysis.report import FAIL
from .curvature import (combinatorial_curvature, corner_curvature, fmt, interior_corners,
                        psi_curvature, vertex_pattern)
from .embedding import validate_tessellation
from .errors import PlanarError
from .export import export_dot, export_svg
from .generators import BUILDERS, GeneratorSpec, generate
from .operators import census_transfer_check, dual, medial, psi_medial_transfer_check


class InputError(Exception):
    pass


def _load(path):
    try:
        return io.read_file(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _table(rows, header):
    rows = [list(map(str, r)) for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_validate(args):
    t = _load(args.file)
    report = validate_tessellation(t)
    if args.json:
        print(json.dumps({"graph_id": Path(args.file).stem, "valid": report.ok,
                          "violations": [{"condition": v.condition, "message": v.message,
                                          "witnesses": list(v.witnesses)} for v in report]},
                         indent=2))
    elif report.ok:
        print(f"valid {t.mode}: V={t.vertex_count} E={t.edge_count} F={t.face_count}")
    else:
        for v in report:
            print(f"violation {v.condition}: {v.message} witnesses={list(v.witnesses)}")
    return 0 if report.ok else 1


def cmd_curvature(args):
    t = _load(args.file)
    data = {"vertices": [{"vertex": x, "pattern": list(vertex_pattern(t, x)),
                          "phi": fmt(combinatorial_curvature(t, x))}
                         for x in sorted(t.interior_vertices)]}
    if args.psi:
        data["edges"] = [{"edge": e, "ends": list(t.edge_ends(e)),
                          "psi": fmt(psi_curvature(t, e))} for e in sorted(t.interior_edges)]
    if args.corner:
        data["corners"] = [{"vertex": x, "face": f, "C": fmt(corner_curvature(t, x, f))}
                           for x, f in interior_corners(t)]
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    print(_table([(r["vertex"], ",".join(map(str, r["pattern"])), r["phi"])
                  for r in data["vertices"]], ("vertex", "pattern", "phi")), end="")
    if args.psi:
        print()
        print(_table([(r["edge"], "-".join(map(str, r["ends"])), r["psi"])
                      for r in data["edges"]], ("edge", "ends", "psi")), end="")
    if args.corner:
        print()
        print(_table([(r["vertex"], r["face"], r["C"]) for r in data["corners"]],
                     ("vertex", "face", "C")), end="")
    return 0


def cmd_census(args):
    c = census(_load(args.file))
    if args.json:
        print(json.dumps({"V_k": {str(k): v for k, v in c.V_k.items()},
                          "F_k": {str(k): v for k, v in c.F_k.items()}}, indent=2))
    else:
        print(_table(c.rows(), ("k", "V_k", "F_k")), end="")
    return 0


def cmd_patterns(args):
    table = enumerate_positive_patterns(args.degree, args.max_k)
    if args.json:
        print(json.dumps({
            "families": [{"pattern": f.label(), "range": f.k_range, "curvature": f.formula}
                          for f in table.families],
            "vanishing": [list(p) for p in table.vanishing]}, indent=2))
        return 0
    print(_table([(f.label(), f.k_range, f.formula) for f in table.families],
                 ("pattern", "range", "curvature")), end="")
    print("vanishing: " + " ".join("(" + ",".join(map(str, p)) + ")" for p in table.vanishing))
    return 0


def cmd_medial(args):
    t = _load(args.file)
    m = medial(t)
    _emit(io.serialize(m.medial), args.output)
    psi_ok = psi_medial_transfer_check(t, m)
    census_ok = census_transfer_check(t, m)
    print(f"psi_medial_transfer: {'pass' if psi_ok else 'fail'}", file=sys.stderr)
    print(f"census_transfer: {'pass' if census_ok else 'fail'}", file=sys.stderr)
    return 0 if psi_ok and census_ok else 1


def cmd_dual(args):
    t = _load(args.file)
    d = dual(t)
    _emit(io.serialize(d.dual), args.output)
    ok = all(psi_curvature(t, e) == psi_curvature(d.dual, d.edge_to_edge[e])
             for e in range(t.edge_count))
    print(f"psi_dual_transfer: {'pass' if ok else 'fail'}", file=sys.stderr)
    return 0 if ok else 1


def cmd_discharge(args):
    t = _load(args.file)
    s = discharge(t)
    faces = [{"face": f, "degree": len(s.face_boundaries[f]), "sum": fmt(s.face_sum(f)),
              "bound": "pass" if s.face_bound_ok(f) else "fail"} for f in s.big_faces]
    ok = s.conserved and all(f["bound"] == "pass" for f in faces)
    if args.json:
        print(json.dumps({
            "graph_id": Path(args.file).stem,
            "phi_tilde": {str(x): fmt(q) for x, q in s.phi_tilde.items()},
            "total_phi": fmt(s.total_phi), "total_phi_tilde": fmt(s.total_phi_tilde),
            "conservation": "pass" if s.conserved else "fail",
            "big_faces": faces, "notes": list(s.notes)}, indent=2))
        return 0 if ok else 1
    rows = [(x, "W" if x in s.W else ("W1" if x in s.W1 else ""), fmt(s.phi[x]),
             fmt(s.phi_tilde[x])) for x in sorted(s.phi)]
    print(_table(rows, ("vertex", "set", "phi", "phi_tilde")), end="")
    print(f"total phi {fmt(s.total_phi)}, total phi_tilde {fmt(s.total_phi_tilde)}: "
          f"conservation {'pass' if s.conserved else 'fail'}")
    for f in faces:
        print(f"big face {f['face']} (degree {f['degree']}): boundary sum {f['sum']} "
              f"vs 1/2: {f['bound']}")
    for n in s.notes:
        print(f"note: {n}")
    return 0 if ok else 1


def cmd_check(args):
    code = 0
    reports = []
    for path in args.files:
        results = run_checks(_load(path))
        reports.append(io.report_dict(Path(path).stem, results))
        if any(r.status == FAIL for r in results):
            code = 1
    if args.json:
        print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    else:
        for rep in reports:
            print(rep["graph_id"])
            for c in rep["checks"]:
                value = "" if c["value"] is None else c["value"]
                print(f"  {c['name']:<24} {c['status']:<20} {value}")
                for n in c["notes"]:
                    print(f"      {n}")
    return code


def _coerce(tok):
    try:
        return int(tok)
    except ValueError:
        return tok


def cmd_gen(args):
    t = generate(GeneratorSpec(args.kind, tuple(_coerce(a) for a in args.params)))
    _emit(io.serialize(t), args.output)
    return 0


def cmd_export(args):
    if not (args.svg or args.dot):
        raise InputError("export needs --svg OUT and/or --dot OUT")
    t = _load(args.file)
    if args.svg:
        _emit(export_svg(t, color_curvature=args.color_curvature), args.svg)
    if args.dot:
        _emit(export_dot(t, Path(args.file).stem.replace("-", "_") or "G"), args.dot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcurv",
                                description="Curvature calculus on planar tessellations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the tessellation conditions")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("curvature", help="per-vertex (and edge/corner) curvature")
    s.add_argument("file")
    s.add_argument("--psi", action="store_true", help="also list edge curvature")
    s.add_argument("--corner", action="store_true", help="also list corner curvature")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_curvature)

    s = sub.add_parser("census", help="V_k / F_k table")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("patterns", help="vertex patterns with positive curvature")
    s.add_argument("--degree", type=int, default=4)
    s.add_argument("--max-k", type=int, default=30)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_patterns)

    for name, func, text in (("medial", cmd_medial, "medial graph"),
                             ("dual", cmd_dual, "dual graph (sphere only)")):
        s = sub.add_parser(name, help=text)
        s.add_argument("file")
        s.add_argument("-o", "--output", default="-")
        s.set_defaults(func=func)

    s = sub.add_parser("discharge", help="redistributed curvature around big faces")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("check", help="run every applicable checker")
    s.add_argument("files", nargs="+")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="generate a graph: " + ", ".join(sorted(BUILDERS)))
    s.add_argument("kind")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export", help="SVG or DOT drawing")
    s.add_argument("file")
    s.add_argument("--svg")
    s.add_argument("--dot")
    s.add_argument("--color-curvature", action="store_true")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: InputError: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
