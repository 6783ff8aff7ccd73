"""Command line front end: `jd <subcommand> ...`.

Exit codes: 0 success, 1 domain-level negative verdict (invalid diagram,
disagreeing presentations, failed cover), 2 usage or I/O error.  Diagram
arguments are file paths; bare names are also looked up in the directory
named by the JD_CORPUS environment variable and then in the packaged
corpus.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import covers, diagram, groups, piping, quotient, search, spectrum, surface


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _resolve(name):
    if os.path.exists(name):
        return name
    if os.sep not in name:
        candidates = [name, name + ".jd"]
        corpus_dir = os.environ.get("JD_CORPUS")
        if corpus_dir:
            for c in candidates:
                p = os.path.join(corpus_dir, c)
                if os.path.exists(p):
                    return p
        here = os.path.join(os.path.dirname(__file__), "corpus")
        for c in candidates:
            p = os.path.join(here, c)
            if os.path.exists(p):
                return p
    raise CliError(f"diagram not found: {name}")


def _load(name):
    path = _resolve(name)
    try:
        with open(path) as fh:
            return diagram.parse_diagram(fh.read())
    except (OSError, ValueError) as exc:
        raise CliError(f"{path}: {exc}")


def _word_str(p, word):
    parts = []
    for g in word:
        name = p.generators[abs(g) - 1]
        parts.append(name if g > 0 else name + "^-1")
    return " ".join(parts) if parts else "1"


def _presentation(d, method):
    if method == "cw":
        return groups.pi1_cw(quotient.build_quotient(d))
    return groups.pi1_paper(d)


def cmd_validate(args):
    d = _load(args.diagram)
    report = d.validate(mode=args.mode)
    payload = {
        "status": report.status,
        "violations": [list(v) for v in report.violations],
    }
    if report.ok:
        q, k, ncomp = report.stats
        payload.update({"q": q, "curve_pairs": k, "components": ncomp})
    return (0 if report.ok else 1), payload


def cmd_info(args):
    d = _load(args.diagram)
    report = d.validate()
    if not report.ok:
        return 1, {"status": report.status, "violations": [list(v) for v in report.violations]}
    chi, g = surface.euler_genus(d)
    fr = quotient.filling_report(d)
    return 0, {
        "crossings": d.n,
        "q": fr.q,
        "curve_pairs": report.stats[1],
        "genus": g,
        "faces": len(surface.trace_faces(d).faces),
        "euler_characteristic": chi,
        "r_required": fr.r_required,
    }


def cmd_checker(args):
    d = _load(args.diagram)
    d.validate()
    cb, witness = surface.checkerboard_with_witness(d)
    if cb is None:
        return 0, {"checkered": False, "witness": list(witness)}
    return 0, {
        "checkered": True,
        "black_faces": [f for f, c in enumerate(cb.coloring) if c == 0],
        "white_faces": [f for f, c in enumerate(cb.coloring) if c == 1],
    }


def cmd_pi1(args):
    d = _load(args.diagram)
    p = _presentation(d, args.method)
    return 0, {
        "method": args.method,
        "generators": list(p.generators),
        "relators": [_word_str(p, w) for w in p.relators],
    }


def cmd_homology(args):
    d = _load(args.diagram)
    if args.method == "paper":
        _, inv = groups.h1_paper(d, ring=args.ring)
    else:
        p = _presentation(d, "cw")
        inv = groups.abelianized(p, ring=args.ring)
    return 0, {
        "ring": args.ring,
        "method": args.method,
        "torsion": list(inv.torsion),
        "rank": inv.rank,
        "group": str(inv),
    }


def cmd_agree(args):
    d = _load(args.diagram)
    p1 = _presentation(d, "cw")
    p2 = _presentation(d, "paper")
    verdict, details = groups.presentations_agree(p1, p2)
    return (0 if verdict == "consistent" else 1), {"verdict": verdict, "details": details}


def cmd_cover(args):
    d = _load(args.diagram)
    try:
        with open(args.rep) as fh:
            rep = covers.parse_rep(fh.read())
    except (OSError, ValueError) as exc:
        raise CliError(f"{args.rep}: {exc}")
    ok, witness = covers.validate_rep(d, rep)
    if not ok:
        return 1, {"status": "rejected", "failing_relator": str(witness[0])}
    cov = covers.lift_diagram(d, rep)
    census = cov.components_census()
    return 0, {
        "sheets": cov.m,
        "crossings": cov.diagram.n,
        "components": [
            {"crossings": nv, "euler_characteristic": chi, "genus": g}
            for nv, chi, g in census
        ],
        "diagram": diagram.serialize_diagram(cov.diagram),
    }


def cmd_pipe(args):
    d = _load(args.diagram)
    try:
        piped = piping.handle_pipe(d, args.triple, choice=args.choice)
    except (ValueError, IndexError) as exc:
        return 1, {"status": "failed", "reason": str(exc)}
    chi, g = surface.euler_genus(piped)
    return 0, {
        "q": quotient.filling_report(piped).q,
        "genus": g,
        "diagram": diagram.serialize_diagram(piped),
    }


def cmd_bounds(args):
    tags = [t for t in args.assume.split(",") if t]
    try:
        cert = spectrum.lower_bound(args.genus, tags)
    except ValueError as exc:
        raise CliError(str(exc))
    return 0, {
        "genus": cert.genus,
        "bound": cert.bound,
        "assumptions": sorted(cert.assumptions),
        "trace": [list(t) for t in cert.trace],
    }


def cmd_certify(args):
    d = _load(args.diagram)
    try:
        return 0, spectrum.certify(d)
    except ValueError as exc:
        return 1, {"status": "rejected", "reason": str(exc)}


def cmd_enumerate(args):
    spec = search.EnumSpec(
        q=args.q,
        genus=args.genus,
        checkered=True if args.checkered else None,
        max_count=args.max_count,
        time_limit=args.time_limit,
    )
    res = search.enumerate_diagrams(spec)
    return 0, {
        "q": args.q,
        "count": len(res.diagrams),
        "complete": res.complete,
        "diagrams": [diagram.serialize_diagram(d) for d in res.diagrams],
    }


def cmd_spectrum(args):
    seeds = []
    for item in args.seeds.split(","):
        if not item:
            continue
        if item.startswith("abstract:"):
            _, g, q = item.split(":")
            seeds.append(((int(g), int(q)), item))
        else:
            seeds.append((_load(item), os.path.basename(item)))
    rules = [t for t in args.rules.split(",") if t]
    try:
        table = spectrum.assemble_spectrum(seeds, rules, args.max_genus)
    except ValueError as exc:
        raise CliError(str(exc))
    entries = []
    for e in table.entries:
        entries.append({
            "genus": e.genus,
            "lower": e.lower.bound,
            "upper": e.upper,
            "pinned": e.pinned,
            "value": e.value,
            "source": e.upper_source,
        })
    payload = {"entries": entries, "complete": table.complete}
    if table.complete:
        payload["values"] = list(table.values)
        payload["height"] = spectrum.height(table)
        payload["growth_violations"] = spectrum.growth_violations(table)
    return 0, payload


def _emit_human(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _emit_human(v, indent + 1)
            else:
                print(f"{pad}{k}: {v if not isinstance(v, (dict, list)) else v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_human(v, indent + 1)
                print()
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{payload}")


def build_parser():
    parser = argparse.ArgumentParser(prog="jd", description="Johansson diagram toolkit")
    parser.add_argument("--format", choices=["human", "json"], default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **diagram_arg):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if diagram_arg.get("diagram", True):
            p.add_argument("diagram", help="diagram file or corpus name")
        return p

    p = add("validate", cmd_validate)
    p.add_argument("--mode", choices=["strict", "components"], default="strict")
    add("info", cmd_info)
    add("checker", cmd_checker)
    p = add("pi1", cmd_pi1)
    p.add_argument("--method", choices=["cw", "paper"], default="cw")
    p = add("homology", cmd_homology)
    p.add_argument("--ring", choices=["z", "z2"], default="z")
    p.add_argument("--method", choices=["cw", "paper"], default="cw")
    add("agree", cmd_agree)
    p = add("cover", cmd_cover)
    p.add_argument("--rep", required=True, help="permutation representation file")
    p = add("pipe", cmd_pipe)
    p.add_argument("--triple", type=int, required=True)
    p.add_argument("--choice", type=int, default=0)
    p = add("bounds", cmd_bounds, diagram=False)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--assume", default="filling")
    add("certify", cmd_certify)
    p = add("enumerate", cmd_enumerate, diagram=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--checkered", action="store_true")
    p.add_argument("--max-count", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)
    p = add("spectrum", cmd_spectrum, diagram=False)
    p.add_argument("--seeds", default="", help="comma list of diagram files or abstract:g:q entries")
    p.add_argument("--rules", default="filling")
    p.add_argument("--max-genus", type=int, required=True)
    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        code, payload = args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_human(payload)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
