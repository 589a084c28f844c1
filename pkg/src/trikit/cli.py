"""Command-line entry point: ``tri <command> ...``.

Every command only parses, dispatches and formats.  Exit codes: 0 success,
2 exhausted search, 64 usage error, 65 domain error.
"""

import argparse
import json
import sys

from trikit import __version__
from trikit.bounds import LEDGER, BoundError, eval_bound, format_value, verify_chain
from trikit.homology import homology
from trikit.isosig import signature
from trikit.moves import BOUNDARY_KINDS, INTERIOR_KINDS, MoveError, MoveKind, apply_move, enumerate_moves
from trikit.normal import (
    Incompatible,
    NormalError,
    enumerate_fundamental,
    format_coords,
    is_admissible,
    normal_sum,
    parse_coords,
    reconstruct,
)
from trikit.pattern import BoundaryPattern, iota, validate_pattern
from trikit.search import Exhausted, SearchBudget, connect, scramble, verify_path
from trikit.triangulation import (
    TriangulationError,
    boundary_components,
    euler_characteristic,
    parse_document,
    parse_slots,
    serialize,
    validate,
)

EX_OK, EX_EXHAUSTED, EX_USAGE, EX_DOMAIN = 0, 2, 64, 65


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- helpers ------------------------------------------------------------------


def _read_doc(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_document(text)
    except TriangulationError as exc:
        raise DomainError(f"{path}: {exc}") from None


def _read_valid(path):
    doc = _read_doc(path)
    problems = validate(doc.tri)
    if problems:
        raise DomainError(f"{path}: invalid triangulation: {problems[0]}")
    return doc


def _kinds(text, boundary):
    if text is None:
        return INTERIOR_KINDS | BOUNDARY_KINDS if boundary else INTERIOR_KINDS
    try:
        return frozenset(MoveKind.parse(k) for k in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _coords(text, tri):
    try:
        return parse_coords(text, tri.size)
    except NormalError as exc:
        raise DomainError(str(exc)) from None


def _pattern(args, doc):
    if args.pattern is not None:
        try:
            slots = parse_slots(args.pattern, doc.tri.size)
        except ValueError as exc:
            raise UsageError(f"--pattern: {exc}") from None
    else:
        slots = doc.pattern
    pattern = BoundaryPattern.from_slots(doc.tri, slots)
    problems = validate_pattern(doc.tri, pattern)
    if problems:
        raise DomainError(f"invalid pattern: {problems[0]}")
    return pattern


def _surface_name(orientable, euler):
    if orientable:
        g = (2 - euler) // 2
        return {0: "sphere", 1: "torus"}.get(g, f"genus-{g} surface")
    k = 2 - euler
    return {1: "projective plane", 2: "Klein bottle"}.get(k, f"nonorientable genus-{k} surface")


def _summary(names):
    if not names:
        return "none"
    counts = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    return ", ".join(f"{c} {n}" for n, c in counts.items())


def _emit(args, data, lines):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


# --- commands -----------------------------------------------------------------


def cmd_validate(args):
    doc = _read_doc(args.file)
    problems = validate(doc.tri)
    _emit(args, {"valid": not problems, "problems": problems},
          ["valid"] if not problems else ["invalid"] + [f"  {p}" for p in problems])
    return EX_OK if not problems else EX_DOMAIN


def cmd_info(args):
    tri = _read_valid(args.file).tri
    sk = tri.skeleton
    comps = boundary_components(tri)
    names = [_surface_name(c.orientable, c.euler) for c in comps]
    h = homology(tri)
    data = {
        "tets": tri.size,
        "vertices": sk.num_vertices,
        "edges": sk.num_edges,
        "faces": sk.num_faces,
        "euler": euler_characteristic(tri),
        "closed": tri.is_closed,
        "orientable": tri.is_orientable,
        "boundary": [
            {"name": n, "euler": c.euler, "orientable": c.orientable, "faces": c.faces}
            for n, c in zip(names, comps)
        ],
        "b1": h.b1_z,
        "b1_z2": h.b1_z2,
        "homology": str(h),
        "signature": signature(tri),
    }
    lines = [
        f"t={tri.size}",
        f"vertices={sk.num_vertices} edges={sk.num_edges} faces={sk.num_faces}",
        f"chi={data['euler']}",
        f"orientable={'yes' if data['orientable'] else 'no'}",
        f"boundary: {_summary(names)}",
        f"b1={h.b1_z} b1_z2={h.b1_z2}",
        f"H1={h}",
        f"sig={data['signature']}",
    ]
    _emit(args, data, lines)
    return EX_OK


def cmd_sig(args):
    tri = _read_doc(args.file).tri
    s = signature(tri)
    _emit(args, {"signature": s}, [s])
    return EX_OK


def cmd_moves_list(args):
    tri = _read_valid(args.file).tri
    tokens = [s.token() for s in enumerate_moves(tri, _kinds(args.kinds, args.boundary_moves))]
    _emit(args, {"moves": tokens}, tokens)
    return EX_OK


def cmd_moves_apply(args):
    doc = _read_valid(args.file)
    tri = doc.tri
    for tok in args.tokens:
        try:
            tri, _ = apply_move(tri, tok)
        except (MoveError, ValueError) as exc:
            msg = str(exc)
            raise DomainError(msg if msg.startswith(tok) else f"{tok}: {msg}") from None
    text = serialize(tri)
    _emit(args, {"triangulation": text, "signature": signature(tri)}, [text.rstrip("\n")])
    return EX_OK


def cmd_scramble(args):
    tri = _read_valid(args.file).tri
    kinds = _kinds(args.kinds, args.boundary_moves)
    try:
        result, path = scramble(tri, args.k, args.seed, kinds)
    except MoveError as exc:
        raise DomainError(str(exc)) from None
    text = serialize(result)
    lines = [f"# move {tok}" for tok in path.moves] + [text.rstrip("\n")]
    _emit(args, {"triangulation": text, "moves": list(path.moves), "signature": path.end}, lines)
    return EX_OK


def cmd_connect(args):
    a = _read_valid(args.a).tri
    b = _read_valid(args.b).tri
    kinds = None if args.kinds is None else _kinds(args.kinds, args.boundary_moves)
    try:
        budget = SearchBudget(args.max_tets, args.max_moves, args.max_states,
                              args.boundary_moves, kinds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = connect(a, b, budget)
    if isinstance(res, Exhausted):
        _emit(args, {"status": "exhausted", "states": res.states, "depth": res.depth}, [str(res)])
        return EX_EXHAUSTED
    check = verify_path(a, res)
    if not check:
        raise DomainError(f"internal check failed at step {check.step}: {check.reason}")
    _emit(args, {"status": "path", "length": len(res), "moves": list(res.moves)},
          [f"PATH {len(res)}"] + list(res.moves))
    return EX_OK


def _surface_data(tri, v, pattern=None):
    rep = reconstruct(tri, v)
    data = {
        "coords": format_coords(v),
        "admissible": is_admissible(tri, v),
        "euler": rep.euler,
        "weight": rep.weight,
        "discs": rep.discs,
        "components": [
            {"euler": c.euler, "orientable": c.orientable, "closed": c.closed,
             "boundary_curves": c.boundary_curves, "discs": c.discs}
            for c in rep.components
        ],
    }
    if pattern is not None:
        data["iota"] = iota(tri, pattern, v)
    return data


def _surface_line(d):
    parts = [f"chi={d['euler']}", f"w={d['weight']}", f"discs={d['discs']}",
             f"components={len(d['components'])}"]
    if "iota" in d:
        parts.append(f"iota={d['iota']}")
    return " ".join(parts)


def cmd_nsurf_fundamental(args):
    tri = _read_valid(args.file).tri
    try:
        fund = enumerate_fundamental(tri, args.cap)
    except NormalError as exc:
        raise UsageError(str(exc)) from None
    rows = [_surface_data(tri, v) for v in fund]
    _emit(args, {"cap": args.cap, "surfaces": rows},
          [f"{r['coords']} {_surface_line(r)}" for r in rows])
    return EX_OK


def cmd_nsurf_info(args):
    doc = _read_valid(args.file)
    tri = doc.tri
    v = _coords(args.vector, tri)
    if not is_admissible(tri, v):
        raise DomainError(f"{format_coords(v)} is not an admissible normal surface")
    pattern = _pattern(args, doc) if args.pattern is not None or doc.pattern else None
    d = _surface_data(tri, v, pattern)
    lines = [d["coords"], _surface_line(d)]
    for k, c in enumerate(d["components"]):
        lines.append(
            f"  component {k}: chi={c['euler']} "
            f"{'orientable' if c['orientable'] else 'nonorientable'} "
            f"boundary_curves={c['boundary_curves']} discs={c['discs']}"
        )
    _emit(args, d, lines)
    return EX_OK


def cmd_nsurf_sum(args):
    tri = _read_valid(args.file).tri
    a = _coords(args.a, tri)
    b = _coords(args.b, tri)
    s = normal_sum(tri, a, b)
    if isinstance(s, Incompatible):
        raise DomainError(f"incompatible: tetrahedron {s.tet} has quad types {list(s.quads)}")
    text = format_coords(s)
    _emit(args, {"sum": text}, [text])
    return EX_OK


def cmd_iota(args):
    doc = _read_valid(args.file)
    v = _coords(args.vector, doc.tri)
    n = iota(doc.tri, _pattern(args, doc), v)
    _emit(args, {"iota": n}, [str(n)])
    return EX_OK


def _report_params(entry, args):
    t = args.t
    params = {"t": t, "g": args.genus, "p": t, "q": t, "r": t, "a": args.a,
              "b1": args.b1, "b1z2": args.b1z2}
    params = {k: params[k] for k in entry.params if k != "D"}
    if "D" in entry.params:
        # the largest surface the subdivision step has to absorb
        params["D"] = eval_bound("canonical_surfaces", t=t)
    return params


def cmd_bounds_report(args):
    rows = []
    for entry in LEDGER.values():
        params = _report_params(entry, args)
        try:
            value = format_value(eval_bound(entry.id, **params))
        except BoundError as exc:
            value = None
            note = str(exc).split(": ", 1)[1]
        else:
            note = ""
        shown = {k: v for k, v in params.items() if k != "D"}
        rows.append({"id": entry.id, "params": shown, "bound": entry.anchor, "value": value,
                     "note": note, "description": entry.description})
    lines = []
    for r in rows:
        p = ",".join(f"{k}={v}" for k, v in r["params"].items())
        lines.append(f"{r['id']}({p}) = {r['value'] if r['value'] is not None else 'n/a: ' + r['note']}")
    _emit(args, {"entries": rows}, lines)
    return EX_OK


def cmd_bounds_verify_chain(args):
    try:
        report = verify_chain(args.t_min, args.t_max, audit=args.audit)
    except BoundError as exc:
        raise UsageError(str(exc)) from None
    rows = [
        {"id": r.id, "t": r.t, "verdict": r.verdict, "rule": r.rule, "lhs": r.lhs, "rhs": r.rhs,
         "bound": r.anchor, "role": r.role, "note": r.note}
        for r in report.results
    ]
    lines = [f"t={r['t']} {r['id']}: {r['verdict']} [{r['rule']}]" for r in rows]
    lines.append("all hold" if report.all_hold else f"{len(report.failures())} not holding")
    _emit(args, {"all_hold": report.all_hold, "results": rows}, lines)
    return EX_OK if report.all_hold else 1


# --- parser -------------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="tri", description="Triangulated 3-manifold toolkit.")
    parser.add_argument("--version", action="version", version=f"tri {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check the manifold conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="size, boundary and homology")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sig", parents=[common], help="isomorphism signature")
    p.add_argument("file")
    p.set_defaults(func=cmd_sig)

    moves = sub.add_parser("moves", help="list or apply moves")
    msub = moves.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = msub.add_parser("list", parents=[common])
    p.add_argument("file")
    p.add_argument("--kinds", help="comma-separated kinds, e.g. 23,32")
    p.add_argument("--boundary-moves", action="store_true")
    p.set_defaults(func=cmd_moves_list)
    p = msub.add_parser("apply", parents=[common])
    p.add_argument("file")
    p.add_argument("tokens", nargs="+", metavar="token")
    p.set_defaults(func=cmd_moves_apply)

    p = sub.add_parser("scramble", parents=[common], help="apply seeded random moves")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kinds")
    p.add_argument("--boundary-moves", action="store_true")
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("connect", parents=[common], help="search for a move sequence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-tets", type=int, required=True)
    p.add_argument("--max-moves", type=int, default=64)
    p.add_argument("--max-states", type=int, default=10**6)
    p.add_argument("--boundary-moves", action="store_true")
    p.add_argument("--kinds")
    p.set_defaults(func=cmd_connect)

    ns = sub.add_parser("nsurf", help="normal surfaces")
    nsub = ns.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = nsub.add_parser("fundamental", parents=[common])
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=4, help="largest coordinate searched")
    p.set_defaults(func=cmd_nsurf_fundamental)
    p = nsub.add_parser("info", parents=[common])
    p.add_argument("file")
    p.add_argument("vector")
    p.add_argument("--pattern")
    p.set_defaults(func=cmd_nsurf_info)
    p = nsub.add_parser("sum", parents=[common])
    p.add_argument("file")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_nsurf_sum)

    p = sub.add_parser("iota", parents=[common], help="points of a surface on a pattern")
    p.add_argument("file")
    p.add_argument("vector")
    p.add_argument("--pattern")
    p.set_defaults(func=cmd_iota)

    bd = sub.add_parser("bounds", help="complexity bounds")
    bsub = bd.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = bsub.add_parser("report", parents=[common])
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--genus", type=int, default=1)
    p.add_argument("-a", type=int, default=200)
    p.add_argument("--b1", type=int, default=0)
    p.add_argument("--b1z2", type=int, default=0)
    p.set_defaults(func=cmd_bounds_report)
    p = bsub.add_parser("verify-chain", parents=[common])
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--audit", action="store_true", help="also check the audit inequalities")
    p.set_defaults(func=cmd_bounds_verify_chain)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    except (DomainError, MoveError, NormalError, TriangulationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DOMAIN


def main():
    sys.exit(run())
