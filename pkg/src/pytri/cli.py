"""Command line interface.

    pytri triple info 3 4 5
    pytri tree ls --max-c 100
    pytri dce root -- -3 4 21 28
    pytri pack gen --triple 3,4,5 --bound 25 --svg out.svg
    pytri table roots --max-c 100

Exit status is 1 for invalid input and 2 if an internal identity check
fails.  Fractions are always printed as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import descartes as dce
from . import geometry, packing, tree
from .errors import InvariantViolation, PytriError
from .exact import Surd, fmt, frac
from .pythagoras import PythTriple, dickson_enumerate, half_angle_tangents, p_sequence
from .triangle import Triangle, equi_radii, heron_area_sq, radii_from_sides

DEFAULT_MAX_BOUND = 10**6


class UsageError(Exception):
    pass


class _Raw(str):
    """Output written verbatim instead of being encoded."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _out(value):
    """JSON-ready form of library values."""
    if isinstance(value, bool) or value is None or isinstance(value, _Raw):
        return value
    if isinstance(value, (int, Fraction)):
        return fmt(value)
    if isinstance(value, Surd):
        return str(value)
    if isinstance(value, PythTriple):
        return value.as_list()
    if isinstance(value, dce.RootQuadruple):
        return {"quadruple": value.as_list(), "tag": value.tag}
    if isinstance(value, dict):
        return {str(getattr(k, "value", k)): _out(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_out(v) for v in value]
    return str(value)


def _triple(args) -> PythTriple:
    return PythTriple(*args)


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",")]
    except ValueError:
        raise PytriError(f"expected comma-separated integers, got {text!r}") from None


def _max_bound() -> int:
    raw = os.environ.get("PYTRI_MAX_BOUND")
    if raw is None:
        return DEFAULT_MAX_BOUND
    try:
        return int(raw)
    except ValueError:
        raise PytriError(f"PYTRI_MAX_BOUND must be an integer, got {raw!r}") from None


# subcommand handlers return a JSON-ready object


def cmd_triple_info(ns):
    t = _triple(ns.sides)
    info = {
        "triple": t,
        "primitive": t.primitive,
        "radii": list(t.radii()),
        "area": t.radii()[0] * t.radii()[3],
    }
    if t.normalized:
        tq, tqq = half_angle_tangents(t)
        info.update(
            {
                "pseq": p_sequence(t).as_list(),
                "tangents": [tq, tqq],
                "quadruple": list(dce.pt_quadruple(t)),
                "inner_curvature": dce.inner_curvature(t),
                "root": dce.reduce_to_root(dce.pt_quadruple(t)),
                "bilateral": [list(q) for q in dce.bilateral_eq25(t)],
                "path": tree.path_of(t),
            }
        )
    return info


def cmd_triangle(ns):
    t = Triangle(*(frac(v) for v in ns.sides))
    r = radii_from_sides(t)
    return {"radii": list(r), "area_sq": heron_area_sq(r), "equi_radii": equi_radii(r)}


def cmd_dickson(ns):
    return {"inradius": ns.r1, "triples": dickson_enumerate(ns.r1)}


def cmd_tree_children(ns):
    return {"triple": _triple(ns.sides), "children": tree.children(_triple(ns.sides))}


def cmd_tree_parent(ns):
    t = _triple(ns.sides)
    par = tree.parent(t)
    if par is None:
        return {"triple": t, "parent": None, "branch": None}
    return {"triple": t, "parent": par[0], "branch": par[1].value}


def cmd_tree_path(ns):
    if ns.path is not None:
        return {"path": ns.path, "triple": tree.triple_at(ns.path)}
    t = _triple(ns.sides)
    return {"triple": t, "path": tree.path_of(t)}


def cmd_tree_ls(ns):
    triples = sorted(tree.enumerate_triples(ns.max_c, ns.method), key=lambda t: (t.c, t.a))
    return {"max_c": ns.max_c, "count": len(triples), "triples": triples}


def cmd_dce_verify(ns):
    k = [frac(v) for v in ns.k]
    return {"quadruple": k, "dce": dce.verify_dce(k)}


def cmd_dce_reflect(ns):
    k = [frac(v) for v in ns.k]
    if not dce.verify_dce(k):
        raise PytriError("quadruple does not satisfy the Descartes equation")
    if ns.index is None:
        return {"quadruple": k, "reflected": list(dce.reflect_all(k))}
    if not 1 <= ns.index <= 4:
        raise PytriError("index must be 1..4")
    return {"quadruple": k, "index": ns.index, "result": list(dce.reflect(k, ns.index - 1))}


def cmd_dce_root(ns):
    chain = dce.reduction_chain(ns.k)
    root = dce.reduce_to_root(ns.k)
    return {"chain": [list(q) for q in chain], "root": root}


def cmd_dce_families(ns):
    rows = []
    for k in range(1, ns.k + 1):
        a, b = dce.table_families(k)
        sym = dce.symmetric_family(2 * k + 1, k)
        rows.append({"k": k, "pattern_8_4": list(a), "pattern_9_3": list(b), "symmetric": list(sym)})
    return {"families": rows}


def cmd_dce_solve(ns):
    x1, x2 = dce.solve_fourth(*ns.k)
    return {"curvatures": [frac(v) for v in ns.k], "roots": [x1, x2]}


def cmd_pack_gen(ns):
    if ns.bound > _max_bound():
        raise PytriError(f"bound {ns.bound} exceeds PYTRI_MAX_BOUND={_max_bound()}")
    if (ns.triple is None) == (ns.quad is None):
        raise PytriError("give exactly one of --triple or --quad")
    if ns.triple is not None:
        p = packing.packing_from_triple(PythTriple(*_parse_ints(ns.triple)), ns.bound)
    else:
        p = packing.packing_from_quadruple(_parse_ints(ns.quad), ns.bound)
    if ns.svg:
        with open(ns.svg, "w", encoding="utf-8") as fh:
            fh.write(packing.render_svg(p, scale=ns.scale, label_ratio=ns.label_ratio))
    if ns.format == "svg":
        return _Raw(packing.render_svg(p, scale=ns.scale, label_ratio=ns.label_ratio))
    if ns.jsonl:
        with open(ns.jsonl, "w", encoding="utf-8") as fh:
            fh.write(p.to_jsonl())
    rects = packing.detect_rectangles(p)
    return {
        "bound": ns.bound,
        "root": p.root,
        "count": len(p.circles),
        "curvatures": p.curvatures(),
        "rectangles": [{"quadruple": list(r.curvatures), "triple": r.triple} for r in rects],
    }


def cmd_geom_verify(ns):
    sides = [frac(v) for v in ns.sides]
    rep = geometry.verify_dual_systems(sides)
    out = {
        "triple": sides,
        "on_line": rep.on_line,
        "symmetric_pair": rep.symmetric_pair,
        "shared_contacts": rep.shared_contacts,
        "orthogonal_triples": rep.orthogonal_triples,
        "failures": rep.failures,
    }
    if all(v.denominator == 1 for v in sides):
        t = PythTriple(*(int(v) for v in sides))
        if t.normalized:
            fam = geometry.nine_point_family(t)
            out["nine_point"] = {
                "parent": list(fam.parent) if isinstance(fam.parent, tuple) else fam.parent,
                "children": fam.children,
                "certificates": fam.certificates,
                "foot_on_circle": fam.foot_on_circle,
            }
    return out


def cmd_table_roots(ns):
    rows = dce.root_table(ns.max_c, include_bilateral=not ns.basic_only)
    return {
        "max_c": ns.max_c,
        "count": len(rows),
        "roots": [
            {"root": r.as_list(), "tag": r.tag, "eq24": dce.recognize_eq24(r.as_tuple()), "from": ts}
            for r, ts in rows
        ],
    }


def _text(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(v, indent) if isinstance(v, dict) else f"{pad}{_flat(v)}" for v in obj)
    return f"{pad}{_flat(obj)}"


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_flat(x)}" for k, x in v.items()) + "}"
    return "null" if v is None else str(v)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pytri", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("json", "text", "svg"), default="json")
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    tri = sub.add_parser("triple", help="information about one Pythagorean triple")
    tsub = tri.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = tsub.add_parser("info")
    p.add_argument("sides", nargs=3, type=int)
    p.set_defaults(func=cmd_triple_info)
    p = tsub.add_parser("triangle", help="radii and area of any rational triangle")
    p.add_argument("sides", nargs=3)
    p.set_defaults(func=cmd_triangle)
    p = tsub.add_parser("dickson", help="primitive triples with a given in-radius")
    p.add_argument("r1", type=int)
    p.set_defaults(func=cmd_dickson)

    tr = sub.add_parser("tree", help="the ternary tree of primitive triples")
    trsub = tr.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = trsub.add_parser("children")
    p.add_argument("sides", nargs=3, type=int)
    p.set_defaults(func=cmd_tree_children)
    p = trsub.add_parser("parent")
    p.add_argument("sides", nargs=3, type=int)
    p.set_defaults(func=cmd_tree_parent)
    p = trsub.add_parser("path")
    p.add_argument("sides", nargs="*", type=int)
    p.add_argument("--at", dest="path", help="triple at this L/M/R path instead")
    p.set_defaults(func=cmd_tree_path)
    p = trsub.add_parser("ls")
    p.add_argument("--max-c", type=int, required=True)
    p.add_argument("--method", choices=("pseq", "matrix", "price"), default="pseq")
    p.set_defaults(func=cmd_tree_ls)

    d = sub.add_parser("dce", help="Descartes quadruples")
    dsub = d.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = dsub.add_parser("verify")
    p.add_argument("k", nargs=4)
    p.set_defaults(func=cmd_dce_verify)
    p = dsub.add_parser("reflect")
    p.add_argument("k", nargs=4)
    p.add_argument("--index", type=int, help="1-based position; all four if omitted")
    p.set_defaults(func=cmd_dce_reflect)
    p = dsub.add_parser("root")
    p.add_argument("k", nargs=4, type=int)
    p.set_defaults(func=cmd_dce_root)
    p = dsub.add_parser("families")
    p.add_argument("--k", type=int, default=5)
    p.set_defaults(func=cmd_dce_families)
    p = dsub.add_parser("solve", help="both fourth curvatures for three given ones")
    p.add_argument("k", nargs=3)
    p.set_defaults(func=cmd_dce_solve)

    pk = sub.add_parser("pack", help="integral Apollonian packings")
    psub = pk.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = psub.add_parser("gen")
    p.add_argument("--triple", help="a,b,c")
    p.add_argument("--quad", help="k1,k2,k3,k4 (use --quad=-2,3,6,7)")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--svg")
    p.add_argument("--jsonl")
    p.add_argument("--scale", type=float, default=500.0)
    p.add_argument("--label-ratio", type=float, default=0.1)
    p.set_defaults(func=cmd_pack_gen)

    g = sub.add_parser("geom", help="coordinate checks")
    gsub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = gsub.add_parser("verify")
    p.add_argument("sides", nargs=3)
    p.set_defaults(func=cmd_geom_verify)

    tb = sub.add_parser("table", help="root quadruple table")
    tbsub = tb.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = tbsub.add_parser("roots")
    p.add_argument("--max-c", type=int, required=True)
    p.add_argument("--basic-only", action="store_true", help="skip the bilateral quadruples")
    p.set_defaults(func=cmd_table_roots)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        result = _out(ns.func(ns))
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    except (PytriError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if isinstance(result, _Raw):
        stdout.write(result)
    elif ns.format == "svg":
        print("error: --format svg is only available for 'pack gen'", file=stderr)
        return 1
    elif ns.format == "json":
        stdout.write(json.dumps(result) + "\n")
    else:
        stdout.write(_text(result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
