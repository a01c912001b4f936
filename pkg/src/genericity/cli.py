"""Command line front end; every verb prints one JSON document.

Exit codes: 0 success, 2 typed domain error, 3 parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError, InputError, ParseError
from .exact.field import QQ
from .exact.render import render_rat, render_uni
from .exact.roots import rect_json

SCHEMA = 1


def _dump(doc: dict) -> str:
    doc = dict(doc)
    doc["schema"] = SCHEMA
    return json.dumps(doc, sort_keys=True, indent=2)


def _error_doc(e: DomainError) -> dict:
    out = {"type": getattr(e, "code", type(e).__name__), "message": str(e)}
    if isinstance(e, ParseError):
        out["position"] = e.position
    return {"error": out}


def _exit_code(e: DomainError) -> int:
    return 3 if isinstance(e, ParseError) else 2


# ---------------------------------------------------------------------------
# serialization helpers


def _group(g) -> dict:
    return {"name": g.name, "order": g.order}


def _point(pt, approx: int | None) -> dict:
    if pt.is_infinity:
        out = {"infinity": True}
    else:
        out = {"min_poly": render_uni(pt.min_poly), "rectangle": rect_json(pt.rect), "index": pt.index}
        v = pt.value()
        if v is not None:
            out["value"] = render_rat(v)
    if approx and not pt.is_infinity:
        import mpmath

        z = pt.approx(approx)
        out["approx"] = mpmath.nstr(z, approx)
    return out


def _branch(b, approx) -> dict:
    return {
        "point": _point(b.point, approx),
        "k_orbit": render_uni(b.orbit_poly) if b.orbit_poly is not None else None,
        "ram_index": b.ram_index,
        "inertia": b.inertia_class.class_label,
        "places": list(b.places),
    }


def _invariants_doc(inv, approx) -> dict:
    return {
        "group": inv.group.name,
        "order": inv.group.order,
        "geometric_group": _group(inv.geometric_group),
        "r": inv.r,
        "e": list(inv.e_tuple),
        "genus": inv.genus,
        "regular": inv.regular,
        "all_branch_points_in_P1k": inv.all_branch_in_k,
        "branch_points": [_branch(b, approx) for b in inv.branch],
        "certified": inv.certified,
    }


def _classify_doc(p, k, approx) -> dict:
    from .classify import decide_genericity, obstruction_report

    v = decide_genericity(p, k)
    ob = obstruction_report(p, k)
    doc = _invariants_doc(v.invariants, approx)
    doc.update({
        "polynomial": str(p),
        "field": k.describe(),
        "verdict": v.outcome,
        "case": v.case,
        "failures": list(v.failures),
        "obstructions": list(ob.labels),
        "obstruction_reasons": list(ob.witnesses),
        "certified": v.certified,
    })
    return doc


# ---------------------------------------------------------------------------
# verbs


def _cmd_parse(args) -> dict:
    from .parse import parse_poly

    p = parse_poly(args.expr)
    kind = "UniPoly" if hasattr(p, "var") else "BiPoly"
    return {"kind": kind, "rendered": str(p)}


def _cmd_invariants(args) -> dict:
    from .cover import cover_invariants
    from .parse import parse_bipoly, parse_field

    p, k = parse_bipoly(args.poly), parse_field(args.field)
    doc = _invariants_doc(cover_invariants(p, k), args.approx)
    doc.update({"polynomial": str(p), "field": k.describe()})
    return doc


def _cmd_galois(args) -> dict:
    from .galois import geometric_group, group_info, group_of_specialization, specialization_field
    from .parse import parse_bipoly, parse_field

    p, k = parse_bipoly(args.poly), parse_field(args.field)
    G, Gg = group_info(p, k), geometric_group(p, k)
    doc = {"polynomial": str(p), "field": k.describe(),
           "group": _group(G.group), "geometric_group": _group(Gg.group),
           "certified": G.certified and Gg.certified, "method": G.method}
    if args.at is not None:
        t0 = None if args.at in ("inf", "infinity") else Fraction(args.at)
        H = group_of_specialization(p, t0, k)
        sf = specialization_field(p, t0, k)
        doc["specialization"] = {
            "t0": "infinity" if t0 is None else render_rat(t0),
            "group": _group(H),
            "degree": sf.degree,
            "kernel": sf.kernel,
            "defining_poly": render_uni(sf.defining_poly) if sf.defining_poly is not None else None,
        }
    return doc


def _cmd_classify(args) -> tuple[dict, int]:
    from .parse import parse_bipoly, parse_field

    k = parse_field(args.field)
    if args.file is None:
        if args.poly is None:
            raise ParseError("classify needs a polynomial or --file", 0)
        return _classify_doc(parse_bipoly(args.poly), k, args.approx), 0
    results, code = [], 0
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as e:
        raise InputError(f"cannot read {args.file}: {e.strerror}") from None
    for line in lines:
        if not line or line.startswith("#"):
            continue
        try:
            results.append(_classify_doc(parse_bipoly(line), k, args.approx))
        except DomainError as e:
            doc = _error_doc(e)
            doc["polynomial"] = line
            results.append(doc)
            code = max(code, _exit_code(e))
    return {"field": k.describe(), "results": results}, code


def _cmd_construct(args) -> dict:
    from .build import construct_generic
    from .classify import decide_genericity
    from .parse import parse_field, parse_group

    g, k = parse_group(args.group), parse_field(args.field)
    p = construct_generic(g, k)
    doc = {"group": _group(g), "field": k.describe(), "polynomial": str(p)}
    if args.check:
        v = decide_genericity(p, k)
        doc["verdict"] = v.outcome
        doc["case"] = v.case
    return doc


def _cmd_solve(args) -> dict:
    from .build import TargetExtension, solve_parameter_search
    from .parse import parse_bipoly, parse_field, parse_unipoly

    p, k = parse_bipoly(args.poly), parse_field(args.field)
    f = parse_unipoly(args.target)
    t0, checked = solve_parameter_search(p, TargetExtension(f), k, args.height)
    return {"polynomial": str(p), "target": str(f), "field": k.describe(), "height_bound": args.height,
            "t0": None if t0 is None else render_rat(t0), "candidates_checked": checked,
            "exhausted": t0 is None}


def _point_list(text: str):
    from .build import point_set
    from .parse import parse_unipoly

    vals = []
    for item in text.split(","):
        item = item.strip()
        if item in ("inf", "infinity", "oo"):
            vals.append(None)
        elif any(ch.isalpha() for ch in item):
            vals.append(parse_unipoly(item, "T"))
        else:
            try:
                vals.append(Fraction(item))
            except ValueError:
                raise ParseError(f"bad point {item!r}", 0) from None
    return point_set(vals)


def _map_doc(m) -> dict:
    return {"entries": [render_rat(x) for x in m.entries()], "map": str(m)}


def _cmd_moebius(args) -> dict:
    from .build import MoebiusMap, moebius_apply, moebius_between
    from .parse import parse_bipoly, parse_field

    if args.action == "apply":
        p = parse_bipoly(args.poly)
        try:
            entries = [Fraction(x) for x in args.map.split(",")]
        except ValueError:
            raise ParseError(f"bad map {args.map!r}", 0) from None
        if len(entries) != 4:
            raise ParseError("a map needs four entries a,b,c,d", 0)
        m = MoebiusMap.make(*entries)
        return {"polynomial": str(p), "moebius": _map_doc(m), "result": str(moebius_apply(p, m))}
    k = parse_field(args.field)
    s1, s2 = _point_list(args.source), _point_list(args.target)
    m = moebius_between(s1, s2, k)
    return {"field": k.describe(), "source": [p.describe() for p in s1], "target": [p.describe() for p in s2],
            "moebius": None if m is None else _map_doc(m)}


def _local_doc(ld) -> dict:
    return {"p": ld.p, "kodaira": ld.kodaira, "f_p": ld.f_p, "reduction": ld.reduction, "w_p": ld.w_p,
            "v_disc_min": ld.min_disc_valuation}


def _cmd_schinzel(args) -> dict:
    from . import schinzel as S
    from .parse import parse_unipoly

    if args.curve:
        q = parse_unipoly(args.curve)
        E = S.integral_short_model(q)
    else:
        q = None
        E = S.cm_curve(args.m)
    data = S.conductor_and_root_number(E)
    doc = {"curve": str(E), "ainvs": list(E.ainvs), "conductor": data.conductor,
           "root_number": data.W, "partial": data.partial,
           "locals": [_local_doc(ld) for ld in data.locals]}
    if args.d_range:
        rows = []
        for ent in S.lawful_evil_report(E, args.m, args.d_range):
            row = {"d": ent.d, "symbol": ent.symbol, "verdict": ent.verdict}
            if ent.report is not None:
                row["W_over_k"] = ent.report.W_over_k
                row["W_twist"] = ent.report.W_twist
                if ent.note:
                    row["note"] = ent.note
            rows.append(row)
        doc["m"] = args.m
        doc["lawful_evil"] = rows
        doc["passing_d"] = [r["d"] for r in rows if r["verdict"] == "passes"]
        doc["sampling_note"] = ("quadratic extensions are sampled over the given d range only; "
                                "the statement for all quadratic fields is not finitely checkable")
    if args.twist is not None:
        rep = S.root_number_over_quadratic(E, args.twist)
        doc["twist"] = {"d": rep.d, "fundamental_discriminant": rep.fundamental_discriminant,
                        "W_twist": rep.W_twist, "W_over_k": rep.W_over_k, "shortcut": rep.shortcut}
    if args.witness is not None:
        if q is None:
            raise ParseError("--witness needs --curve", 0)
        hit = S.witness_search(q, Fraction(args.witness), QQ, args.height)
        doc["witness"] = None if hit is None else [render_rat(hit[0]), render_rat(hit[1])]
    return doc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="genericity", description="One-parameter Galois covers and genericity.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def field_opt(p):
        p.add_argument("--field", default="Q", help="Q, Q(i), Q(sqrt(d)), Q(zeta_n) or Q[x]/(m)")

    def approx_opt(p):
        p.add_argument("--approx", type=int, default=None, metavar="DIGITS",
                       help="add decimal approximations of branch points")

    p = sub.add_parser("parse", help="parse and render a polynomial")
    p.add_argument("expr")

    p = sub.add_parser("invariants", help="branch points, ramification, genus, regularity")
    p.add_argument("poly")
    field_opt(p)
    approx_opt(p)

    p = sub.add_parser("galois", help="Galois groups over k(T), kbar(T) and at a specialization")
    p.add_argument("poly")
    p.add_argument("--at", default=None, help="specialization point (rational or inf)")
    field_opt(p)

    p = sub.add_parser("classify", help="genericity verdict and obstruction labels")
    p.add_argument("poly", nargs="?")
    p.add_argument("--file", default=None, help="one polynomial per line")
    field_opt(p)
    approx_opt(p)

    p = sub.add_parser("construct", help="generic polynomial for a group")
    p.add_argument("group")
    p.add_argument("--check", action="store_true", help="re-classify the output")
    field_opt(p)

    p = sub.add_parser("solve", help="parameter t0 realizing a target extension")
    p.add_argument("poly")
    p.add_argument("--target", required=True, help="defining polynomial in x")
    p.add_argument("--height", type=int, default=10)
    field_opt(p)

    p = sub.add_parser("moebius", help="apply or find Moebius changes of parameter")
    msub = p.add_subparsers(dest="action", required=True)
    q = msub.add_parser("apply")
    q.add_argument("poly")
    q.add_argument("--map", required=True, help="a,b,c,d for T -> (aT+b)/(cT+d)")
    q = msub.add_parser("between")
    q.add_argument("source", help="comma-separated points: rationals, inf, or polynomials in T")
    q.add_argument("target")
    field_opt(q)

    p = sub.add_parser("schinzel", help="root numbers, twists and rational points")
    p.add_argument("--m", type=int, default=11, help="CM discriminant in {11, 19, 43, 67, 163}")
    p.add_argument("--curve", default=None, help="cubic q(x) for y^2 = q(x) instead of the CM curve")
    p.add_argument("--d-range", type=int, default=0)
    p.add_argument("--twist", type=int, default=None, help="squarefree d for W over Q(sqrt d)")
    p.add_argument("--witness", default=None, help="u0 for a point on y^2 = u0 q(t)")
    p.add_argument("--height", type=int, default=10)
    return ap


_VERBS = {
    "parse": _cmd_parse,
    "invariants": _cmd_invariants,
    "galois": _cmd_galois,
    "construct": _cmd_construct,
    "solve": _cmd_solve,
    "moebius": _cmd_moebius,
    "schinzel": _cmd_schinzel,
}


def run(argv: list[str]) -> tuple[str, int]:
    """Execute a command line; returns (JSON text, exit code)."""
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "classify":
            doc, code = _cmd_classify(args)
        else:
            doc, code = _VERBS[args.verb](args), 0
    except DomainError as e:
        return _dump(_error_doc(e)), _exit_code(e)
    return _dump(doc), code


def main(argv: list[str] | None = None) -> int:
    try:
        text, code = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:       # argparse usage errors
        return 3 if e.code else 0
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
