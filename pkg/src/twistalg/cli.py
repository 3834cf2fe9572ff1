"""Command-line entry point: ``twistalg {verify,characters,coinvariants,center,twist}``.

Exit codes: 0 success, 1 a check failed, 2 usage error (including caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import lcm

import jsonschema

from . import characters as ch
from . import coinvariants as co
from . import verify
from .cherednik import BRAIDED, RATIONAL, CherednikAlgebra, CherednikParams, zeta_keys
from .embedding import Embedding
from .groups import GroupSpec, element_token
from .hopf import GroupAlgebraElement, cocycle_F, j_map
from .monomials import zero
from .scalars import CycloContext, parse_rational
from .syntax import parse_element


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _caps(args) -> dict:
    return {"group": args.cap_group, "dim": args.cap_dim, "degree": args.cap_degree}


def _check_group_cap(spec: GroupSpec, args) -> None:
    if spec.order() > args.cap_group:
        raise UsageError(f"|{spec.label()}| = {spec.order()} exceeds --cap-group {args.cap_group}")


def _triple(args, default=None):
    vals = (args.m, args.p, args.n)
    if all(v is None for v in vals):
        return default
    if any(v is None for v in vals):
        raise UsageError("--m, --p and --n must be given together")
    m, p, n = vals
    if m < 1 or n < 1 or p < 1 or m % p:
        raise UsageError(f"G({m},{p},{n}) needs p dividing m")
    return m, p, n


# -- verify ----------------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.selector != "all" and args.selector not in verify.REGISTRY:
        raise UsageError(f"unknown check {args.selector!r}; known: {', '.join(verify.REGISTRY)}")
    opts = verify.Options(triple=_triple(args), caps=_caps(args))
    if args.c:
        opts.c_values = tuple(args.c)
    report = verify.run(args.selector, opts)
    jsonschema.validate(report, verify.REPORT_SCHEMA)
    lines = [f"{c['status'].upper():7} {c['name']}: {c['details']}" for c in report["checks"]]
    lines.append("overall: " + ("pass" if report["overall"] else "fail"))
    _emit(report, args.json, lines)
    return 0 if report["overall"] else 1


# -- characters -------------------------------------------------------------------------------------


def cmd_characters(args) -> int:
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    if not 1 <= n <= args.cap_n:
        raise UsageError(f"n = {n} outside 1..{args.cap_n}")
    if args.group in ("D", "muD") and n < 2:
        raise UsageError("D_n needs n >= 2")
    if args.group == "B":
        spec, table = GroupSpec(2, 1, n), ch.bn_table(n)
    elif args.group == "D":
        spec, table = ch.d_spec(n), ch.d_table(n)
    else:
        spec, table = ch.mu_d_spec(n), ch.d_table(n, mystic=True)
    _check_group_cap(spec, args)
    data = ch.table_json(spec, table)
    ok = True
    rows = None
    if args.twist != "none":
        if args.group == "B" and args.twist == "j1":
            rep = ch.verify_b_twist(n)
            rows = [{"label": r["label"], "image": r["image"]} for r in rep.rows]
        elif args.group == "B":
            t4 = ch.bn_table(n, 4)
            rows = []
            for bp, chi in t4.items():
                got = ch.find_label(ch.pullback(chi, ch.jminusi), t4)
                rows.append({"label": ch.label_str(bp), "image": ch.label_str(got) if got else None})
            rep = ch.verify_j1_equals_jminusi(n)
        elif args.group == "D" and args.twist == "jminusi":
            rep = ch.verify_d_bijection(n)
            rows = [{"label": r["label"], "image": r["image"], "target": ch.mu_d_spec(n).label()} for r in rep.rows]
        else:
            raise UsageError(f"twist {args.twist} is not available for group {args.group}")
        ok = rep.ok
        data["twist"] = {"map": args.twist, "labels": rows, "ok": ok}
    lines = [f"{spec.label()}  classes: {' '.join(data['classes'])}"]
    for c in data["characters"]:
        lbl = ch.label_str((tuple(c["label"][0]), tuple(c["label"][1])))
        lines.append(f"  {lbl:>16}  " + " ".join(str(v) for v in c["values"]))
    if rows is not None:
        lines.append(f"pullback along {args.twist}:")
        lines += [f"  {r['label']} -> {r['image']}" for r in rows]
    _emit(data, args.json, lines)
    return 0 if ok else 1


# -- coinvariants ------------------------------------------------------------------------------------


def cmd_coinvariants(args) -> int:
    m, p, n = _triple(args, None) or (None, None, None)
    if m is None:
        raise UsageError("--m, --p and --n are required")
    if args.mystic and (m % 2 or n < 2):
        raise UsageError("mu(G(m,p,n)) needs m even and n >= 2")
    spec = GroupSpec(m, p, n, "mystic" if args.mystic else "reflection")
    _check_group_cap(spec, args)
    if co.top_degree(m, p, n) > args.cap_degree:
        raise UsageError(f"top degree {co.top_degree(m, p, n)} exceeds --cap-degree {args.cap_degree}")
    q = co.coinvariant_quotient(spec)
    chi = co.coinvariant_character(q, spec)
    reg = co.regular_character(spec)
    from .groups import conjugacy_classes
    from .monomials import mono_str

    reps = [c[0] for c in conjugacy_classes(spec)]

    def val(v):
        return int(v) if isinstance(v, Fraction) and v.denominator == 1 else str(v)

    data = {
        "group": spec.to_json(),
        "graded_dims": q.graded_dims,
        "total_dim": q.total_dim,
        "basis": [[mono_str(a) for a in q.basis_by_degree[d]] for d in range(q.top + 1)],
        "classes": [element_token(g) for g in reps],
        "character": [val(chi(g)) for g in reps],
        "regular": chi == reg,
    }
    lines = [
        f"{spec.label()}: graded dims {q.graded_dims}, total {q.total_dim}",
        "classes:   " + " ".join(data["classes"]),
        "character: " + " ".join(map(str, data["character"])),
        "regular representation: " + ("yes" if data["regular"] else "no"),
    ]
    _emit(data, args.json, lines)
    return 0 if data["regular"] else 1


# -- center -----------------------------------------------------------------------------------------


def _build_restricted(m, p, n, c, braided, cz, args):
    spec = GroupSpec(m, p, n, "mystic" if braided else "reflection")
    _check_group_cap(spec, args)
    dim = spec.order() ** 3
    if dim > args.cap_dim:
        raise UsageError(f"restricted algebra of {spec.label()} has dimension {dim} > --cap-dim {args.cap_dim}")
    czd = {k: cz for k in zeta_keys(spec)}
    params = CherednikParams.make(spec, 0, c, czd, BRAIDED if braided else RATIONAL)
    return co.restricted_algebra(spec, params)


def _named_central(alg, m, p, n, c, braided, default_cz) -> list[tuple[str, dict]]:
    if (m, p, n) == (2, 1, 1) and not braided and default_cz:
        return [("z", co.rank_one_z(alg, c))]
    if (m, p, n) == (2, 2, 2) and not braided:
        z1, z2 = co.klein_z(alg, c)
        return [("z1", z1), ("z2", z2)]
    if (m, p, n) == (2, 2, 2) and braided:
        return [("gamma", co.gamma_element(alg, c))]
    return []


def _center_summary(alg) -> dict:
    Z = alg.center(alg.generators())
    idems = co.split_idempotents(alg, Z)
    return {
        "algebra": alg.name,
        "dim": alg.dim,
        "center_dim": len(Z),
        "splits_over_Q": idems is not None,
        "basis": [alg.to_text(z) for z in Z],
        "basis_minimal_polynomials": [co.polynomial_str(alg.minimal_polynomial(z, len(Z))) for z in Z],
    }, Z


def cmd_center(args) -> int:
    m, p, n = _triple(args, (2, 2, 2))
    c = args.c[0] if args.c else Fraction(1)
    default_cz = args.cz is None
    cz = 2 * c if default_cz else args.cz
    if args.braided and (m % 2 or n < 2):
        raise UsageError("the braided algebra needs m even and n >= 2")
    if args.compare:
        if m % 2 or n < 2:
            raise UsageError("--compare needs m even and n >= 2")
        out = {"parameter": str(c), "algebras": []}
        for braided in (False, True):
            alg = _build_restricted(m, p, n, c, braided, -cz if braided else cz, args)
            summary, _ = _center_summary(alg)
            summary["flavor"] = "braided" if braided else "rational"
            out["algebras"].append(summary)
        lines = [
            f"{a['flavor']:9} {a['algebra']}: dim Z = {a['center_dim']}, splits over Q: {a['splits_over_Q']}, "
            f"min polys {a['basis_minimal_polynomials']}"
            for a in out["algebras"]
        ]
        _emit(out, args.json, lines)
        return 0
    alg = _build_restricted(m, p, n, c, args.braided, cz, args)
    data, Z = _center_summary(alg)
    data["flavor"] = "braided" if args.braided else "rational"
    data["parameter"] = str(c)
    named = []
    for name, u in _named_central(alg, m, p, n, c, args.braided, default_cz):
        mp = alg.minimal_polynomial(u, len(Z))
        named.append({
            "name": name,
            "element": alg.to_text(u),
            "central": alg.is_central(u),
            "minimal_polynomial": co.polynomial_str(mp),
            "factors": [f"({co.polynomial_str(f)})" + (f"^{e}" if e > 1 else "") for f, e in co.factor_over_q(mp)],
        })
    data["elements"] = named
    lines = [f"{data['flavor']} restricted algebra of {alg.name}, c = {c}: dim {alg.dim}, centre dim {data['center_dim']}"]
    lines += [f"  Z[{k}] = {t}" for k, t in enumerate(data["basis"])]
    lines.append(f"centre splits into rank-one idempotents over Q: {data['splits_over_Q']}")
    for e in named:
        lines.append(f"{e['name']} = {e['element']}")
        lines.append(f"  central: {e['central']}; minimal polynomial {e['minimal_polynomial']} = {' * '.join(e['factors'])}")
    _emit(data, args.json, lines)
    return 0 if all(e["central"] for e in named) else 1


# -- twist --------------------------------------------------------------------------------------------


def _j_parameter(text: str, m: int):
    if text in ("i", "-i"):
        N = lcm(m, 4)
        root = CycloContext(N).root(N // 4)
        return (root if text == "i" else -root), N
    try:
        val = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--jc must be a nonzero rational, i or -i, not {text!r}") from exc
    if not val:
        raise UsageError("--jc must be nonzero")
    return val, m


def cmd_twist(args) -> int:
    from .coinvariants import format_terms

    m, p, n = _triple(args, None) or (None, None, None)
    if m is None:
        raise UsageError("--m, --p and --n are required")
    c = args.c[0] if args.c else Fraction(1)
    z = zero(n)
    try:
        if args.map == "J":
            jc, N = _j_parameter(args.jc, m)
            spec = GroupSpec(m, p, n, "mystic" if args.mystic else "reflection", N)
            if args.mystic and (m % 2 or n < 2):
                raise UsageError("mu(G(m,p,n)) needs m even and n >= 2")
            H = CherednikAlgebra(spec, CherednikParams.make(spec))
            elem = parse_element(H, args.element)
            if any(a != z or b != z for a, _, b in elem.terms):
                raise UsageError("J_c acts on group algebra elements only")
            a = GroupAlgebraElement({g: v for (_, g, _), v in elem.terms.items()}, n, N)
            out_terms = {(z, g, z): v for g, v in j_map(jc, a).terms.items()}
            label = f"J_{args.jc}"
        elif args.map == "eta":
            spec = GroupSpec(m, p, n)
            H = CherednikAlgebra(spec, CherednikParams.make(spec, args.t, c, {k: 2 * c for k in zeta_keys(spec)}))
            elem = parse_element(H, args.element)
            out_terms = H.module_algebra().eta(elem.terms, cocycle_F(n))
            label = "eta"
        else:
            if m % 2 or n < 2:
                raise UsageError("eta phi needs m even and n >= 2")
            spec = GroupSpec(m, p, n, "mystic")
            params = CherednikParams.make(spec, args.t, c, {k: 2 * c for k in zeta_keys(spec)}, BRAIDED)
            E = Embedding.build(m, p, n, params)
            H = E.source
            elem = parse_element(H, args.element)
            image = E(elem)
            H, out_terms = E.target, image.terms
            label = "eta phi"
    except ValueError as exc:  # includes SyntaxErrorAt and group membership
        raise UsageError(f"cannot read element: {exc}") from exc
    from .cherednik import CherednikElement
    from .syntax import element_to_json

    text = format_terms(H, out_terms)
    data = {"map": label, "input": args.element, "output": text,
            "terms": element_to_json(CherednikElement(H, dict(out_terms)))}
    _emit(data, args.json, [f"{label}({args.element}) = {text}"])
    return 0


# -- parser --------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--c", type=_rational, action="append", help="parameter value; repeat for several")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap-group", type=int, default=verify.DEFAULT_CAPS["group"])
    common.add_argument("--cap-dim", type=int, default=verify.DEFAULT_CAPS["dim"])
    common.add_argument("--cap-degree", type=int, default=verify.DEFAULT_CAPS["degree"])
    common.add_argument("--cap-n", type=int, default=4)

    parser = argparse.ArgumentParser(prog="twistalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run registered checks")
    p.add_argument("selector", nargs="?", default="all", help="'all' or a check name")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("characters", parents=[common], help="character tables of B_n, D_n, mu(D_n)")
    p.add_argument("--group", choices=["B", "D", "muD"], default="B")
    p.add_argument("--twist", choices=["none", "j1", "jminusi"], default="none")
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("coinvariants", parents=[common], help="graded coinvariant algebra and its character")
    p.add_argument("--mystic", action="store_true", help="use mu(G(m,p,n)) and the skew polynomial ring")
    p.set_defaults(func=cmd_coinvariants)

    p = sub.add_parser("center", parents=[common], help="centre of a restricted Cherednik algebra")
    p.add_argument("--braided", action="store_true", help="restricted negative braided algebra of mu(G)")
    p.add_argument("--cz", type=_rational, help="value of every c_zeta (default 2c)")
    p.add_argument("--compare", action="store_true", help="compare the rational and braided centres")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("twist", parents=[common], help="apply J_c, eta or eta phi to an element")
    p.add_argument("map", choices=["J", "eta", "etaphi"])
    p.add_argument("element", help="element in the plain-text syntax, e.g. 'x1*sg(1,2;0)*y2'")
    p.add_argument("--jc", default="1", help="parameter of J_c: a rational, i or -i (write --jc=-i)")
    p.add_argument("--t", type=_rational, default=Fraction(0))
    p.add_argument("--mystic", action="store_true", help="read group elements in mu(G(m,p,n))")
    p.set_defaults(func=cmd_twist)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and args.list:
        for chk in verify.REGISTRY.values():
            print(f"{chk.name}: {chk.anchor}")
        return 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"twistalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
